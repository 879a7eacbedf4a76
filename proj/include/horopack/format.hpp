// Number and table formatting shared by the CLI and its tests.
//
// Output here is deliberately deterministic: the same inputs always produce
// the same bytes, so downstream diffs of CSV/JSON reports are meaningful.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace horopack::fmt {

// Shortest %.9g rendering with negative zero normalized away.
inline std::string sig9(double x) {
  if (x == 0.0) x = 0.0;  // -0 -> 0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// Fixed scientific rendering for residuals.
inline std::string sci(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

// Best rational p/q with q <= max_den approximating x (continued fractions).
// Returns true and writes p/q when the approximation is within tol.
inline bool to_fraction(double x, std::int64_t& p, std::int64_t& q,
                        std::int64_t max_den = 1000, double tol = 1e-12) {
  if (!std::isfinite(x)) return false;
  std::int64_t p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(r);
    if (fa > 9.0e15 || fa < -9.0e15) break;
    auto a = static_cast<std::int64_t>(fa);
    std::int64_t p2 = a * p0 + p1, q2 = a * q0 + q1;
    if (q2 > max_den) break;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    double rem = r - fa;
    if (rem < 1e-15) break;
    r = 1.0 / rem;
  }
  if (q0 == 0) return false;
  if (std::abs(x - static_cast<double>(p0) / static_cast<double>(q0)) > tol)
    return false;
  p = p0;
  q = q0;
  return true;
}

// "2/3" when x is (numerically) a small rational, "2" when an integer,
// otherwise the %.9g decimal.
inline std::string fraction_or_decimal(double x) {
  std::int64_t p = 0, q = 1;
  if (to_fraction(x, p, q)) {
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
  }
  return sig9(x);
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Ratio vector as "3/5|1/5|1/20|3/20" (exact parts as fractions,
// the rest as decimals).
inline std::string ratio_list(const std::vector<double>& ratios) {
  std::vector<std::string> parts;
  for (double r : ratios) parts.push_back(fraction_or_decimal(r));
  return join(parts, "|");
}

// Plain-text table: left-aligned columns padded to the widest cell.
// Column widths count bytes except that UTF-8 continuation bytes are free,
// which keeps the Witt symbols (combining macrons, subscripts) aligned.
inline size_t display_width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  // Combining diacritics U+0300..U+036F (macron, circumflex, ...) occupy no
  // column of their own; in UTF-8 they are 0xCC 0x80..0xBF / 0xCD 0x80..0xAF.
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    auto b0 = static_cast<unsigned char>(s[i]);
    auto b1 = static_cast<unsigned char>(s[i + 1]);
    if ((b0 == 0xCC && b1 >= 0x80 && b1 <= 0xBF) ||
        (b0 == 0xCD && b1 >= 0x80 && b1 <= 0xAF))
      --w;
  }
  return w;
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], display_width(row[c]));
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line.append(width[c] - display_width(row[c]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

// One CSV field, quoted only when it contains a comma, quote, or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::vector<std::string> quoted;
  for (const auto& c : cells) quoted.push_back(csv_field(c));
  return join(quoted, ",") + "\n";
}

}  // namespace horopack::fmt
