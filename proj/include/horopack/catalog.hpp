#pragma once

// Catalog of the 23 noncompact Coxeter simplex tilings: loader, per-entry
// structural validation, symbol lookup, and the commensurability lattice.
// Entries are parsed from a JSON document (the embedded one by default)
// whose coordinates are exact expression strings; the loader evaluates
// them, rescales every face form to a unit inward normal, and rejects any
// entry that fails a geometric invariant.

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <horopack/catalog_data.hpp>
#include <horopack/expression.hpp>
#include <horopack/lorentz.hpp>
#include <horopack/volume.hpp>

namespace horopack {

// Raised when the catalog document itself is malformed (bad JSON, missing
// or mistyped fields); the message names the entry and field.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VolumeForm {
  enum class Kind { Lobachevsky, Numeric };
  Kind kind = Kind::Numeric;
  double coeff = 0.0;   // Lobachevsky: coeff * lob(angle)
  double angle = 0.0;
  double value = 0.0;   // Numeric: tabulated decimal
  std::string coeff_expr, angle_expr, value_text;

  double closed_value() const {
    return kind == Kind::Lobachevsky ? coeff * lobachevsky(angle) : value;
  }
};

struct DensityForm {
  enum class Kind { Closed, Numeric };
  Kind kind = Kind::Numeric;
  double value = 0.0;
  std::string expr;  // Closed only
};

struct LatticeEdge {
  std::string child;
  int index = 0;
};

struct CoxeterSimplex {
  std::string id;       // ASCII key, e.g. "BV3"
  std::string witt;     // display symbol, e.g. "B̄V₃"
  std::string cls;      // commensurability class token
  std::vector<std::string> aliases;
  std::array<Vec4, 4> vertices{};   // chart representatives, x^0 = 1
  std::array<bool, 4> ideal{};
  std::array<Vec4, 4> faces{};      // unit inward normals, face i opposite vertex i
  std::array<Vec4, 4> faces_raw{};  // as stored in the document
  std::vector<std::array<int, 3>> schlafli_edges;  // (i, j, m): angle pi/m
  VolumeForm volume;
  std::optional<double> volume_exact;
  std::string volume_exact_expr;
  DensityForm density;
  std::vector<double> ratios;
  std::vector<std::string> ratio_exprs;
  bool derived_coordinates = false;
  bool flag_on_mismatch = false;
  std::vector<LatticeEdge> lattice_edges;
  nlohmann::json raw;

  int n_ideal() const {
    int n = 0;
    for (bool b : ideal) n += b ? 1 : 0;
    return n;
  }
  std::vector<int> ideal_indices() const {
    std::vector<int> out;
    for (int i = 0; i < 4; ++i)
      if (ideal[i]) out.push_back(i);
    return out;
  }
  // Best volume available: exact closed form if recorded, else the
  // tabulated value.  Entries whose only record is a short decimal are
  // refined elsewhere by numeric integration.
  double volume_value() const {
    return volume_exact ? *volume_exact : volume.closed_value();
  }
  bool has_exact_volume() const {
    return volume.kind == VolumeForm::Kind::Lobachevsky || volume_exact.has_value();
  }
  double density_value() const { return density.value; }
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::string id;
  std::vector<CheckResult> checks;
  bool pass = true;
  double max_residual = 0.0;

  void add(std::string name, double residual, bool ok) {
    checks.push_back({std::move(name), residual, ok});
    pass = pass && ok;
    max_residual = std::max(max_residual, residual);
  }
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* key,
                                   const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error("catalog: " + ctx + ": missing field '" + key + "'");
  return *it;
}

inline double eval_field(const nlohmann::json& j, const std::string& ctx) {
  if (!j.is_string())
    throw parse_error("catalog: " + ctx + ": expected an expression string");
  try {
    return evaluate_expression(j.get<std::string>());
  } catch (const std::exception& e) {
    throw parse_error("catalog: " + ctx + ": " + e.what());
  }
}

inline CoxeterSimplex parse_entry(const nlohmann::json& e, int row) {
  std::string ctx = "entry #" + std::to_string(row);
  if (!e.is_object()) throw parse_error("catalog: " + ctx + ": not an object");
  CoxeterSimplex s;
  s.raw = e;
  s.id = field(e, "id", ctx).get<std::string>();
  ctx = "entry '" + s.id + "'";
  s.witt = field(e, "witt", ctx).get<std::string>();
  s.cls = field(e, "class", ctx).get<std::string>();
  if (e.contains("aliases"))
    for (const auto& a : e["aliases"]) s.aliases.push_back(a.get<std::string>());

  const auto& edges = field(e, "schlafli_edges", ctx);
  for (const auto& t : edges) {
    if (!t.is_array() || t.size() != 3)
      throw parse_error("catalog: " + ctx + ": schlafli_edges: bad triple");
    int i = t[0].get<int>(), j = t[1].get<int>(), m = t[2].get<int>();
    if (i < 0 || j < 0 || i > 3 || j > 3 || i == j || m < 3)
      throw parse_error("catalog: " + ctx + ": schlafli_edges: bad triple");
    if (i > j) std::swap(i, j);
    s.schlafli_edges.push_back({i, j, m});
  }

  const auto& verts = field(e, "vertices", ctx);
  const auto& flags = field(e, "ideal", ctx);
  const auto& faces = field(e, "faces", ctx);
  if (verts.size() != 4 || flags.size() != 4 || faces.size() != 4)
    throw parse_error("catalog: " + ctx + ": need 4 vertices, flags, faces");
  for (int i = 0; i < 4; ++i) {
    if (verts[i].size() != 4 || faces[i].size() != 4)
      throw parse_error("catalog: " + ctx + ": need 4 components per vector");
    for (int c = 0; c < 4; ++c) {
      s.vertices[i][c] = eval_field(verts[i][c], ctx + ": vertex " + std::to_string(i));
      s.faces_raw[i][c] = eval_field(faces[i][c], ctx + ": face " + std::to_string(i));
    }
    s.ideal[i] = flags[i].get<bool>();
    s.vertices[i] = normalize_point(s.vertices[i]);
  }
  for (int i = 0; i < 4; ++i) {
    Vec4 u;
    try {
      u = normalize_form(s.faces_raw[i]);
    } catch (const numeric_error& err) {
      throw validation_error("catalog: " + ctx + ": face " + std::to_string(i) +
                             ": " + err.what());
    }
    double side = apply_form(u, s.vertices[i]);
    if (std::abs(side) < 1e-12)
      throw validation_error("catalog: " + ctx + ": face " + std::to_string(i) +
                             " passes through its opposite vertex");
    s.faces[i] = side < 0.0 ? scale(u, -1.0) : u;
  }

  const auto& vol = field(e, "volume", ctx);
  std::string kind = field(vol, "kind", ctx + ": volume").get<std::string>();
  if (kind == "lobachevsky") {
    s.volume.kind = VolumeForm::Kind::Lobachevsky;
    s.volume.coeff_expr = field(vol, "coeff", ctx).get<std::string>();
    s.volume.angle_expr = field(vol, "angle", ctx).get<std::string>();
    s.volume.coeff = eval_field(vol["coeff"], ctx + ": volume coeff");
    s.volume.angle = eval_field(vol["angle"], ctx + ": volume angle");
  } else if (kind == "numeric") {
    s.volume.kind = VolumeForm::Kind::Numeric;
    s.volume.value_text = field(vol, "value", ctx).get<std::string>();
    s.volume.value = eval_field(vol["value"], ctx + ": volume value");
  } else {
    throw parse_error("catalog: " + ctx + ": unknown volume kind '" + kind + "'");
  }
  if (e.contains("volume_exact")) {
    s.volume_exact_expr = e["volume_exact"].get<std::string>();
    s.volume_exact = eval_field(e["volume_exact"], ctx + ": volume_exact");
  }

  const auto& den = field(e, "density", ctx);
  kind = field(den, "kind", ctx + ": density").get<std::string>();
  if (kind == "closed") {
    s.density.kind = DensityForm::Kind::Closed;
    s.density.expr = field(den, "expr", ctx).get<std::string>();
    s.density.value = eval_field(den["expr"], ctx + ": density expr");
  } else if (kind == "numeric") {
    s.density.kind = DensityForm::Kind::Numeric;
    s.density.value = eval_field(field(den, "value", ctx), ctx + ": density value");
  } else {
    throw parse_error("catalog: " + ctx + ": unknown density kind '" + kind + "'");
  }

  if (e.contains("ratios"))
    for (const auto& r : e["ratios"]) {
      s.ratio_exprs.push_back(r.get<std::string>());
      s.ratios.push_back(eval_field(r, ctx + ": ratios"));
    }
  if (e.contains("derived_coordinates"))
    s.derived_coordinates = e["derived_coordinates"].get<bool>();
  if (e.contains("flag_on_mismatch"))
    s.flag_on_mismatch = e["flag_on_mismatch"].get<bool>();

  for (const auto& le : field(e, "lattice_edges", ctx)) {
    if (!le.is_array() || le.size() != 2)
      throw parse_error("catalog: " + ctx + ": lattice_edges: bad pair");
    s.lattice_edges.push_back({le[0].get<std::string>(), le[1].get<int>()});
  }
  return s;
}

}  // namespace detail

// Structural invariants of one entry, reported check by check.  "residual"
// is the magnitude of the worst violation for that check (0 when exact).
inline ValidationReport validate_simplex(const CoxeterSimplex& s) {
  ValidationReport rep;
  rep.id = s.id;

  double class_res = 0.0;
  bool class_ok = true;
  for (int i = 0; i < 4; ++i) {
    double q = minkowski(s.vertices[i], s.vertices[i]) /
               euclidean_norm2(s.vertices[i]);
    PointClass pc = classify_point(s.vertices[i]);
    if (s.ideal[i]) {
      class_res = std::max(class_res, std::abs(q));
      class_ok = class_ok && pc == PointClass::Ideal;
    } else {
      class_ok = class_ok && pc == PointClass::Proper;
      if (pc != PointClass::Proper) class_res = std::max(class_res, std::abs(q));
    }
  }
  rep.add("vertex_class", class_res, class_ok);

  double inc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) inc = std::max(inc, std::abs(apply_form(s.faces[i], s.vertices[j])));
  rep.add("incidence", inc, inc <= tol::residual);

  double unit = 0.0;
  for (int i = 0; i < 4; ++i)
    unit = std::max(unit, std::abs(minkowski(s.faces[i], s.faces[i]) - 1.0));
  rep.add("unit_forms", unit, unit <= 1e-12);

  double gram = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double target = 0.0;
      for (const auto& ed : s.schlafli_edges)
        if (ed[0] == i && ed[1] == j) target = -std::cos(std::numbers::pi / ed[2]);
      gram = std::max(gram, std::abs(minkowski(s.faces[i], s.faces[j]) - target));
    }
  rep.add("gram", gram, gram <= tol::residual);

  Mat4 G{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) G[i][j] = minkowski(s.faces[i], s.faces[j]);
  auto ev = symmetric_eigenvalues(G);
  double sig_res = 0.0;
  if (ev[0] >= 0.0) sig_res = 1.0 + ev[0];
  else if (ev[1] <= 1e-9) sig_res = 1.0 - ev[1];
  rep.add("signature", sig_res, sig_res == 0.0);

  double vol = s.volume_value();
  double vol_res = 0.0;
  if (s.volume_exact) vol_res = std::abs(*s.volume_exact - s.volume.closed_value());
  rep.add("volume", vol_res, vol > 0.0 && vol_res <= 5e-6);

  if (!s.ratios.empty()) {
    double sum = 0.0;
    for (double r : s.ratios) sum += r;
    double res = std::abs(sum - 1.0);
    bool ok = res <= 1e-10 &&
              static_cast<int>(s.ratios.size()) == s.n_ideal();
    rep.add("ratios", res, ok);
  }

  rep.add("ideal_count", 0.0, s.n_ideal() >= 1);
  return rep;
}

// Parse and validate a catalog document.  Throws parse_error for malformed
// documents and validation_error naming the entry and first failing check.
inline std::vector<CoxeterSimplex> load_catalog(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("catalog: bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries"))
    throw parse_error("catalog: document has no 'entries' array");

  std::vector<CoxeterSimplex> out;
  int row = 0;
  for (const auto& e : doc["entries"]) {
    CoxeterSimplex s = detail::parse_entry(e, row++);
    for (const auto& prev : out)
      if (prev.id == s.id)
        throw validation_error("catalog: duplicate id '" + s.id + "'");
    ValidationReport rep = validate_simplex(s);
    if (!rep.pass) {
      for (const auto& c : rep.checks)
        if (!c.pass) {
          std::ostringstream msg;
          msg << "catalog: entry '" << s.id << "': check '" << c.name
              << "' failed (residual " << c.residual << ")";
          throw validation_error(msg.str());
        }
    }
    out.push_back(std::move(s));
  }
  if (out.empty()) throw validation_error("catalog: no entries");
  for (const auto& s : out)
    for (const auto& le : s.lattice_edges) {
      bool found = false;
      for (const auto& t : out) found = found || t.id == le.child;
      if (!found)
        throw validation_error("catalog: entry '" + s.id +
                               "': lattice child '" + le.child + "' not present");
    }
  return out;
}

// The embedded catalog; additionally pinned to exactly 23 entries.
inline std::vector<CoxeterSimplex> load_catalog() {
  auto cat = load_catalog(kCatalogJson);
  if (cat.size() != 23)
    throw validation_error("catalog: embedded document must have 23 entries");
  return cat;
}

inline std::vector<CoxeterSimplex> load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("catalog: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

// Lookup by ASCII id (case-insensitive), display symbol, or alias.
inline const CoxeterSimplex* find_simplex(const std::vector<CoxeterSimplex>& cat,
                                          std::string_view key) {
  auto ieq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(a[i])) !=
          std::tolower(static_cast<unsigned char>(b[i])))
        return false;
    return true;
  };
  for (const auto& s : cat)
    if (ieq(s.id, key) || s.witt == key) return &s;
  for (const auto& s : cat)
    for (const auto& a : s.aliases)
      if (a == key) return &s;
  return nullptr;
}

struct LatticeCheck {
  std::string parent, child;
  int index = 0;
  double residual = 0.0;  // relative volume mismatch
  bool pass = false;
};

// Every recorded supergroup relation, checked against cell volumes:
// vol(child) = index * vol(parent) within 1e-6 relative.
inline std::vector<LatticeCheck> subgroup_lattice(
    const std::vector<CoxeterSimplex>& cat) {
  std::vector<LatticeCheck> out;
  for (const auto& s : cat)
    for (const auto& le : s.lattice_edges) {
      const CoxeterSimplex* child = find_simplex(cat, le.child);
      LatticeCheck c;
      c.parent = s.id;
      c.child = le.child;
      c.index = le.index;
      double expect = le.index * s.volume_value();
      c.residual = std::abs(child->volume_value() - expect) / expect;
      c.pass = c.residual <= 1e-6;
      out.push_back(c);
    }
  return out;
}

// Re-serialize a catalog to a JSON document equivalent to its source;
// load_catalog round-trips the result.
inline std::string catalog_to_json(const std::vector<CoxeterSimplex>& cat) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["entries"] = nlohmann::json::array();
  for (const auto& s : cat) doc["entries"].push_back(s.raw);
  return doc.dump(2);
}

}  // namespace horopack
