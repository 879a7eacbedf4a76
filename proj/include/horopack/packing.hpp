#pragma once

// Horoball packings of a Coxeter simplex tiling.  A configuration assigns
// one ball to every ideal vertex of the cell; admissibility means each ball
// stays inside the half-space of its opposite face and no two balls overlap
// (tangency allowed).  The locally optimal packings arise by inflating one
// anchor ball to its face cap and propagating tangencies to the others, and
// the packing density is the covered fraction of the cell volume.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <horopack/catalog.hpp>
#include <horopack/horoball.hpp>
#include <horopack/lorentz.hpp>

namespace horopack {

// Raised when a requested ball pair cannot be made tangent on the segment
// joining their cusps (parameter out of range or contact point off the edge).
struct no_tangency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest admissible ball at one ideal vertex: tangent to the opposite face.
// The returned size parameter is a lower bound for admissible s there.
inline double maximal_s(const CoxeterSimplex& sx, int vertex) {
  if (vertex < 0 || vertex > 3)
    throw invalid_configuration("maximal_s: vertex index out of range");
  if (!sx.ideal[vertex])
    throw invalid_configuration("maximal_s: vertex " + std::to_string(vertex) +
                                " of " + sx.id + " is not ideal");
  return maximal_parameter(sx.vertices[vertex], sx.faces[vertex]);
}

// Size parameter at vertex j of the ball tangent to the ball of parameter
// s_i at vertex i, touching it on the open edge between the two cusps.
inline double propagate_tangency(const CoxeterSimplex& sx, int i, double s_i,
                                 int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
    throw invalid_configuration("propagate_tangency: bad vertex pair");
  if (!sx.ideal[i] || !sx.ideal[j])
    throw invalid_configuration("propagate_tangency: both vertices must be ideal");
  if (!(s_i > -1.0 && s_i < 1.0))
    throw no_tangency("propagate_tangency: parameter outside (-1, 1)");
  double s_j = tangent_parameter(sx.vertices[i], sx.vertices[j], s_i);
  Vec4 contact = edge_intersection(sx.vertices[i], sx.vertices[j], s_i);
  if (classify_point(contact) != PointClass::Proper)
    throw no_tangency("propagate_tangency: contact point leaves the edge");
  if (std::abs(s_of_point(sx.vertices[j], contact) - s_j) > tol::residual)
    throw no_tangency("propagate_tangency: inconsistent contact point");
  return s_j;
}

struct HoroballConfiguration {
  std::vector<int> cusps;  // ideal vertex indices, ascending
  std::vector<double> s;   // size parameter per cusp, same order
  int anchor = -1;         // vertex index whose ball was inflated first
};

// Face caps of all cusps, in ideal_indices() order.
inline std::vector<double> face_caps(const CoxeterSimplex& sx) {
  std::vector<double> caps;
  for (int v : sx.ideal_indices()) caps.push_back(maximal_s(sx, v));
  return caps;
}

// One locally optimal candidate per choice of anchor: the anchor ball takes
// its face cap, then the remaining balls grow one by one (lowest vertex
// index first) until they hit a placed ball or their own face, whichever
// binds first.  Projectively equal outcomes are merged, keeping the lowest
// anchor.
inline std::vector<HoroballConfiguration> enumerate_configurations(
    const CoxeterSimplex& sx) {
  std::vector<int> cusps = sx.ideal_indices();
  int n = static_cast<int>(cusps.size());
  if (n == 0)
    throw invalid_configuration("enumerate_configurations: no ideal vertex in " +
                                sx.id);
  std::vector<double> caps = face_caps(sx);
  std::vector<std::vector<double>> sum(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      sum[a][b] = sum[b][a] =
          tangency_sum(sx.vertices[cusps[a]], sx.vertices[cusps[b]]);

  std::vector<HoroballConfiguration> out;
  for (int a = 0; a < n; ++a) {
    HoroballConfiguration cfg;
    cfg.cusps = cusps;
    cfg.s.assign(n, 0.0);
    cfg.anchor = cusps[a];
    std::vector<bool> placed(n, false);
    cfg.s[a] = caps[a];
    placed[a] = true;
    for (int k = 0; k < n; ++k) {
      if (placed[k]) continue;
      double s_k = caps[k];
      for (int l = 0; l < n; ++l)
        if (placed[l])
          s_k = std::max(s_k, std::tanh(sum[k][l] - std::atanh(cfg.s[l])));
      cfg.s[k] = s_k;
      placed[k] = true;
    }
    bool dup = false;
    for (const auto& prev : out) {
      bool same = true;
      for (int k = 0; k < n; ++k)
        same = same && std::abs(prev.s[k] - cfg.s[k]) <= 1e-12;
      dup = dup || same;
    }
    if (!dup) out.push_back(std::move(cfg));
  }
  return out;
}

struct PackingResult {
  double density = 0.0;
  double total = 0.0;        // covered volume inside one cell
  double cell_volume = 0.0;
  std::vector<double> pieces;  // per cusp, configuration order
  std::vector<double> ratios;  // pieces / total
};

// Density of one admissible configuration.  Throws invalid_configuration
// when a ball pierces its opposite face or two balls overlap beyond
// tolerance.  `cell_volume` overrides the catalog volume (used when the
// tabulated value is a short decimal and a refined one is available).
inline PackingResult evaluate(const CoxeterSimplex& sx,
                              const HoroballConfiguration& cfg,
                              std::optional<double> cell_volume = {}) {
  std::vector<int> cusps = sx.ideal_indices();
  int n = static_cast<int>(cusps.size());
  if (cfg.cusps != cusps || static_cast<int>(cfg.s.size()) != n)
    throw invalid_configuration("evaluate: configuration does not match the cusps of " +
                                sx.id);
  std::vector<double> caps = face_caps(sx);
  for (int k = 0; k < n; ++k) {
    if (!(cfg.s[k] > -1.0 && cfg.s[k] < 1.0))
      throw invalid_configuration("evaluate: parameter outside (-1, 1)");
    if (cfg.s[k] < caps[k] - tol::residual)
      throw invalid_configuration(
          "evaluate: ball at vertex " + std::to_string(cusps[k]) + " of " +
          sx.id + " pierces its opposite face");
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      double need = tangency_sum(sx.vertices[cusps[k]], sx.vertices[cusps[l]]);
      if (std::atanh(cfg.s[k]) + std::atanh(cfg.s[l]) < need - tol::residual)
        throw invalid_configuration(
            "evaluate: horoballs at vertices " + std::to_string(cusps[k]) +
            " and " + std::to_string(cusps[l]) + " of " + sx.id + " overlap");
    }

  PackingResult r;
  for (int k = 0; k < n; ++k) {
    std::vector<Vec4> others;
    for (int v = 0; v < 4; ++v)
      if (v != cusps[k]) others.push_back(sx.vertices[v]);
    r.pieces.push_back(piece_volume(sx.vertices[cusps[k]], others[0], others[1],
                                    others[2], cfg.s[k]));
    r.total += r.pieces.back();
  }
  r.cell_volume = cell_volume.value_or(sx.volume_value());
  r.density = r.total / r.cell_volume;
  for (double p : r.pieces) r.ratios.push_back(p / r.total);
  return r;
}

struct OptimalPacking {
  HoroballConfiguration best;
  PackingResult result;
  std::vector<HoroballConfiguration> maximizers;  // all tied optima
  std::vector<HoroballConfiguration> candidates;  // everything enumerated
};

// Densest of the enumerated configurations; ties within 1e-12 are resolved
// toward the lowest anchor index and reported in full.
inline OptimalPacking optimize(const CoxeterSimplex& sx,
                               std::optional<double> cell_volume = {}) {
  OptimalPacking opt;
  opt.candidates = enumerate_configurations(sx);
  double best = -1.0;
  std::vector<PackingResult> results;
  for (const auto& cfg : opt.candidates) {
    results.push_back(evaluate(sx, cfg, cell_volume));
    best = std::max(best, results.back().density);
  }
  for (size_t i = 0; i < opt.candidates.size(); ++i)
    if (results[i].density >= best - 1e-12)
      opt.maximizers.push_back(opt.candidates[i]);
  for (size_t i = 0; i < opt.candidates.size(); ++i)
    if (results[i].density >= best - 1e-12) {
      opt.best = opt.candidates[i];
      opt.result = results[i];
      break;
    }
  return opt;
}

// Randomized attempt to beat a claimed optimal density: rejection-sample at
// least `samples` admissible configurations from a box above the face caps,
// then hill-climb from the best one.  Returns the best density found.
inline double falsify(const CoxeterSimplex& sx, int samples, unsigned seed,
                      std::optional<double> cell_volume = {}) {
  std::vector<int> cusps = sx.ideal_indices();
  int n = static_cast<int>(cusps.size());
  std::vector<double> caps = face_caps(sx);
  std::vector<double> lo(n);
  for (int k = 0; k < n; ++k) lo[k] = std::atanh(caps[k]);
  std::vector<std::vector<double>> sum(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      sum[a][b] = sum[b][a] =
          tangency_sum(sx.vertices[cusps[a]], sx.vertices[cusps[b]]);
  // Piece volume at cusp k is K_k e^{-2 shat_k} on the admissible range.
  std::vector<double> K(n);
  for (int k = 0; k < n; ++k) {
    std::vector<Vec4> others;
    for (int v = 0; v < 4; ++v)
      if (v != cusps[k]) others.push_back(sx.vertices[v]);
    K[k] = piece_volume(sx.vertices[cusps[k]], others[0], others[1], others[2],
                        0.0);
  }
  double vol = cell_volume.value_or(sx.volume_value());
  auto admissible = [&](const std::vector<double>& shat) {
    for (int a = 0; a < n; ++a) {
      if (shat[a] < lo[a]) return false;
      for (int b = a + 1; b < n; ++b)
        if (shat[a] + shat[b] < sum[a][b]) return false;
    }
    return true;
  };
  auto density = [&](const std::vector<double>& shat) {
    double t = 0.0;
    for (int k = 0; k < n; ++k) t += K[k] * std::exp(-2.0 * shat[k]);
    return t / vol;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> shat(n), best_shat(n);
  double best = -1.0;
  int accepted = 0;
  while (accepted < samples) {
    for (int k = 0; k < n; ++k) shat[k] = lo[k] + 3.0 * unit(rng);
    if (!admissible(shat)) continue;
    ++accepted;
    double d = density(shat);
    if (d > best) {
      best = d;
      best_shat = shat;
    }
  }
  double step = 0.25;
  while (step > 1e-10) {
    bool improved = false;
    for (int k = 0; k < n; ++k)
      for (double dir : {-1.0, 1.0}) {
        std::vector<double> trial = best_shat;
        trial[k] += dir * step;
        if (trial[k] < lo[k]) trial[k] = lo[k];
        if (!admissible(trial)) continue;
        double d = density(trial);
        if (d > best) {
          best = d;
          best_shat = trial;
          improved = true;
        }
      }
    if (!improved) step *= 0.5;
  }
  return best;
}

struct ReportRow {
  std::string id, witt, cls;
  int n_ideal = 0;
  double density = 0.0;
  double paper_density = 0.0;
  double residual = 0.0;
  std::vector<double> ratios;
  int anchor = -1;
  double cell_volume = 0.0;
  std::string volume_source;  // "closed" | "tabulated" | "refined"
  std::string status;         // "OK" | "MISMATCH" | "FLAGGED"
};

// Compare the computed optimum of every entry against its recorded density.
// `refine` supplies a better cell volume for entries that only carry a short
// tabulated decimal; rows whose entry is marked flag_on_mismatch report
// FLAGGED instead of MISMATCH when they disagree.
inline std::vector<ReportRow> verify_all(
    const std::vector<CoxeterSimplex>& cat, double tolerance = 1e-6,
    const std::function<double(const CoxeterSimplex&)>& refine = {}) {
  std::vector<ReportRow> rows;
  for (const auto& sx : cat) {
    ReportRow row;
    row.id = sx.id;
    row.witt = sx.witt;
    row.cls = sx.cls;
    row.n_ideal = sx.n_ideal();
    std::optional<double> vol;
    if (sx.has_exact_volume()) {
      vol = sx.volume_value();
      row.volume_source = "closed";
    } else if (refine) {
      vol = refine(sx);
      row.volume_source = "refined";
    } else {
      row.volume_source = "tabulated";
    }
    OptimalPacking opt = optimize(sx, vol);
    row.density = opt.result.density;
    row.paper_density = sx.density_value();
    row.residual = std::abs(row.density - row.paper_density);
    row.ratios = opt.result.ratios;
    row.anchor = opt.best.anchor;
    row.cell_volume = opt.result.cell_volume;
    if (row.residual <= tolerance)
      row.status = "OK";
    else
      row.status = sx.flag_on_mismatch ? "FLAGGED" : "MISMATCH";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace horopack
