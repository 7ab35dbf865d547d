// Exact normalized volume of conv(columns ∪ {0}) via an incremental placing
// triangulation with integer orientation predicates.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "hyperrank/int_matrix.hpp"
#include "hyperrank/linalg.hpp"

namespace hyperrank {

struct Degenerate : std::runtime_error {
  explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

struct PointConfig {
  std::size_t dim = 0;
  std::vector<std::vector<Int>> points;
};

using Simplex = std::vector<std::size_t>;  // dim + 1 point indices

namespace detail {

// det of the edge matrix (pts[idx[1]] - pts[idx[0]], ..., pts[idx.back()] - pts[idx[0]]).
inline Int edge_determinant(const PointConfig& p, const std::vector<std::size_t>& idx) {
  const std::size_t d = idx.size() - 1;
  IntMatrix m(p.dim, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < p.dim; ++r)
      m.at(r, c) = p.points[idx[c + 1]][r] - p.points[idx[0]][r];
  if (d != p.dim) throw std::invalid_argument("edge_determinant: not full-dimensional");
  return determinant(m);
}

// Orientation of (facet, apex): sign of det(f_1 - f_0, ..., f_{d-1} - f_0, apex - f_0).
inline int orientation(const PointConfig& p, const std::vector<std::size_t>& facet,
                       std::size_t apex) {
  std::vector<std::size_t> idx = facet;
  idx.push_back(apex);
  return sgn(edge_determinant(p, idx));
}

// Greedy affinely independent subset of size dim + 1, scanning in input order.
inline std::vector<std::size_t> initial_simplex(const PointConfig& p) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < p.points.size() && chosen.size() < p.dim + 1; ++i) {
    std::vector<std::size_t> trial = chosen;
    trial.push_back(i);
    if (trial.size() == 1) {
      chosen = trial;
      continue;
    }
    IntMatrix m(p.dim, trial.size() - 1);
    for (std::size_t c = 0; c + 1 < trial.size(); ++c)
      for (std::size_t r = 0; r < p.dim; ++r)
        m.at(r, c) = p.points[trial[c + 1]][r] - p.points[trial[0]][r];
    if (integer_rank(m) == trial.size() - 1) chosen = trial;
  }
  return chosen;
}

}  // namespace detail

/// Placing triangulation of conv(points): insert points in input order, coning
/// each new point over the boundary facets it strictly sees. Simplices have
/// nonzero determinant, pairwise disjoint interiors, and cover the hull.
inline std::vector<Simplex> triangulate(const PointConfig& p) {
  for (const auto& pt : p.points)
    if (pt.size() != p.dim) throw std::invalid_argument("triangulate: point length != dim");
  std::vector<std::size_t> seed = detail::initial_simplex(p);
  if (seed.size() != p.dim + 1) throw Degenerate("triangulate: points are not full-dimensional");
  std::vector<Simplex> simplices = {seed};
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (std::find(seed.begin(), seed.end(), i) != seed.end()) continue;
    // boundary facets = (d-1)-faces incident to exactly one simplex
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> faces;
    for (std::size_t s = 0; s < simplices.size(); ++s)
      for (std::size_t drop = 0; drop < simplices[s].size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t t = 0; t < simplices[s].size(); ++t)
          if (t != drop) f.push_back(simplices[s][t]);
        std::sort(f.begin(), f.end());
        faces[f].emplace_back(s, simplices[s][drop]);
      }
    std::vector<Simplex> fresh;
    for (const auto& [facet, owners] : faces) {
      if (owners.size() != 1) continue;
      int side_new = detail::orientation(p, facet, i);
      if (side_new == 0) continue;
      int side_in = detail::orientation(p, facet, owners[0].second);
      if (side_new == -side_in) {
        Simplex s = facet;
        s.push_back(i);
        fresh.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), fresh.begin(), fresh.end());
  }
  return simplices;
}

inline Int simplex_normalized_volume(const PointConfig& p, const Simplex& s) {
  return abs(detail::edge_determinant(p, s));
}

/// Normalized volume of conv(points); 0 when the configuration is lower-dimensional.
inline Int config_volume(const PointConfig& p) {
  if (p.points.empty()) return 0;
  IntMatrix m(p.dim, p.points.size() - 1);
  for (std::size_t c = 0; c + 1 < p.points.size(); ++c)
    for (std::size_t r = 0; r < p.dim; ++r) m.at(r, c) = p.points[c + 1][r] - p.points[0][r];
  if (p.points.size() - 1 < p.dim || integer_rank(m) < p.dim) return 0;
  Int vol = 0;
  for (const Simplex& s : triangulate(p)) vol += simplex_normalized_volume(p, s);
  return vol;
}

inline PointConfig config_from_columns(const IntMatrix& a, bool append_origin = true) {
  PointConfig p;
  p.dim = a.rows();
  for (std::size_t j = 0; j < a.cols(); ++j) p.points.push_back(a.col(j));
  if (append_origin) p.points.emplace_back(a.rows(), Int(0));
  return p;
}

/// d! times the Euclidean volume of conv(columns of a ∪ {0}).
inline Int normalized_volume(const IntMatrix& a) {
  if (integer_rank(a) < a.rows())
    throw NotFullRank("normalized_volume: matrix rank below row count");
  return config_volume(config_from_columns(a));
}

}  // namespace hyperrank
