// End-to-end certification: verify solutions against a hypergeometric system,
// measure linear independence over Q, and emit the rank-vs-volume gap
// certificate with its JSON form.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperrank/gkz.hpp"
#include "hyperrank/int_matrix.hpp"
#include "hyperrank/linalg.hpp"
#include "hyperrank/polytope.hpp"
#include "hyperrank/puiseux.hpp"
#include "hyperrank/rational.hpp"

namespace hyperrank {

struct VerificationFailed : std::runtime_error {
  explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};
struct RankShortfall : std::runtime_error {
  explicit RankShortfall(const std::string& what) : std::runtime_error(what) {}
};
struct VolumeMismatch : std::runtime_error {
  explicit VolumeMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedGrading : std::runtime_error {
  explicit UnsupportedGrading(const std::string& what) : std::runtime_error(what) {}
};

enum class SolutionKind { laurent, series };
enum class ResidualStatus { exact, boundary };

/// Lattice frame of a truncated series: residuals of toric operators are
/// accepted only beyond boundary_height in the series' (a,b) coordinates.
struct TruncationInfo {
  ExpVec start;
  std::vector<std::vector<Int>> directions;
  int order = 0;
  int boundary_height = 0;
};

inline TruncationInfo truncation_info(const SeriesSpec& spec, std::size_t nvars) {
  TruncationInfo t;
  t.start = spec.start;
  t.start.resize(nvars, Rat(0));
  for (const auto& dir : spec.directions) {
    std::vector<Int> padded = dir;
    padded.resize(nvars, Int(0));
    t.directions.push_back(std::move(padded));
  }
  t.order = spec.truncation;
  t.boundary_height = spec.truncation - 3;
  return t;
}

struct SolutionRecord {
  std::string name;
  SolutionKind kind = SolutionKind::laurent;
  ResidualStatus status = ResidualStatus::exact;

  friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
    return a.name == b.name && a.kind == b.kind && a.status == b.status;
  }
};

namespace detail {

// Integer coordinates of w in the direction lattice, or nullopt when w is not
// an integer combination. Rational elimination on the (overdetermined) system.
inline std::optional<std::vector<Int>> lattice_coordinates(
    const std::vector<std::vector<Int>>& dirs, const RatVector& w) {
  const std::size_t k = dirs.size(), n = w.size();
  std::vector<RatVector> m(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(dirs[j][i]);
    m[i][k] = w[i];
  }
  std::vector<std::size_t> pivot_col(n, k + 1);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < k && rank < n; ++j) {
    std::size_t p = rank;
    while (p < n && m[p][j].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || m[i][j].is_zero()) continue;
      Rat f = m[i][j] / m[rank][j];
      for (std::size_t c = j; c <= k; ++c) m[i][c] -= f * m[rank][c];
    }
    pivot_col[rank] = j;
    ++rank;
  }
  std::vector<Int> coords(k);
  for (std::size_t r = 0; r < rank; ++r) {
    Rat x = m[r][k] / m[r][pivot_col[r]];
    if (!x.is_integer()) return std::nullopt;
    coords[pivot_col[r]] = x.num();
  }
  for (std::size_t r = rank; r < n; ++r)
    if (!m[r][k].is_zero()) return std::nullopt;
  return coords;
}

// Height of a residual term: the largest |a|+|b| among its valid operator
// preimages (term exponent + lead resp. trail of the generator). Every
// residual of a truncated series has a preimage beyond the truncation ball.
inline std::optional<long> residual_height(const ExpVec& term, const ToricBinomial& op,
                                           const TruncationInfo& info) {
  std::optional<long> best;
  for (const std::vector<int>* side : {&op.u_plus, &op.u_minus}) {
    RatVector w(term.size());
    for (std::size_t i = 0; i < term.size(); ++i)
      w[i] = term[i] + Rat((*side)[i]) - info.start[i];
    auto coords = lattice_coordinates(info.directions, w);
    if (!coords) continue;
    long h = 0;
    for (const Int& c : *coords) h += std::abs(c.get_si());
    if (!best || h > *best) best = h;
  }
  return best;
}

inline std::string toric_str(const ToricBinomial& op) {
  Binomial b;
  b.lead = op.u_plus;
  b.trail = op.u_minus;
  return binomial_str(b);
}

}  // namespace detail

/// Checks that p solves the system: every Euler operator must annihilate it
/// exactly; every toric generator must annihilate it exactly or, for a
/// truncated series, leave a residual supported beyond the boundary height.
inline SolutionRecord verify_solution(const HyperSystem& sys, const PuiseuxPoly& p,
                                      const std::optional<TruncationInfo>& trunc = {},
                                      const std::string& name = "") {
  if (p.nvars() != sys.a.cols())
    throw std::invalid_argument("verify_solution: variable count mismatch");
  SolutionRecord rec{name, trunc ? SolutionKind::series : SolutionKind::laurent,
                     ResidualStatus::exact};
  for (std::size_t i = 0; i < sys.euler_ops.size(); ++i) {
    PuiseuxPoly r = apply_euler(sys.euler_ops[i], p);
    if (!r.is_zero())
      throw VerificationFailed(name + ": euler operator row " + std::to_string(i + 1) +
                               " leaves residual " + r.str());
  }
  for (const ToricBinomial& op : sys.toric_gens) {
    PuiseuxPoly r = apply_toric(op, p);
    if (r.is_zero()) continue;
    if (!trunc)
      throw VerificationFailed(name + ": toric operator " + detail::toric_str(op) +
                               " leaves residual " + r.str());
    for (const auto& [e, c] : r.terms()) {
      auto h = detail::residual_height(e, op, *trunc);
      if (!h)
        throw VerificationFailed(name + ": residual term off the series lattice under " +
                                 detail::toric_str(op));
      if (*h <= trunc->boundary_height)
        throw VerificationFailed(name + ": residual of " + detail::toric_str(op) +
                                 " at lattice height " + std::to_string(*h) +
                                 " <= boundary " + std::to_string(trunc->boundary_height));
    }
    rec.status = ResidualStatus::boundary;
  }
  return rec;
}

/// Rank over Q of the coefficient matrix on the union of supports.
inline std::size_t independence_rank(const std::vector<PuiseuxPoly>& sols) {
  if (sols.empty()) return 0;
  const std::size_t n = sols[0].nvars();
  std::set<ExpVec> support;
  for (const auto& s : sols) {
    if (s.nvars() != n) throw std::invalid_argument("independence_rank: nvars mismatch");
    for (const auto& [e, c] : s.terms()) support.insert(e);
  }
  std::vector<ExpVec> cols(support.begin(), support.end());
  std::vector<RatVector> rows;
  rows.reserve(sols.size());
  for (const auto& s : sols) {
    RatVector row(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) row[j] = s.coeff(cols[j]);
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

/// True iff A alpha = beta has no solution alpha in N^n. Requires the all-ones
/// first row, which bounds sum(alpha) = beta_1 and makes the search finite.
inline bool check_no_polynomial_solutions(const IntMatrix& a, const RatVector& beta) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.at(0, j) != 1)
      throw UnsupportedGrading("check_no_polynomial_solutions: first row must be all ones");
  if (beta.size() != a.rows())
    throw std::invalid_argument("check_no_polynomial_solutions: beta length");
  for (const Rat& b : beta)
    if (!b.is_integer()) return true;
  if (beta[0].sign() < 0) return true;
  long budget = beta[0].num().get_si();
  std::vector<Int> target(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) target[i] = beta[i].num();
  std::vector<Int> alpha(a.cols());
  auto rec = [&](auto&& self, std::size_t j, long remaining) -> bool {
    if (j + 1 == a.cols()) {
      alpha[j] = remaining;
      return a.mul(alpha) == target;
    }
    for (long v = 0; v <= remaining; ++v) {
      alpha[j] = v;
      if (self(self, j + 1, remaining - v)) return true;
    }
    alpha[j] = 0;
    return false;
  };
  return !rec(rec, 0, budget);
}

struct GapCertificate {
  int d = 0;
  std::int64_t volume = 0;
  int solutions_count = 0;
  int independence_rank = 0;
  int gap_lower_bound = 0;
  std::vector<SolutionRecord> solutions;
  int series_order = 0;
  std::int64_t upper_bound_reported = 0;

  friend bool operator==(const GapCertificate& a, const GapCertificate& b) {
    return a.d == b.d && a.volume == b.volume && a.solutions_count == b.solutions_count &&
           a.independence_rank == b.independence_rank &&
           a.gap_lower_bound == b.gap_lower_bound && a.solutions == b.solutions &&
           a.series_order == b.series_order &&
           a.upper_bound_reported == b.upper_bound_reported;
  }
};

/// Named solution inventory for the d-th family member: the Laurent solutions
/// plus the three series truncations, all in 2d variables.
struct NamedSolution {
  std::string name;
  PuiseuxPoly poly;
  std::optional<TruncationInfo> trunc;
};

inline std::vector<NamedSolution> solution_inventory(int d, int series_order) {
  if (d < 2) throw InvalidDimension("solution_inventory: need d >= 2");
  const std::size_t n = 2 * static_cast<std::size_t>(d);
  std::vector<NamedSolution> inv;
  if (d == 2) {
    ExpVec p1(n, Rat(0)), p4(n, Rat(0));
    p1[0] = Rat(-1);
    p1[1] = Rat(2);
    p4[2] = Rat(2);
    p4[3] = Rat(-1);
    inv.push_back({"p1", PuiseuxPoly::monomial(n, p1, Rat(1)), std::nullopt});
    inv.push_back({"p4", PuiseuxPoly::monomial(n, p4, Rat(1)), std::nullopt});
  } else {
    std::vector<PuiseuxPoly> ps = laurent_solutions(d);
    inv.push_back({"p1", ps[0], std::nullopt});
    inv.push_back({"p4", ps[1], std::nullopt});
    for (std::size_t j = 2; j < ps.size(); ++j)
      inv.push_back({"p" + std::to_string(j + 3), ps[j], std::nullopt});
  }
  for (int i = 1; i <= 3; ++i) {
    SeriesSpec spec = series_spec(i, series_order);
    inv.push_back({"f" + std::to_string(i), pad_variables(series_solution(i, series_order), n),
                   truncation_info(spec, n)});
  }
  return inv;
}

/// Builds H_{A_d}(beta_d), verifies the full inventory, and certifies
/// rank(H) - vol(A) >= independence_rank - volume. Hard errors when a proven
/// quantity (volume d+2, rank 2d+1) fails to materialize.
inline GapCertificate certify_gap(int d, int series_order = 12) {
  if (d < 2) throw InvalidDimension("certify_gap: need d >= 2");
  Family fam = build_family(d);
  HyperSystem sys = build_system(fam.a, fam.beta);
  Int vol = normalized_volume(fam.a);
  if (vol != d + 2)
    throw VolumeMismatch("certify_gap: volume " + vol.get_str() + " != d+2 for d=" +
                         std::to_string(d));
  std::vector<NamedSolution> inv = solution_inventory(d, series_order);
  GapCertificate cert;
  cert.d = d;
  cert.volume = vol.get_si();
  cert.series_order = series_order;
  std::vector<PuiseuxPoly> polys;
  for (const NamedSolution& s : inv) {
    cert.solutions.push_back(verify_solution(sys, s.poly, s.trunc, s.name));
    polys.push_back(s.poly);
  }
  cert.solutions_count = static_cast<int>(inv.size());
  cert.independence_rank = static_cast<int>(independence_rank(polys));
  if (cert.independence_rank < 2 * d + 1)
    throw RankShortfall("certify_gap: independence rank " +
                        std::to_string(cert.independence_rank) + " below " +
                        std::to_string(2 * d + 1) + " for d=" + std::to_string(d));
  cert.gap_lower_bound = cert.independence_rank - static_cast<int>(cert.volume);
  Int two_pow = Int(1) << (2 * static_cast<unsigned>(d));
  cert.upper_bound_reported = static_cast<std::int64_t>(two_pow.get_si()) * cert.volume;
  return cert;
}

inline nlohmann::json certificate_to_json(const GapCertificate& c) {
  nlohmann::json sols = nlohmann::json::array();
  for (const SolutionRecord& r : c.solutions)
    sols.push_back({{"name", r.name},
                    {"kind", r.kind == SolutionKind::laurent ? "laurent" : "series"},
                    {"status", r.status == ResidualStatus::exact ? "exact" : "boundary"}});
  return nlohmann::json{{"d", c.d},
                        {"volume", c.volume},
                        {"solutions", sols},
                        {"independence_rank", c.independence_rank},
                        {"gap_lower_bound", c.gap_lower_bound},
                        {"upper_bound_reported", c.upper_bound_reported},
                        {"series_order", c.series_order}};
}

inline GapCertificate certificate_from_json(const nlohmann::json& j) {
  GapCertificate c;
  c.d = j.at("d").get<int>();
  c.volume = j.at("volume").get<std::int64_t>();
  c.independence_rank = j.at("independence_rank").get<int>();
  c.gap_lower_bound = j.at("gap_lower_bound").get<int>();
  c.upper_bound_reported = j.at("upper_bound_reported").get<std::int64_t>();
  c.series_order = j.at("series_order").get<int>();
  for (const auto& s : j.at("solutions")) {
    SolutionRecord r;
    r.name = s.at("name").get<std::string>();
    r.kind = s.at("kind").get<std::string>() == "laurent" ? SolutionKind::laurent
                                                          : SolutionKind::series;
    r.status = s.at("status").get<std::string>() == "exact" ? ResidualStatus::exact
                                                            : ResidualStatus::boundary;
    c.solutions.push_back(std::move(r));
  }
  c.solutions_count = static_cast<int>(c.solutions.size());
  return c;
}

}  // namespace hyperrank
