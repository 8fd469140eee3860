#pragma once

// Barycenter characterization for polytopes.
//
// For a in M, V_a is the set of x in M for which the segment from x through a
// can be prolonged beyond a inside M: some alpha > 0 with a + alpha (a - x) in M.
// a is the barycenter of a probability measure with support exactly M iff
// closure(V_a) = M, and for polytopes this holds iff a lies in the relative
// interior. Both sides are decided exactly here so they can be compared.

#include "barylab/exact_lp.hpp"
#include "barylab/geometry.hpp"
#include "barylab/measure.hpp"
#include "barylab/rational.hpp"

#include <optional>
#include <vector>

namespace barylab {

/// sup{alpha >= 0 : a + alpha (a - x) in M}.
struct ProlongationResult {
  /// x == a: every alpha works. alpha_max is then meaningless.
  bool unbounded = false;
  Rational alpha_max;
  /// a + alpha_max (a - x); set when finite and positive.
  std::optional<RationalVector> witness_point;

  bool positive() const { return unbounded || alpha_max > 0; }
};

/// a + alpha (a - x) = -alpha x + (1 + alpha) a.
inline RationalVector prolong(const RationalVector& a, const RationalVector& x, const Rational& alpha) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + alpha * (a[i] - x[i]);
  return out;
}

namespace detail {

inline void require_member(const Polytope& m, const RationalVector& p, const char* what) {
  require_dim(m, p, what);
  if (!contains(m, p)) throw PreconditionError(std::string(what) + ": point is not in M");
}

/// LP in (lambda, alpha): sum lambda_i v_i - alpha (a - x) = a, sum lambda_i = 1,
/// lambda, alpha >= 0; maximize alpha. Preconditions are the caller's job.
inline ProlongationResult prolongation_unchecked(const Polytope& m, const RationalVector& a,
                                                 const RationalVector& x) {
  if (a == x) return {true, Rational(0), std::nullopt};
  const std::size_t nv = m.vertex_count();
  RationalVector objective(nv + 1, Rational(0));
  objective[nv] = 1;
  LinearProgram lp(std::move(objective));
  detail::add_convex_combination_rows(lp, m, a, nv + 1);
  for (std::size_t c = 0; c < m.ambient_dim(); ++c) lp.equality_rows[c][nv] = x[c] - a[c];
  LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::Optimal)
    throw std::logic_error("max_prolongation_alpha: LP not optimal for a bounded polytope with a in M");
  ProlongationResult res{false, out.optimum, std::nullopt};
  if (res.alpha_max > 0) res.witness_point = prolong(a, x, res.alpha_max);
  return res;
}

}  // namespace detail

/// Maximal prolongation coefficient of the segment [x, a] beyond a within M.
/// Throws PreconditionError unless a, x in M.
inline ProlongationResult max_prolongation_alpha(const Polytope& m, const RationalVector& a,
                                                 const RationalVector& x) {
  detail::require_member(m, a, "max_prolongation_alpha(a)");
  detail::require_member(m, x, "max_prolongation_alpha(x)");
  return detail::prolongation_unchecked(m, a, x);
}

/// x in V_a.
inline bool in_v_a(const Polytope& m, const RationalVector& a, const RationalVector& x) {
  return max_prolongation_alpha(m, a, x).positive();
}

/// Optimal epsilon of: maximize eps s.t. sum lambda_i v_i = a, sum lambda_i = 1,
/// lambda_i >= eps (lambda and eps free). Empty if a is outside aff M.
inline std::optional<Rational> relint_margin(const Polytope& m, const RationalVector& a) {
  detail::require_dim(m, a, "in_relint");
  const std::size_t nv = m.vertex_count();
  RationalVector objective(nv + 1, Rational(0));
  objective[nv] = 1;
  LinearProgram lp(std::move(objective));
  detail::add_convex_combination_rows(lp, m, a, nv + 1);
  for (std::size_t i = 0; i <= nv; ++i) lp.set_free(i);
  for (std::size_t i = 0; i < nv; ++i) {
    RationalVector row(nv + 1, Rational(0));
    row[i] = -1;
    row[nv] = 1;
    lp.add_less_equal(std::move(row), Rational(0));
  }
  LpOutcome out = solve_lp(lp);
  if (!out.optimal()) return std::nullopt;
  return out.optimum;
}

/// a in relint conv(vertices): some convex combination with all weights > 0.
inline bool in_relint(const Polytope& m, const RationalVector& a) {
  auto eps = relint_margin(m, a);
  return eps && *eps > 0;
}

/// Per-vertex prolongation results; a must be in M.
inline std::vector<ProlongationResult> vertex_prolongations(const Polytope& m, const RationalVector& a) {
  detail::require_member(m, a, "vertex_prolongations");
  std::vector<ProlongationResult> out;
  out.reserve(m.vertex_count());
  for (const auto& v : m.vertices()) out.push_back(detail::prolongation_unchecked(m, a, v));
  return out;
}

/// M = closure(V_a), decided by the vertex test: every listed vertex is in V_a.
/// Exact for polytopes (V_a is convex, so it then contains conv(vertices) = M;
/// if some vertex fails, V_a lies in a proper face).
inline bool check_condition_ii(const Polytope& m, const RationalVector& a) {
  for (const auto& r : vertex_prolongations(m, a))
    if (!r.positive()) return false;
  return true;
}

/// Approximate diagnostic: fraction of the first n dense-sequence points of M
/// that lie in V_a. Equals 1 when closure(V_a) = M; not a decision procedure.
inline double dense_prefix_v_a_fraction(const Polytope& m, const RationalVector& a, std::size_t n) {
  detail::require_member(m, a, "dense_prefix_v_a_fraction");
  const auto pts = dense_sequence(m, n);
  std::size_t hits = 0;
  for (const auto& x : pts)
    if (detail::prolongation_unchecked(m, a, x).positive()) ++hits;
  return static_cast<double>(hits) / static_cast<double>(pts.size());
}

/// Mass-weighted mean of the atoms inside the open Euclidean ball U(center, radius);
/// empty when the ball carries no mass.
inline std::optional<RationalVector> conditional_barycenter(const DiscreteMeasure& mu, const RationalVector& center,
                                                            const Rational& radius) {
  if (radius <= 0) throw InputError("conditional_barycenter: radius must be positive");
  if (center.size() != mu.dim()) throw InputError("conditional_barycenter: dimension mismatch");
  const Rational r2 = radius * radius;
  RationalVector acc = zeros(mu.dim());
  Rational mass = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (squared_distance(mu.atoms()[i], center) >= r2) continue;
    mass += mu.weights()[i];
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += mu.weights()[i] * mu.atoms()[i][c];
  }
  if (mass == 0) return std::nullopt;
  for (auto& v : acc) v /= mass;
  return acc;
}

struct CharacterizationReport {
  RationalVector a;
  bool relint = false;
  bool condition_ii = false;
  std::vector<ProlongationResult> alpha_max_per_vertex;
  bool agrees() const { return relint == condition_ii; }
};

/// Runs both sides of the characterization. Throws PreconditionError if a is not in M.
inline CharacterizationReport characterize(const Polytope& m, const RationalVector& a) {
  CharacterizationReport report;
  report.a = a;
  report.alpha_max_per_vertex = vertex_prolongations(m, a);
  report.condition_ii = true;
  for (const auto& r : report.alpha_max_per_vertex)
    if (!r.positive()) report.condition_ii = false;
  report.relint = in_relint(m, a);
  return report;
}

}  // namespace barylab
