#pragma once

// Explicit witness measures: a discrete probability measure on M with
// barycenter exactly a whose atoms densify in M as the pair count grows.
//
// Each dense-sequence point x_n is paired with its prolongation partner
// y_n = -alpha_n x_n + (1 + alpha_n) a. The pair
//     (alpha_n delta_{x_n} + delta_{y_n}) / (1 + alpha_n)
// has barycenter a, so any convex combination of pairs does too. Pair n gets
// weight 2^-n, renormalized over the first N pairs by 1 / (1 - 2^-N).

#include "barylab/characterize.hpp"
#include "barylab/geometry.hpp"
#include "barylab/measure.hpp"

#include <vector>

namespace barylab {

struct WitnessPair {
  RationalVector x;
  Rational alpha;     // > 0
  RationalVector y;   // -alpha x + (1 + alpha) a
  Rational weight;    // pair weight before splitting between x and y
};

/// alpha_n = min(1, alpha_max / 2): strictly inside the feasible prolongation range.
inline Rational witness_alpha(const ProlongationResult& r) {
  if (r.unbounded) return Rational(1);
  Rational half = r.alpha_max / 2;
  return half < 1 ? half : Rational(1);
}

/// The first `pairs` witness pairs for (M, a). Pairs with x_n = a have alpha 1 and y_n = a.
/// Throws CharacterizationError when a is not in relint M.
inline std::vector<WitnessPair> witness_pairs(const Polytope& m, const RationalVector& a, std::size_t pairs) {
  if (pairs == 0) throw InputError("construct_witness: pair count must be >= 1");
  detail::require_dim(m, a, "construct_witness");
  if (!in_relint(m, a))
    throw CharacterizationError("no witness exists: the point is not in the relative interior of M");
  const Rational renorm = 1 / (1 - dyadic(static_cast<unsigned>(pairs)));
  std::vector<WitnessPair> out;
  out.reserve(pairs);
  std::size_t n = 1;
  for (auto& x : dense_sequence(m, pairs)) {
    const Rational alpha = witness_alpha(detail::prolongation_unchecked(m, a, x));
    RationalVector y = prolong(a, x, alpha);
    out.push_back({std::move(x), alpha, std::move(y), dyadic(static_cast<unsigned>(n++)) * renorm});
  }
  return out;
}

/// Witness measure with up to 2N atoms (fewer after merging duplicates).
inline DiscreteMeasure construct_witness(const Polytope& m, const RationalVector& a, std::size_t pairs) {
  std::vector<RationalVector> atoms;
  RationalVector weights;
  for (auto& p : witness_pairs(m, a, pairs)) {
    if (p.x == a) {
      atoms.push_back(std::move(p.x));
      weights.push_back(p.weight);
      continue;
    }
    const Rational share = p.weight / (1 + p.alpha);
    atoms.push_back(std::move(p.x));
    weights.push_back(share * p.alpha);
    atoms.push_back(std::move(p.y));
    weights.push_back(share);
  }
  return merge_and_normalize(atoms, weights);
}

}  // namespace barylab
