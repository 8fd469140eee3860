#pragma once

// Finite discrete probability measures with exact rational weights.

#include "barylab/random.hpp"
#include "barylab/rational.hpp"

#include <map>
#include <random>
#include <vector>

namespace barylab {

/// sum_i w_i delta_{atoms_i} with w_i > 0, sum w_i = 1 and pairwise distinct atoms.
class DiscreteMeasure {
 public:
  /// Validates the invariants; use merge_and_normalize() for raw data.
  DiscreteMeasure(std::vector<RationalVector> atoms, RationalVector weights)
      : atoms_(std::move(atoms)), weights_(std::move(weights)) {
    if (atoms_.empty()) throw InputError("measure needs at least one atom");
    if (atoms_.size() != weights_.size()) throw InputError("measure: atom and weight counts differ");
    Rational total = 0;
    for (const auto& w : weights_) {
      if (w <= 0) throw InputError("measure: weights must be strictly positive");
      total += w;
    }
    if (total != 1) throw InputError("measure: weights must sum to 1, got " + to_string(total));
    std::map<RationalVector, int> seen;
    const std::size_t d = atoms_.front().size();
    for (const auto& x : atoms_) {
      if (x.size() != d) throw InputError("measure: atoms of mixed dimension");
      if (!seen.emplace(x, 0).second) throw InputError("measure: duplicate atom");
    }
  }

  /// Point mass.
  static DiscreteMeasure dirac(RationalVector x) { return DiscreteMeasure({std::move(x)}, {Rational(1)}); }

  const std::vector<RationalVector>& atoms() const { return atoms_; }
  const RationalVector& weights() const { return weights_; }
  std::size_t size() const { return atoms_.size(); }
  std::size_t dim() const { return atoms_.front().size(); }

 private:
  std::vector<RationalVector> atoms_;
  RationalVector weights_;
};

/// Merges duplicate atoms (first-occurrence order) and rescales weights to sum 1.
inline DiscreteMeasure merge_and_normalize(const std::vector<RationalVector>& atoms, const RationalVector& weights) {
  if (atoms.size() != weights.size()) throw InputError("merge_and_normalize: atom and weight counts differ");
  std::map<RationalVector, std::size_t> index;
  std::vector<RationalVector> merged;
  RationalVector mass;
  Rational total = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (weights[i] < 0) throw InputError("merge_and_normalize: negative weight");
    if (weights[i] == 0) continue;
    total += weights[i];
    auto [it, inserted] = index.emplace(atoms[i], merged.size());
    if (inserted) {
      merged.push_back(atoms[i]);
      mass.push_back(weights[i]);
    } else {
      mass[it->second] += weights[i];
    }
  }
  if (total == 0) throw InputError("merge_and_normalize: total weight is zero");
  for (auto& w : mass) w /= total;
  return DiscreteMeasure(std::move(merged), std::move(mass));
}

inline DiscreteMeasure merge_and_normalize(const DiscreteMeasure& mu) {
  return merge_and_normalize(mu.atoms(), mu.weights());
}

/// Exact weighted mean of the atoms.
inline RationalVector barycenter(const DiscreteMeasure& mu) {
  RationalVector b = zeros(mu.dim());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t c = 0; c < b.size(); ++c) b[c] += mu.weights()[i] * mu.atoms()[i][c];
  return b;
}

/// Atom-index sampler with double-precision probabilities.
class AtomSampler {
 public:
  explicit AtomSampler(const DiscreteMeasure& mu) {
    std::vector<double> p;
    p.reserve(mu.size());
    for (const auto& w : mu.weights()) p.push_back(to_double(w));
    dist_ = std::discrete_distribution<std::size_t>(p.begin(), p.end());
  }

  std::size_t operator()(Rng& rng) { return dist_(rng); }

 private:
  std::discrete_distribution<std::size_t> dist_;
};

/// count i.i.d. atoms drawn with a generator seeded by `seed`.
inline std::vector<RationalVector> sample(const DiscreteMeasure& mu, std::uint64_t seed, std::size_t count) {
  Rng rng = make_stream(seed, 0);
  AtomSampler draw(mu);
  std::vector<RationalVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(mu.atoms()[draw(rng)]);
  return out;
}

}  // namespace barylab
