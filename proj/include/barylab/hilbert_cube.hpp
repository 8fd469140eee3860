#pragma once

// Finite truncations of the Hilbert cube prod_k [-1/k, 1/k] and the point
// a_k = 1/(k+1).
//
// In every finite dimension d the point lies in the interior and its maximal
// prolongation coefficient through the origin is 1/d; the coefficient vanishes
// as d grows, which is the finite shadow of a failing to be in the relative
// algebraic interior of the infinite cube.

#include "barylab/geometry.hpp"
#include "barylab/random.hpp"
#include "barylab/rational.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace barylab {

/// Box prod_{k=1..d} [lower_k, upper_k].
class TruncatedCube {
 public:
  explicit TruncatedCube(std::size_t d) {
    if (d < 1) throw InputError("cube: dimension must be >= 1");
    lower_.reserve(d);
    upper_.reserve(d);
    for (std::size_t k = 1; k <= d; ++k) {
      upper_.push_back(make_rational(1, static_cast<long long>(k)));
      lower_.push_back(-upper_.back());
    }
  }

  std::size_t dim() const { return upper_.size(); }
  const RationalVector& lower() const { return lower_; }
  const RationalVector& upper() const { return upper_; }

  bool contains(const RationalVector& x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
  }

  /// Strict inequalities in every coordinate (the box is full-dimensional).
  bool in_interior(const RationalVector& x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] <= lower_[i] || x[i] >= upper_[i]) return false;
    return true;
  }

  /// Vertex form with 2^d vertices; only sensible for small d.
  Polytope to_polytope() const {
    if (dim() > 16) throw InputError("cube: vertex form limited to d <= 16");
    std::vector<RationalVector> vs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim()); ++mask) {
      RationalVector v(dim());
      for (std::size_t i = 0; i < dim(); ++i) v[i] = (mask >> i) & 1U ? upper_[i] : lower_[i];
      vs.push_back(std::move(v));
    }
    return Polytope(std::move(vs));
  }

 private:
  RationalVector lower_;
  RationalVector upper_;
};

inline TruncatedCube cube(std::size_t d) { return TruncatedCube(d); }

/// (1/2, 1/3, ..., 1/(d+1)).
inline RationalVector target_point(std::size_t d) {
  if (d < 1) throw InputError("target_point: dimension must be >= 1");
  RationalVector a;
  a.reserve(d);
  for (std::size_t k = 1; k <= d; ++k) a.push_back(make_rational(1, static_cast<long long>(k + 1)));
  return a;
}

/// sup{alpha >= 0 : (1 + alpha) a in box}, by per-coordinate interval arithmetic.
/// The segment from 0 through a is prolonged; 0 lies in every box here.
inline Rational box_alpha_max(const TruncatedCube& box, const RationalVector& a) {
  if (a.size() != box.dim()) throw InputError("box_alpha_max: dimension mismatch");
  std::optional<Rational> best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    // (1 + alpha) a_i stays within [lower_i, upper_i]
    Rational limit = (a[i] > 0 ? box.upper()[i] : box.lower()[i]) / a[i] - 1;
    if (!best || limit < *best) best = limit;
  }
  if (!best) throw InputError("box_alpha_max: a = 0 prolongs without bound");
  return *best < 0 ? Rational(0) : *best;
}

/// Maximal prolongation coefficient of [0, a] beyond a inside cube(d); equals 1/d.
inline Rational cube_alpha_max(std::size_t d) { return box_alpha_max(cube(d), target_point(d)); }

/// Closed form of cube_alpha_max: min_k ((k+1)/k - 1) = 1/d.
inline Rational cube_alpha_max_closed_form(std::size_t d) {
  if (d < 1) throw InputError("cube_alpha_max: dimension must be >= 1");
  return make_rational(1, static_cast<long long>(d));
}

/// Law on [-1/k, 1/k]: atom at 1/k with probability k/(k+1), otherwise uniform.
/// Support is the whole interval and the mean is 1/(k+1).
struct CoordinateMeasure {
  std::size_t k;

  Rational atom() const { return make_rational(1, static_cast<long long>(k)); }
  Rational atom_probability() const { return make_rational(static_cast<long long>(k), static_cast<long long>(k + 1)); }

  Rational mean() const { return atom_probability() * atom(); }

  Rational variance() const {
    const Rational kk = Rational(static_cast<long long>(k * k));
    const Rational p = atom_probability();
    const Rational second_moment = p / kk + (1 - p) / (3 * kk);
    return second_moment - mean() * mean();
  }

  template <typename Gen>
  double draw(Gen& rng) const {
    const double kd = static_cast<double>(k);
    const double half_width = 1.0 / kd;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) < kd / (kd + 1.0)) return half_width;
    return -half_width + 2.0 * half_width * unit(rng);
  }
};

/// S draws from prod_{k<=d} CoordinateMeasure(k). Coordinate k uses stream k of
/// `seed`, so the result is independent of the thread count.
inline std::vector<std::vector<double>> sample_cube_measure(std::size_t d, std::uint64_t seed, std::size_t samples) {
  if (d < 1) throw InputError("sample_cube_measure: dimension must be >= 1");
  if (samples < 1) throw InputError("sample_cube_measure: sample count must be >= 1");
  std::vector<std::vector<double>> out(samples, std::vector<double>(d));
  parallel_for(d, [&](std::size_t i) {
    Rng rng = make_stream(seed, i + 1);
    const CoordinateMeasure mu{i + 1};
    for (std::size_t s = 0; s < samples; ++s) out[s][i] = mu.draw(rng);
  });
  return out;
}

/// Coordinate means of the same draws sample_cube_measure(d, seed, samples)
/// would return, without materializing them.
inline std::vector<double> cube_sample_means(std::size_t d, std::uint64_t seed, std::size_t samples) {
  if (d < 1) throw InputError("sample_cube_measure: dimension must be >= 1");
  if (samples < 1) throw InputError("sample_cube_measure: sample count must be >= 1");
  std::vector<double> means(d, 0.0);
  parallel_for(d, [&](std::size_t i) {
    Rng rng = make_stream(seed, i + 1);
    const CoordinateMeasure mu{i + 1};
    double acc = 0.0;
    for (std::size_t s = 0; s < samples; ++s) acc += mu.draw(rng);
    means[i] = acc / static_cast<double>(samples);
  });
  return means;
}

/// Per-coordinate comparison of an empirical mean with 1/(k+1) at a 4-sigma band.
struct CubeMeanCheck {
  std::vector<double> empirical_mean;
  std::vector<double> target;
  std::vector<double> sigma_of_mean;  // sqrt(Var(mu_k) / S)
  double max_abs_deviation = 0.0;
  std::size_t exceedances = 0;        // coordinates outside target +- 4 sigma
};

inline CubeMeanCheck check_cube_means(std::vector<double> empirical_mean, std::size_t samples) {
  CubeMeanCheck out;
  const std::size_t d = empirical_mean.size();
  out.empirical_mean = std::move(empirical_mean);
  const double n = static_cast<double>(samples);
  for (std::size_t i = 0; i < d; ++i) {
    const CoordinateMeasure mu{i + 1};
    out.target.push_back(to_double(mu.mean()));
    out.sigma_of_mean.push_back(std::sqrt(to_double(mu.variance()) / n));
    const double dev = std::abs(out.empirical_mean[i] - out.target[i]);
    out.max_abs_deviation = std::max(out.max_abs_deviation, dev);
    if (dev > 4.0 * out.sigma_of_mean[i]) ++out.exceedances;
  }
  return out;
}

}  // namespace barylab
