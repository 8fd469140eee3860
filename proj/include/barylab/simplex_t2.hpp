#pragma once

// Measures on the probability simplex over a finite K = {0, ..., m-1}.
//
// For mu in P(K) with full support, eta = (lambda x mu^J) o F^-1 with
// F(a, x) = sum_j a_j delta_{x_j} is a measure on P(K) whose barycenter is mu
// and whose support densifies in the whole simplex. Here lambda is a discrete
// measure on the depth-J weight set A_J = {a in [0,1]^J : sum a_j = 1}.

#include "barylab/geometry.hpp"
#include "barylab/measure.hpp"
#include "barylab/random.hpp"
#include "barylab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace barylab {

/// K = {0, ..., m-1}.
struct FiniteK {
  std::size_t m;
  explicit FiniteK(std::size_t points) : m(points) {
    if (m < 1) throw InputError("finite K needs at least one point");
  }
};

/// Non-negative entries summing to one (exactly).
inline bool is_simplex_point(const RationalVector& p) {
  if (p.empty()) return false;
  Rational total = 0;
  for (const auto& v : p) {
    if (v < 0) return false;
    total += v;
  }
  return total == 1;
}

inline void require_simplex_point(const RationalVector& p, const char* what) {
  if (!is_simplex_point(p))
    throw InputError(std::string(what) + ": expected non-negative entries summing to 1");
}

/// Delta_{m-1} as a V-represented polytope (unit vectors).
inline Polytope probability_simplex(std::size_t m) {
  std::vector<RationalVector> vs(m, zeros(m));
  for (std::size_t i = 0; i < m; ++i) vs[i][i] = 1;
  return Polytope(std::move(vs));
}

/// F(a, x) = sum_j a_j delta_{x_j} as a length-m probability vector.
inline RationalVector map_F(const RationalVector& a, const std::vector<std::size_t>& x, std::size_t m) {
  if (a.size() != x.size()) throw InputError("map_F: weight and index lists differ in length");
  RationalVector out = zeros(m);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (x[j] >= m) throw InputError("map_F: index out of range");
    out[x[j]] += a[j];
  }
  return out;
}

/// Dense enumeration of A_J with growing support.
///
/// Group t consists of the dyadic vectors of level <= t (entries multiples of
/// 2^-t) supported on the first min(t+1, J) coordinates that were not in group
/// t-1; each group is listed in ascending lexicographic order of numerators.
/// Every group is finite and the union is dense in A_J, yet fine weight
/// patterns appear after a few thousand atoms even for J in the tens.
class GrowingSupportPlan {
 public:
  explicit GrowingSupportPlan(std::size_t depth) : depth_(depth) {
    if (depth_ < 2) throw InputError("GrowingSupportPlan needs depth >= 2");
    start_group(0);
  }

  std::size_t group() const { return group_; }

  /// Size of group t (number of vectors it adds).
  static Integer group_size(std::size_t t, std::size_t depth) {
    auto full = [depth](std::size_t s) {
      const std::size_t k = std::min(s + 1, depth);
      Integer total = Integer(1) << s;
      return binomial(total + k - 1, k - 1);
    };
    return t == 0 ? Integer(1) : full(t) - full(t - 1);
  }

  /// Next weight vector (length depth) and its group index.
  std::pair<RationalVector, std::size_t> next() {
    if (started_) advance();
    started_ = true;
    const Rational unit = dyadic(static_cast<unsigned>(group_));
    RationalVector w(depth_, Rational(0));
    for (std::size_t i = 0; i < counts_.size(); ++i) w[i] = unit * counts_[i];
    return {std::move(w), group_};
  }

 private:
  static Integer binomial(const Integer& n, std::size_t k) {
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  void start_group(std::size_t t) {
    group_ = t;
    counts_.assign(std::min(t + 1, depth_), Integer(0));
    counts_.back() = Integer(1) << t;
  }

  void advance() {
    do {
      if (!step()) start_group(group_ + 1);
    } while (seen_before());
  }

  bool step() {
    const std::size_t k = counts_.size();
    if (k == 1) return false;
    Integer tail = counts_[k - 1];
    std::size_t i = k - 1;
    while (i > 0) {
      --i;
      if (tail > 0) {
        counts_[i] += 1;
        for (std::size_t j = i + 1; j + 1 < k; ++j) counts_[j] = 0;
        counts_[k - 1] = tail - 1;
        return true;
      }
      tail += counts_[i];
    }
    return false;
  }

  // Member of group t-1 or earlier: level <= t-1 and support in the first
  // min(t, J) coordinates.
  bool seen_before() const {
    if (group_ == 0) return false;
    for (const auto& c : counts_)
      if (boost::multiprecision::bit_test(c, 0)) return false;
    const std::size_t prev = std::min(group_, depth_);
    for (std::size_t i = prev; i < counts_.size(); ++i)
      if (counts_[i] != 0) return false;
    return true;
  }

  std::size_t depth_;
  std::size_t group_ = 0;
  std::vector<Integer> counts_;
  bool started_ = false;
};

/// Discrete measure on A_J: the first `atoms` vectors of GrowingSupportPlan,
/// each member of group t weighted 2^-(t+1) / |group t|, renormalized.
/// For J = 1 this is the point mass at (1).
inline DiscreteMeasure lambda_on_A(std::size_t depth, std::size_t atoms) {
  if (depth < 1) throw InputError("lambda_on_A: depth must be >= 1");
  if (atoms < 1) throw InputError("lambda_on_A: atom count must be >= 1");
  if (depth == 1) return DiscreteMeasure::dirac({Rational(1)});
  GrowingSupportPlan plan(depth);
  std::vector<RationalVector> pts;
  RationalVector weights;
  std::size_t cached_group = std::numeric_limits<std::size_t>::max();
  Rational per_atom;
  for (std::size_t n = 0; n < atoms; ++n) {
    auto [w, t] = plan.next();
    if (t != cached_group) {
      cached_group = t;
      per_atom = dyadic(static_cast<unsigned>(t + 1)) / Rational(GrowingSupportPlan::group_size(t, depth));
    }
    pts.push_back(std::move(w));
    weights.push_back(per_atom);
  }
  return merge_and_normalize(pts, weights);
}

/// S draws of F(a, x) with a ~ lambda_on_A(J, N_lambda) and x_1..x_J i.i.d. mu.
/// Draw i uses stream floor(i / chunk) of `seed`, so output does not depend on
/// the thread count.
inline std::vector<std::vector<double>> sample_eta(const RationalVector& mu, std::size_t depth,
                                                   std::size_t lambda_atoms, std::uint64_t seed,
                                                   std::size_t samples) {
  require_simplex_point(mu, "sample_eta");
  if (samples < 1) throw InputError("sample_eta: sample count must be >= 1");
  const DiscreteMeasure lambda = lambda_on_A(depth, lambda_atoms);
  std::vector<std::vector<double>> lambda_atoms_d;
  for (const auto& a : lambda.atoms()) lambda_atoms_d.push_back(to_doubles(a));
  const std::vector<double> mu_d = to_doubles(mu);
  const std::size_t m = mu.size();

  constexpr std::size_t chunk = 4096;
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  std::vector<std::vector<double>> out(samples, std::vector<double>(m, 0.0));
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng = make_stream(seed, c);
    AtomSampler pick_a(lambda);
    std::discrete_distribution<std::size_t> pick_x(mu_d.begin(), mu_d.end());
    const std::size_t end = std::min(samples, (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) {
      const auto& a = lambda_atoms_d[pick_a(rng)];
      for (std::size_t j = 0; j < depth; ++j) {
        const std::size_t x = pick_x(rng);
        out[i][x] += a[j];
      }
    }
  });
  return out;
}

/// Coordinate-wise mean.
inline std::vector<double> empirical_barycenter(const std::vector<std::vector<double>>& samples) {
  if (samples.empty()) throw InputError("empirical_barycenter: empty sample list");
  std::vector<double> mean(samples.front().size(), 0.0);
  for (const auto& s : samples)
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += s[i];
  for (auto& v : mean) v /= static_cast<double>(samples.size());
  return mean;
}

/// Every entry > eps: support is all of K.
inline bool support_full(const std::vector<double>& mu_hat, double eps) {
  for (double v : mu_hat)
    if (!(v > eps)) return false;
  return true;
}

/// Exact variant: every entry strictly positive.
inline bool support_full(const RationalVector& mu) {
  for (const auto& v : mu)
    if (v <= 0) return false;
  return true;
}

/// Points of Delta_{m-1} with entries in (1/resolution) Z.
inline std::vector<std::vector<double>> simplex_grid(std::size_t m, std::size_t resolution) {
  if (m < 1 || resolution < 1) throw InputError("simplex_grid: m and resolution must be >= 1");
  std::vector<std::vector<double>> grid;
  std::vector<std::size_t> c(m, 0);
  c.back() = resolution;
  while (true) {
    std::vector<double> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<double>(c[i]) / static_cast<double>(resolution);
    grid.push_back(std::move(p));
    // lexicographic successor of the composition
    std::size_t tail = c[m - 1];
    std::size_t i = m - 1;
    bool moved = false;
    while (i > 0) {
      --i;
      if (tail > 0) {
        ++c[i];
        for (std::size_t j = i + 1; j + 1 < m; ++j) c[j] = 0;
        c[m - 1] = tail - 1;
        moved = true;
        break;
      }
      tail += c[i];
    }
    if (!moved) break;
  }
  return grid;
}

/// Covering radius of the samples over simplex_grid(m, resolution) in l1 distance.
inline double coverage_of_simplex(const std::vector<std::vector<double>>& samples, std::size_t resolution) {
  if (samples.empty()) throw InputError("coverage_of_simplex: empty sample list");
  const std::size_t m = samples.front().size();
  double worst = 0.0;
  for (const auto& g : simplex_grid(m, resolution)) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
      double d = 0.0;
      for (std::size_t i = 0; i < m && d < best; ++i) d += std::abs(s[i] - g[i]);
      if (d < best) best = d;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

/// Per-coordinate 4-sigma comparison of the empirical barycenter with mu, sigma
/// estimated from the sample variance.
struct EtaMeanCheck {
  std::vector<double> empirical_barycenter;
  std::vector<double> sigma_of_mean;
  std::size_t exceedances = 0;
  double min_coord = 0.0;
};

inline EtaMeanCheck check_eta_mean(const std::vector<std::vector<double>>& samples, const RationalVector& mu) {
  EtaMeanCheck out;
  out.empirical_barycenter = empirical_barycenter(samples);
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double ss = 0.0;
    for (const auto& s : samples) {
      const double d = s[i] - out.empirical_barycenter[i];
      ss += d * d;
    }
    const double var = samples.size() > 1 ? ss / (n - 1.0) : 0.0;
    out.sigma_of_mean.push_back(std::sqrt(var / n));
    const double dev = std::abs(out.empirical_barycenter[i] - to_double(mu[i]));
    if (dev > 4.0 * out.sigma_of_mean.back() && dev > 1e-12) ++out.exceedances;
  }
  out.min_coord = *std::min_element(out.empirical_barycenter.begin(), out.empirical_barycenter.end());
  return out;
}

}  // namespace barylab
