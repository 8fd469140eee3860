#pragma once

// V-represented polytopes: affine hulls, exact membership, a reproducible
// dense point enumeration, and a grid-based covering-radius diagnostic.

#include "barylab/exact_lp.hpp"
#include "barylab/rational.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace barylab {

namespace detail {

/// Incremental row-echelon basis used for exact rank tests.
class EchelonBasis {
 public:
  /// Reduces v against the stored rows; stores and returns true if independent.
  bool insert(RationalVector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& f = v[pivots_[i]];
      if (f == 0) continue;
      const Rational factor = f;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (rows_[i][c] != 0) v[c] -= factor * rows_[i][c];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      if (row[p] == 0) continue;
      const Rational factor = row[p];
      for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) row[c] -= factor * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves the square system A t = b exactly; A must be non-singular.
inline RationalVector solve_square(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("solve_square: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace detail

/// offset + span(basis), with linearly independent basis vectors.
class AffineSubspace {
 public:
  AffineSubspace(RationalVector offset, std::vector<RationalVector> basis)
      : offset_(std::move(offset)), basis_(std::move(basis)) {}

  const RationalVector& offset() const { return offset_; }
  const std::vector<RationalVector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return offset_.size(); }

  /// Coordinates t with p = offset + sum t_i basis_i. Requires p in the subspace.
  RationalVector coordinates_of(const RationalVector& p) const {
    const std::size_t k = dim();
    if (k == 0) return {};
    const RationalVector y = subtract(p, offset_);
    std::vector<RationalVector> gram(k, RationalVector(k));
    RationalVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis_[i], basis_[j]);
      rhs[i] = dot(basis_[i], y);
    }
    return detail::solve_square(std::move(gram), std::move(rhs));
  }

  RationalVector point_at(std::span<const Rational> coords) const {
    RationalVector p = offset_;
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t c = 0; c < p.size(); ++c) p[c] += coords[i] * basis_[i][c];
    return p;
  }

  /// Exact test whether p lies in the subspace.
  bool contains(const RationalVector& p) const {
    if (p.size() != ambient_dim()) return false;
    return point_at(coordinates_of(p)) == p;
  }

 private:
  RationalVector offset_;
  std::vector<RationalVector> basis_;
};

/// Smallest affine subspace containing all points. The basis keeps the first
/// independent difference vectors p_i - p_0 in input order.
inline AffineSubspace affine_hull(std::span<const RationalVector> points) {
  if (points.empty()) throw InputError("affine_hull: empty point list");
  const std::size_t d = points.front().size();
  std::vector<RationalVector> basis;
  detail::EchelonBasis echelon;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) throw InputError("affine_hull: points of mixed dimension");
    RationalVector diff = subtract(points[i], points.front());
    if (echelon.insert(diff)) basis.push_back(std::move(diff));
    if (basis.size() == d) break;
  }
  return AffineSubspace(points.front(), std::move(basis));
}

/// conv(vertices), the compact convex set M. The vertex list may contain
/// non-extreme points; only the hull matters.
class Polytope {
 public:
  explicit Polytope(std::vector<RationalVector> vertices)
      : vertices_(std::move(vertices)), hull_(validated_hull(vertices_)) {}

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t ambient_dim() const { return vertices_.front().size(); }
  const AffineSubspace& affine_hull() const { return hull_; }

 private:
  static AffineSubspace validated_hull(const std::vector<RationalVector>& vertices) {
    if (vertices.empty()) throw InputError("polytope needs at least one vertex");
    if (vertices.front().empty()) throw InputError("polytope vertices must have dimension >= 1");
    return barylab::affine_hull(vertices);
  }

  std::vector<RationalVector> vertices_;
  AffineSubspace hull_;
};

namespace detail {

inline void require_dim(const Polytope& m, const RationalVector& x, const char* what) {
  if (x.size() != m.ambient_dim())
    throw InputError(std::string(what) + ": point has dimension " + std::to_string(x.size()) +
                     ", polytope has " + std::to_string(m.ambient_dim()));
}

/// Rows sum_i lambda_i v_i = target and sum_i lambda_i = 1 over the first
/// vertex_count columns of an LP with `width` columns.
inline void add_convex_combination_rows(LinearProgram& lp, const Polytope& m, const RationalVector& target,
                                        std::size_t width) {
  const auto& vs = m.vertices();
  for (std::size_t c = 0; c < m.ambient_dim(); ++c) {
    RationalVector row(width, Rational(0));
    for (std::size_t i = 0; i < vs.size(); ++i) row[i] = vs[i][c];
    lp.add_equality(std::move(row), target[c]);
  }
  RationalVector ones(width, Rational(0));
  for (std::size_t i = 0; i < vs.size(); ++i) ones[i] = 1;
  lp.add_equality(std::move(ones), Rational(1));
}

}  // namespace detail

/// x in conv(vertices), decided exactly by LP feasibility.
inline bool contains(const Polytope& m, const RationalVector& x) {
  detail::require_dim(m, x, "contains");
  if (!m.affine_hull().contains(x)) return false;
  LinearProgram lp(RationalVector(m.vertex_count(), Rational(0)));
  detail::add_convex_combination_rows(lp, m, x, m.vertex_count());
  return solve_lp(lp).optimal();
}

/// Breadth-first enumeration of dyadic weight vectors on `k` entries.
///
/// Level L holds weight vectors whose entries are multiples of 2^-L and sum to
/// one; each level yields only vectors not produced at a coarser level, in
/// ascending lexicographic order of their numerators. The union over all levels
/// is dense in the standard simplex.
class DensePlan {
 public:
  explicit DensePlan(std::size_t k) : counts_(k, 0) {
    if (k == 0) throw InputError("DensePlan needs at least one weight");
    counts_.back() = 1;
  }

  std::size_t level() const { return level_; }

  /// Next weight vector. With k == 1 the plan is the single vector (1) forever.
  RationalVector next() {
    if (counts_.size() > 1 && started_) advance();
    started_ = true;
    const Rational unit = dyadic(static_cast<unsigned>(level_));
    RationalVector w(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) w[i] = unit * counts_[i];
    return w;
  }

 private:
  // Lexicographic successor of a composition; at the end of a level moves on to
  // the first composition of the next level. Skips all-even compositions.
  void advance() {
    do {
      if (!step_within_level()) {
        ++level_;
        total_ <<= 1;
        std::fill(counts_.begin(), counts_.end(), Integer(0));
        counts_.back() = total_;
      }
    } while (level_ > 0 && all_even());
  }

  bool step_within_level() {
    const std::size_t k = counts_.size();
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

  bool all_even() const {
    for (const auto& c : counts_)
      if (boost::multiprecision::bit_test(c, 0)) return false;
    return true;
  }

  std::vector<Integer> counts_;
  Integer total_ = 1;
  std::size_t level_ = 0;
  bool started_ = false;
};

/// sum_i w_i v_i.
inline RationalVector combine(const Polytope& m, std::span<const Rational> weights) {
  RationalVector p = zeros(m.ambient_dim());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += weights[i] * m.vertices()[i][c];
  }
  return p;
}

/// First n distinct points of conv(vertices) produced by DensePlan over the
/// vertex list. A single-point polytope yields n copies of that point.
inline std::vector<RationalVector> dense_sequence(const Polytope& m, std::size_t n) {
  if (n == 0) throw InputError("dense_sequence: n must be >= 1");
  if (m.affine_hull().dim() == 0) return std::vector<RationalVector>(n, m.vertices().front());
  std::vector<RationalVector> out;
  out.reserve(n);
  std::set<RationalVector> seen;
  DensePlan plan(m.vertex_count());
  while (out.size() < n) {
    RationalVector p = combine(m, plan.next());
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

/// Points of M on a regular grid in affine-hull coordinates, as doubles.
struct CoveringGrid {
  std::vector<std::vector<double>> points;
};

namespace detail {

/// Frame for grids: the coordinate axes for a full-dimensional hull, otherwise
/// the hull basis made pairwise orthogonal (Gram-Schmidt without normalizing).
inline AffineSubspace grid_frame(const AffineSubspace& hull) {
  const std::size_t d = hull.ambient_dim();
  std::vector<RationalVector> basis;
  if (hull.dim() == d) {
    for (std::size_t i = 0; i < d; ++i) {
      basis.push_back(zeros(d));
      basis.back()[i] = 1;
    }
  } else {
    for (const auto& b : hull.basis()) {
      RationalVector v = b;
      for (const auto& u : basis) v = subtract(v, scale(dot(v, u) / dot(u, u), u));
      basis.push_back(std::move(v));
    }
  }
  return AffineSubspace(hull.offset(), std::move(basis));
}

}  // namespace detail

/// Grid with resolution+1 samples per axis of an orthogonal frame of aff M over
/// the bounding box of the vertices, keeping only points of M.
inline CoveringGrid covering_grid(const Polytope& m, std::size_t resolution) {
  if (resolution == 0) throw InputError("covering_grid: resolution must be >= 1");
  const AffineSubspace frame = detail::grid_frame(m.affine_hull());
  const std::size_t k = frame.dim();
  CoveringGrid grid;
  if (k == 0) {
    grid.points.push_back(to_doubles(m.vertices().front()));
    return grid;
  }
  RationalVector lo, hi;
  for (const auto& v : m.vertices()) {
    RationalVector t = frame.coordinates_of(v);
    if (lo.empty()) {
      lo = t;
      hi = t;
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (t[i] < lo[i]) lo[i] = t[i];
      if (t[i] > hi[i]) hi[i] = t[i];
    }
  }
  std::vector<std::size_t> idx(k, 0);
  RationalVector t(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i)
      t[i] = lo[i] + (hi[i] - lo[i]) * Rational(static_cast<long long>(idx[i])) /
                         Rational(static_cast<long long>(resolution));
    RationalVector p = frame.point_at(t);
    if (contains(m, p)) grid.points.push_back(to_doubles(p));
    std::size_t i = 0;
    while (i < k && ++idx[i] > resolution) idx[i++] = 0;
    if (i == k) break;
  }
  return grid;
}

/// max over grid points of the Euclidean distance to the nearest input point.
inline double covering_radius(const std::vector<std::vector<double>>& points, const CoveringGrid& grid) {
  if (points.empty()) throw InputError("covering_radius: empty point set");
  double worst = 0.0;
  for (const auto& g : grid.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
      double s = 0.0;
      for (std::size_t c = 0; c < g.size(); ++c) {
        const double d = g[c] - p[c];
        s += d * d;
        if (s >= best) break;
      }
      if (s < best) best = s;
    }
    if (best > worst) worst = best;
  }
  return std::sqrt(worst);
}

inline double covering_radius(std::span<const RationalVector> points, const CoveringGrid& grid) {
  std::vector<std::vector<double>> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_doubles(p));
  return covering_radius(pts, grid);
}

inline double covering_radius(std::span<const RationalVector> points, const Polytope& m,
                              std::size_t grid_resolution) {
  if (points.empty()) throw InputError("covering_radius: empty point set");
  return covering_radius(points, covering_grid(m, grid_resolution));
}

}  // namespace barylab
