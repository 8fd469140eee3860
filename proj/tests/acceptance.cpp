// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "barylab/barylab.hpp"

#include "lp_oracle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace barylab;
using barylab::testing::q;
using barylab::testing::vec;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* name, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %s %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs);
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

RationalVector centroid(const Polytope& m) {
  RationalVector c = zeros(m.ambient_dim());
  for (const auto& v : m.vertices()) c = add(c, v);
  return scale(make_rational(1, static_cast<long long>(m.vertex_count())), c);
}

// Random polytope whose hull is full-dimensional.
Polytope random_full_polytope(std::mt19937_64& rng, std::size_t dim, std::size_t vertices) {
  while (true) {
    Polytope m = barylab::testing::random_polytope(rng, dim, vertices);
    if (m.affine_hull().dim() == dim) return m;
  }
}

// E[F(a, x)] under lambda x mu^J, summing over every index tuple in K^J.
RationalVector enumerated_mean(const DiscreteMeasure& lambda, const RationalVector& mu) {
  const std::size_t m = mu.size();
  const std::size_t depth = lambda.dim();
  RationalVector mean = zeros(m);
  std::vector<std::size_t> x(depth, 0);
  while (true) {
    Rational px = 1;
    for (auto i : x) px *= mu[i];
    for (std::size_t l = 0; l < lambda.size(); ++l)
      for (std::size_t j = 0; j < depth; ++j) mean[x[j]] += lambda.weights()[l] * px * lambda.atoms()[l][j];
    std::size_t j = 0;
    while (j < depth && ++x[j] == m) x[j++] = 0;
    if (j == depth) break;
  }
  return mean;
}

// Points of the simplex in R^m with entries in (1/den) Z.
void simplex_points(std::size_t m, long long den, std::set<RationalVector>& out) {
  std::vector<long long> c(m, 0);
  auto rec = [&](auto& self, std::size_t i, long long left) -> void {
    if (i + 1 == m) {
      c[i] = left;
      RationalVector p;
      for (auto v : c) p.push_back(make_rational(v, den));
      out.insert(std::move(p));
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      c[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, den);
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

int main() {
  report("C1", "relative interior vs closure of V_a", [] {
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<int> dim(1, 5), nv(1, 12), support(1, 12);
    std::size_t cases = 0, mismatches = 0, interior = 0;
    auto check = [&](const Polytope& m, const RationalVector& a) {
      const bool lhs = check_condition_ii(m, a);
      const bool rhs = in_relint(m, a);
      ++cases;
      interior += rhs;
      if (lhs != rhs) ++mismatches;
    };
    for (int poly = 0; poly < 60; ++poly) {
      const Polytope m = barylab::testing::random_polytope(rng, static_cast<std::size_t>(dim(rng)),
                                                           static_cast<std::size_t>(nv(rng)));
      for (int i = 0; i < 4; ++i)
        check(m, barylab::testing::random_convex_point(rng, m, static_cast<std::size_t>(support(rng))));
      check(m, barylab::testing::random_convex_point(rng, m));
      for (const auto& v : m.vertices()) check(m, v);
      const auto& vs = m.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if ((i + j + static_cast<std::size_t>(poly)) % 3 == 0) check(m, lerp(vs[i], vs[j], q(1, 2)));
    }
    return Verdict{cases >= 500 && mismatches == 0,
                   str(cases) + " cases (" + str(interior) + " interior), " + str(mismatches) + " mismatches"};
  });

  report("C2", "witness barycenter exactness", [] {
    std::mt19937_64 rng(2002);
    std::uniform_int_distribution<int> dim(1, 3), nv(2, 6);
    std::size_t pairs_checked = 0, bad_barycenter = 0, bad_atoms = 0;
    int built = 0;
    while (built < 50) {
      const Polytope m = barylab::testing::random_polytope(rng, static_cast<std::size_t>(dim(rng)),
                                                           static_cast<std::size_t>(nv(rng)));
      const RationalVector a = barylab::testing::random_convex_point(rng, m);
      if (!in_relint(m, a)) continue;  // cannot happen with full-support weights; kept as a guard
      ++built;
      for (std::size_t n : {16u, 64u, 256u}) {
        const DiscreteMeasure mu = construct_witness(m, a, n);
        ++pairs_checked;
        if (barycenter(mu) != a) ++bad_barycenter;
        for (const auto& x : mu.atoms())
          if (!contains(m, x)) ++bad_atoms;
      }
    }
    return Verdict{bad_barycenter == 0 && bad_atoms == 0,
                   str(pairs_checked) + " witnesses, " + str(bad_barycenter) + " barycenter mismatches, " +
                       str(bad_atoms) + " atoms outside M"};
  });

  report("C3", "witness support densification", [] {
    std::mt19937_64 rng(3003);
    struct Case {
      std::string name;
      Polytope m;
      std::size_t resolution;
    };
    std::vector<Case> cases{{"square", barylab::testing::unit_square(), 100},
                            {"triangle", barylab::testing::triangle(), 100},
                            {"random 3-d", random_full_polytope(rng, 3, 7), 20}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
      const RationalVector a = centroid(c.m);
      const CoveringGrid grid = covering_grid(c.m, c.resolution);
      const double r64 = covering_radius(construct_witness(c.m, a, 64).atoms(), grid);
      const double r1024 = covering_radius(construct_witness(c.m, a, 1024).atoms(), grid);
      const double ratio = r1024 / r64;
      ok = ok && ratio <= 0.5;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s%s r64=%.4f r1024=%.4f ratio=%.3f", detail.empty() ? "" : "; ",
                    c.name.c_str(), r64, r1024, ratio);
      detail += buf;
    }
    // Informational only: the same check on further random 3-d polytopes.
    int met = 0;
    for (unsigned seed = 1; seed <= 20; ++seed) {
      std::mt19937_64 other(seed);
      const Polytope m = random_full_polytope(other, 3, 7);
      const CoveringGrid grid = covering_grid(m, 20);
      const RationalVector a = centroid(m);
      const double ratio = covering_radius(construct_witness(m, a, 1024).atoms(), grid) /
                           covering_radius(construct_witness(m, a, 64).atoms(), grid);
      met += ratio <= 0.5;
    }
    detail += "; other random 3-d polytopes within 0.5: " + str(met) + "/20 (not scored)";
    return Verdict{ok, detail};
  });

  report("C4", "conditional barycenters lie in V_a", [] {
    std::mt19937_64 rng(4004);
    std::uniform_int_distribution<int> dim(1, 3), nv(2, 6), pairs(2, 12), jitter(-3, 3), rad(1, 8);
    std::size_t balls = 0, failures_here = 0;
    for (int measure = 0; measure < 100; ++measure) {
      const Polytope m = barylab::testing::random_polytope(rng, static_cast<std::size_t>(dim(rng)),
                                                           static_cast<std::size_t>(nv(rng)));
      const RationalVector a = barylab::testing::random_convex_point(rng, m);
      const DiscreteMeasure mu = construct_witness(m, a, static_cast<std::size_t>(pairs(rng)));
      std::uniform_int_distribution<std::size_t> atom(0, mu.size() - 1);
      for (int b = 0; b < 20; ++b) {
        // Center near a random atom so the ball carries mass.
        RationalVector center = mu.atoms()[atom(rng)];
        for (auto& c : center) c += q(jitter(rng), 10);
        const Rational radius = q(rad(rng), 2);
        auto cb = conditional_barycenter(mu, center, radius);
        if (!cb) {
          --b;
          continue;
        }
        ++balls;
        if (!in_v_a(m, a, *cb)) ++failures_here;
      }
    }
    return Verdict{balls == 2000 && failures_here == 0,
                   str(balls) + " balls over 100 measures, " + str(failures_here) + " failures"};
  });

  report("C5", "truncated Hilbert cube prolongation rate", [] {
    std::size_t wrong_alpha = 0;
    for (std::size_t d = 1; d <= 200; ++d)
      if (cube_alpha_max(d) != make_rational(1, static_cast<long long>(d))) ++wrong_alpha;
    for (std::size_t d = 1; d <= 4; ++d)
      if (max_prolongation_alpha(cube(d).to_polytope(), target_point(d), zeros(d)).alpha_max !=
          make_rational(1, static_cast<long long>(d)))
        ++wrong_alpha;
    const std::size_t d = 50, samples = 100000, seeds = 20;
    std::size_t exceedances = 0;
    for (std::uint64_t seed = 0; seed < seeds; ++seed)
      exceedances += check_cube_means(cube_sample_means(d, seed, samples), samples).exceedances;
    const std::size_t checks = d * seeds;
    const bool ok = wrong_alpha == 0 && exceedances * 100 <= checks;
    return Verdict{ok, "alpha_max mismatches " + str(wrong_alpha) + " over d=1..200; 4-sigma exceedances " +
                           str(exceedances) + "/" + str(checks) + " (allowed " + str(checks / 100) + ")"};
  });

  report("C6", "pushforward barycenter identity", [] {
    std::size_t exact_cases = 0, exact_fail = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
      std::set<RationalVector> mus;
      for (long long den : {1, 2, 3, 4, 6}) simplex_points(m, den, mus);
      for (const auto& mu : mus)
        for (std::size_t depth : {1u, 2u})
          for (std::size_t n = 1; n <= 8; ++n) {
            ++exact_cases;
            if (enumerated_mean(lambda_on_A(depth, n), mu) != mu) ++exact_fail;
          }
    }
    const RationalVector mu = vec({q(1, 2), q(1, 3), q(1, 6)});
    const auto xs = sample_eta(mu, 32, 4096, 6006, 100000);
    const EtaMeanCheck check = check_eta_mean(xs, mu);
    const double coverage = coverage_of_simplex(xs, 20);
    char buf[200];
    std::snprintf(buf, sizeof buf, "; Monte Carlo mean (%.4f, %.4f, %.4f), 4-sigma exceedances %zu, coverage %.4f",
                  check.empirical_barycenter[0], check.empirical_barycenter[1], check.empirical_barycenter[2],
                  check.exceedances, coverage);
    const bool ok = exact_fail == 0 && check.exceedances == 0 && coverage <= 0.1;
    return Verdict{ok, "exact " + str(exact_cases - exact_fail) + "/" + str(exact_cases) + buf};
  });

  report("C7", "full support vs relative interior of the simplex", [] {
    std::size_t points = 0, mismatches = 0;
    for (std::size_t m = 1; m <= 6; ++m) {
      std::set<RationalVector> grid;
      for (long long den = 1; den <= 6; ++den) simplex_points(m, den, grid);
      const Polytope simplex = probability_simplex(m);
      for (const auto& p : grid) {
        ++points;
        if (support_full(p) != in_relint(simplex, p)) ++mismatches;
      }
    }
    return Verdict{mismatches == 0, str(points) + " grid points, " + str(mismatches) + " mismatches"};
  });

  report("C8", "exact LP against vertex enumeration", [] {
    std::mt19937_64 rng(8008);
    std::size_t optimal = 0, infeasible = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto inst = barylab::testing::random_small_lp(rng);
      const LpOutcome out = solve_lp(inst.lp);
      const auto oracle = barylab::testing::vertex_enumeration_optimum(inst);
      if (!oracle) {
        ++infeasible;
        if (out.status != LpStatus::Infeasible) ++mismatches;
        continue;
      }
      ++optimal;
      if (!out.optimal() || out.optimum != *oracle || !inst.lp.is_feasible(out.solution)) ++mismatches;
    }
    return Verdict{mismatches == 0, "200 LPs (" + str(optimal) + " optimal, " + str(infeasible) +
                                        " infeasible), " + str(mismatches) + " mismatches"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
