#pragma once

// Subcommand bodies behind the barylab CLI. Each returns the process exit code:
//   0 pass, 1 property failure, 2 input error, 3 precondition violation,
//   4 characterization-negative (no witness exists).

#include "barylab/characterize.hpp"
#include "barylab/geometry.hpp"
#include "barylab/hilbert_cube.hpp"
#include "barylab/json_io.hpp"
#include "barylab/measure.hpp"
#include "barylab/simplex_t2.hpp"
#include "barylab/witness.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace barylab::cli {

enum ExitCode : int {
  kPass = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kPrecondition = 3,
  kNoWitness = 4,
};

enum class Format { Json, Csv };

struct RunConfig {
  std::string input;  // polytope or measure JSON path
  std::string point;  // "r1,r2,..."
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  std::size_t pairs = 64;
  std::size_t dim = 10;
  std::size_t depth = 32;
  std::size_t m = 0;  // 0: take from --mu
  std::string mu;
  std::size_t lambda_atoms = 4096;
  std::size_t resolution = 0;  // 0: per-command default
  std::string out;
  Format format = Format::Json;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to --out via a temporary file and rename, or to `console` when no path is set.
inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& console) {
  if (cfg.out.empty()) {
    console << text;
    return;
  }
  const std::filesystem::path target(cfg.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << text;
    if (!f) throw InputError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

inline std::string dump(const json_io::json& j) { return j.dump(2) + "\n"; }

inline RationalVector parse_point(const RunConfig& cfg) {
  if (cfg.point.empty()) throw InputError("--point is required");
  return parse_rational_list(cfg.point);
}

/// Grid resolution giving roughly 10^4 grid points for a k-dimensional hull.
inline std::size_t default_resolution(std::size_t k) {
  switch (k) {
    case 0: return 1;
    case 1: return 1000;
    case 2: return 100;
    case 3: return 20;
    case 4: return 10;
    default: return 6;
  }
}

}  // namespace detail

/// Both sides of the characterization for a polytope (--input) and a point (--point).
inline int run_characterize(const RunConfig& cfg, std::ostream& console) {
  if (cfg.format == Format::Csv) throw InputError("characterize supports --format json only");
  const Polytope m = json_io::polytope_from_json(json_io::parse(detail::read_file(cfg.input)));
  const RationalVector a = detail::parse_point(cfg);
  const CharacterizationReport report = characterize(m, a);
  detail::emit(cfg, detail::dump(json_io::to_json(report)), console);
  return report.agrees() ? kPass : kPropertyFailure;
}

/// Witness measure for (--input, --point) with --pairs pairs, plus exact verification.
/// CSV output is the sweep N = 1, 2, 4, ..., pairs vs covering radius.
inline int run_witness(const RunConfig& cfg, std::ostream& console) {
  const Polytope m = json_io::polytope_from_json(json_io::parse(detail::read_file(cfg.input)));
  const RationalVector a = detail::parse_point(cfg);
  barylab::detail::require_dim(m, a, "witness");
  if (!in_relint(m, a))
    throw CharacterizationError("no witness exists: the point is not in the relative interior of M");
  const std::size_t res =
      cfg.resolution ? cfg.resolution : detail::default_resolution(m.affine_hull().dim());
  const CoveringGrid grid = covering_grid(m, res);

  if (cfg.format == Format::Csv) {
    std::ostringstream csv;
    csv << "pairs,atoms,covering_radius\n";
    bool ok = true;
    for (std::size_t n = 1;; n *= 2) {
      n = std::min(n, cfg.pairs);
      const DiscreteMeasure mu = construct_witness(m, a, n);
      ok = ok && barycenter(mu) == a;
      csv << n << ',' << mu.size() << ',' << covering_radius(mu.atoms(), grid) << '\n';
      if (n == cfg.pairs) break;
    }
    detail::emit(cfg, csv.str(), console);
    return ok ? kPass : kPropertyFailure;
  }

  const DiscreteMeasure mu = construct_witness(m, a, cfg.pairs);
  const bool exact = barycenter(mu) == a;
  bool inside = true;
  for (const auto& x : mu.atoms()) inside = inside && contains(m, x);
  json_io::json report = {
      {"measure", json_io::to_json(mu)},
      {"summary",
       {{"pairs", cfg.pairs},
        {"atoms", mu.size()},
        {"barycenter_exact_match", exact},
        {"atoms_in_M", inside},
        {"covering_radius", covering_radius(mu.atoms(), grid)},
        {"grid_resolution", res}}}};
  detail::emit(cfg, detail::dump(report), console);
  return exact && inside ? kPass : kPropertyFailure;
}

/// Exact barycenter of a measure file (bare measure or a witness report).
inline int run_measure(const RunConfig& cfg, std::ostream& console) {
  json_io::json j = json_io::parse(detail::read_file(cfg.input));
  if (j.is_object() && j.contains("measure")) j = j.at("measure");
  const DiscreteMeasure mu = json_io::measure_from_json(j);
  const RationalVector b = barycenter(mu);
  json_io::json report = {{"atoms", mu.size()}, {"barycenter", json_io::to_json(b)}};
  int code = kPass;
  if (!cfg.point.empty()) {
    const bool match = b == detail::parse_point(cfg);
    report["matches_point"] = match;
    if (!match) code = kPropertyFailure;
  }
  detail::emit(cfg, detail::dump(report), console);
  return code;
}

/// Truncated Hilbert cube of dimension --dim: exact alpha_max and a Monte Carlo
/// check of the coordinate means. CSV output is the sweep d' = 1..dim of alpha_max.
inline int run_hilbert(const RunConfig& cfg, std::ostream& console) {
  if (cfg.dim < 1) throw InputError("--dim must be >= 1");
  if (cfg.format == Format::Csv) {
    std::ostringstream csv;
    csv << "d,alpha_max,alpha_max_num,alpha_max_den\n";
    bool ok = true;
    for (std::size_t d = 1; d <= cfg.dim; ++d) {
      const Rational alpha = cube_alpha_max(d);
      ok = ok && alpha == cube_alpha_max_closed_form(d);
      csv << d << ',' << to_double(alpha) << ',' << numerator_of(alpha) << ',' << denominator_of(alpha) << '\n';
    }
    detail::emit(cfg, csv.str(), console);
    return ok ? kPass : kPropertyFailure;
  }
  if (cfg.samples < 1) throw InputError("--samples must be >= 1");
  const Rational alpha = cube_alpha_max(cfg.dim);
  const bool alpha_ok = alpha == cube_alpha_max_closed_form(cfg.dim);
  const bool interior = cube(cfg.dim).in_interior(target_point(cfg.dim));
  const CubeMeanCheck check = check_cube_means(cube_sample_means(cfg.dim, cfg.seed, cfg.samples), cfg.samples);
  const std::size_t allowed = cfg.dim / 100;  // 1% of coordinates
  const bool pass = alpha_ok && interior && check.exceedances <= allowed;
  json_io::json report = {{"d", cfg.dim},
                          {"seed", cfg.seed},
                          {"samples", cfg.samples},
                          {"alpha_max", json_io::to_json(alpha)},
                          {"alpha_max_matches_closed_form", alpha_ok},
                          {"target_in_interior", interior},
                          {"empirical_mean", check.empirical_mean},
                          {"target", check.target},
                          {"max_abs_deviation", check.max_abs_deviation},
                          {"four_sigma_exceedances", check.exceedances},
                          {"pass", pass}};
  detail::emit(cfg, detail::dump(report), console);
  return pass ? kPass : kPropertyFailure;
}

/// Pushforward measure on the simplex over K = {0..m-1} with barycenter --mu.
inline int run_simplex(const RunConfig& cfg, std::ostream& console) {
  if (cfg.format == Format::Csv) throw InputError("simplex supports --format json only");
  RationalVector mu;
  if (!cfg.mu.empty()) {
    mu = parse_rational_list(cfg.mu);
  } else if (cfg.m >= 1) {
    mu.assign(cfg.m, make_rational(1, static_cast<long long>(cfg.m)));
  } else {
    throw InputError("--mu or --m is required");
  }
  if (cfg.m != 0 && cfg.m != mu.size()) throw InputError("--m does not match the length of --mu");
  require_simplex_point(mu, "--mu");
  if (cfg.samples < 1 || cfg.depth < 1 || cfg.lambda_atoms < 1)
    throw InputError("--samples, --depth and --lambda-atoms must be >= 1");

  const FiniteK k(mu.size());
  const bool full = support_full(mu);
  const bool relint = in_relint(probability_simplex(k.m), mu);
  const auto samples = sample_eta(mu, cfg.depth, cfg.lambda_atoms, cfg.seed, cfg.samples);
  const EtaMeanCheck check = check_eta_mean(samples, mu);
  const std::size_t res = cfg.resolution ? cfg.resolution : 20;

  json_io::json report = {{"m", k.m},
                          {"mu", json_io::to_json(mu)},
                          {"J", cfg.depth},
                          {"lambda_atoms", cfg.lambda_atoms},
                          {"S", cfg.samples},
                          {"seed", cfg.seed},
                          {"empirical_barycenter", check.empirical_barycenter},
                          {"sigma_of_mean", check.sigma_of_mean},
                          {"four_sigma_exceedances", check.exceedances},
                          {"min_coord", check.min_coord},
                          {"support_full", full},
                          {"support_full_matches_relint", full == relint}};
  // Grid size C(res + m - 1, m - 1); skip the diagnostic when it gets large.
  double grid_points = 1.0;
  for (std::size_t i = 1; i < k.m; ++i) grid_points = grid_points * static_cast<double>(res + i) / static_cast<double>(i);
  if (grid_points <= 2e4) {
    report["covering_radius"] = coverage_of_simplex(samples, res);
    report["grid_resolution"] = res;
  } else {
    report["covering_radius"] = nullptr;
  }
  if (!full) report["note"] = "not a full-support barycenter target";
  const bool pass = full && full == relint && check.exceedances == 0;
  report["pass"] = pass;
  detail::emit(cfg, detail::dump(report), console);
  return pass ? kPass : kPropertyFailure;
}

using Command = std::function<int(const RunConfig&, std::ostream&)>;

/// Runs a subcommand and maps library exceptions to exit codes, reporting them on `err`.
inline int guarded(const Command& command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return command(cfg, out);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CharacterizationError& e) {
    err << e.what() << '\n';
    return kNoWitness;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const json_io::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace barylab::cli
