// projframe: command-line front end for the frame geometry engine.
//
// Exit codes: 0 success / all invariants hold, 1 invariant failure,
// 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projframe/desargues.hpp"
#include "projframe/error.hpp"
#include "projframe/fuzz.hpp"
#include "projframe/generators.hpp"
#include "projframe/group.hpp"
#include "projframe/scene.hpp"

namespace {

using namespace projframe;

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kInputError = 2;

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open scene file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return scene_from_json(j);
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      dims.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad dimension '" + item + "' in --dims");
    }
  }
  return dims;
}

int cmd_gen(std::size_t dim, std::uint64_t seed, std::size_t count, std::int64_t bound) {
  Rng rng(seed);
  std::optional<Scene> scene;
  for (std::size_t k = 1; k <= count; ++k) {
    const AdaptedFrame r = gen_adapted_frame(dim, rng, bound);
    const PerspectiveCoeffs coeffs = gen_strict_coeffs(dim, rng, bound, HChoice::Any);
    const AdaptedFrame mate = gen_perspective_mate(r, coeffs.h, coeffs.a);
    if (!scene) scene = Scene(dim, r.center());
    const std::string base = "R" + std::to_string(k);
    const std::string other = "P" + std::to_string(k);
    scene->frames.emplace(base, r);
    scene->frames.emplace(other, mate);
    scene->pairs.emplace_back(base, other);
  }
  std::cout << to_json(*scene).dump(2) << '\n';
  return kOk;
}

int cmd_check(const std::string& path, const std::vector<std::string>& pair) {
  const Scene scene = load_scene(path);
  const AdaptedFrame& r = scene.frame(pair.at(0));
  const AdaptedFrame& r2 = scene.frame(pair.at(1));
  const DesarguesReport report = check_main_theorem(r, r2);
  std::cout << to_json(report).dump(2) << '\n';

  const bool agree = report.passes_through_center == report.h_equals_one && report.h_equals_one == report.equivalent;
  const bool analytic_matches = hyperplane_to_subspace(report.analytic_hyperplane) == report.geometric_locus;
  return report.is_hyperplane && agree && analytic_matches ? kOk : kInvariantFailure;
}

int cmd_equiv(const std::string& path, const std::vector<std::string>& pair) {
  const Scene scene = load_scene(path);
  const AdaptedFrame& r = scene.frame(pair.at(0));
  const AdaptedFrame& r2 = scene.frame(pair.at(1));
  const TransitionCoeffs t = transition(r, r2);
  std::cout << "equivalent: " << (is_equivalent(r, r2) ? "true" : "false") << '\n';
  std::cout << "transition: " << to_json(t).dump() << '\n';
  return kOk;
}

int cmd_fuzz(const FuzzConfig& cfg, const std::string& out_path) {
  const FuzzReport report = fuzz(cfg);
  const std::string text = to_json(report).dump(2);
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
    out << text << '\n';
  }
  std::cerr << "fuzz " << to_string(cfg.mode) << ": " << report.trials.size() << " trials, "
            << report.failed_trials() << " failed, " << report.elapsed_seconds << " s\n";
  return report.failed_trials() == 0 ? kOk : kInvariantFailure;
}

int cmd_example(bool as_json) {
  const AdaptedFrame r = AdaptedFrame::standard(2);
  const Vec a{1, 2};
  Json all = Json::array();
  for (const Rational& h : {Rational(3), Rational(1)}) {
    const AdaptedFrame mate = gen_perspective_mate(r, h, a);
    const DesarguesReport report = check_main_theorem(r, mate);
    const PerspectiveCoeffs coeffs = transform_coefficients(r, mate);
    if (as_json) {
      Json entry = to_json(report);
      entry["h"] = to_json(h);
      entry["equation_covector"] = to_json(desargues_equation(coeffs));
      entry["a"] = to_json(a);
      all.push_back(std::move(entry));
      continue;
    }
    std::cout << "standard frame of P_2 and its mate with h = " << h << ", a = (1, 2), e = " << coeffs.e() << '\n';
    std::cout << "  mate: A'1 = " << mate.vertex(1) << ", A'2 = " << mate.vertex(2) << ", E' = " << mate.unit()
              << '\n';
    for (const auto& b : report.b_points) std::cout << "  " << b.label() << " = " << b.point << '\n';
    std::cout << "  hyperplane (1-h) x0 + a1 x1 + a2 x2 = 0, covector " << desargues_equation(coeffs)
              << ", canonical " << report.analytic_hyperplane << '\n';
    std::cout << "  geometric locus dim " << report.geometric_locus.dim() << ", matches covector: "
              << (hyperplane_to_subspace(report.analytic_hyperplane) == report.geometric_locus ? "yes" : "no") << '\n';
    std::cout << "  passes through center: " << std::boolalpha << report.passes_through_center
              << ", h = 1: " << report.h_equals_one << ", equivalent: " << report.equivalent << '\n';
  }
  if (as_json) std::cout << all.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective frame geometry: Desargues hyperplanes and H-orbit equivalence"};
  app.require_subcommand(1);

  std::size_t gen_dim = 2;
  std::uint64_t gen_seed = 0;
  std::size_t gen_count = 1;
  std::int64_t gen_bound = 9;
  auto* gen = app.add_subcommand("gen", "Emit a random scene of strictly perspective frame pairs");
  gen->add_option("--dim", gen_dim, "Ambient dimension n (>= 2)")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--count", gen_count, "Number of frame pairs")->check(CLI::PositiveNumber);
  gen->add_option("--bound", gen_bound, "Bound on random integer entries")->check(CLI::PositiveNumber);

  std::string scene_path;
  std::vector<std::string> pair;
  auto* check = app.add_subcommand("check", "Desargues report for a pair of frames in a scene");
  check->add_option("--scene", scene_path, "Scene JSON file")->required();
  check->add_option("--pair", pair, "Two frame names")->required()->expected(2);

  auto* equiv = app.add_subcommand("equiv", "H-orbit equivalence and transition coefficients of a pair");
  equiv->add_option("--scene", scene_path, "Scene JSON file")->required();
  equiv->add_option("--pair", pair, "Two frame names")->required()->expected(2);

  FuzzConfig cfg;
  std::string dims_text = "2,3,4,5";
  std::string mode_text = "strict-perspective";
  std::string out_path;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized theorem checking; exit 0 iff no failures");
  fuzz_cmd->add_option("--dims", dims_text, "Comma-separated dimensions, each >= 2");
  fuzz_cmd->add_option("--trials", cfg.trials_per_dim, "Trials per dimension");
  fuzz_cmd->add_option("--seed", cfg.seed, "RNG seed");
  fuzz_cmd->add_option("--mode", mode_text, "strict-perspective | h-one | in-H | general");
  fuzz_cmd->add_option("--jobs", cfg.jobs, "Worker threads (does not change the report)");
  fuzz_cmd->add_option("--bound", cfg.coeff_bound, "Bound on random integer entries");
  fuzz_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  bool example_json = false;
  auto* example = app.add_subcommand("example", "Worked example in P_2 with a = (1, 2), h = 3 and h = 1");
  example->add_flag("--json", example_json, "Emit JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) return cmd_gen(gen_dim, gen_seed, gen_count, gen_bound);
    if (*check) return cmd_check(scene_path, pair);
    if (*equiv) return cmd_equiv(scene_path, pair);
    if (*fuzz_cmd) {
      cfg.dims = parse_dims(dims_text);
      cfg.mode = parse_mode(mode_text);
      return cmd_fuzz(cfg, out_path);
    }
    if (*example) return cmd_example(example_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
