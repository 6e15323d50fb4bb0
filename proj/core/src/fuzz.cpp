#include "projframe/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "projframe/error.hpp"
#include "projframe/generators.hpp"
#include "projframe/group.hpp"
#include "projframe/linalg.hpp"

namespace projframe {

namespace {

class Checks {
 public:
  void add(std::string invariant, bool passed, std::string detail = {}) {
    results_.push_back({std::move(invariant), passed, std::move(detail)});
  }
  std::vector<CheckResult>& results() { return results_; }

 private:
  std::vector<CheckResult> results_;
};

Scene make_scene(const AdaptedFrame& r, const AdaptedFrame& r2) {
  Scene scene(r.ambient_dim(), r.center());
  scene.frames.emplace("R", r);
  scene.frames.emplace("R2", r2);
  scene.pairs.emplace_back("R", "R2");
  return scene;
}

void closed_form_checks(const AdaptedFrame& r, const PerspectiveCoeffs& coeffs, const DesarguesReport& report,
                        Checks& checks) {
  const auto& basis = r.frame().basis().vectors;
  const Vec unit = r.frame().basis().sum();
  const Rational e = coeffs.e();

  bool closed_form = true;
  bool on_lines = true;
  std::map<std::size_t, ProjPoint> single;
  for (const auto& b : report.b_points) {
    if (b.j == 0) single.emplace(b.i, b.point);
  }
  for (const auto& b : report.b_points) {
    if (b.j == 0) {
      const Vec expected = add(scale(basis[b.i], -(e / coeffs.a[b.i - 1])), unit);
      closed_form = closed_form && ProjPoint(expected) == b.point;
    } else {
      const Vec expected = subtract(scale(basis[b.i], coeffs.a[b.j - 1]), scale(basis[b.j], coeffs.a[b.i - 1]));
      closed_form = closed_form && ProjPoint(expected) == b.point;
      on_lines = on_lines && contains(join({single.at(b.i), single.at(b.j)}), b.point);
    }
  }
  checks.add("b_point_closed_form", closed_form);
  checks.add("b_ij_on_line_b_i_b_j", on_lines);

  // The pencil through L: x^0 = 0 and L': a_i x^i - h x^0 = 0 is
  // lambda x^0 + mu a_i x^i = 0; B_1 singles out lambda : mu = (1 - h) : 1.
  const std::size_t n = r.ambient_dim();
  const Vec b1 = homogeneous_coords(single.at(1), r.frame());
  Rational a_dot = 0;
  for (std::size_t i = 1; i <= n; ++i) a_dot += coeffs.a[i - 1] * b1[i];
  bool bunch = !b1[0].is_zero();
  if (bunch) {
    const Rational lambda = -a_dot / b1[0];
    Vec member{lambda};
    member.insert(member.end(), coeffs.a.begin(), coeffs.a.end());
    Vec l_cov(n + 1);
    l_cov[0] = 1;
    Vec l2_cov{-coeffs.h};
    l2_cov.insert(l2_cov.end(), coeffs.a.begin(), coeffs.a.end());
    const std::vector<Vec> pencil{l_cov, l2_cov, member};
    bunch = lambda == 1 - coeffs.h && Hyperplane(member) == desargues_hyperplane_analytic(coeffs) &&
            rank(Mat::from_rows(pencil, n + 1)) == 2;
  }
  checks.add("bunch_membership", bunch);
}

// Pair-level checks shared by the runner and scene replay.
void pair_checks(FuzzMode mode, const AdaptedFrame& r, const AdaptedFrame& r2, Checks& checks,
                 std::optional<TheoremFlags>& flags, std::optional<Rational>& h_out) {
  const bool perspective = is_perspective(r, r2);
  checks.add("perspective_detected", perspective);
  if (!perspective) return;

  const bool strict = is_strict_perspective(r, r2);
  const PerspectiveCoeffs coeffs = transform_coefficients(r, r2);
  h_out = coeffs.h;
  checks.add("strictness_criteria_agree", strict == coeffs.strict());
  if (mode == FuzzMode::InH) {
    checks.add("perspective_with_h_one", coeffs.h == 1);
    if (!strict) return;
  } else {
    checks.add("strict_detected", strict);
    if (!strict) return;
  }

  const DesarguesReport report = check_main_theorem(r, r2);
  flags = TheoremFlags{report.is_hyperplane, report.passes_through_center, report.h_equals_one, report.equivalent};
  checks.add("hyperplane_dimension", report.is_hyperplane,
             "locus dimension " + std::to_string(report.geometric_locus.dim()));
  checks.add("analytic_equals_geometric", hyperplane_to_subspace(report.analytic_hyperplane) == report.geometric_locus);
  checks.add("triple_agreement", report.passes_through_center == report.h_equals_one &&
                                     report.h_equals_one == report.equivalent);
  const bool all_true = report.passes_through_center && report.h_equals_one && report.equivalent;
  const bool all_false = !report.passes_through_center && !report.h_equals_one && !report.equivalent;
  if (mode == FuzzMode::HOne || mode == FuzzMode::InH) checks.add("mode_expectation", all_true, "expected all true");
  if (mode == FuzzMode::General) checks.add("mode_expectation", all_false, "expected all false");

  closed_form_checks(r, coeffs, report, checks);

  if (r.ambient_dim() == 2) {
    std::vector<Vec> reps;
    for (const auto& b : report.b_points) reps.push_back(b.point.rep());
    checks.add("classical_desargues_collinear", rank(Mat::from_rows(reps, 3)) == 2);
  }
}

void group_checks(std::size_t n, Rng& rng, std::int64_t bound, Scene& scene, Checks& checks) {
  const AdaptedFrame ref = AdaptedFrame::standard(n);
  const AdaptedFrame ra = gen_adapted_frame(n, rng, bound);
  const AdaptedFrame rb = gen_adapted_frame(n, rng, bound);
  const AdaptedFrame rc = gen_adapted_frame(n, rng, bound);
  scene.frames.emplace("Ra", ra);
  scene.frames.emplace("Rb", rb);
  scene.frames.emplace("Rc", rc);
  const GroupElement g1 = gen_group_element(ref, rng, bound);
  const GroupElement g2 = gen_group_element(ref, rng, bound);
  const GroupElement k = gen_h_element(ref, rng, bound);
  const Mat id = Mat::identity(n);

  const TransitionCoeffs tab = transition(ra, rb);
  const TransitionCoeffs tba = transition(rb, ra);
  const TransitionCoeffs tbc = transition(rb, rc);
  const TransitionCoeffs tac = transition(ra, rc);

  bool roundtrip = true;
  for (int i = 0; i < 5; ++i) {
    const ProjPoint p = gen_chart_point(ra, rb, rng, bound);
    roundtrip = roundtrip && apply_transition(tab, affine_coords(p, rb)) == affine_coords(p, ra);
  }
  checks.add("transition_chart_roundtrip", roundtrip);
  checks.add("transition_inverse", compose(tab, tba) == TransitionCoeffs::identity(n) &&
                                       compose(tba, tab) == TransitionCoeffs::identity(n));

  bool cocycle = tac.alpha_mat == tab.alpha_mat * tbc.alpha_mat && compose(tab, tbc) == tac;
  for (int i = 0; i < 5; ++i) {
    const ProjPoint p = gen_chart_point(rc, rb, rng, bound);
    if ((ra.frame().basis_inverse() * p.rep())[0].is_zero()) continue;
    const Vec xc = affine_coords(p, rc);
    const Vec y = apply_transition(tbc, xc);
    cocycle = cocycle && apply_transition(tab, y) == apply_transition(tac, xc);
  }
  checks.add("transition_cocycle", cocycle);

  const GroupElement gab = element_from_frame_pair(ra, rb);
  checks.add("frame_pair_element", act_on_frame(gab, ra) == rb);

  const GroupElement identity = GroupElement::identity(ra.center());
  const AdaptedFrame g1ra = act_on_frame(g1, ra);
  checks.add("freeness", element_from_frame_pair(ra, ra) == identity && (g1ra == ra) == (g1 == identity) &&
                             element_from_frame_pair(ra, g1ra) == g1);

  checks.add("action_associativity", act_on_frame(g1 * g2, ra) == act_on_frame(g1, act_on_frame(g2, ra)));
  checks.add("linear_part_homomorphism", linear_part(g1 * g2) == linear_part(g1) * linear_part(g2));

  const bool g1_equations_trivial = transition(ra, g1ra).alpha_mat == id;
  const bool k_equations_trivial = transition(ra, act_on_frame(k, ra)).alpha_mat == id;
  checks.add("kernel_characterization", is_in_H(g1) == (linear_part(g1) == id) && is_in_H(g1) == g1_equations_trivial &&
                                            is_in_H(k) && k_equations_trivial && is_in_H(g1 * k * g1.inverse()));

  checks.add("tangent_equivariance", tangent_basis(g1ra, ref).jac == linear_part(g1) * tangent_basis(ra, ref).jac);
  checks.add("coset_action", is_equivalent(g1ra, act_on_frame(g1 * k, ra)));

  const bool equivalent = is_equivalent(ra, rb);
  checks.add("equivalence_routes_agree", equivalent == is_in_H(gab) && equivalent == (tab.alpha_mat == id) &&
                                             equivalent == is_equivalent(ra, rb, rc));

  // A frame from an unconstrained basis is almost never adapted.
  const Mat m = gen_invertible(n + 1, rng, bound);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c <= n; ++c) cols.push_back(m.col(c));
  const Frame other = Frame::from_basis(cols);
  const bool block_form = has_adapted_block_form(ra, rb.frame()) &&
                          has_adapted_block_form(ra, other) == (other.vertex(0) == ra.center());
  checks.add("block_form_iff_adapted", block_form);
}

void in_h_checks(std::size_t n, Rng& rng, std::int64_t bound, const AdaptedFrame& r, const AdaptedFrame& r2,
                 const GroupElement& k, Scene& scene, Checks& checks) {
  const AdaptedFrame ref = AdaptedFrame::standard(n);
  const AdaptedFrame other_ref = gen_adapted_frame(n, rng, bound);
  scene.frames.emplace("Ref", other_ref);
  const Mat id = Mat::identity(n);

  checks.add("generator_in_H", is_in_H(k));
  checks.add("equivalent", is_equivalent(r, r2));
  checks.add("tangent_bases_equal", tangent_basis(r, ref) == tangent_basis(r2, ref));
  checks.add("reference_independence", is_equivalent(r, r2, other_ref));
  checks.add("connecting_element_in_H", is_in_H(element_from_frame_pair(r, r2)));
  checks.add("transition_is_eq_q", transition(r, r2).alpha_mat == id);

  const GroupElement f = gen_group_element(ref, rng, bound);
  checks.add("orbit_preservation", is_equivalent(act_on_frame(f, r), act_on_frame(f, r2)));
  const GroupElement k2 = gen_h_element(ref, rng, bound);
  checks.add("coset_action", is_equivalent(act_on_frame(f, r), act_on_frame(f * k2, r)));
}

}  // namespace

std::string_view to_string(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::StrictPerspective: return "strict-perspective";
    case FuzzMode::HOne: return "h-one";
    case FuzzMode::InH: return "in-H";
    case FuzzMode::General: return "general";
  }
  return "unknown";
}

FuzzMode parse_mode(std::string_view text) {
  for (auto mode : {FuzzMode::StrictPerspective, FuzzMode::HOne, FuzzMode::InH, FuzzMode::General}) {
    if (text == to_string(mode)) return mode;
  }
  throw Error(ErrorCode::Parse, "unknown fuzz mode '" + std::string(text) + "'");
}

void FuzzConfig::validate() const {
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "no dimensions given");
  for (auto n : dims) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimensions must be at least 2, got " + std::to_string(n));
  }
  if (trials_per_dim < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  if (coeff_bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be positive");
}

bool TrialOutcome::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t FuzzReport::failed_trials() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const TrialSummary& t) { return !t.ok; }));
}

std::size_t FuzzReport::failures(const std::string& invariant) const {
  const auto it = invariants.find(invariant);
  return it == invariants.end() ? 0 : it->second.failed;
}

std::size_t FuzzReport::passes(const std::string& invariant) const {
  const auto it = invariants.find(invariant);
  return it == invariants.end() ? 0 : it->second.passed;
}

std::vector<CheckResult> check_pair(FuzzMode mode, const AdaptedFrame& r, const AdaptedFrame& r2) {
  Checks checks;
  std::optional<TheoremFlags> flags;
  std::optional<Rational> h;
  try {
    pair_checks(mode, r, r2, checks, flags, h);
  } catch (const std::exception& e) {
    checks.add("no_exception", false, e.what());
  }
  return std::move(checks.results());
}

std::vector<CheckResult> replay_scene(FuzzMode mode, const Scene& scene) {
  if (scene.pairs.empty()) throw Error(ErrorCode::InvalidArgument, "scene has no pairs");
  const auto& [a, b] = scene.pairs.front();
  return check_pair(mode, scene.frame(a), scene.frame(b));
}

TrialOutcome run_trial(FuzzMode mode, std::uint64_t seed, std::size_t dim, std::size_t trial, std::int64_t coeff_bound) {
  const std::uint64_t stream = Rng::trial_seed(seed, dim, trial);
  Rng rng(stream);
  Checks checks;
  std::optional<TheoremFlags> flags;
  std::optional<Rational> h;
  std::optional<Scene> scene;

  try {
    const AdaptedFrame r = gen_adapted_frame(dim, rng, coeff_bound);
    if (mode == FuzzMode::InH) {
      const GroupElement k = gen_h_element(AdaptedFrame::standard(dim), rng, coeff_bound);
      const AdaptedFrame r2 = act_on_frame(k, r);
      scene = make_scene(r, r2);
      in_h_checks(dim, rng, coeff_bound, r, r2, k, *scene, checks);
      pair_checks(mode, r, r2, checks, flags, h);
    } else {
      const HChoice choice = mode == FuzzMode::HOne    ? HChoice::One
                             : mode == FuzzMode::General ? HChoice::NotOne
                                                         : HChoice::Any;
      const PerspectiveCoeffs coeffs = gen_strict_coeffs(dim, rng, coeff_bound, choice);
      const AdaptedFrame r2 = gen_perspective_mate(r, coeffs.h, coeffs.a);
      scene = make_scene(r, r2);
      pair_checks(mode, r, r2, checks, flags, h);
      checks.add("coefficients_recovered", transform_coefficients(r, r2) == coeffs);
      if (mode == FuzzMode::General) group_checks(dim, rng, coeff_bound, *scene, checks);
    }
  } catch (const std::exception& e) {
    checks.add("no_exception", false, e.what());
  }

  if (!scene) {
    const AdaptedFrame std_frame = AdaptedFrame::standard(dim);
    scene = Scene(dim, std_frame.center());
  }
  return TrialOutcome{
      .dim = dim,
      .trial = trial,
      .stream_seed = stream,
      .checks = std::move(checks.results()),
      .h = std::move(h),
      .flags = flags,
      .scene = std::move(*scene),
  };
}

FuzzReport fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (auto dim : cfg.dims)
    for (std::size_t t = 0; t < cfg.trials_per_dim; ++t) tasks.emplace_back(dim, t);

  std::vector<std::optional<TrialOutcome>> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      outcomes[i] = run_trial(cfg.mode, cfg.seed, tasks[i].first, tasks[i].second, cfg.coeff_bound);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  FuzzReport report;
  report.config = cfg;
  for (auto& slot : outcomes) {
    TrialOutcome& o = *slot;
    TrialSummary summary;
    summary.dim = o.dim;
    summary.trial = o.trial;
    summary.ok = o.ok();
    summary.h = o.h;
    summary.flags = o.flags;
    for (const auto& c : o.checks) {
      auto& tally = report.invariants[c.invariant];
      if (c.passed) {
        ++tally.passed;
        continue;
      }
      ++tally.failed;
      summary.failed.push_back(c.invariant);
      if (!report.first_failure) {
        report.first_failure = FailureRecord{o.dim, o.trial, o.stream_seed, c.invariant, c.detail, o.scene};
      }
    }
    report.trials.push_back(std::move(summary));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const FuzzReport& report) {
  Json invariants = Json::object();
  for (const auto& [name, tally] : report.invariants) {
    invariants[name] = Json{{"passed", tally.passed}, {"failed", tally.failed}};
  }

  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json entry{{"dim", t.dim}, {"trial", t.trial}, {"ok", t.ok}, {"failed", t.failed}};
    entry["h"] = t.h ? to_json(*t.h) : Json(nullptr);
    if (t.flags) {
      entry["predicates"] = Json{{"is_hyperplane", t.flags->is_hyperplane},
                                 {"passes_through_center", t.flags->passes_through_center},
                                 {"h_equals_one", t.flags->h_equals_one},
                                 {"equivalent", t.flags->equivalent}};
    } else {
      entry["predicates"] = nullptr;
    }
    trials.push_back(std::move(entry));
  }

  Json failure = nullptr;
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    failure = Json{{"dim", f.dim},           {"trial", f.trial},   {"stream_seed", f.stream_seed},
                   {"invariant", f.invariant}, {"detail", f.detail}, {"scene", to_json(f.scene)}};
  }

  const auto& cfg = report.config;
  return Json{
      {"mode", to_string(cfg.mode)},
      {"seed", cfg.seed},
      {"dims", cfg.dims},
      {"trials_per_dim", cfg.trials_per_dim},
      {"coeff_bound", cfg.coeff_bound},
      {"total_trials", report.trials.size()},
      {"failed_trials", report.failed_trials()},
      {"invariants", std::move(invariants)},
      {"first_failure", std::move(failure)},
      {"trials", std::move(trials)},
      {"elapsed_seconds", report.elapsed_seconds},
  };
}

}  // namespace projframe
