#include "pawclock/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>

#include "pawclock/algebra.hpp"
#include "pawclock/classical.hpp"
#include "pawclock/constraint.hpp"
#include "pawclock/dynamics.hpp"
#include "pawclock/gcs.hpp"
#include "pawclock/phase.hpp"

namespace pawclock::cli {

namespace {

bool g_progress = true;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return out;
}

std::vector<double> periodic(int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = 2.0 * pi * i / n;
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

AlgebraKind configured_kind(const ExperimentConfig& cfg) { return parse_algebra(cfg.text("algebra")); }

double configured_size(const ExperimentConfig& cfg, AlgebraKind kind) {
  return kind == AlgebraKind::su2 ? cfg.real("j") : cfg.integer("ncut");
}

ClockModel clock_of(const ExperimentConfig& cfg, AlgebraKind kind, double size) {
  return build_clock(build_rep(kind, size, cfg.real("bargmann_k")));
}

ClockModel configured_clock(const ExperimentConfig& cfg) {
  const auto kind = configured_kind(cfg);
  return clock_of(cfg, kind, configured_size(cfg, kind));
}

SetupParams setup_params(const ExperimentConfig& cfg) {
  SetupParams sp;
  sp.rho_target = cfg.real("rho");
  sp.width_levels = cfg.real("width");
  const std::string& prof = cfg.text("profile");
  sp.profile = prof == "equal" ? ProfileKind::equal : prof == "random" ? ProfileKind::random : ProfileKind::gaussian;
  sp.seed = cfg.seed();
  sp.system_levels = cfg.list("system_levels");
  return sp;
}

Json slope_json(const SweepResult& s) {
  Json j;
  j["strictly_decreasing"] = s.strictly_decreasing;
  j["loglog_slope"] = s.loglog_slope;
  return j;
}

// ---- verify-algebra ------------------------------------------------------

ExperimentResult verify_algebra(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "cartan-relations";
  r.table = Table({"algebra", "size", "dim", "relation", "full", "valid", "pass"});
  const double tol = cfg.real("tol.cartan");
  double su2_max = 0.0, h4_max = 0.0, h4_full = 0.0, su11_max = 0.0;

  auto run = [&](const LieAlgebraRep& rep, double size, double& worst) {
    const auto rep_report = verify_cartan(rep, tol);
    for (const auto& rel : rep_report.relations)
      r.table.add({to_string(rep.kind), size, static_cast<long long>(rep.dim), rel.relation, rel.full, rel.valid,
                   yes_no(rep.truncated ? rel.pass_valid : rel.pass_full)});
    worst = std::max(worst, rep.truncated ? rep_report.max_valid() : rep_report.max_full());
    if (rep.kind == AlgebraKind::h4) h4_full = std::max(h4_full, rep_report.max_full());
  };
  for (double j : cfg.list("algebra_j")) run(build_su2_rep(j), j, su2_max);
  for (double n : cfg.list("algebra_ncut")) run(build_h4_rep(static_cast<int>(n)), n, h4_max);
  run(build_su11_rep(cfg.real("bargmann_k"), cfg.integer("ncut")), cfg.integer("ncut"), su11_max);

  r.metrics["su2_max_residual"] = su2_max;
  r.metrics["h4_max_valid_residual"] = h4_max;
  r.metrics["h4_max_full_residual"] = h4_full;
  r.metrics["su11_max_valid_residual"] = su11_max;
  r.require(su2_max < tol, "su2 Cartan relations");
  r.require(h4_max < tol, "h4 Cartan relations on the valid subspace");
  r.require(su11_max < tol, "su11 Cartan relations on the valid subspace");
  return r;
}

// ---- bch-check -----------------------------------------------------------

ExperimentResult bch_check(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "displacement-vs-normal-form";
  r.table = Table({"algebra", "size", "rho", "phi", "difference"});
  const double tol = cfg.real("tol.bch");
  const auto phis = periodic(cfg.integer("n_phi"));
  double worst = 0.0;

  auto run = [&](const ClockModel& clock, double size, const std::vector<double>& rhos) {
    double w = 0.0;
    for (double rho : rhos)
      for (double phi : phis) {
        const double d = (clock_state(clock, rho, phi).vector - coherent_normalized_form(clock, rho, phi).vector).norm();
        w = std::max(w, d);
        r.table.add({to_string(clock.kind()), size, rho, phi, d});
      }
    r.metrics["max_difference_" + to_string(clock.kind()) + "_" + format_double(size)] = w;
    worst = std::max(worst, w);
  };
  for (double j : cfg.list("bch_j")) {
    progress("bch-check: su2 j = " + format_double(j));
    run(build_clock(build_su2_rep(j)), j, linspace(0.0, cfg.real("rho_max"), cfg.integer("n_rho")));
  }
  const int ncut = cfg.integer("ncut");
  progress("bch-check: h4 ncut = " + std::to_string(ncut));
  run(build_clock(build_h4_rep(ncut)), ncut, linspace(0.0, std::sqrt(cfg.real("h4_fill") * ncut), cfg.integer("n_rho")));

  r.metrics["max_difference"] = worst;
  r.require(worst < tol, "displacement and normal form agree");
  return r;
}

// ---- symbol --------------------------------------------------------------

ExperimentResult symbol_check(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "clock-symbol";
  r.table = Table({"algebra", "size", "rho", "phi", "numeric", "analytic", "abs_error", "rel_error"});
  const double phi = cfg.real("phi");
  std::vector<AlgebraKind> kinds = {AlgebraKind::su2, AlgebraKind::h4, AlgebraKind::su11};
  if (cfg.is_set("algebra")) kinds = {configured_kind(cfg)};

  for (AlgebraKind kind : kinds) {
    const double size = configured_size(cfg, kind);
    const ClockModel clock = clock_of(cfg, kind, size);
    std::vector<double> rhos;
    if (cfg.is_set("rho")) {
      rhos = {cfg.real("rho")};
    } else {
      const double top = kind == AlgebraKind::su2 ? 0.7
                         : kind == AlgebraKind::h4 ? std::sqrt(cfg.real("h4_fill") * size)
                                                   : 1.0;
      rhos = linspace(0.0, top, cfg.integer("n_rho"));
    }
    double worst_abs = 0.0, worst_rel = 0.0, spread = 0.0;
    for (double rho : rhos) {
      const double numeric = symbol(clock.H_C, clock_state(clock, rho, phi)).real();
      const double other = symbol(clock.H_C, clock_state(clock, rho, phi + 1.3)).real();
      const double analytic = clock_symbol_analytic(clock, rho);
      const double abs_err = std::abs(numeric - analytic);
      const double rel_err = abs_err / std::max(std::abs(analytic), clock.epsilon);
      worst_abs = std::max(worst_abs, abs_err);
      worst_rel = std::max(worst_rel, rel_err);
      spread = std::max(spread, std::abs(numeric - other) / std::max(1.0, std::abs(analytic)));
      r.table.add({to_string(kind), size, rho, phi, numeric, analytic, abs_err, rel_err});
    }
    const std::string k = to_string(kind);
    r.metrics[k] = {{"max_abs_error", worst_abs}, {"max_rel_error", worst_rel}, {"phi_spread", spread}};
    if (kind == AlgebraKind::su2)
      r.require(worst_abs < cfg.real("tol.symbol"), "su2 symbol matches closed form");
    else
      r.require(worst_rel < cfg.real("tol.symbol_rel"), k + " symbol matches closed form");
    r.require(spread < cfg.real("tol.chi2"), k + " symbol is phi-independent");
  }
  return r;
}

// ---- identity-resolution -------------------------------------------------

ExperimentResult identity_resolution(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "coherent-identity-resolution";
  r.table = Table({"algebra", "size", "n_polar", "n_azimuth", "nodes", "checked_dim", "deviation"});
  double su2_worst = 0.0;
  for (double j : cfg.list("identity_j")) {
    const int n = static_cast<int>(std::lround(4.0 * j)) + 4;
    const auto res = identity_resolution_check(build_su2_rep(j), {n, n});
    su2_worst = std::max(su2_worst, res.deviation);
    r.table.add({"su2", j, static_cast<long long>(n), static_cast<long long>(n), static_cast<long long>(res.nodes),
                 static_cast<long long>(res.checked_dim), res.deviation});
  }
  const int ncut = cfg.integer("identity_ncut");
  const auto rep = build_h4_rep(ncut);
  const int np = rep.valid_dim + 8;
  const int na = 2 * rep.valid_dim + 2;
  const auto h4 = identity_resolution_check(rep, {np, na});
  r.table.add({"h4", static_cast<double>(ncut), static_cast<long long>(np), static_cast<long long>(na),
               static_cast<long long>(h4.nodes), static_cast<long long>(h4.checked_dim), h4.deviation});
  r.metrics["su2_max_deviation"] = su2_worst;
  r.metrics["h4_deviation"] = h4.deviation;
  r.require(su2_worst < cfg.real("tol.identity"), "su2 resolution of the identity");
  r.require(h4.deviation < cfg.real("tol.identity_h4"), "h4 resolution of the identity on the valid block");
  return r;
}

// ---- constraint ----------------------------------------------------------

ExperimentResult constraint_check(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "constraint-kernel";
  r.table = Table({"rho", "phi", "chi2", "chi2_from_clock_density", "difference"});
  const ClockModel clock = configured_clock(cfg);
  const ConstraintSetup s = make_setup(clock, setup_params(cfg));
  const double tol = cfg.real("tol.constraint");

  const Vec psi = s.psi.vector();
  const double kernel_res = constraint_residual(s.psi, clock.H_C, s.H_Gamma);
  double full_res = -1.0;
  if (static_cast<long long>(clock.dim()) * s.H_Gamma.rows() <= 1600)
    full_res = (total_hamiltonian(clock.H_C, s.H_Gamma) * psi).norm();

  const Mat rho_c = reduced_density_clock(s.psi);
  const auto phis = periodic(cfg.integer("n_phi"));
  double worst_identity = 0.0, worst_drift = 0.0;
  for (double rho : linspace(0.0, cfg.real("rho_max"), cfg.integer("n_rho"))) {
    double ref = -1.0;
    for (double phi : phis) {
      const auto c = conditional_state(s.psi, clock, rho, phi);
      const Vec lam = clock_state(clock, rho, phi).vector;
      const double via_density = lam.dot(rho_c * lam).real();
      const double diff = std::abs(c.chi2 - via_density);
      worst_identity = std::max(worst_identity, diff);
      if (ref < 0.0) ref = c.chi2;
      worst_drift = std::max(worst_drift, std::abs(c.chi2 - ref));
      r.table.add({rho, phi, c.chi2, via_density, diff});
    }
  }

  // Reduced density rebuilt from conditional states over a small su2 clock.
  const ClockModel small = build_clock(build_su2_rep(3.0));
  SetupParams sp = setup_params(cfg);
  sp.system_levels.clear();
  const ConstraintSetup ss = make_setup(small, sp);
  const double precs = precs_decomposition_check(ss.psi, coherent_quadrature(small.rep, 64, 64, small.phase_sign));

  r.metrics["matched_pairs"] = s.pairing.pairs.size();
  r.metrics["constraint_residual"] = kernel_res;
  r.metrics["product_space_residual"] = full_res;
  r.metrics["norm_error"] = std::abs(psi.norm() - 1.0);
  r.metrics["entanglement_entropy"] = s.psi.entanglement_entropy;
  r.metrics["chi2_density_identity"] = worst_identity;
  r.metrics["chi2_phi_drift"] = worst_drift;
  r.metrics["reduced_density_reconstruction"] = precs;
  r.require(kernel_res < tol, "H Psi = 0");
  r.require(full_res < tol, "H Psi = 0 on the product space");
  r.require(std::abs(psi.norm() - 1.0) < tol, "Psi normalized");
  r.require(s.pairing.pairs.size() < 2 || s.psi.entanglement_entropy > 0.0, "Psi entangled");
  r.require(worst_identity < cfg.real("tol.chi2"), "chi2 = <lambda|rho_C|lambda>");
  r.require(worst_drift < cfg.real("tol.chi2"), "chi2 independent of phi");
  r.require(precs < cfg.real("tol.precs"), "reduced density from conditional states");
  return r;
}

// ---- schrodinger ---------------------------------------------------------

ExperimentResult schrodinger_check(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "conditional-schrodinger";
  r.table = Table({"series", "size", "h", "residual", "truncation_bound", "propagator_residual", "chi2_drift"});
  const double rho = cfg.real("rho");
  const double phi = cfg.real("phi");
  const double h = cfg.real("h");
  const auto phis = linspace(0.0, 2.0 * pi, 65);

  // Central differences on exp(-i H phi / eps) v err by at most (h^2/6) ||H^3 v|| / eps^2.
  auto bound = [&](const ConstraintSetup& s, double step) {
    const Vec v = conditional_state(s.psi, s.clock, rho, phi).normalized;
    return step * step / 6.0 * (s.H_Gamma * (s.H_Gamma * (s.H_Gamma * v))).norm() /
           (s.clock.epsilon * s.clock.epsilon);
  };
  bool within_bound = true;

  const ClockModel clock = configured_clock(cfg);
  const ConstraintSetup s = make_setup(clock, setup_params(cfg));
  const auto sr = schrodinger_residual(s, rho, phi, h);
  const double prop = propagator_residual(s, rho, phis);
  const double drift = chi2_drift(s, rho, phis);
  const double size = configured_size(cfg, configured_kind(cfg));
  for (const auto& [step, res] : {std::pair{h, sr.residual}, std::pair{0.5 * h, sr.residual_half}}) {
    const double b = bound(s, step);
    within_bound = within_bound && res <= b * (1.0 + 1e-6) + 1e-13;
    r.table.add({"step", size, step, res, b, prop, drift});
  }

  // Same step across clock sizes: only h limits the residual.
  double worst_prop = prop;
  for (double j : cfg.list("sweep_j")) {
    progress("schrodinger: su2 j = " + format_double(j));
    const ConstraintSetup sj = make_setup(build_clock(build_su2_rep(j)), setup_params(cfg));
    const double res = schrodinger_residual(sj, rho, phi, h).residual;
    const double b = bound(sj, h);
    const double pj = propagator_residual(sj, rho, phis);
    worst_prop = std::max(worst_prop, pj);
    within_bound = within_bound && res <= b * (1.0 + 1e-6) + 1e-13;
    r.table.add({"size", j, h, res, b, pj, chi2_drift(sj, rho, phis)});
  }

  // A single matched pair: the normalized conditional state only rotates its phase.
  SetupParams single = setup_params(cfg);
  single.system_levels = {clock.kind() == AlgebraKind::h4 ? 3.0 : -3.0};
  single.profile = ProfileKind::equal;
  const ConstraintSetup s1 = make_setup(clock, single);
  const Vec v0 = conditional_state(s1.psi, clock, rho, 0.0).normalized;
  double fidelity_gap = 0.0;
  for (double p : phis)
    fidelity_gap = std::max(fidelity_gap, 1.0 - std::abs(v0.dot(conditional_state(s1.psi, clock, rho, p).normalized)));

  const double slope_tol = cfg.real("tol.slope");
  r.metrics["residual"] = sr.residual;
  r.metrics["residual_half_step"] = sr.residual_half;
  r.metrics["richardson_slope"] = sr.slope;
  r.metrics["propagator_residual"] = worst_prop;
  r.metrics["chi2_drift"] = drift;
  r.metrics["separable_fidelity_gap"] = fidelity_gap;
  r.metrics["time_per_phi"] = 1.0 / clock.epsilon;
  r.require(std::abs(sr.slope - 2.0) <= slope_tol, "Richardson slope 2");
  r.require(worst_prop < cfg.real("tol.propagator"), "conditional state follows exp(-i H phi / eps)");
  r.require(drift < cfg.real("tol.chi2"), "chi2 conserved in phi");
  r.require(within_bound, "residual within the h^2 truncation bound at every size");
  r.require(fidelity_gap < cfg.real("tol.chi2"), "separable state does not evolve");
  return r;
}

// ---- stationary-sweep ----------------------------------------------------

ExperimentResult stationary_sweep(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "stationary-limit";
  r.table = Table({"algebra", "size", "dim", "rho", "phi", "relative_residual", "absolute_residual"});
  SweepParams sp;
  sp.kind = ResidualKind::stationary;
  sp.setup = setup_params(cfg);
  sp.phi = cfg.real("phi");
  sp.h4_fill = cfg.real("h4_fill");

  progress("stationary-sweep: su2");
  sp.algebra = AlgebraKind::su2;
  const auto su2 = convergence_sweep(cfg.list("sweep_j"), sp);
  progress("stationary-sweep: h4");
  sp.algebra = AlgebraKind::h4;
  const auto h4 = convergence_sweep(cfg.list("sweep_ncut"), sp);
  for (const auto* sw : {&su2, &h4})
    for (const auto& rec : sw->records)
      r.table.add({sw == &su2 ? "su2" : "h4", rec.clock_size, static_cast<long long>(rec.dim), rec.rho, rec.phi,
                   rec.residual, rec.oracle_residual});

  r.metrics["su2"] = slope_json(su2);
  r.metrics["h4"] = slope_json(h4);
  r.require(su2.strictly_decreasing, "su2 stationary residual decreases with j");
  r.require(h4.strictly_decreasing, "h4 stationary residual decreases with ncut");
  return r;
}

// ---- phase-audit ---------------------------------------------------------

ExperimentResult phase_audit(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "phase-operator";
  r.table = Table({"check", "algebra", "size", "rho", "phi", "quantity", "value"});
  auto row = [&](const std::string& check, const std::string& alg, double size, double rho, double phi,
                 const std::string& q, double v) { r.table.add({check, alg, size, rho, phi, q, v}); };

  const double j = cfg.real("phase_j");
  const ClockModel clock = build_clock(build_su2_rep(j));
  const PhaseOperator ph = build_phase_operator(clock);
  const auto comm = commutator_check(clock, ph);
  const auto inv = phase_invariants(clock, ph);
  const ClockModel doubled = build_clock(build_su2_rep(j), 0, std::nullopt, 2.0);
  const auto comm2 = commutator_check(doubled, build_phase_operator(doubled));
  const ClockModel osc = build_clock(build_h4_rep(cfg.integer("ncut")));
  const auto comm_h4 = commutator_check(osc, build_phase_operator(osc));
  row("commutator", "su2", j, 0, 0, "interior", comm.interior);
  row("commutator", "su2", j, 0, 0, "full", comm.full);
  row("commutator", "su2", j, 0, 0, "full_doubled_epsilon", comm2.full);
  row("commutator", "h4", cfg.integer("ncut"), 0, 0, "interior", comm_h4.interior);
  row("invariants", "su2", j, 0, 0, "unitarity", inv.unitarity);
  row("invariants", "su2", j, 0, 0, "hermiticity", inv.hermiticity);
  row("invariants", "su2", j, 0, 0, "sin_cos_commutator", inv.sin_cos_commutator);
  row("invariants", "su2", j, 0, 0, "polar_residual", inv.polar_residual);

  const double ja = cfg.real("audit_j");
  const ClockModel ac = build_clock(build_su2_rep(ja));
  const PhaseOperator aph = build_phase_operator(ac);
  const auto grid = uncertainty_grid(ac, aph, linspace(0.0, cfg.real("rho_max"), 15), periodic(15));
  for (std::size_t i = 0; i < grid.audits.size(); ++i)
    row("uncertainty", "su2", ja, grid.rho[i / grid.phi.size()], grid.phi[i % grid.phi.size()], "slack",
        grid.audits[i].slack);
  const auto ground = uncertainty_audit(ac.rep.reference_state, ac, aph);

  double min_ratio = 1e300;
  for (const auto& c : small_angle_checks(ac, aph, {0.3, 0.5, 0.7, 1.0}, {-0.1, -0.05, 0.0, 0.05, 0.1})) {
    row("small_angle", "su2", ja, c.rho, c.phi, "ratio", c.ratio);
    min_ratio = std::min(min_ratio, c.ratio);
  }

  const double er = cfg.real("expect_rho"), ep = cfg.real("expect_phi");
  const auto su2_sweep = classical_phase_expectations(AlgebraKind::su2, cfg.list("sweep_j"), er, ep);
  const auto h4_sweep =
      classical_phase_expectations(AlgebraKind::h4, cfg.list("sweep_ncut"), er, ep, cfg.real("h4_fill"));
  for (const auto* sw : {&su2_sweep, &h4_sweep})
    for (const auto& rec : sw->records) {
      const std::string alg = sw == &su2_sweep ? "su2" : "h4";
      row("expectation", alg, rec.clock_size, rec.rho, rec.phi, "sin_error", rec.err_sin);
      row("expectation", alg, rec.clock_size, rec.rho, rec.phi, "cos_error", rec.err_cos);
    }
  const Vec at_zero = clock_state(clock, er, 0.0).vector;
  const double sin_at_zero = std::abs(at_zero.dot(ph.sin_phi * at_zero).real());

  r.metrics["interior_commutator"] = comm.interior;
  r.metrics["full_commutator"] = comm.full;
  r.metrics["full_commutator_relative"] = comm.full_relative;
  r.metrics["epsilon_scaling"] = comm2.full / comm.full;
  r.metrics["h4_interior_commutator"] = comm_h4.interior;
  r.metrics["unitarity"] = inv.unitarity;
  r.metrics["hermiticity"] = inv.hermiticity;
  r.metrics["min_uncertainty_slack"] = grid.min_slack;
  r.metrics["audited_points"] = grid.audits.size();
  r.metrics["ground_state_slack"] = ground.slack;
  r.metrics["min_small_angle_ratio"] = min_ratio;
  r.metrics["sin_at_phi_zero"] = sin_at_zero;
  r.metrics["su2_sin_decreasing"] = su2_sweep.sin_decreasing;
  r.metrics["su2_cos_decreasing"] = su2_sweep.cos_decreasing;
  r.metrics["h4_sin_decreasing"] = h4_sweep.sin_decreasing;
  r.metrics["h4_cos_decreasing"] = h4_sweep.cos_decreasing;

  const double ctol = cfg.real("tol.commutator");
  r.require(comm.interior < ctol, "interior commutator [H_C, sin] = i eps cos");
  r.require(comm_h4.interior < ctol, "h4 interior commutator");
  r.require(std::abs(comm2.full / comm.full - 2.0) < 1e-9, "boundary residual linear in epsilon");
  r.require(inv.unitarity < cfg.real("tol.unitarity"), "exp(-i phi) unitary");
  r.require(inv.hermiticity < cfg.real("tol.unitarity"), "sin and cos hermitian");
  r.require(inv.sin_cos_commutator < cfg.real("tol.unitarity"), "sin and cos commute");
  r.require(grid.skipped == 0 && grid.min_slack >= -cfg.real("tol.slack"), "uncertainty inequality on the grid");
  r.require(ground.slack >= -cfg.real("tol.slack"), "uncertainty inequality at the reference state");
  r.require(min_ratio >= 1.0 - cfg.real("tol.small_angle"), "small-phi energy-time inequality");
  r.require(sin_at_zero < cfg.real("tol.chi2"), "<sin> vanishes at phi = 0");
  r.require(su2_sweep.sin_decreasing && su2_sweep.cos_decreasing, "su2 phase expectations converge");
  r.require(h4_sweep.sin_decreasing && h4_sweep.cos_decreasing, "h4 phase expectations converge");
  return r;
}

// ---- classical-limit -----------------------------------------------------

ExperimentResult classical_limit(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "classical-constraint";
  r.table = Table({"j", "max_mismatch", "normalization", "support_size", "control_mismatch", "control_weight"});
  progress("classical-limit: joint sweep");
  const double thr = cfg.real("support_threshold");
  const auto sw = classical_limit_sweep(cfg.list("classical_j"), cfg.real("rho"), cfg.real("width"), thr);
  double worst_norm = 0.0;
  bool controls = true;
  for (const auto& rec : sw.records) {
    r.table.add({rec.size, rec.max_mismatch, rec.normalization, static_cast<long long>(rec.support_size),
                 rec.control_mismatch, rec.control_weight});
    worst_norm = std::max(worst_norm, std::abs(rec.normalization - 1.0));
    controls = controls && rec.control_mismatch > rec.max_mismatch && rec.control_weight < thr;
  }
  r.metrics["strictly_decreasing"] = sw.strictly_decreasing;
  r.metrics["normalization_error"] = worst_norm;
  r.require(sw.strictly_decreasing, "support mismatch decreases in the joint limit");
  r.require(worst_norm < cfg.real("tol.normalization"), "beta normalized");
  r.require(controls, "off-shell control lies outside the support");
  return r;
}

// ---- hamilton ------------------------------------------------------------

ExperimentResult hamilton(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.check_tag = "hamilton-flow";
  r.table = Table({"chart", "J", "points", "max_analytic", "max_fd", "max_shell", "max_pullback"});
  const auto rhos = linspace(0.05, 1.5, cfg.integer("n_rho"));
  const auto phis = periodic(cfg.integer("n_phi"));
  const double hbar = cfg.real("hbar");

  RealVec v1(1), v2(2);
  v1 << 1.0;
  v2 << 0.6, 0.8;

  const ClockModel su2 = build_clock(build_su2_rep(cfg.real("j")));
  const int ncut = cfg.integer("ncut");
  const ClockModel osc = build_clock(build_h4_rep(ncut));
  const ClockModel hyp = build_clock(build_su11_rep(cfg.real("bargmann_k"), ncut));

  struct Chart {
    std::string name;
    ChartConstants k;
  };
  std::vector<Chart> charts = {{"su2", chart_constants(su2, hbar)}, {"h4", chart_constants(osc, hbar)}};
  ChartConstants shifted = chart_constants(su2, hbar);
  shifted.phase_offset = pi / 3.0;
  charts.push_back({"su2_phase_shifted", shifted});
  charts.push_back({"su2_double_hbar", chart_constants(su2, 2.0 * hbar)});
  charts.push_back({"su11", chart_constants(hyp, hbar)});

  double worst_an = 0.0, worst_fd = 0.0, worst_shell = 0.0, worst_pb = 0.0;
  for (const auto& c : charts) {
    for (const RealVec* v : {&v1, &v2}) {
      const auto rep = hamilton_check(c.k, *v, rhos, phis);
      double pb = 0.0;
      for (double rho : rhos)
        for (double phi : phis) pb = std::max(pb, pullback_two_form(rho, phi, *v, c.k).residual);
      // Residuals scale with eps/hbar; compare on the hbar = 1 footing.
      const double scale = c.k.hbar / hbar;
      r.table.add({c.name, static_cast<long long>(v->size()), static_cast<long long>(rep.points), rep.max_analytic * scale,
                   rep.max_fd * scale, rep.max_shell, pb});
      worst_an = std::max(worst_an, rep.max_analytic * scale);
      worst_fd = std::max(worst_fd, rep.max_fd * scale);
      worst_shell = std::max(worst_shell, rep.max_shell);
      worst_pb = std::max(worst_pb, pb / c.k.hbar * hbar);
    }
  }

  // Time read off the two sides: phase rotation of the conditional state and
  // the Hamilton flow coefficient, both per unit phi with hbar = 1.
  const double rho = cfg.real("rho");
  ChartConstants unit = chart_constants(su2, 1.0);
  const ConstraintSetup s = make_setup(su2, setup_params(cfg));
  const double t_qm = quantum_time_rate(s, rho, 0.01);
  const double t_cl = classical_time_rate(unit, rho, 0.7);
  SetupParams hp = setup_params(cfg);
  hp.system_levels.clear();
  hp.rho_target = std::sqrt(cfg.real("h4_fill") * ncut);
  const ConstraintSetup sh = make_setup(osc, hp);
  const double t_qm_h4 = quantum_time_rate(sh, hp.rho_target, 0.01);
  const double t_cl_h4 = classical_time_rate(chart_constants(osc, 1.0), hp.rho_target, 0.7);

  r.metrics["max_hamilton_analytic"] = worst_an;
  r.metrics["max_hamilton_fd"] = worst_fd;
  r.metrics["max_energy_shell"] = worst_shell;
  r.metrics["max_pullback"] = worst_pb;
  r.metrics["flow_coefficient"] = su2.epsilon / hbar;
  r.metrics["time_per_phi_quantum"] = t_qm;
  r.metrics["time_per_phi_classical"] = t_cl;
  r.metrics["time_difference"] = std::abs(t_qm - t_cl);
  r.metrics["h4_time_difference"] = std::abs(t_qm_h4 - t_cl_h4);
  r.require(worst_an < cfg.real("tol.hamilton"), "Hamilton identity, analytic partials");
  r.require(worst_fd < cfg.real("tol.hamilton_fd"), "Hamilton identity, finite differences");
  r.require(worst_shell < cfg.real("tol.pullback"), "map F lands on the energy shell");
  r.require(worst_pb < cfg.real("tol.pullback"), "pullback two-form");
  r.require(std::abs(t_qm - t_cl) < cfg.real("tol.time"), "quantum and classical time agree (su2)");
  r.require(std::abs(t_qm_h4 - t_cl_h4) < cfg.real("tol.time"), "quantum and classical time agree (h4)");
  return r;
}

using Runner = std::function<ExperimentResult(const ExperimentConfig&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"verify-algebra", verify_algebra}, {"bch-check", bch_check},
      {"symbol", symbol_check},           {"identity-resolution", identity_resolution},
      {"constraint", constraint_check},   {"schrodinger", schrodinger_check},
      {"stationary-sweep", stationary_sweep}, {"phase-audit", phase_audit},
      {"classical-limit", classical_limit}, {"hamilton", hamilton},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "verify-algebra", "bch-check",        "symbol",      "identity-resolution", "constraint",
      "schrodinger",    "stationary-sweep", "phase-audit", "classical-limit",     "hamilton"};
  return names;
}

ExperimentResult run_experiment(const std::string& name, const ExperimentConfig& cfg) {
  const auto it = runners().find(name);
  if (it == runners().end()) throw std::invalid_argument("unknown subcommand '" + name + "'");
  progress(name + ": start");
  ExperimentResult r;
  try {
    r = it->second(cfg);
  } catch (const NumericalDomainError& e) {
    r = ExperimentResult();
    r.require(false, std::string("numerical domain error: ") + e.what());
  }
  r.subcommand = name;
  progress(name + (r.pass ? ": pass" : ": FAIL"));
  return r;
}

ExperimentResult summarize_all(const std::vector<ExperimentResult>& results) {
  ExperimentResult r;
  r.subcommand = "all";
  r.check_tag = "all";
  r.table = Table({"subcommand", "check_tag", "pass"});
  for (const auto& x : results) {
    r.table.add({x.subcommand, x.check_tag, yes_no(x.pass)});
    r.metrics[x.subcommand] = x.pass;
    r.require(x.pass, x.subcommand);
  }
  return r;
}

void set_progress(bool enabled) { g_progress = enabled; }

void progress(const std::string& line) {
  if (g_progress) std::cerr << "[pawclock] " << line << '\n';
}

}  // namespace pawclock::cli
