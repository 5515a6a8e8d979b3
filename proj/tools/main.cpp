// Command-line front end: constructs and verifies Parseval framelet
// banks from bank files, emits machine-readable reports plus CSV
// profiles, and materializes the bundled example banks.
//
// Exit codes: 0 all requested verdicts pass, 1 a verification verdict
// failed, 2 parse failure (bank/config/arguments), 3 precondition
// failure (invalid dilation, missing weight, sub-QMF violation, ...).

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <random>

#include "framelet/bundled.hpp"

namespace fs = std::filesystem;
using namespace framelet;

namespace {

struct Session {
  RunConfig config;
  std::string out_dir = "framelet-out";

  fs::path out(const std::string& name) const {
    fs::create_directories(out_dir);
    return fs::path(out_dir) / name;
  }
};

void print_condition(const VerificationReport& r) {
  std::printf("[%s] %-12s max=%.3e mean=%.3e tol=%.1e masked=%.3f\n",
              r.pass ? "PASS" : "FAIL", r.condition_id.c_str(), r.max_residual, r.mean_residual,
              r.tolerance, r.masked_fraction);
}

void print_verdict(const ReportDoc& doc) {
  std::printf("verdict: %s\n", doc.pass ? "pass" : "fail");
}

GridSpec make_grid(const Session& s, const DilationMatrix& A,
                   std::optional<std::int64_t> pinned = std::nullopt) {
  // Grid-sampled filters pin the verification grid to their own
  // resolution; otherwise take the configured one, raised to the next
  // coset-compatible value.
  const std::int64_t wanted =
      pinned ? *pinned : (A.dim() == 1 ? s.config.grid_m : s.config.grid_m_nd);
  const std::int64_t m = coset_compatible_resolution(A, wanted);
  if (m != wanted) {
    require(!pinned, errc::grid_not_coset_compatible,
            "sampled filter grid misses the coset shifts");
    std::fprintf(stderr, "note: grid resolution raised from %lld to %lld for coset shifts\n",
                 static_cast<long long>(wanted), static_cast<long long>(m));
  }
  return GridSpec{A.dim(), m};
}

// Zero-set mask per the bank's declared mode ("none" or "auto").
std::optional<ZeroSetMask> make_mask(const Session& s, const BankFile& bank,
                                     const GridSpec& grid, const std::string& mode_override) {
  const std::string mode = mode_override.empty() ? bank.meta.mask_mode : mode_override;
  if (mode == "none") return std::nullopt;
  require(mode == "auto", errc::parse_error, "mask mode must be 'auto' or 'none'");
  const PhiHat phi = bank.phi_hat();
  return ZeroSetMask::compute(Bracket(phi, s.config.bracket_radius), grid, s.config.tau_zero);
}

ReportDoc start_report(const Session& s, const std::string& subcommand, const BankFile& bank) {
  ReportDoc doc;
  doc.subcommand = subcommand;
  doc.bank_name = bank.meta.name;
  doc.config_json = s.config.to_json_text();
  return doc;
}

std::vector<RealVec> calderon_sample_points(const Session& s, int dim) {
  std::mt19937_64 rng(s.config.seed);
  std::vector<RealVec> pts;
  for (int i = 0; i < s.config.calderon_points; ++i) {
    RealVec t(dim);
    for (int d = 0; d < dim; ++d) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      t[d] = 0.02 + 0.96 * u;
    }
    pts.push_back(std::move(t));
  }
  return pts;
}

// Wraps a density curve into report shape: the residual is the final
// distance to the target and the verdict is the curve's trend verdict.
VerificationReport curve_as_condition(const std::string& id, const DensityCurve& curve,
                                      LimitVerdict wanted, double trend_tol) {
  VerificationReport r;
  r.condition_id = id;
  r.grid = GridSpec{1, static_cast<std::int64_t>(curve.j_values.size())};
  r.max_residual = curve.ratios.empty()
                       ? 1.0
                       : std::abs(curve.ratios.back() -
                                  (wanted == LimitVerdict::converges_to_1 ? 1.0 : 0.0));
  r.mean_residual = r.max_residual;
  r.tolerance = trend_tol;
  r.pass = curve.verdict == wanted;
  return r;
}

// ---------------------------------------------------------------------
// Subcommand bodies; each returns the overall verdict.
// ---------------------------------------------------------------------

bool run_verify_uep(Session& s, const BankFile& bank, bool with_ortho,
                    const std::string& mask_mode) {
  const FilterBank fb = bank.to_bank();
  const GridSpec grid = make_grid(s, fb.dilation, bank.sampling_resolution());
  const auto mask = make_mask(s, bank, grid, mask_mode);
  const auto report = check_uep(fb, mask ? &*mask : nullptr, grid, s.config.tol_uep);

  ReportDoc doc = start_report(s, "verify-uep", bank);
  doc.add(report.uep0);
  for (const auto& r : report.uepk) doc.add(r);
  if (with_ortho) {
    const auto ortho = mra_orthogonality_check(fb, mask ? &*mask : nullptr, grid,
                                               s.config.tol_ortho);
    for (const auto& r : ortho.per_generator) doc.add(r);
  }
  for (const auto& r : doc.conditions) print_condition(r);
  doc.save(s.out("verify-uep-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_ortho(Session& s, const BankFile& bank, const std::string& mask_mode) {
  const FilterBank fb = bank.to_bank();
  const GridSpec grid = make_grid(s, fb.dilation, bank.sampling_resolution());
  const auto mask = make_mask(s, bank, grid, mask_mode);
  const auto ortho =
      mra_orthogonality_check(fb, mask ? &*mask : nullptr, grid, s.config.tol_ortho);
  ReportDoc doc = start_report(s, "ortho", bank);
  for (const auto& r : ortho.per_generator) {
    doc.add(r);
    print_condition(r);
  }
  doc.save(s.out("ortho-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_verify_oep(Session& s, const BankFile& bank, const std::string& mask_mode) {
  const FilterBank fb = bank.to_bank();
  const GridSpec grid = make_grid(s, fb.dilation, bank.sampling_resolution());
  const auto mask = make_mask(s, bank, grid, mask_mode);
  const PhiHat phi = bank.phi_hat();
  const auto report =
      check_oep(fb, phi, mask ? &*mask : nullptr, grid, s.config.tol_oep, s.config.probe);

  ReportDoc doc = start_report(s, "verify-oep", bank);
  doc.add(report.soep0);
  for (const auto& r : report.soepk) doc.add(r);
  doc.add(curve_as_condition("SOEP-origin", report.origin_probe,
                             LimitVerdict::converges_to_1, s.config.probe.trend_tol));
  doc.note("origin_probe", limit_verdict_name(report.origin_probe.verdict));
  for (const auto& r : doc.conditions) print_condition(r);
  write_density_csv(s.out("verify-oep-" + bank.meta.name + "-origin.csv").string(),
                    report.origin_probe);
  doc.save(s.out("verify-oep-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_build_framelet(Session& s, const BankFile& bank, double span, int points) {
  const FilterBank fb = bank.to_bank();
  const PhiHat phi = bank.phi_hat();
  const auto psis = build_framelets(fb, phi);
  for (std::size_t l = 0; l < psis.size(); ++l) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= points; ++i) {
      const double t = -span + 2.0 * span * i / points;
      RealVec arg(fb.dim(), 0.0);
      arg[0] = t;  // profile along the first frequency axis
      const cdouble v = psis[l].eval(arg);
      rows.push_back({t, std::abs(v), v.real(), v.imag()});
    }
    write_csv(s.out("framelet-" + bank.meta.name + "-psi" + std::to_string(l + 1) + ".csv")
                  .string(),
              {"t", "abs", "re", "im"}, rows);
  }
  ReportDoc doc = start_report(s, "build-framelet", bank);
  doc.note("generators", std::to_string(psis.size()));
  doc.save(s.out("build-framelet-" + bank.meta.name + ".report.json").string());
  std::printf("wrote %zu framelet profiles\n", psis.size());
  print_verdict(doc);
  return doc.pass;
}

bool run_complete(Session& s, const BankFile& bank) {
  const FilterBank fb = bank.to_bank();
  const GridSpec grid = make_grid(s, fb.dilation);
  const auto high = uep_complete(fb.lowpass, fb.dilation, grid, 1e-9);

  BankFile completed;
  completed.dimension = bank.dimension;
  completed.dilation = bank.dilation;
  completed.filters.emplace_back("H0", fb.lowpass);
  for (std::size_t l = 0; l < high.size(); ++l) {
    completed.filters.emplace_back("H" + std::to_string(l + 1), high[l]);
  }
  completed.phi = bank.phi;
  completed.meta.name = bank.meta.name + "-completed";
  completed.meta.mask_mode = bank.meta.mask_mode;
  completed.save(s.out(completed.meta.name + ".bank.json").string());

  const FilterBank done = completed.to_bank();
  const auto mask = make_mask(s, bank, grid, "");
  const auto report = check_uep(done, mask ? &*mask : nullptr, grid, s.config.tol_uep);
  ReportDoc doc = start_report(s, "complete", bank);
  doc.add(report.uep0);
  for (const auto& r : report.uepk) doc.add(r);
  for (const auto& r : doc.conditions) print_condition(r);
  doc.note("completed_bank", completed.meta.name + ".bank.json");
  doc.save(s.out("complete-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_frame_bounds(Session& s, const BankFile& bank, const std::string& mask_mode) {
  const DilationMatrix A = bank.validated_dilation();
  const GridSpec grid = make_grid(s, A);
  const PhiHat phi = bank.phi_hat();
  const Bracket bracket(phi, s.config.bracket_radius);
  const auto mask = make_mask(s, bank, grid, mask_mode);
  const auto est = translate_frame_bounds(bracket, mask ? &*mask : nullptr, grid);

  ReportDoc doc = start_report(s, "frame-bounds", bank);
  doc.note("lower_inner_estimate", std::to_string(est.lower));
  doc.note("upper_inner_estimate", std::to_string(est.upper));
  doc.note("masked_fraction", std::to_string(est.masked_fraction));
  bool ok = true;
  if (bank.meta.expected_bounds) {
    ok = std::abs(est.lower - bank.meta.expected_bounds->first) < 1e-6 &&
         std::abs(est.upper - bank.meta.expected_bounds->second) < 1e-6;
  }
  doc.require_pass(ok);
  std::printf("frame bounds (inner estimates): lower %.9f, upper %.9f, masked %.4f\n",
              est.lower, est.upper, est.masked_fraction);
  doc.save(s.out("frame-bounds-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_calderon(Session& s, const BankFile& bank, double scale) {
  const FilterBank fb = bank.to_bank();
  const PhiHat phi = bank.phi_hat();
  auto psis = build_framelets(fb, phi);
  if (scale != 1.0) {
    for (auto& p : psis) p = p.scaled(scale);
  }
  const auto pts = calderon_sample_points(s, fb.dim());
  const auto qs = default_q_list(fb.dilation);
  const auto report =
      calderon_check(psis, fb.dilation, pts, s.config.calderon_range, qs,
                     s.config.tol_calderon_sum, s.config.tol_calderon_cross);

  ReportDoc doc = start_report(s, "calderon", bank);
  doc.add(report.sum);
  for (const auto& r : report.cross) doc.add(r);
  for (const auto& r : doc.conditions) print_condition(r);
  doc.note("tail_indicator", std::to_string(report.tail_indicator));
  std::vector<std::vector<double>> rows;
  for (const auto& [t, value] : report.profile) {
    std::vector<double> row(t.begin(), t.end());
    row.push_back(value);
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header(static_cast<std::size_t>(fb.dim()), "t");
  for (int d = 0; d < fb.dim(); ++d) header[d] = "t" + std::to_string(d);
  header.push_back("calderon_sum");
  write_csv(s.out("calderon-" + bank.meta.name + ".csv").string(), header, rows);
  doc.save(s.out("calderon-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_two_scale(Session& s, const BankFile& bank, int signals, int level) {
  const FilterBank fb = bank.to_bank();
  const PhiHat phi = bank.phi_hat();
  ReportDoc doc = start_report(s, "two-scale", bank);
  std::vector<std::vector<double>> rows;
  bool all_ok = true;
  for (int i = 1; i <= signals; ++i) {
    const auto f = TestSignal::random(s.config.seed + static_cast<std::uint64_t>(i)).normalized();
    const double residual = two_scale_energy(fb, phi, f, level, s.config.quadrature);
    const bool ok = residual < s.config.tol_two_scale;
    all_ok = all_ok && ok;
    rows.push_back({static_cast<double>(i), residual});
    std::printf("[%s] two-scale signal %d residual=%.3e tol=%.1e\n", ok ? "PASS" : "FAIL", i,
                residual, s.config.tol_two_scale);
  }
  write_csv(s.out("two-scale-" + bank.meta.name + ".csv").string(), {"signal", "residual"},
            rows);
  // Companion coarse-scale profile for the first signal.
  const auto f0 = TestSignal::random(s.config.seed + 1).normalized();
  const std::vector<int> decay_js{-4, -6, -8, -10};
  const auto decay = coarse_scale_decay(phi, f0, decay_js, s.config.quadrature);
  std::vector<std::vector<double>> decay_rows;
  for (std::size_t i = 0; i < decay.j_values.size(); ++i) {
    decay_rows.push_back({static_cast<double>(decay.j_values[i]), decay.energies[i]});
  }
  write_csv(s.out("two-scale-" + bank.meta.name + "-decay.csv").string(), {"j", "energy"},
            decay_rows);
  doc.require_pass(all_ok && decay.pass);
  doc.note("level", std::to_string(level));
  doc.note("decay_pass", decay.pass ? "true" : "false");
  doc.save(s.out("two-scale-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_density_probe(Session& s, const BankFile& bank) {
  const DilationMatrix A = bank.validated_dilation();
  const PhiHat phi = bank.phi_hat();
  const auto report = fmra_check(phi, A, s.config.probe);

  ReportDoc doc = start_report(s, "density-probe", bank);
  doc.add(curve_as_condition("FMRA-zero", report.zero_fraction,
                             LimitVerdict::converges_to_0, s.config.probe.trend_tol));
  doc.add(curve_as_condition("FMRA-density", report.superlevel_density,
                             LimitVerdict::converges_to_1, s.config.probe.trend_tol));
  for (const auto& r : doc.conditions) print_condition(r);
  write_density_csv(s.out("density-" + bank.meta.name + "-zero.csv").string(),
                    report.zero_fraction);
  write_density_csv(s.out("density-" + bank.meta.name + "-superlevel.csv").string(),
                    report.superlevel_density);
  doc.save(s.out("density-probe-" + bank.meta.name + ".report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_counterexample(Session& s, int j_min, int j_max) {
  require(0 <= j_min && j_min <= j_max, errc::parse_error, "need 0 <= j-min <= j-max");
  const auto F = spiked_profile_plateau();
  MeasurableSet mc_only;
  mc_only.dim = 1;
  mc_only.contains = F.contains;
  const auto map = Expansive::of(DilationMatrix::validate(1, {2}));
  const RealVec origin{0.0};

  ReportDoc doc;
  doc.subcommand = "counterexample";
  doc.bank_name = "spiked-profile";
  doc.config_json = s.config.to_json_text();
  std::vector<std::vector<double>> rows;
  bool ok = true;
  for (int j = j_min; j <= j_max; ++j) {
    const auto rec = han_counterexample(j);
    const Rational closed = spiked_plateau_density(j);
    const auto mc =
        density_ratio(mc_only, map, origin, 1.0, j, s.config.probe.samples, s.config.probe.seed);
    const bool row_ok = rec.q == Rational(4) && rec.pairing >= 4.0 - 1e-9 &&
                        rec.pairing > rec.one_pairing &&
                        std::abs(mc.ratio - closed.to_double()) <= 3.0 * mc.stderr_est + 1e-12;
    ok = ok && row_ok;
    std::printf("[%s] j=%d q=%s pairing=%.6f <1,g>=%.6f density=%.6f mc=%.6f\n",
                row_ok ? "PASS" : "FAIL", j, rec.q.str().c_str(), rec.pairing, rec.one_pairing,
                closed.to_double(), mc.ratio);
    rows.push_back({static_cast<double>(j), rec.q.to_double(), rec.pairing, rec.one_pairing,
                    closed.to_double(), mc.ratio, mc.stderr_est});
  }
  write_csv(s.out("counterexample.csv").string(),
            {"j", "q", "pairing", "one_pairing", "density_closed", "density_mc",
             "density_stderr"},
            rows);
  doc.require_pass(ok);
  doc.note("j_range", std::to_string(j_min) + ".." + std::to_string(j_max));
  doc.save(s.out("counterexample.report.json").string());
  print_verdict(doc);
  return doc.pass;
}

bool run_selftest(Session& s);

bool run_examples(Session& s, bool selftest) {
  std::vector<BankFile> banks = bundled_banks();
  banks.push_back(build_haar_oep_bank(GridSpec{1, 1024}));
  for (const BankFile& bank : banks) {
    const auto path = s.out(bank.meta.name + ".bank.json");
    bank.save(path.string());
    std::printf("wrote %s\n", path.string().c_str());
  }
  if (selftest) return run_selftest(s);
  return true;
}

bool run_selftest(Session& s) {
  std::vector<BankFile> banks = bundled_banks();
  banks.push_back(build_haar_oep_bank(GridSpec{1, 1024}));
  bool all_match = true;
  for (const BankFile& bank : banks) {
    for (const auto& [key, expectation] : bank.meta.expected) {
      bool pass = false;
      if (key == "verify-uep") {
        pass = run_verify_uep(s, bank, false, "");
      } else if (key == "ortho") {
        pass = run_ortho(s, bank, "");
      } else if (key == "verify-oep") {
        pass = run_verify_oep(s, bank, "");
      } else if (key == "frame-bounds") {
        pass = run_frame_bounds(s, bank, "");
      } else if (key == "calderon") {
        pass = run_calderon(s, bank, 1.0);
      } else if (key == "two-scale") {
        pass = run_two_scale(s, bank, 5, 3);
      } else if (key == "density-probe") {
        pass = run_density_probe(s, bank);
      } else if (key == "complete") {
        pass = run_complete(s, bank);
      } else if (key == "build-framelet") {
        pass = run_build_framelet(s, bank, 8.0, 512);
      } else {
        fail(errc::parse_error, "unknown expected key '" + key + "'");
      }
      const bool expected_pass = expectation == "pass";
      const bool match = pass == expected_pass;
      all_match = all_match && match;
      std::printf("[%s] selftest %s / %s: got %s, expected %s\n", match ? "OK" : "MISMATCH",
                  bank.meta.name.c_str(), key.c_str(), pass ? "pass" : "fail",
                  expectation.c_str());
    }
  }
  std::printf("selftest: %s\n", all_match ? "all verdicts match" : "MISMATCHES FOUND");
  return all_match;
}

int exit_code(const Error& e) {
  return e.code() == errc::parse_error ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parseval framelet construction and verification"};
  app.require_subcommand(1);

  Session session;
  std::string config_path;
  std::string bank_path;
  std::string mask_mode;
  double tol_override = -1.0;
  std::int64_t grid_override = -1;
  std::uint64_t seed_override = 0;
  int depth_override = -1;
  std::pair<int, int> range_override{0, 0};

  app.add_option("--out", session.out_dir, "output directory for reports and CSV profiles");
  app.add_option("--config", config_path, "run configuration (json)");
  app.add_option("--grid", grid_override, "grid resolution override");
  app.add_option("--tol", tol_override, "tolerance override for the main condition");
  auto* seed_opt = app.add_option("--seed", seed_override, "seed override");
  app.add_option("--depth", depth_override, "product truncation depth override");
  auto* range_opt = app.add_option("--range", range_override,
                                   "scale range override (min max)");

  auto* uep = app.add_subcommand("verify-uep", "check the two unweighted filter equations");
  uep->add_option("bank", bank_path)->required();
  bool with_ortho = false;
  uep->add_flag("--ortho", with_ortho, "also check coset orthogonality to the low pass");
  uep->add_option("--mask", mask_mode, "zero-set mask mode: auto|none");

  auto* oep = app.add_subcommand("verify-oep", "check the weighted filter equations");
  oep->add_option("bank", bank_path)->required();
  oep->add_option("--mask", mask_mode, "zero-set mask mode: auto|none");

  auto* bf = app.add_subcommand("build-framelet", "emit framelet spectra as CSV profiles");
  bf->add_option("bank", bank_path)->required();
  double bf_span = 8.0;
  int bf_points = 1024;
  bf->add_option("--span", bf_span, "profile half width");
  bf->add_option("--points", bf_points, "profile sample count");

  auto* comp = app.add_subcommand("complete", "complete a low pass into a full bank");
  comp->add_option("bank", bank_path)->required();

  auto* fbcmd = app.add_subcommand("frame-bounds", "bracket extrema of the profile");
  fbcmd->add_option("bank", bank_path)->required();
  fbcmd->add_option("--mask", mask_mode, "zero-set mask mode: auto|none");

  auto* cal = app.add_subcommand("calderon", "scale-sum and cross-term characterization");
  cal->add_option("bank", bank_path)->required();
  double cal_scale = 1.0;
  cal->add_option("--scale", cal_scale, "scale all generators (diagnostic)");

  auto* ts = app.add_subcommand("two-scale", "energy identity across one scale step");
  ts->add_option("bank", bank_path)->required();
  int ts_signals = 5;
  int ts_level = 3;
  ts->add_option("--signals", ts_signals, "number of seeded test signals");
  ts->add_option("--level", ts_level, "scale level j");

  auto* dp = app.add_subcommand("density-probe", "origin admissibility probes");
  dp->add_option("bank", bank_path)->required();

  auto* ce = app.add_subcommand("counterexample",
                                "spiked profile: window averages vs distributional pairing");
  int ce_min = 0, ce_max = 10;
  ce->add_option("--j-min", ce_min, "first scale");
  ce->add_option("--j-max", ce_max, "last scale");

  auto* ex = app.add_subcommand("examples", "materialize the bundled banks");
  bool selftest = false;
  ex->add_flag("--selftest", selftest, "run the expectation matrix over the bundled banks");

  for (CLI::App* sc : {uep, oep, bf, comp, fbcmd, cal, ts, dp, ce, ex}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) session.config = RunConfig::load(config_path);
    if (grid_override > 0) {
      session.config.grid_m = grid_override;
      session.config.grid_m_nd = grid_override;
    }
    if (seed_opt->count() > 0) {
      session.config.seed = seed_override;
      session.config.probe.seed = seed_override;
    }
    if (depth_override > 0) session.config.product_depth = depth_override;
    if (range_opt->count() > 0) {
      session.config.calderon_range = {range_override.first, range_override.second};
      session.config.parseval_range = {range_override.first, range_override.second};
    }
    if (tol_override > 0) {
      session.config.tol_uep = tol_override;
      session.config.tol_oep = tol_override;
      session.config.tol_ortho = tol_override;
      session.config.tol_two_scale = tol_override;
    }

    bool pass = true;
    if (uep->parsed()) {
      const BankFile bank = BankFile::load(bank_path);
      pass = run_verify_uep(session, bank, with_ortho, mask_mode);
    } else if (oep->parsed()) {
      pass = run_verify_oep(session, BankFile::load(bank_path), mask_mode);
    } else if (bf->parsed()) {
      pass = run_build_framelet(session, BankFile::load(bank_path), bf_span, bf_points);
    } else if (comp->parsed()) {
      pass = run_complete(session, BankFile::load(bank_path));
    } else if (fbcmd->parsed()) {
      pass = run_frame_bounds(session, BankFile::load(bank_path), mask_mode);
    } else if (cal->parsed()) {
      pass = run_calderon(session, BankFile::load(bank_path), cal_scale);
    } else if (ts->parsed()) {
      pass = run_two_scale(session, BankFile::load(bank_path), ts_signals, ts_level);
    } else if (dp->parsed()) {
      pass = run_density_probe(session, BankFile::load(bank_path));
    } else if (ce->parsed()) {
      pass = run_counterexample(session, ce_min, ce_max);
    } else if (ex->parsed()) {
      pass = run_examples(session, selftest);
    }
    return pass ? 0 : 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
