#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asep/experiments.hpp"
#include "asep/fredholm.hpp"
#include "asep/hecke.hpp"
#include "asep/report.hpp"
#include "asep/rng.hpp"
#include "asep/scaling.hpp"

#ifndef ASEP_GIT_DESCRIBE
#define ASEP_GIT_DESCRIBE "unknown"
#endif

namespace {

using namespace asep;

// Flags may also arrive through --config as a flat JSON object whose
// keys are the long option names. Command-line values win.
struct JsonConfig : CLI::Config {
  std::string to_config(const CLI::App*, bool, bool,
                        std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::FileError(std::string("config parse: ") + e.what());
    }
    if (!j.is_object())
      throw CLI::FileError("config must be a flat JSON object");
    auto as_string = [](const nlohmann::json& v) -> std::string {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
      return v.dump();
    };
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, val] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (val.is_array())
        for (const auto& e : val) item.inputs.push_back(as_string(e));
      else
        item.inputs.push_back(as_string(val));
      items.push_back(std::move(item));
    }
    return items;
  }
};

std::string default_outdir() {
  const char* env = std::getenv("ASEP_LAB_OUTDIR");
  return env && *env ? env : ".";
}

struct CommonArgs {
  double p = 0;
  double Q = 0;
  CLI::Option* opt_p = nullptr;
  CLI::Option* opt_q = nullptr;
  std::uint64_t seed = 1;
  std::string out = default_outdir();
  int threads = 1;

  SimulationParams params() const {
    if (opt_p->count()) return SimulationParams::from_p(p);
    if (opt_q->count()) return SimulationParams::from_Q(Q);
    return SimulationParams::from_Q(0.5);
  }
};

void add_common(CLI::App* sub, CommonArgs& c) {
  c.opt_p = sub->add_option("--p", c.p, "right jump rate, in (1/2, 1]");
  c.opt_q = sub->add_option("--Q", c.Q, "asymmetry q/p, in [0, 1)");
  c.opt_p->excludes(c.opt_q);
  sub->add_option("--seed", c.seed, "master seed");
  sub->add_option("--out", c.out,
                  "output directory (default $ASEP_LAB_OUTDIR or .)");
  sub->add_option("--threads", c.threads, "worker cap, results independent")
      ->check(CLI::PositiveNumber);
  sub->set_config("--config", "", "JSON file mirroring the flags");
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid max below min");
  const double span = (hi - lo) / step;
  if (span > 100000) throw std::invalid_argument("grid too fine");
  std::vector<double> g;
  for (std::int64_t i = 0; i <= std::llround(std::floor(span + 1e-9)); ++i)
    g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

struct Manifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> params;

  explicit Manifest(std::string sub) : subcommand(std::move(sub)) {}
  void add(const std::string& key, double v) {
    params.emplace_back(key, format_double(v));
  }
  void add(const std::string& key, std::int64_t v) {
    params.emplace_back(key, std::to_string(v));
  }
  void add(const std::string& key, std::uint64_t v) {
    params.emplace_back(key, std::to_string(v));
  }
  void add(const std::string& key, bool v) {
    params.emplace_back(key, v ? "true" : "false");
  }
  void add(const std::string& key, const std::string& v) {
    params.emplace_back(key, json_quote(v));
  }
  void add_params(const SimulationParams& sp) {
    add("p", sp.p);
    add("Q", sp.Q());
  }
  void add_grid(double lo, double hi, double step) {
    add("c_min", lo);
    add("c_max", hi);
    add("c_step", step);
  }
};

std::string out_file(const CommonArgs& com, const std::string& name) {
  std::filesystem::create_directories(com.out);
  return (std::filesystem::path(com.out) / name).string();
}

void write_manifest(const CommonArgs& com, const Manifest& m) {
  const std::string path = out_file(com, m.subcommand + "_manifest.json");
  write_text_file(
      path, run_manifest_json(m.subcommand, m.params, com.seed,
                              ASEP_GIT_DESCRIBE));
  std::cout << "wrote " << path << "\n";
}

void write_output(const CommonArgs& com, const std::string& name,
                  const std::string& content) {
  const std::string path = out_file(com, name);
  write_text_file(path, content);
  std::cout << "wrote " << path << "\n";
}

struct HeckeVerifyArgs {
  CommonArgs com;
  std::int64_t S = 1, R = 1, M = 1;
  double t = 1.0;
  double tolerance = 1e-9;
  std::uint64_t cap = kDefaultHeckeCap;
  bool sweep = false;
  std::int64_t x = 0;
  std::int64_t y = 0;
  CLI::Option* opt_y = nullptr;
};

int run_hecke_verify(const HeckeVerifyArgs& a) {
  struct Row {
    std::int64_t S, R, M;
    double p, t;
    IdentityCheckResult res;
  };
  std::vector<Row> rows;
  if (a.sweep) {
    const std::int64_t srm[][3] = {{1, 1, 1}, {1, 1, 2}, {2, 1, 1}};
    const double qs[] = {0.0, 0.25, 0.5};
    const double ts[] = {0.1, 1.0, 5.0};
    for (const auto& s : srm)
      for (double Q : qs)
        for (double t : ts) {
          const SimulationParams sp = SimulationParams::from_Q(Q);
          rows.push_back({s[0], s[1], s[2], sp.p, t,
                          distribution_identity_check(s[0], s[1], s[2], sp, t,
                                                      a.tolerance, a.cap)});
        }
  } else {
    const SimulationParams sp = a.com.params();
    rows.push_back({a.S, a.R, a.M, sp.p, a.t,
                    distribution_identity_check(a.S, a.R, a.M, sp, a.t,
                                                a.tolerance, a.cap)});
  }
  std::string csv = "S,R,M,p,Q,t,deviation,tolerance,passed\n";
  double worst = 0;
  bool all_passed = true;
  for (const Row& r : rows) {
    const double Q = (1.0 - r.p) / r.p;
    csv += std::to_string(r.S) + ',' + std::to_string(r.R) + ',' +
           std::to_string(r.M) + ',' + format_double(r.p) + ',' +
           format_double(Q) + ',' + format_double(r.t) + ',' +
           format_double(r.res.deviation) + ',' +
           format_double(r.res.tolerance) + ',' +
           (r.res.passed ? "1" : "0") + '\n';
    worst = std::max(worst, r.res.deviation);
    all_passed = all_passed && r.res.passed;
  }
  write_output(a.com, "hecke_verify.csv", csv);

  // The exact corollary pair on the same interval, one threshold pair.
  const SimulationParams sp =
      a.sweep ? SimulationParams::from_Q(0.5) : a.com.params();
  const std::int64_t y = a.opt_y->count() ? a.y : a.S + a.M;
  const EventProbabilityPair ev =
      corollary_event_check(a.S, a.R, a.M, sp, a.t, a.x, y, a.cap);
  const double ev_dev = std::abs(ev.lhs - ev.rhs);
  all_passed = all_passed && ev_dev <= a.tolerance;

  Manifest m("hecke-verify");
  m.add("S", a.S);
  m.add("R", a.R);
  m.add("M", a.M);
  m.add("t", a.t);
  m.add("tolerance", a.tolerance);
  m.add("cap", a.cap);
  m.add("sweep", a.sweep);
  m.add("x", a.x);
  m.add("y", y);
  m.add_params(sp);
  write_manifest(a.com, m);

  std::cout << "identity checks: " << rows.size()
            << ", worst deviation " << format_double(worst)
            << "; corollary event |lhs-rhs| " << format_double(ev_dev)
            << (all_passed ? " [ok]\n" : " [FAILED]\n");
  return all_passed ? 0 : 2;
}

struct TwTableArgs {
  CommonArgs com;
  double s_min = -8.0, s_max = 4.0, step = 0.1;
  double alpha = 0.5;
  CLI::Option* opt_alpha = nullptr;
  double c_min = -4.0, c_max = 4.0;
  int m = QuadratureSpec{}.m;
};

int run_tw_table(const TwTableArgs& a) {
  QuadratureSpec quad;
  quad.m = a.m;
  const std::vector<double> s_grid = make_grid(a.s_min, a.s_max, a.step);
  std::string csv = "s,F\n";
  std::vector<double> fs;
  for (double s : s_grid) {
    fs.push_back(f_gue(s, quad));
    csv += format_double(s) + ',' + format_double(fs.back()) + '\n';
  }
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i] + 1e-8 < fs[i - 1])
      throw std::runtime_error("distribution table not monotone");
  write_output(a.com, "tw_table.csv", csv);

  Manifest m("tw-table");
  m.add("s_min", a.s_min);
  m.add("s_max", a.s_max);
  m.add("step", a.step);
  m.add("m", static_cast<std::int64_t>(a.m));

  if (a.opt_alpha->count()) {
    const double fa = f_alpha(a.alpha);
    const std::vector<double> c_grid = make_grid(a.c_min, a.c_max, a.step);
    std::string pcsv = "c,predicted\n";
    double prev = 2.0;
    for (double c : c_grid) {
      const double val = 1.0 - f_gue(c * fa, quad);
      if (val > prev + 1e-8)
        throw std::runtime_error("predicted profile not monotone");
      prev = val;
      pcsv += format_double(c) + ',' + format_double(val) + '\n';
    }
    write_output(a.com, "profile_prediction.csv", pcsv);
    m.add("alpha", a.alpha);
    m.add("f_alpha", fa);
    m.add_grid(a.c_min, a.c_max, a.step);
  }
  write_manifest(a.com, m);
  return 0;
}

struct GridArgs {
  double c_min = -4.0, c_max = 4.0, c_step = 1.0;
};

void add_grid_options(CLI::App* sub, GridArgs& g) {
  sub->add_option("--c-min", g.c_min, "lowest c of the time grid g(k, c)");
  sub->add_option("--c-max", g.c_max, "highest c");
  sub->add_option("--c-step", g.c_step, "grid spacing");
}

struct ProfileArgs {
  CommonArgs com;
  GridArgs grid;
  std::int64_t N = 256, k = 128, l = 0;
  std::uint64_t reps = 2000;
  double w = 0.1, kappa = 0, cp = 0, kappap = 0, cpp = 0;
  bool with_exact = false;
  bool no_upper = false, no_lower = false, no_event_b = false,
       no_profile = false;
};

int run_profile(const ProfileArgs& a) {
  ProfileReportConfig cfg;
  cfg.N = a.N;
  cfg.k = a.k;
  cfg.params = a.com.params();
  cfg.c_grid = make_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  cfg.reps = a.reps;
  cfg.l = a.l;
  cfg.w = a.w;
  cfg.kappa = a.kappa;
  cfg.cp = a.cp;
  cfg.kappap = a.kappap;
  cfg.cpp = a.cpp;
  cfg.seed = a.com.seed;
  cfg.with_exact = a.with_exact;
  cfg.with_upper = !a.no_upper;
  cfg.with_lower = !a.no_lower;
  cfg.with_event_b = !a.no_event_b;
  cfg.with_profile = !a.no_profile;
  const ProfileReport rep = profile_report(cfg);
  write_output(a.com, "tv_curve.csv", tv_curve_csv(rep.tv));
  if (cfg.with_profile)
    write_output(a.com, "profile.csv", profile_csv(rep.profile));
  if (cfg.with_event_b)
    write_output(a.com, "event_b.csv", event_b_csv(rep.event_b));

  Manifest m("profile");
  m.add("N", a.N);
  m.add("k", a.k);
  m.add_params(cfg.params);
  m.add_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  m.add("reps", a.reps);
  m.add("l", a.l ? a.l : default_tail_l(a.N));
  m.add("w", a.w);
  m.add("kappa", a.kappa);
  m.add("cp", a.cp);
  m.add("kappap", a.kappap);
  m.add("cpp", a.cpp);
  m.add("with_exact", cfg.with_exact);
  m.add("with_upper", cfg.with_upper);
  m.add("with_lower", cfg.with_lower);
  m.add("with_event_b", cfg.with_event_b);
  m.add("with_profile", cfg.with_profile);
  write_manifest(a.com, m);
  return 0;
}

struct MixExactArgs {
  CommonArgs com;
  GridArgs grid{-2.0, 2.0, 0.5};
  std::int64_t N = 8, k = 4;
  std::string from = "xi0";
  std::uint64_t state_cap = 12870;
};

int run_mix_exact(const MixExactArgs& a) {
  const SimulationParams sp = a.com.params();
  const std::vector<double> c_grid =
      make_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  std::vector<double> times;
  for (double c : c_grid) times.push_back(g_time(a.N, a.k, c, sp));
  const MixingStart from = a.from == "xi0"   ? MixingStart::xi0
                           : a.from == "xi1" ? MixingStart::xi1
                                             : MixingStart::worst;
  std::vector<TvEstimate> rows =
      exact_mixing_curve(a.N, a.k, sp, times, from, a.state_cap);
  const double fa = f_alpha(static_cast<double>(a.k) / a.N);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].c = c_grid[i];
    rows[i].predicted = 1.0 - f_gue(c_grid[i] * fa);
    rows[i].seed = a.com.seed;
  }
  write_output(a.com, "tv_curve.csv", tv_curve_csv(rows));

  Manifest m("mix-exact");
  m.add("N", a.N);
  m.add("k", a.k);
  m.add_params(sp);
  m.add_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  m.add("from", a.from);
  m.add("state_cap", a.state_cap);
  write_manifest(a.com, m);
  return 0;
}

struct MixMcArgs {
  CommonArgs com;
  GridArgs grid;
  std::int64_t N = 64, k = 32, l = 0;
  std::uint64_t reps = 2000;
};

int run_mix_mc(const MixMcArgs& a) {
  const SimulationParams sp = a.com.params();
  const std::vector<double> c_grid =
      make_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  std::vector<TvEstimate> rows = tv_upper_bound_mc(
      a.N, a.k, sp, c_grid, a.reps, mix_seed(a.com.seed, 1));
  const std::vector<TvEstimate> lower = tv_lower_bound_mc(
      a.N, a.k, sp, c_grid, a.l, a.reps, mix_seed(a.com.seed, 2));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].lower = lower[i].lower;
    rows[i].lower_se = lower[i].lower_se;
    rows[i].seed = a.com.seed;
  }
  write_output(a.com, "tv_curve.csv", tv_curve_csv(rows));

  Manifest m("mix-mc");
  m.add("N", a.N);
  m.add("k", a.k);
  m.add_params(sp);
  m.add_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  m.add("l", a.l ? a.l : default_tail_l(a.N));
  m.add("reps", a.reps);
  write_manifest(a.com, m);
  return 0;
}

struct HittingArgs {
  CommonArgs com;
  std::int64_t N = 64, k = 32;
  std::uint64_t reps = 1000;
  double horizon = 0, cap = 0;
};

int run_hitting(const HittingArgs& a) {
  const SimulationParams sp = a.com.params();
  const double horizon =
      a.horizon > 0 ? a.horizon : 1.25 * g_time(a.N, a.k, 2.0, sp);
  const double cap = a.cap > 0 ? a.cap : 64.0 * horizon;
  std::vector<HittingSample> rows;
  rows.reserve(a.reps);
  double sum = 0;
  std::uint64_t censored = 0;
  for (std::uint64_t rep = 0; rep < a.reps; ++rep) {
    rows.push_back(
        hitting_time(sp, a.N, a.k, mix_seed(a.com.seed, rep), horizon, cap));
    sum += rows.back().time;
    censored += rows.back().censored;
  }
  write_output(a.com, "hitting.csv", hitting_csv(rows));

  Manifest m("hitting");
  m.add("N", a.N);
  m.add("k", a.k);
  m.add_params(sp);
  m.add("reps", a.reps);
  m.add("horizon", horizon);
  m.add("cap", cap);
  write_manifest(a.com, m);
  std::cout << "mean hitting time "
            << format_double(sum / static_cast<double>(a.reps)) << ", "
            << censored << " censored\n";
  return 0;
}

struct StepFluctArgs {
  CommonArgs com;
  GridArgs grid;
  std::int64_t N = 256, k = 128;
  double kappa = 0, cp = 0, kappap = 0, cpp = 0;
  std::uint64_t reps = 2000;
};

int run_step_fluct(const StepFluctArgs& a) {
  const SimulationParams sp = a.com.params();
  const std::vector<double> c_grid =
      make_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  const std::vector<ProfilePoint> rows =
      step_fluct_mc(a.N, a.k, sp, c_grid, a.kappa, a.cp, a.kappap, a.cpp,
                    a.reps, a.com.seed);
  write_output(a.com, "profile.csv", profile_csv(rows));

  Manifest m("step-fluct");
  m.add("N", a.N);
  m.add("k", a.k);
  m.add_params(sp);
  m.add_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  m.add("kappa", a.kappa);
  m.add("cp", a.cp);
  m.add("kappap", a.kappap);
  m.add("cpp", a.cpp);
  m.add("reps", a.reps);
  write_manifest(a.com, m);
  return 0;
}

struct IdentityMcArgs {
  CommonArgs com;
  std::int64_t S = 50, R = 20, M = 20;
  double t = 10.0;
  std::int64_t x = 0, y = 0;
  CLI::Option* opt_y = nullptr;
  std::uint64_t reps = 10000;
};

int run_identity_mc(const IdentityMcArgs& a) {
  const SimulationParams sp = a.com.params();
  const std::int64_t y = a.opt_y->count() ? a.y : a.S + a.M;
  const IdentityMcEstimate est = auxiliary_identity_mc(
      a.S, a.R, a.M, a.t, sp, a.x, y, a.reps, a.com.seed);
  write_output(a.com, "identity.csv", identity_csv(est));

  Manifest m("identity-mc");
  m.add("S", a.S);
  m.add("R", a.R);
  m.add("M", a.M);
  m.add("t", a.t);
  m.add_params(sp);
  m.add("x", a.x);
  m.add("y", y);
  m.add("reps", a.reps);
  write_manifest(a.com, m);

  const double dev = std::abs(est.lhs - est.rhs);
  const double sigma = std::max(
      std::sqrt(est.lhs_se * est.lhs_se + est.rhs_se * est.rhs_se), 1e-12);
  std::cout << "lhs " << format_double(est.lhs) << " rhs "
            << format_double(est.rhs) << " |diff|/sigma "
            << format_double(dev / sigma) << "\n";
  return dev <= 5.0 * sigma ? 0 : 2;
}

struct EventBArgs {
  CommonArgs com;
  GridArgs grid;
  std::int64_t N = 256, k = 128;
  double w = 0.1;
  std::uint64_t reps = 2000;
};

int run_event_b(const EventBArgs& a) {
  const SimulationParams sp = a.com.params();
  const std::vector<double> c_grid =
      make_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  const std::vector<EventBEstimate> rows =
      event_b_mc(a.N, a.k, sp, c_grid, a.w, a.reps, a.com.seed);
  write_output(a.com, "event_b.csv", event_b_csv(rows));

  Manifest m("event-b");
  m.add("N", a.N);
  m.add("k", a.k);
  m.add_params(sp);
  m.add_grid(a.grid.c_min, a.grid.c_max, a.grid.c_step);
  m.add("w", a.w);
  m.add("reps", a.reps);
  write_manifest(a.com, m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asep laboratory: mixing, profiles and identity checks for "
               "the asymmetric exclusion process on a segment"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.require_subcommand(1);

  HeckeVerifyArgs hv;
  CLI::App* sub_hv = app.add_subcommand(
      "hecke-verify", "exact distribution identity in the Hecke algebra");
  add_common(sub_hv, hv.com);
  sub_hv->add_option("--S", hv.S);
  sub_hv->add_option("--R", hv.R);
  sub_hv->add_option("--M", hv.M);
  sub_hv->add_option("--t", hv.t);
  sub_hv->add_option("--tolerance", hv.tolerance);
  sub_hv->add_option("--cap", hv.cap, "largest admissible interval factorial");
  sub_hv->add_flag("--sweep", hv.sweep, "run the pinned (S,R,M) x Q x t grid");
  sub_hv->add_option("--x", hv.x, "left event threshold");
  hv.opt_y = sub_hv->add_option("--y", hv.y, "right event threshold");

  TwTableArgs tw;
  CLI::App* sub_tw = app.add_subcommand(
      "tw-table", "limit distribution tables and predicted profiles");
  add_common(sub_tw, tw.com);
  sub_tw->add_option("--s-min", tw.s_min);
  sub_tw->add_option("--s-max", tw.s_max);
  sub_tw->add_option("--step", tw.step);
  tw.opt_alpha =
      sub_tw->add_option("--alpha", tw.alpha, "density k/N for the profile");
  sub_tw->add_option("--c-min", tw.c_min);
  sub_tw->add_option("--c-max", tw.c_max);
  sub_tw->add_option("--m", tw.m, "quadrature nodes");

  ProfileArgs pr;
  CLI::App* sub_pr = app.add_subcommand(
      "profile", "full report: sandwich bounds, step profile, interface event");
  add_common(sub_pr, pr.com);
  add_grid_options(sub_pr, pr.grid);
  sub_pr->add_option("--N", pr.N);
  sub_pr->add_option("--k", pr.k);
  sub_pr->add_option("--reps", pr.reps);
  sub_pr->add_option("--l", pr.l, "lower-bound tail depth, 0 picks N^(1/4)");
  sub_pr->add_option("--w", pr.w, "interface window exponent");
  sub_pr->add_option("--kappa", pr.kappa);
  sub_pr->add_option("--cp", pr.cp);
  sub_pr->add_option("--kappap", pr.kappap);
  sub_pr->add_option("--cpp", pr.cpp);
  sub_pr->add_flag("--with-exact", pr.with_exact);
  sub_pr->add_flag("--no-upper", pr.no_upper);
  sub_pr->add_flag("--no-lower", pr.no_lower);
  sub_pr->add_flag("--no-event-b", pr.no_event_b);
  sub_pr->add_flag("--no-profile", pr.no_profile);

  MixExactArgs me;
  CLI::App* sub_me =
      app.add_subcommand("mix-exact", "exact distance to stationarity");
  add_common(sub_me, me.com);
  add_grid_options(sub_me, me.grid);
  sub_me->add_option("--N", me.N);
  sub_me->add_option("--k", me.k);
  sub_me->add_option("--from", me.from)
      ->check(CLI::IsMember({"xi0", "xi1", "worst"}));
  sub_me->add_option("--state-cap", me.state_cap);

  MixMcArgs mm;
  CLI::App* sub_mm =
      app.add_subcommand("mix-mc", "Monte-Carlo sandwich on the distance");
  add_common(sub_mm, mm.com);
  add_grid_options(sub_mm, mm.grid);
  sub_mm->add_option("--N", mm.N);
  sub_mm->add_option("--k", mm.k);
  sub_mm->add_option("--l", mm.l);
  sub_mm->add_option("--reps", mm.reps);

  HittingArgs hi;
  CLI::App* sub_hi =
      app.add_subcommand("hitting", "interface hitting time samples");
  add_common(sub_hi, hi.com);
  sub_hi->add_option("--N", hi.N);
  sub_hi->add_option("--k", hi.k);
  sub_hi->add_option("--reps", hi.reps);
  sub_hi->add_option("--horizon", hi.horizon, "0 picks 1.25 g(k, 2)");
  sub_hi->add_option("--cap", hi.cap, "censoring time, 0 picks 64 horizon");

  StepFluctArgs sf;
  CLI::App* sub_sf = app.add_subcommand(
      "step-fluct", "tagged particle fluctuations of the step state");
  add_common(sub_sf, sf.com);
  add_grid_options(sub_sf, sf.grid);
  sub_sf->add_option("--N", sf.N);
  sub_sf->add_option("--k", sf.k);
  sub_sf->add_option("--kappa", sf.kappa);
  sub_sf->add_option("--cp", sf.cp);
  sub_sf->add_option("--kappap", sf.kappap);
  sub_sf->add_option("--cpp", sf.cpp);
  sub_sf->add_option("--reps", sf.reps);

  IdentityMcArgs im;
  CLI::App* sub_im = app.add_subcommand(
      "identity-mc", "Monte-Carlo check of the equilibration identity");
  add_common(sub_im, im.com);
  sub_im->add_option("--S", im.S);
  sub_im->add_option("--R", im.R);
  sub_im->add_option("--M", im.M);
  sub_im->add_option("--t", im.t);
  sub_im->add_option("--x", im.x);
  im.opt_y = sub_im->add_option("--y", im.y);
  sub_im->add_option("--reps", im.reps);

  EventBArgs eb;
  CLI::App* sub_eb =
      app.add_subcommand("event-b", "interface localization event");
  add_common(sub_eb, eb.com);
  add_grid_options(sub_eb, eb.grid);
  sub_eb->add_option("--N", eb.N);
  sub_eb->add_option("--k", eb.k);
  sub_eb->add_option("--w", eb.w);
  sub_eb->add_option("--reps", eb.reps);

  if (argc <= 1) {
    std::cout << app.help();
    return 1;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(sub_hv)) return run_hecke_verify(hv);
    if (app.got_subcommand(sub_tw)) return run_tw_table(tw);
    if (app.got_subcommand(sub_pr)) return run_profile(pr);
    if (app.got_subcommand(sub_me)) return run_mix_exact(me);
    if (app.got_subcommand(sub_mm)) return run_mix_mc(mm);
    if (app.got_subcommand(sub_hi)) return run_hitting(hi);
    if (app.got_subcommand(sub_sf)) return run_step_fluct(sf);
    if (app.got_subcommand(sub_im)) return run_identity_mc(im);
    if (app.got_subcommand(sub_eb)) return run_event_b(eb);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
