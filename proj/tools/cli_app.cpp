#include "cli_app.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli_format.hpp"
#include "tdeig/assign.hpp"
#include "tdeig/error.hpp"
#include "tdeig/lambertw.hpp"
#include "tdeig/oracle.hpp"
#include "tdeig/simulate.hpp"
#include "tdeig/spectrum.hpp"

namespace tdeig::cli {
namespace {

using cplx = std::complex<double>;

constexpr const char* kSchemaVersion = "1";
constexpr const char* kKmaxVariable = "TDEIG_KMAX";
constexpr const char* kComplexGrammar =
    "complex literal: u, vi, u+vi or u-vi; spaces ignored, scientific notation allowed "
    "(e.g. \"-0.092484+1.9973i\", \"1e-3 - 2.5e1i\")";

// Command-line misuse detected after parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Envelope {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::vector<std::string> warnings;
  std::optional<Json> error;

  [[nodiscard]] Json to_json() const {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["warnings"] = warnings;
    if (error) j["error"] = *error;
    return j;
  }
};

int max_branch_setting() {
  const char* env = std::getenv(kKmaxVariable);
  if (env == nullptr || *env == '\0') return lambertw::kDefaultMaxBranch;
  const std::string_view s(env);
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v < 0) {
    throw InputError(std::string(kKmaxVariable) + " must be a non-negative integer");
  }
  return v;
}

struct SystemFlags {
  double a = 0.0;
  double a1d = 0.0;
  double b = 1.0;
  double h = 1.0;
  double k = 0.0;
  double k1d = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  bool input_delay = false;
  std::vector<CLI::Option*> plant_opts;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
};

struct ResolvedSystem {
  std::optional<SystemParams> plant;
  std::optional<Gains> gains;
  ClosedLoopParams cl;
};

void add_plant_flags(CLI::App& cmd, SystemFlags& f, bool with_gains, bool closed_loop_form) {
  f.plant_opts.push_back(cmd.add_option("--a", f.a, "plant coefficient a (default 0)"));
  f.plant_opts.push_back(cmd.add_option("--a1d", f.a1d, "delayed-state coefficient a1d (default 0)"));
  f.plant_opts.push_back(cmd.add_option("--b", f.b, "input gain b (default 1)"));
  cmd.add_option("--h", f.h, "delay h > 0 (default 1)");
  f.plant_opts.push_back(cmd.add_flag("--input-delay", f.input_delay,
                                      "plant x' = a x + b u(t-h) instead of the state-delay form"));
  if (with_gains) {
    f.plant_opts.push_back(cmd.add_option("--k", f.k, "current-state gain k (default 0)"));
    f.plant_opts.push_back(cmd.add_option("--k1d", f.k1d, "delayed-state gain k1d (default 0)"));
  }
  if (closed_loop_form) {
    f.alpha_opt = cmd.add_option("--alpha", f.alpha, "closed-loop alpha (with --beta, replaces plant flags)");
    f.beta_opt = cmd.add_option("--beta", f.beta, "closed-loop beta (with --alpha)");
  }
}

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

ResolvedSystem resolve(const SystemFlags& f, Json& inputs) {
  ResolvedSystem r;
  if (given(f.alpha_opt) || given(f.beta_opt)) {
    for (const auto* o : f.plant_opts) {
      if (given(o)) throw InputError("--alpha/--beta cannot be combined with " + o->get_name());
    }
    if (!given(f.alpha_opt) || !given(f.beta_opt)) {
      throw InputError("--alpha and --beta must be given together");
    }
    r.cl = {f.alpha, f.beta, f.h};
    r.cl.validate();
    inputs["alpha"] = f.alpha;
    inputs["beta"] = f.beta;
    inputs["h"] = f.h;
    return r;
  }
  r.plant = SystemParams{f.a, f.a1d, f.b, f.h, f.input_delay};
  r.gains = Gains{f.k, f.k1d};
  r.cl = close_loop(*r.plant, *r.gains);
  inputs["a"] = f.a;
  inputs["a1d"] = f.a1d;
  inputs["b"] = f.b;
  inputs["h"] = f.h;
  inputs["input_delay"] = f.input_delay;
  inputs["k"] = f.k;
  inputs["k1d"] = f.k1d;
  return r;
}

Json closed_loop_json(const ClosedLoopParams& cl) {
  Json j = Json::object();
  j["alpha"] = cl.alpha;
  j["beta"] = cl.beta;
  j["h"] = cl.h;
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j = Json::object();
  j["condition"] = c.condition;
  j["residual"] = c.residual;
  j["marginal"] = c.marginal;
  j["rightmost_error"] = c.rightmost_error;
  j["note"] = c.note;
  return j;
}

Json roots_json(const std::vector<Root>& roots) {
  Json arr = Json::array();
  for (const auto& r : roots) {
    Json j = Json::object();
    j["branch"] = r.branch;
    j["s"] = complex_json(r.s);
    j["multiplicity"] = r.multiplicity;
    j["residual"] = r.residual;
    arr.push_back(std::move(j));
  }
  return arr;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssignableAsRightmost:
    case ErrorCode::ConditionViolated:
    case ErrorCode::AlphaOutOfRange:
      return kInfeasible;
    case ErrorCode::MismatchDetected:
      return kMismatch;
    case ErrorCode::NoConvergence:
    case ErrorCode::BoundaryRootSuspected:
      return kInternal;
    default:
      return kInputError;
  }
}

// ---- wk ---------------------------------------------------------------------

struct WkFlags {
  int branch = 0;
  double re = 0.0;
  double im = 0.0;
  double tol = 1e-14;
};

int run_wk(const WkFlags& f, Envelope& env) {
  env.inputs["branch"] = f.branch;
  env.inputs["re"] = f.re;
  env.inputs["im"] = f.im;
  env.inputs["tol"] = f.tol;
  if (!(f.tol > 0.0)) throw InputError("--tol must be positive");
  lambertw::Options opts;
  opts.tol = f.tol;
  opts.max_branch = max_branch_setting();
  const auto w = lambertw::lambert_w(f.branch, {f.re, f.im}, opts);
  env.result = Json::object();
  env.result["w"] = complex_json(w.w);
  env.result["residual"] = w.residual;
  env.result["iterations"] = w.iterations;
  return kOk;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumFlags {
  SystemFlags sys;
  int branches = 4;
  std::string format = "json";
};

int run_spectrum(const SpectrumFlags& f, Envelope& env, std::ostream& out) {
  const ResolvedSystem rs = resolve(f.sys, env.inputs);
  env.inputs["branches"] = f.branches;
  env.inputs["format"] = f.format;
  SpectrumOptions opts;
  opts.w.max_branch = max_branch_setting();
  const Spectrum sp = spectrum(rs.cl, f.branches, opts);

  if (f.format == "csv") {
    out << "branch,re,im,multiplicity,residual\n";
    for (const auto& r : sp.roots) {
      out << r.branch << ',' << format_number(r.s.real()) << ',' << format_number(r.s.imag()) << ','
          << r.multiplicity << ',' << format_number(r.residual) << '\n';
    }
    return kOk;
  }
  const Stability st{sp.rightmost.real() < 0.0, sp.rightmost.real()};
  env.result = Json::object();
  env.result["closed_loop"] = closed_loop_json(rs.cl);
  env.result["lambert_argument"] = rs.cl.lambert_argument();
  env.result["roots"] = roots_json(sp.roots);
  env.result["rightmost"] = complex_json(sp.rightmost);
  env.result["double_rightmost"] = sp.double_rightmost;
  env.result["stable"] = st.stable;
  env.result["margin"] = st.margin;
  if (rs.cl.beta == 0.0) env.warnings.emplace_back("beta = 0: delay-free loop with the single root alpha");
  if (sp.double_rightmost) env.warnings.emplace_back("rightmost root is double (branch point)");
  return kOk;
}

// ---- assign -----------------------------------------------------------------

struct AssignFlags {
  SystemFlags sys;
  std::string target;
  double target_re = 0.0;
  double target_im = 0.0;
  CLI::Option* target_opt = nullptr;
  CLI::Option* target_re_opt = nullptr;
  CLI::Option* target_im_opt = nullptr;
  std::string mode;
  double alpha = 0.0;
  CLI::Option* alpha_opt = nullptr;
  int branches = 8;
  bool report = false;
};

cplx parse_target(const AssignFlags& f) {
  if (given(f.target_opt)) {
    if (given(f.target_re_opt) || given(f.target_im_opt)) {
      throw InputError("--target cannot be combined with --target-re/--target-im");
    }
    auto z = parse_complex(f.target);
    if (!z) throw InputError("cannot parse --target \"" + f.target + "\" (" + kComplexGrammar + ")");
    return *z;
  }
  if (!given(f.target_re_opt)) throw InputError("a target is required (--target or --target-re)");
  return {f.target_re, f.target_im};
}

Json feasibility_json(const std::vector<ModeFeasibility>& rep) {
  Json arr = Json::array();
  for (const auto& m : rep) {
    Json j = Json::object();
    j["mode"] = std::string(to_string(m.mode));
    j["applicable"] = m.applicable;
    j["feasible"] = m.feasible;
    j["error"] = m.error ? Json(std::string(to_string(*m.error))) : Json();
    j["certificate"] = certificate_json(m.certificate);
    j["alpha_max"] = m.alpha_max ? Json(*m.alpha_max) : Json();
    j["k_bound"] = m.k_bound ? Json(*m.k_bound) : Json();
    if (m.k_bound) j["k_bound_kind"] = m.k_bound_is_upper ? "upper" : "lower";
    arr.push_back(std::move(j));
  }
  return arr;
}

int run_assign(const AssignFlags& f, Envelope& env) {
  SystemParams plant{f.sys.a, f.sys.a1d, f.sys.b, f.sys.h, f.sys.input_delay};
  env.inputs["a"] = plant.a;
  env.inputs["a1d"] = plant.a1d;
  env.inputs["b"] = plant.b;
  env.inputs["h"] = plant.h;
  env.inputs["input_delay"] = plant.input_delay;
  const cplx target = parse_target(f);
  env.inputs["target"] = complex_json(target);

  AssignmentMode mode;
  if (f.mode.empty()) {
    mode = plant.input_delay        ? AssignmentMode::InputDelay
           : target.imag() == 0.0 ? AssignmentMode::RealTargetBothGains
                                  : AssignmentMode::BothGains;
  } else {
    auto m = parse_mode(f.mode);
    if (!m) throw InputError("unknown --mode \"" + f.mode + "\"");
    mode = *m;
  }
  env.inputs["mode"] = std::string(to_string(mode));
  std::optional<double> alpha;
  if (given(f.alpha_opt)) {
    if (mode != AssignmentMode::RealTargetBothGains) {
      throw InputError("--alpha applies to --mode real-both only");
    }
    alpha = f.alpha;
    env.inputs["alpha"] = f.alpha;
  }
  env.inputs["branches"] = f.branches;

  AssignOptions opts;
  opts.spectrum.w.max_branch = max_branch_setting();
  if (f.report) env.result = Json::object();

  try {
    const AssignmentResult r = assign(plant, target, mode, alpha, opts);
    const Spectrum sp = spectrum(r.closed_loop, f.branches, opts.spectrum);
    env.result = Json::object();
    env.result["mode"] = std::string(to_string(r.mode));
    env.result["feasible"] = r.feasible;
    Json gains = Json::object();
    gains["k"] = r.gains.k;
    gains["k1d"] = r.gains.k1d;
    env.result["gains"] = gains;
    env.result["closed_loop"] = closed_loop_json(r.closed_loop);
    env.result["target"] = complex_json(r.target);
    env.result["predicted_rightmost"] = complex_json(r.predicted_rightmost);
    env.result["certificate"] = certificate_json(r.certificate);
    Json confirm = Json::object();
    confirm["branches"] = f.branches;
    confirm["rightmost"] = complex_json(sp.rightmost);
    confirm["distance_to_target"] = std::abs(sp.rightmost - r.target);
    confirm["stable"] = sp.rightmost.real() < 0.0;
    confirm["margin"] = sp.rightmost.real();
    confirm["roots"] = roots_json(sp.roots);
    env.result["confirmation"] = confirm;
    if (target.imag() < 0.0) env.warnings.emplace_back("target normalized to its conjugate");
    if (r.certificate.marginal) env.warnings.emplace_back("marginal: double rightmost root");
    if (f.report) env.result["feasibility"] = feasibility_json(feasibility_report(plant, target, opts));
    if (!r.feasible) {
      env.warnings.push_back(r.certificate.note);
      return kInfeasible;
    }
    return kOk;
  } catch (const AssignmentError& e) {
    Json error = Json::object();
    error["code"] = std::string(to_string(e.code()));
    error["message"] = e.what();
    error["certificate"] = certificate_json(e.certificate());
    env.error = error;
    if (f.report) {
      env.result = Json::object();
      env.result["feasibility"] = feasibility_json(feasibility_report(plant, target, opts));
    }
    return kInfeasible;
  }
}

// ---- verify -----------------------------------------------------------------

struct VerifyFlags {
  SystemFlags sys;
  int branches = 4;
  double match_tol = 1e-8;
};

int run_verify(const VerifyFlags& f, Envelope& env) {
  const ResolvedSystem rs = resolve(f.sys, env.inputs);
  env.inputs["branches"] = f.branches;
  env.inputs["match_tol"] = f.match_tol;
  oracle::CrossValidationOptions opts;
  opts.match_tol = f.match_tol;
  opts.spectrum.w.max_branch = max_branch_setting();
  const auto cv = oracle::compare_with_oracle(rs.cl, f.branches, opts);

  env.result = Json::object();
  env.result["closed_loop"] = closed_loop_json(rs.cl);
  env.result["match"] = cv.match;
  env.result["max_distance"] = cv.max_distance;
  env.result["spectrum_roots"] = roots_json(cv.spectrum.roots);
  env.result["expected_count"] = cv.expected_count;
  env.result["oracle_count"] = cv.oracle.total_count;
  Json rect = Json::object();
  rect["re_min"] = cv.oracle.rect.re_min;
  rect["re_max"] = cv.oracle.rect.re_max;
  rect["im_min"] = cv.oracle.rect.im_min;
  rect["im_max"] = cv.oracle.rect.im_max;
  env.result["rect"] = rect;
  Json roots = Json::array();
  for (const auto& r : cv.oracle.roots) {
    Json j = Json::object();
    j["s"] = complex_json(r.s);
    j["multiplicity"] = r.multiplicity;
    j["residual"] = r.residual;
    roots.push_back(std::move(j));
  }
  env.result["oracle_roots"] = roots;
  env.result["issues"] = cv.issues;
  if (!cv.match) {
    Json error = Json::object();
    error["code"] = std::string(to_string(ErrorCode::MismatchDetected));
    error["message"] = "Lambert W spectrum and argument-principle roots disagree";
    env.error = error;
    return kMismatch;
  }
  return kOk;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateFlags {
  SystemFlags sys;
  double x0 = 1.0;
  std::string phi = "const:1";
  double t_final = 40.0;
  double step = 0.0;
  CLI::Option* step_opt = nullptr;
  double tail = 0.5;
  std::string out_path;
};

double parse_number(std::string_view s, const std::string& what) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw InputError("cannot parse " + what);
  return v;
}

sim::History parse_history(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--phi must be const:<c> or linear:<c0>,<c1>");
  const std::string kind = text.substr(0, colon);
  const std::string_view args = std::string_view(text).substr(colon + 1);
  if (kind == "const") return sim::History::constant(parse_number(args, "--phi constant"));
  if (kind == "linear") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw InputError("--phi linear needs <c0>,<c1>");
    return sim::History::linear(parse_number(args.substr(0, comma), "--phi c0"),
                                parse_number(args.substr(comma + 1), "--phi c1"));
  }
  throw InputError("unknown --phi kind \"" + kind + "\"");
}

int run_simulate(const SimulateFlags& f, Envelope& env) {
  const ResolvedSystem rs = resolve(f.sys, env.inputs);
  const double step = given(f.step_opt) ? f.step : rs.cl.h / 1000.0;
  env.inputs["x0"] = f.x0;
  env.inputs["phi"] = f.phi;
  env.inputs["tfinal"] = f.t_final;
  env.inputs["step"] = step;
  env.inputs["tail"] = f.tail;
  env.inputs["out"] = f.out_path.empty() ? Json() : Json(f.out_path);

  const sim::InitialData init{f.x0, parse_history(f.phi)};
  const sim::Trajectory tr = sim::simulate(rs.cl, init, f.t_final, step);
  if (!f.out_path.empty()) {
    std::ofstream file(f.out_path);
    if (!file) throw InputError("cannot open --out file " + f.out_path);
    sim::write_csv(tr, file);
    if (!file) throw InputError("failed writing " + f.out_path);
  }

  SpectrumOptions sopts;
  sopts.w.max_branch = max_branch_setting();
  const cplx predicted = rightmost_root(rs.cl, sopts);

  env.result = Json::object();
  env.result["closed_loop"] = closed_loop_json(rs.cl);
  env.result["step"] = tr.step;
  env.result["samples"] = tr.values.size();
  env.result["t_end"] = tr.times.back();
  env.result["overflow"] = tr.overflow;
  env.result["csv"] = f.out_path.empty() ? Json() : Json(f.out_path);
  env.result["predicted"] = complex_json(predicted);
  if (tr.overflow) env.warnings.emplace_back("trajectory exceeded 1e300 and was truncated");

  try {
    const auto est = sim::estimate_dominant_eig(tr, f.tail);
    Json e = Json::object();
    e["eigenvalue"] = complex_json(est.eigenvalue);
    e["fit_residual"] = est.fit_residual;
    e["zero_crossings"] = est.zero_crossings;
    e["envelope_points"] = est.envelope_points;
    env.result["estimate"] = e;
    const double dev = std::abs(est.eigenvalue - predicted);
    Json d = Json::object();
    d["absolute"] = dev;
    d["relative"] = std::abs(predicted) > 0.0 ? Json(dev / std::abs(predicted)) : Json();
    env.result["deviation"] = d;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientData) throw;
    env.result["estimate"] = Json();
    env.result["deviation"] = Json();
    env.warnings.emplace_back(std::string("no eigenvalue estimate: ") + e.what());
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and rightmost-eigenvalue assignment for x' = a x(t) + a1d x(t-h) + b u(t)"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 ok, 2 input error, 3 infeasible assignment, 4 verification "
                         "mismatch, 1 numerical failure. ") +
             kKmaxVariable + " overrides the largest Lambert W branch index (default 1024).");

  WkFlags wk;
  auto* wk_cmd = app.add_subcommand("wk", "evaluate the Lambert W branch W_k(re + i im)");
  wk_cmd->add_option("--branch", wk.branch, "branch index k")->required();
  wk_cmd->add_option("--re", wk.re, "real part of z")->required();
  wk_cmd->add_option("--im", wk.im, "imaginary part of z (default 0)");
  wk_cmd->add_option("--tol", wk.tol, "relative residual tolerance (default 1e-14)");

  SpectrumFlags sp;
  auto* sp_cmd = app.add_subcommand("spectrum", "characteristic roots s_k = alpha + W_k(beta h e^{-alpha h})/h");
  add_plant_flags(*sp_cmd, sp.sys, true, true);
  sp_cmd->add_option("--branches", sp.branches, "largest branch index n (default 4)");
  sp_cmd->add_option("--format", sp.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  AssignFlags as;
  auto* as_cmd = app.add_subcommand("assign", "feedback gains placing the rightmost root at a target");
  add_plant_flags(*as_cmd, as.sys, false, false);
  as.target_opt = as_cmd->add_option("--target", as.target, std::string("target root; ") + kComplexGrammar);
  as.target_re_opt = as_cmd->add_option("--target-re", as.target_re, "target real part");
  as.target_im_opt = as_cmd->add_option("--target-im", as.target_im, "target imaginary part");
  as_cmd->add_option("--mode", as.mode, "both | delay-only | current-only | real-both | input-delay")
      ->check(CLI::IsMember({"both", "delay-only", "current-only", "real-both", "input-delay"}));
  as.alpha_opt = as_cmd->add_option("--alpha", as.alpha, "closed-loop alpha for real-both (default: target)");
  as_cmd->add_option("--branches", as.branches, "branches in the confirming spectrum (default 8)");
  as_cmd->add_flag("--report", as.report, "add the feasibility of every mode");

  VerifyFlags vf;
  auto* vf_cmd = app.add_subcommand("verify", "cross-check the spectrum with an argument-principle root finder");
  add_plant_flags(*vf_cmd, vf.sys, true, true);
  vf_cmd->add_option("--branches", vf.branches, "largest branch index n (default 4)");
  vf_cmd->add_option("--match-tol", vf.match_tol, "largest accepted root distance (default 1e-8)");

  SimulateFlags sf;
  auto* sf_cmd = app.add_subcommand("simulate", "method-of-steps simulation and dominant-eigenvalue estimate");
  add_plant_flags(*sf_cmd, sf.sys, true, true);
  sf_cmd->add_option("--x0", sf.x0, "initial state x(0) (default 1)");
  sf_cmd->add_option("--phi", sf.phi, "history on [-h, 0): const:<c> or linear:<c0>,<c1> (default const:1)");
  sf_cmd->add_option("--tfinal", sf.t_final, "end time, at least h (default 40)");
  sf.step_opt = sf_cmd->add_option("--step", sf.step, "integration step (default h/1000)");
  sf_cmd->add_option("--tail", sf.tail, "trailing fraction used for the estimate (default 0.5)");
  sf_cmd->add_option("--out", sf.out_path, "write the trajectory as CSV (t,x) to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  Envelope env;
  int rc = kOk;
  bool csv = false;
  try {
    if (wk_cmd->parsed()) {
      env.command = "wk";
      rc = run_wk(wk, env);
    } else if (sp_cmd->parsed()) {
      env.command = "spectrum";
      csv = sp.format == "csv";
      rc = run_spectrum(sp, env, out);
    } else if (as_cmd->parsed()) {
      env.command = "assign";
      rc = run_assign(as, env);
    } else if (vf_cmd->parsed()) {
      env.command = "verify";
      rc = run_verify(vf, env);
    } else {
      env.command = "simulate";
      rc = run_simulate(sf, env);
    }
  } catch (const InputError& e) {
    Json error = Json::object();
    error["code"] = "InputError";
    error["message"] = e.what();
    env.error = error;
    rc = kInputError;
  } catch (const Error& e) {
    Json error = Json::object();
    error["code"] = std::string(to_string(e.code()));
    error["message"] = e.what();
    env.error = error;
    rc = exit_code_for(e.code());
  }

  if (env.error) err << "error: " << (*env.error)["message"].get<std::string>() << '\n';
  if (csv && rc == kOk) return rc;
  out << dump(env.to_json());
  return rc;
}

}  // namespace tdeig::cli
