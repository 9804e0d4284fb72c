#include "tdeig/assign.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tdeig {
namespace {

using cplx = std::complex<double>;

cplx normalize_target(cplx target) {
  if (!std::isfinite(target.real()) || !std::isfinite(target.imag())) {
    throw Error(ErrorCode::NonFinite, "target must be finite");
  }
  return target.imag() < 0.0 ? std::conj(target) : target;
}

void require_form(const SystemParams& sys, bool input_delay, AssignmentMode mode) {
  sys.validate();
  if (sys.input_delay != input_delay) {
    throw Error(ErrorCode::InvalidParams,
                std::string(to_string(mode)) +
                    (input_delay ? " requires an input-delay plant" : " is not available for input-delay plants"));
  }
}

[[noreturn]] void fail(ErrorCode code, const std::string& msg, Certificate cert) {
  const std::string text = msg + " [" + cert.to_string() + "]";
  throw AssignmentError(code, text, std::move(cert));
}

// 0 < v h < pi: outside it the target would be a root of a non-principal branch.
void check_window(cplx s, double h) {
  const double vh = s.imag() * h;
  if (vh > 0.0 && vh < std::numbers::pi) return;
  Certificate cert;
  cert.condition = "0 < v h < pi";
  cert.residual = vh;
  cert.note = "target would be a root of branch " +
              std::to_string(lambertw::branch_of(cplx(-vh / std::tan(vh), vh))) +
              "; a root with larger real part exists";
  fail(ErrorCode::NotAssignableAsRightmost, "target is not assignable as the rightmost root",
       std::move(cert));
}

// a = u + v cot(vh), i.e. (S - a) h lies on W_0(BC).
Certificate boundary_condition(double a, cplx s, double h, const AssignOptions& opts,
                               std::string_view what) {
  const double u = s.real();
  const double vcot = s.imag() / std::tan(s.imag() * h);
  Certificate cert;
  cert.condition = std::string(what) + " = u + v cot(v h)";
  cert.residual = std::abs(a - u - vcot);
  const double scale = std::max({1.0, std::abs(a), std::abs(u), std::abs(vcot)});
  if (cert.residual > opts.condition_tol * scale) {
    fail(ErrorCode::ConditionViolated, "target is not reachable with this gain structure", cert);
  }
  return cert;
}

Certificate real_margin(double margin, std::string condition, double scale,
                        const AssignOptions& opts) {
  Certificate cert;
  cert.condition = std::move(condition);
  cert.residual = margin;
  if (margin < -opts.condition_tol * scale) {
    fail(ErrorCode::ConditionViolated, "real target lies left of the reachable range", cert);
  }
  cert.marginal = std::abs(margin) <= opts.branch_point_tol * scale;
  if (cert.marginal) cert.note = "marginal: double rightmost root";
  return cert;
}

// The designed (alpha, beta) is kept as computed: rebuilding it from the gains
// cancels a1d against b k1d, which loses digits when beta is small.
AssignmentResult finish(AssignmentMode mode, Gains gains, ClosedLoopParams designed, cplx target,
                        Certificate cert, const AssignOptions& opts) {
  AssignmentResult r;
  r.mode = mode;
  r.gains = gains;
  r.closed_loop = designed;
  r.target = target;
  r.predicted_rightmost = target;
  r.certificate = std::move(cert);
  r.certificate.rightmost_error = std::abs(rightmost_root(r.closed_loop, opts.spectrum) - target);
  r.feasible = true;
  return r;
}

}  // namespace

std::string_view to_string(AssignmentMode mode) {
  switch (mode) {
    case AssignmentMode::BothGains: return "both";
    case AssignmentMode::DelayOnly: return "delay-only";
    case AssignmentMode::CurrentOnly: return "current-only";
    case AssignmentMode::InputDelay: return "input-delay";
    case AssignmentMode::RealTargetBothGains: return "real-both";
  }
  return "unknown";
}

std::optional<AssignmentMode> parse_mode(std::string_view name) {
  for (auto m : {AssignmentMode::BothGains, AssignmentMode::DelayOnly, AssignmentMode::CurrentOnly,
                 AssignmentMode::InputDelay, AssignmentMode::RealTargetBothGains}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string Certificate::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "condition: " << condition << "; residual: " << residual;
  if (marginal) os << "; marginal";
  if (rightmost_error != 0.0) os << "; rightmost error: " << rightmost_error;
  if (!note.empty()) os << "; " << note;
  return os.str();
}

ClosedLoopParams unchecked_both_design(const SystemParams& sys, std::complex<double> target) {
  sys.validate();
  const cplx s = normalize_target(target);
  const double u = s.real();
  const double v = s.imag();
  const double vh = v * sys.h;
  return {u + v / std::tan(vh), -v * std::exp(u * sys.h) / std::sin(vh), sys.h};
}

AssignmentResult assign_both(const SystemParams& sys, std::complex<double> target,
                             const AssignOptions& opts) {
  require_form(sys, false, AssignmentMode::BothGains);
  const cplx s = normalize_target(target);
  if (s.imag() == 0.0) {
    throw Error(ErrorCode::DomainError, "real target: use the real-target design");
  }
  check_window(s, sys.h);

  const ClosedLoopParams cl = unchecked_both_design(sys, s);
  Certificate cert;
  cert.condition = "(S - alpha) h on W_0(BC), 0 < v h < pi";
  const cplx w = (s - cl.alpha) * sys.h;
  cert.residual = std::abs(w.real() + w.imag() / std::tan(w.imag()));
  const Gains g{(cl.alpha - sys.a) / sys.b, (cl.beta - sys.a1d) / sys.b};
  return finish(AssignmentMode::BothGains, g, cl, s, std::move(cert), opts);
}

AssignmentResult assign_delay_only(const SystemParams& sys, std::complex<double> target,
                                   const AssignOptions& opts) {
  require_form(sys, false, AssignmentMode::DelayOnly);
  const cplx s = normalize_target(target);
  Certificate cert;
  if (s.imag() != 0.0) {
    check_window(s, sys.h);
    cert = boundary_condition(sys.a, s, sys.h, opts, "a");
  } else {
    const double margin = s.real() - sys.a + 1.0 / sys.h;
    cert = real_margin(margin, "S >= a - 1/h",
                       std::max({1.0, std::abs(s.real()), std::abs(sys.a) + 1.0 / sys.h}), opts);
  }
  const double beta = ((s - sys.a) * std::exp(s * sys.h)).real();
  const Gains g{0.0, (beta - sys.a1d) / sys.b};
  return finish(AssignmentMode::DelayOnly, g, {sys.a, beta, sys.h}, s, std::move(cert), opts);
}

AssignmentResult assign_current_only(const SystemParams& sys, std::complex<double> target,
                                     const AssignOptions& opts) {
  require_form(sys, false, AssignmentMode::CurrentOnly);
  const cplx s = normalize_target(target);
  const double h = sys.h;

  if (s.imag() != 0.0) {
    check_window(s, h);
    const double u = s.real();
    const double v = s.imag();
    const double required = -v * std::exp(u * h) / std::sin(v * h);
    Certificate cert;
    cert.condition = "a1d + v e^{u h} csc(v h) = 0";
    cert.residual = std::abs(sys.a1d - required);
    const double scale = std::max({1.0, std::abs(sys.a1d), std::abs(required)});
    if (cert.residual > opts.condition_tol * scale) {
      fail(ErrorCode::ConditionViolated, "target is not reachable with current-state feedback", cert);
    }
    const double alpha = (s - sys.a1d * std::exp(-s * h)).real();
    const Gains g{(alpha - sys.a) / sys.b, 0.0};
    return finish(AssignmentMode::CurrentOnly, g, {alpha, sys.a1d, h}, s, std::move(cert), opts);
  }

  // Real target: always a root. It is the rightmost one iff (S - alpha) h >= -1,
  // with S - alpha = a1d e^{-S h}.
  const double sr = s.real();
  const double alpha = sr - sys.a1d * std::exp(-sr * h);
  const Gains g{(alpha - sys.a) / sys.b, 0.0};
  Certificate cert;
  cert.condition = "1 + a1d h e^{-S h} >= 0";
  cert.residual = 1.0 + sys.a1d * h * std::exp(-sr * h);
  const double scale = std::max(1.0, std::abs(sys.a1d * h * std::exp(-sr * h)));
  cert.marginal = std::abs(cert.residual) <= opts.branch_point_tol * scale;
  if (cert.marginal) cert.note = "marginal: double rightmost root";

  AssignmentResult r =
      finish(AssignmentMode::CurrentOnly, g, {alpha, sys.a1d, h}, s, std::move(cert), opts);
  const bool analytic = r.certificate.residual >= -opts.condition_tol * scale;
  const bool numeric = r.certificate.rightmost_error <= 1e-8 * std::max(1.0, std::abs(sr));
  r.feasible = analytic && numeric;
  if (!r.feasible) {
    r.predicted_rightmost = rightmost_root(r.closed_loop, opts.spectrum);
    r.certificate.note = "target is a characteristic root but not the rightmost one";
  }
  return r;
}

AssignmentResult assign_real_both(const SystemParams& sys, double target,
                                  std::optional<double> alpha, const AssignOptions& opts) {
  require_form(sys, false, AssignmentMode::RealTargetBothGains);
  if (!std::isfinite(target)) throw Error(ErrorCode::NonFinite, "target must be finite");
  const double h = sys.h;
  const double a = alpha.value_or(target);
  if (!std::isfinite(a)) throw Error(ErrorCode::NonFinite, "alpha must be finite");

  Certificate cert;
  cert.condition = "alpha <= S + 1/h";
  cert.residual = target + 1.0 / h - a;
  const double scale = std::max({1.0, std::abs(target) + 1.0 / h, std::abs(a)});
  if (cert.residual < -opts.condition_tol * scale) {
    fail(ErrorCode::AlphaOutOfRange, "alpha puts the target on a non-principal branch", cert);
  }
  cert.marginal = std::abs(cert.residual) <= opts.branch_point_tol * scale;
  if (cert.marginal) cert.note = "marginal: double rightmost root";

  const double beta = (target - a) * std::exp(target * h);
  const Gains g{(a - sys.a) / sys.b, (beta - sys.a1d) / sys.b};
  return finish(AssignmentMode::RealTargetBothGains, g, {a, beta, h}, target, std::move(cert),
                opts);
}

AssignmentResult assign_input_delay(const SystemParams& sys, std::complex<double> target,
                                    const AssignOptions& opts) {
  require_form(sys, true, AssignmentMode::InputDelay);
  const cplx s = normalize_target(target);
  Certificate cert;
  if (s.imag() != 0.0) {
    check_window(s, sys.h);
    cert = boundary_condition(sys.a, s, sys.h, opts, "a");
  } else {
    const double margin = s.real() - sys.a + 1.0 / sys.h;
    cert = real_margin(margin, "S >= a - 1/h",
                       std::max({1.0, std::abs(s.real()), std::abs(sys.a) + 1.0 / sys.h}), opts);
  }
  const double beta = ((s - sys.a) * std::exp(s * sys.h)).real();
  const Gains g{beta / sys.b, 0.0};
  return finish(AssignmentMode::InputDelay, g, {sys.a, beta, sys.h}, s, std::move(cert), opts);
}

AssignmentResult assign(const SystemParams& sys, std::complex<double> target, AssignmentMode mode,
                        std::optional<double> alpha, const AssignOptions& opts) {
  switch (mode) {
    case AssignmentMode::BothGains: return assign_both(sys, target, opts);
    case AssignmentMode::DelayOnly: return assign_delay_only(sys, target, opts);
    case AssignmentMode::CurrentOnly: return assign_current_only(sys, target, opts);
    case AssignmentMode::InputDelay: return assign_input_delay(sys, target, opts);
    case AssignmentMode::RealTargetBothGains:
      if (target.imag() != 0.0) {
        throw Error(ErrorCode::DomainError, "real-both design needs a real target");
      }
      return assign_real_both(sys, target.real(), alpha, opts);
  }
  throw Error(ErrorCode::InvalidParams, "unknown assignment mode");
}

std::vector<ModeFeasibility> feasibility_report(const SystemParams& sys,
                                                std::complex<double> target,
                                                const AssignOptions& opts) {
  sys.validate();
  const bool real_target = target.imag() == 0.0;
  std::vector<ModeFeasibility> out;
  for (auto mode : {AssignmentMode::BothGains, AssignmentMode::DelayOnly,
                    AssignmentMode::CurrentOnly, AssignmentMode::InputDelay,
                    AssignmentMode::RealTargetBothGains}) {
    ModeFeasibility f;
    f.mode = mode;
    f.applicable = (mode == AssignmentMode::InputDelay) == sys.input_delay;
    if (mode == AssignmentMode::BothGains && real_target) f.applicable = false;
    if (mode == AssignmentMode::RealTargetBothGains && !real_target) f.applicable = false;
    if (!f.applicable) {
      f.certificate.note = "not applicable to this plant form or target";
      out.push_back(std::move(f));
      continue;
    }
    try {
      const AssignmentResult r = assign(sys, target, mode, std::nullopt, opts);
      f.feasible = r.feasible;
      f.certificate = r.certificate;
    } catch (const AssignmentError& e) {
      f.error = e.code();
      f.certificate = e.certificate();
    }
    if (mode == AssignmentMode::RealTargetBothGains) {
      f.alpha_max = target.real() + 1.0 / sys.h;
      f.k_bound = (*f.alpha_max - sys.a) / sys.b;
      f.k_bound_is_upper = sys.b > 0.0;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace tdeig
