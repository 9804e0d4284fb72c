#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdeig/error.hpp"
#include "tdeig/spectrum.hpp"

namespace tdeig {

enum class AssignmentMode {
  BothGains,            // complex target, k and k1d free
  DelayOnly,            // k = 0
  CurrentOnly,          // k1d = 0
  InputDelay,           // x' = a x + b u(t-h), u = k x
  RealTargetBothGains,  // real target, k and k1d free (one free parameter)
};

[[nodiscard]] std::string_view to_string(AssignmentMode mode);
[[nodiscard]] std::optional<AssignmentMode> parse_mode(std::string_view name);

/// Which existence condition was checked and by how much it holds or fails.
struct Certificate {
  std::string condition;
  /// Equality conditions: |lhs - rhs|. Inequalities: signed margin (>= 0 holds).
  double residual = 0.0;
  /// Target sits on the branch point, i.e. the rightmost root is double.
  bool marginal = false;
  /// |rightmost root of the designed loop - target|, NaN if not evaluated.
  double rightmost_error = 0.0;
  std::string note;

  [[nodiscard]] std::string to_string() const;
};

struct AssignmentResult {
  AssignmentMode mode = AssignmentMode::BothGains;
  Gains gains;
  /// Designed (alpha, beta). Equals close_loop(sys, gains) up to rounding; the
  /// rebuilt form loses relative accuracy in beta when |beta| << |a1d|.
  ClosedLoopParams closed_loop;
  std::complex<double> target;  // normalized to Im >= 0
  std::complex<double> predicted_rightmost;
  bool feasible = false;
  Certificate certificate;
};

/// Raised for NotAssignableAsRightmost, ConditionViolated and AlphaOutOfRange.
class AssignmentError : public Error {
 public:
  AssignmentError(ErrorCode code, const std::string& message, Certificate cert)
      : Error(code, message), certificate_(std::move(cert)) {}
  [[nodiscard]] const Certificate& certificate() const noexcept { return certificate_; }

 private:
  Certificate certificate_;
};

struct AssignOptions {
  /// Relative tolerance for equality conditions such as a = u + v cot(vh).
  double condition_tol = 1e-9;
  /// Distance from the branch point that counts as a double rightmost root.
  double branch_point_tol = 1e-12;
  SpectrumOptions spectrum;
};

[[nodiscard]] AssignmentResult assign_both(const SystemParams& sys, std::complex<double> target,
                                           const AssignOptions& opts = {});
[[nodiscard]] AssignmentResult assign_delay_only(const SystemParams& sys,
                                                 std::complex<double> target,
                                                 const AssignOptions& opts = {});
/// For a real target the gain always makes it a root; feasible reports
/// whether it is also the rightmost one.
[[nodiscard]] AssignmentResult assign_current_only(const SystemParams& sys,
                                                   std::complex<double> target,
                                                   const AssignOptions& opts = {});
/// alpha defaults to the target itself, which makes the loop delay-free.
[[nodiscard]] AssignmentResult assign_real_both(const SystemParams& sys, double target,
                                                std::optional<double> alpha = std::nullopt,
                                                const AssignOptions& opts = {});
[[nodiscard]] AssignmentResult assign_input_delay(const SystemParams& sys,
                                                  std::complex<double> target,
                                                  const AssignOptions& opts = {});

/// Dispatch on mode; alpha is used by RealTargetBothGains only.
[[nodiscard]] AssignmentResult assign(const SystemParams& sys, std::complex<double> target,
                                      AssignmentMode mode,
                                      std::optional<double> alpha = std::nullopt,
                                      const AssignOptions& opts = {});

/// Both-gain closed loop that has the target as *a* root, without the
/// 0 < vh < pi window check. Outside the window the target belongs to a
/// non-principal branch.
[[nodiscard]] ClosedLoopParams unchecked_both_design(const SystemParams& sys,
                                                     std::complex<double> target);

struct ModeFeasibility {
  AssignmentMode mode = AssignmentMode::BothGains;
  bool applicable = false;
  bool feasible = false;
  std::optional<ErrorCode> error;
  Certificate certificate;
  /// Admissible alpha upper bound (RealTargetBothGains only).
  std::optional<double> alpha_max;
  /// Matching bound on k; the inequality flips when b < 0.
  std::optional<double> k_bound;
  bool k_bound_is_upper = true;
};

[[nodiscard]] std::vector<ModeFeasibility> feasibility_report(const SystemParams& sys,
                                                              std::complex<double> target,
                                                              const AssignOptions& opts = {});

}  // namespace tdeig
