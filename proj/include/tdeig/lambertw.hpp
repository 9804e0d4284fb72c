#pragma once

#include <complex>

namespace tdeig::lambertw {

inline constexpr double kInvE = 0.36787944117144232159552377016146;  // 1/e
inline constexpr double kE = 2.71828182845904523536028747135266;
inline constexpr int kDefaultMaxBranch = 1024;

struct Options {
  /// Relative residual target |w e^w - z| <= tol |z| (floor 1e-300); iteration
  /// also stops once the Halley step reaches round-off.
  double tol = 1e-14;
  int max_branch = kDefaultMaxBranch;
  int max_iterations = 60;
};

struct WValue {
  std::complex<double> w;
  double residual = 0.0;  // |w e^w - z|
  int iterations = 0;
};

/**
 * Branch k of the Lambert W function, the k-th solution of w e^w = z.
 *
 * Values on a branch cut are the limit from above (counter-clockwise
 * continuity): W_0(x) has Im in (0, pi) for real x < -1/e, and
 * W_{-1}(x) = conj(W_0(x)) there. A signed negative zero imaginary part is
 * treated as +0.
 *
 * Throws Error with BranchOutOfRange, NonFinite, DomainError (k != 0 at
 * z = 0) or NoConvergence.
 */
[[nodiscard]] WValue lambert_w(int k, std::complex<double> z, const Options& opts = {});

/// Real-valued branches 0 (x >= -1/e) and -1 (-1/e <= x < 0).
[[nodiscard]] double lambert_w_real(int branch, double x, const Options& opts = {});

/// Point -eta cot(eta) + i eta on the upper boundary of the W_0 range,
/// i.e. the image W_0(x + i0) of the branch cut. Requires 0 < eta < pi.
[[nodiscard]] std::complex<double> w0_boundary_point(double eta);

/// True iff Im w is in (0, pi) and |Re w + Im w cot(Im w)| <= tol.
[[nodiscard]] bool on_w0_boundary(std::complex<double> w, double tol);

/// Index of the branch whose range contains w. Boundary curves are assigned
/// following the same continuity convention as lambert_w, so
/// branch_of(lambert_w(k, z).w) == k up to rounding on the curves.
[[nodiscard]] int branch_of(std::complex<double> w);

/// True when z lies within snapping distance of the branch point -1/e.
[[nodiscard]] bool near_branch_point(std::complex<double> z, double tol);

}  // namespace tdeig::lambertw
