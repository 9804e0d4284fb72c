#pragma once

#include <complex>
#include <vector>

#include "tdeig/lambertw.hpp"

namespace tdeig {

/// Scalar plant x' = a x(t) + a1d x(t-h) + b u(t), or the input-delay form
/// x' = a x(t) + b u(t-h) when input_delay is set (a1d is then ignored).
struct SystemParams {
  double a = 0.0;
  double a1d = 0.0;
  double b = 1.0;
  double h = 1.0;
  bool input_delay = false;

  /// Throws InvalidParams unless h > 0, b != 0 and every field is finite.
  void validate() const;
};

/// Feedback law u = k x(t) + k1d x(t-h).
struct Gains {
  double k = 0.0;
  double k1d = 0.0;
};

/// Closed loop x' = alpha x(t) + beta x(t-h).
struct ClosedLoopParams {
  double alpha = 0.0;
  double beta = 0.0;
  double h = 1.0;

  void validate() const;
  /// Argument of the Lambert W function: beta h e^{-alpha h}.
  [[nodiscard]] double lambert_argument() const;
};

struct Root {
  int branch = 0;
  std::complex<double> s;
  int multiplicity = 1;
  double residual = 0.0;  // |s - alpha - beta e^{-s h}|
};

struct Spectrum {
  /// Sorted by descending real part, ties by ascending imaginary part.
  std::vector<Root> roots;
  /// Principal-branch root; the one with maximal real part.
  std::complex<double> rightmost;
  /// True when beta h e^{-alpha h} hit -1/e and branches 0, -1 coalesced.
  bool double_rightmost = false;
};

struct SpectrumOptions {
  lambertw::Options w;
  /// |z + 1/e| below this counts as the branch point (double root).
  double branch_point_tol = 1e-12;
  /// Maximum accepted |char_residual| / max(1, |s|).
  double residual_tol = 1e-10;
};

struct Stability {
  bool stable = false;
  double margin = 0.0;  // Re of the rightmost root
};

[[nodiscard]] ClosedLoopParams close_loop(const SystemParams& sys, const Gains& g);

/// s - alpha - beta e^{-s h}; zero exactly at characteristic roots.
[[nodiscard]] std::complex<double> char_residual(const ClosedLoopParams& cl, std::complex<double> s);

/**
 * Characteristic roots s_k = alpha + W_k(beta h e^{-alpha h}) / h for
 * k = -n..n. When the Lambert W argument is negative the branch -(n+1) is
 * added as well so that every root is listed together with its conjugate
 * (on the negative real axis the conjugate of W_k is W_{-1-k}).
 *
 * beta == 0 yields the single delay-free root alpha.
 */
[[nodiscard]] Spectrum spectrum(const ClosedLoopParams& cl, int n_branches,
                                const SpectrumOptions& opts = {});

/// Rightmost root only.
[[nodiscard]] std::complex<double> rightmost_root(const ClosedLoopParams& cl,
                                                  const SpectrumOptions& opts = {});

[[nodiscard]] Stability is_stable(const ClosedLoopParams& cl, const SpectrumOptions& opts = {});

}  // namespace tdeig
