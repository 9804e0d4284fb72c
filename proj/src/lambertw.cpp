#include "tdeig/lambertw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "tdeig/error.hpp"

namespace tdeig::lambertw {
namespace {

using cplx = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Radius around -1/e where the branch-point series is a better seed.
constexpr double kBranchSeriesRadius = 0.3;
// z within this distance of -1/e is the branch point itself (rounding level).
constexpr double kBranchPointSnap = 4.0 * kEps;
constexpr double kResidualFloor = 1e-300;

template <typename T>
T branch_point_series(T p) {
  // W = -1 + p - p^2/3 + 11 p^3 / 72 - ..., p = +-sqrt(2 (e z + 1))
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

cplx seed_branch_point(cplx z, bool negate) {
  cplx p = std::sqrt(2.0 * (kE * z + 1.0));
  return branch_point_series(negate ? -p : p);
}

cplx seed_taylor0(cplx z) {
  // z - z^2 + 3/2 z^3 - 8/3 z^4
  return z * (1.0 + z * (-1.0 + z * (1.5 + z * (-8.0 / 3.0))));
}

cplx seed_pade0(cplx z) {
  return z * (3.0 + z * (6.0 + z)) / (3.0 + z * (9.0 + 5.0 * z));
}

cplx seed_asymptotic(int k, cplx z) {
  cplx l1 = std::log(z) + cplx(0.0, kTwoPi * k);
  cplx l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

struct Iterate {
  cplx w;
  double residual;
  int iterations;
};

// Halley's method on f(w) = w e^w - z.
std::optional<Iterate> halley(cplx z, cplx w, const Options& opts) {
  const double target = std::max(opts.tol * std::abs(z), kResidualFloor);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const cplx ew = std::exp(w);
    const cplx f = w * ew - z;
    const double r = std::abs(f);
    if (!std::isfinite(r)) return std::nullopt;
    if (r <= target) return Iterate{w, r, it};

    const cplx wp1 = w + 1.0;
    const cplx dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (!std::isfinite(dw.real()) || !std::isfinite(dw.imag())) return std::nullopt;
    w -= dw;
    if (std::abs(dw) <= 4.0 * kEps * std::max(1.0, std::abs(w))) {
      // Step at round-off level: further iterations cannot improve w.
      return Iterate{w, std::abs(w * std::exp(w) - z), it + 1};
    }
  }
  return std::nullopt;
}

bool in_branch(int k, cplx w) {
  if (branch_of(w) == k) return true;
  // Values on a boundary curve may round to either side.
  const double d = 1e-10 * (1.0 + std::abs(w));
  for (cplx off : {cplx(d, d), cplx(d, -d), cplx(-d, d), cplx(-d, -d)}) {
    if (branch_of(w + off) == k) return true;
  }
  return false;
}

std::optional<double> halley_real(double x, double w, const Options& opts) {
  const double target = std::max(opts.tol * std::abs(x), kResidualFloor);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (!std::isfinite(f)) return std::nullopt;
    if (std::abs(f) <= target) return w;
    const double wp1 = w + 1.0;
    const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (!std::isfinite(dw)) return std::nullopt;
    w -= dw;
    if (std::abs(dw) <= 4.0 * kEps * std::max(1.0, std::abs(w))) return w;
  }
  return std::nullopt;
}

double real_seed(int branch, double x) {
  if (std::abs(x + kInvE) < kBranchSeriesRadius) {
    const double p = std::sqrt(std::max(0.0, 2.0 * (kE * x + 1.0)));
    return branch_point_series(branch == 0 ? p : -p);
  }
  if (branch == 0) {
    if (x < 3.0) return seed_pade0(cplx(x, 0.0)).real();
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
  }
  const double l1 = std::log(-x);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

bool real_domain(int k, cplx z) {
  if (z.imag() != 0.0) return false;
  const double x = z.real();
  if (k == 0) return x >= -kInvE;
  if (k == -1) return x >= -kInvE && x < 0.0;
  return false;
}

}  // namespace

bool near_branch_point(std::complex<double> z, double tol) {
  return std::abs(z + kInvE) <= tol;
}

int branch_of(std::complex<double> w) {
  const double x = w.real();
  const double y = w.imag();
  if (y == 0.0) return x >= -1.0 ? 0 : -1;

  const double ay = std::abs(y);
  const int m = static_cast<int>(std::floor(ay / kTwoPi));
  const double r = ay - kTwoPi * m;
  if (r == 0.0) return y > 0 ? m : -m;
  if (r >= std::numbers::pi) return y > 0 ? m + 1 : -(m + 1);

  // Boundary curve x = -y cot(y) separates branch m (right) from m+1 (left).
  // Upper curves belong to the right-hand branch, lower curves to the left.
  const double xb = -ay / std::tan(r);
  if (y > 0) return x >= xb ? m : m + 1;
  return x > xb ? -m : -(m + 1);
}

WValue lambert_w(int k, std::complex<double> z, const Options& opts) {
  if (std::abs(k) > opts.max_branch) {
    throw Error(ErrorCode::BranchOutOfRange,
                "branch " + std::to_string(k) + " exceeds limit " + std::to_string(opts.max_branch));
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::NonFinite, "lambert_w argument is not finite");
  }
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);  // -0 -> +0

  if (z == cplx(0.0, 0.0)) {
    if (k != 0) throw Error(ErrorCode::DomainError, "W_k(0) is unbounded for k != 0");
    return {cplx(0.0, 0.0), 0.0, 0};
  }

  if ((k == 0 || k == -1) && z.imag() == 0.0 && near_branch_point(z, kBranchPointSnap)) {
    return {cplx(-1.0, 0.0), std::abs(-kInvE - z), 0};
  }

  if (real_domain(k, z)) {
    const double w = lambert_w_real(k, z.real(), opts);
    return {cplx(w, 0.0), std::abs(w * std::exp(w) - z.real()), 0};
  }

  // Candidate seeds, best first; later ones are fallbacks.
  std::array<cplx, 3> seeds{};
  std::size_t n_seeds = 0;
  const bool near_bp = std::abs(z + kInvE) < kBranchSeriesRadius;
  if (k == 0 && near_bp) {
    seeds[n_seeds++] = seed_branch_point(z, false);
  } else if (k == -1 && near_bp && z.imag() >= 0.0) {
    seeds[n_seeds++] = seed_branch_point(z, true);
  } else if (k == 1 && near_bp && z.imag() < 0.0) {
    seeds[n_seeds++] = seed_branch_point(z, true);
  }
  if (k == 0 && std::abs(z) < 0.25) seeds[n_seeds++] = seed_taylor0(z);
  if (k == 0 && z.real() > -1.0 && z.real() < 1.5 && std::abs(z.imag()) < 1.0 &&
      z.real() > -2.5 * std::abs(z.imag()) - 0.2 && n_seeds < seeds.size()) {
    seeds[n_seeds++] = seed_pade0(z);
  }
  if (n_seeds < seeds.size()) seeds[n_seeds++] = seed_asymptotic(k, z);

  for (std::size_t i = 0; i < n_seeds; ++i) {
    auto result = halley(z, seeds[i], opts);
    if (result && in_branch(k, result->w)) {
      return {result->w, result->residual, result->iterations};
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "Halley iteration failed for branch " + std::to_string(k));
}

double lambert_w_real(int branch, double x, const Options& opts) {
  if (branch != 0 && branch != -1) {
    throw Error(ErrorCode::DomainError, "real Lambert W exists only on branches 0 and -1");
  }
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "lambert_w_real argument is not finite");
  if (std::abs(x + kInvE) <= kBranchPointSnap) return -1.0;
  if (x < -kInvE) throw Error(ErrorCode::DomainError, "argument below -1/e");
  if (branch == -1 && x >= 0.0) throw Error(ErrorCode::DomainError, "W_-1 requires x < 0");
  if (x == 0.0) return 0.0;

  auto w = halley_real(x, real_seed(branch, x), opts);
  if (!w) throw Error(ErrorCode::NoConvergence, "real Halley iteration failed");
  // The branches split at w = -1; clamp rounding across it.
  return branch == 0 ? std::max(*w, -1.0) : std::min(*w, -1.0);
}

std::complex<double> w0_boundary_point(double eta) {
  if (!(eta > 0.0 && eta < std::numbers::pi)) {
    throw Error(ErrorCode::DomainError, "eta must lie in (0, pi)");
  }
  return {-eta / std::tan(eta), eta};
}

bool on_w0_boundary(std::complex<double> w, double tol) {
  const double y = w.imag();
  if (!(y > 0.0 && y < std::numbers::pi)) return false;
  return std::abs(w.real() + y / std::tan(y)) <= tol;
}

}  // namespace tdeig::lambertw
