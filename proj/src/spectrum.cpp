#include "tdeig/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "tdeig/error.hpp"

namespace tdeig {

namespace {

bool finite(double x) { return std::isfinite(x); }

Root make_root(const ClosedLoopParams& cl, int branch, std::complex<double> s, int multiplicity,
               const SpectrumOptions& opts) {
  Root r{branch, s, multiplicity, std::abs(char_residual(cl, s))};
  if (!(r.residual <= opts.residual_tol * std::max(1.0, std::abs(s)))) {
    throw Error(ErrorCode::NoConvergence, "root of branch " + std::to_string(branch) +
                                              " fails the characteristic equation (residual " +
                                              std::to_string(r.residual) + ")");
  }
  return r;
}

}  // namespace

void SystemParams::validate() const {
  if (!finite(a) || !finite(a1d) || !finite(b) || !finite(h)) {
    throw Error(ErrorCode::NonFinite, "plant parameters must be finite");
  }
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidParams, "delay h must be positive");
  if (b == 0.0) throw Error(ErrorCode::InvalidParams, "input gain b must be nonzero");
}

void ClosedLoopParams::validate() const {
  if (!finite(alpha) || !finite(beta) || !finite(h)) {
    throw Error(ErrorCode::NonFinite, "closed-loop parameters must be finite");
  }
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidParams, "delay h must be positive");
}

double ClosedLoopParams::lambert_argument() const { return beta * h * std::exp(-alpha * h); }

ClosedLoopParams close_loop(const SystemParams& sys, const Gains& g) {
  sys.validate();
  if (!finite(g.k) || !finite(g.k1d)) throw Error(ErrorCode::NonFinite, "gains must be finite");
  if (sys.input_delay) {
    if (g.k1d != 0.0) {
      throw Error(ErrorCode::InvalidGain, "input-delay plants accept only the current-state gain");
    }
    return {sys.a, sys.b * g.k, sys.h};
  }
  return {sys.a + sys.b * g.k, sys.a1d + sys.b * g.k1d, sys.h};
}

std::complex<double> char_residual(const ClosedLoopParams& cl, std::complex<double> s) {
  return s - cl.alpha - cl.beta * std::exp(-s * cl.h);
}

Spectrum spectrum(const ClosedLoopParams& cl, int n_branches, const SpectrumOptions& opts) {
  cl.validate();
  if (n_branches < 0 || n_branches > opts.w.max_branch) {
    throw Error(ErrorCode::BranchOutOfRange, "branch count " + std::to_string(n_branches) +
                                                 " outside [0, " +
                                                 std::to_string(opts.w.max_branch) + "]");
  }

  Spectrum out;
  if (cl.beta == 0.0) {
    out.roots.push_back(make_root(cl, 0, cl.alpha, 1, opts));
    out.rightmost = cl.alpha;
    return out;
  }

  const double z = cl.lambert_argument();
  if (!finite(z)) throw Error(ErrorCode::NonFinite, "beta h exp(-alpha h) overflows");
  const int lowest = z < 0.0 ? -n_branches - 1 : -n_branches;
  const bool coalesced = lambertw::near_branch_point(z, opts.branch_point_tol);

  std::map<int, std::size_t> by_branch;
  for (int k = lowest; k <= n_branches; ++k) {
    if (coalesced && (k == 0 || k == -1)) {
      if (k == -1) continue;
      out.roots.push_back(make_root(cl, 0, cl.alpha - 1.0 / cl.h, 2, opts));
    } else {
      const auto w = lambertw::lambert_w(k, z, opts.w);
      out.roots.push_back(make_root(cl, k, cl.alpha + w.w / cl.h, 1, opts));
    }
    by_branch[k] = out.roots.size() - 1;
  }
  out.rightmost = out.roots[by_branch.at(0)].s;
  out.double_rightmost = coalesced;

  // Conjugate partners share one sort key so pairs stay adjacent, lower half first.
  auto partner = [&](int k) { return z < 0.0 ? -1 - k : -k; };
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const Root& r = out.roots[i];
    double key = r.s.real();
    if (r.s.imag() != 0.0) {
      auto it = by_branch.find(partner(r.branch));
      if (it != by_branch.end()) {
        const Root& p = out.roots[it->second];
        key = (r.s.imag() > 0.0 ? r : p).s.real();
      }
    }
    keyed.emplace_back(key, i);
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return out.roots[x.second].s.imag() < out.roots[y.second].s.imag();
  });
  std::vector<Root> sorted;
  sorted.reserve(keyed.size());
  for (const auto& [key, i] : keyed) sorted.push_back(out.roots[i]);
  out.roots = std::move(sorted);
  return out;
}

std::complex<double> rightmost_root(const ClosedLoopParams& cl, const SpectrumOptions& opts) {
  cl.validate();
  if (cl.beta == 0.0) return cl.alpha;
  const double z = cl.lambert_argument();
  if (!finite(z)) throw Error(ErrorCode::NonFinite, "beta h exp(-alpha h) overflows");
  if (lambertw::near_branch_point(z, opts.branch_point_tol)) return cl.alpha - 1.0 / cl.h;
  return cl.alpha + lambertw::lambert_w(0, z, opts.w).w / cl.h;
}

Stability is_stable(const ClosedLoopParams& cl, const SpectrumOptions& opts) {
  const double margin = rightmost_root(cl, opts).real();
  return {margin < 0.0, margin};
}

}  // namespace tdeig
