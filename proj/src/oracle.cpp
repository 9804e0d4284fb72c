#include "tdeig/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "tdeig/error.hpp"

namespace tdeig::oracle {
namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxRefineDepth = 60;

// Internal signal: the contour passes (numerically) through a root.
struct BoundaryRoot {};

class QuasiPolynomial {
 public:
  explicit QuasiPolynomial(const ClosedLoopParams& cl) : cl_(cl) {}

  [[nodiscard]] cplx value(cplx s) const { return s - cl_.alpha - delayed(s); }
  [[nodiscard]] cplx derivative(cplx s) const { return 1.0 + cl_.h * delayed(s); }
  [[nodiscard]] cplx second_derivative(cplx s) const { return -cl_.h * cl_.h * delayed(s); }
  /// Magnitude of the terms of f, the scale its rounding error lives on.
  [[nodiscard]] double scale(cplx s) const {
    return std::abs(s) + std::abs(cl_.alpha) + std::abs(delayed(s));
  }
  [[nodiscard]] double h() const { return cl_.h; }

 private:
  [[nodiscard]] cplx delayed(cplx s) const { return cl_.beta * std::exp(-s * cl_.h); }
  ClosedLoopParams cl_;
};

class Contour {
 public:
  Contour(const QuasiPolynomial& f, const OracleOptions& opts) : f_(f), opts_(opts) {}

  /// Number of roots inside r; throws BoundaryRoot if the boundary is unsafe.
  [[nodiscard]] int winding(const SearchRect& r) const {
    const cplx bl(r.re_min, r.im_min), br(r.re_max, r.im_min);
    const cplx tr(r.re_max, r.im_max), tl(r.re_min, r.im_max);
    const double total = edge(bl, br) + edge(br, tr) + edge(tr, tl) + edge(tl, bl);
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 1e-6) throw BoundaryRoot{};
    return static_cast<int>(rounded);
  }

 private:
  [[nodiscard]] cplx eval(cplx s) const {
    const cplx v = f_.value(s);
    if (std::abs(v) <= opts_.boundary_tol * f_.scale(s)) throw BoundaryRoot{};
    return v;
  }

  [[nodiscard]] double edge(cplx a, cplx b) const {
    // e^{-s h} turns by h per unit of Im s; start from samples well below that.
    const double max_len = std::numbers::pi / (8.0 * f_.h());
    const int n = std::max(8, static_cast<int>(std::ceil(std::abs(b - a) / max_len)));
    double sum = 0.0;
    cplx prev = a;
    cplx fprev = eval(a);
    for (int i = 1; i <= n; ++i) {
      const cplx next = i == n ? b : a + (b - a) * (static_cast<double>(i) / n);
      const cplx fnext = eval(next);
      sum += increment(prev, next, fprev, fnext, 0);
      prev = next;
      fprev = fnext;
    }
    return sum;
  }

  [[nodiscard]] double increment(cplx a, cplx b, cplx fa, cplx fb, int depth) const {
    const double d = std::arg(fb / fa);
    // Besides a small phase change, the segment must be shorter than the
    // Newton distance |f/f'| at both ends, a proxy for the distance to the
    // nearest root. Otherwise the phase can wrap unnoticed.
    const double len = std::abs(b - a);
    if (std::abs(d) < opts_.phase_step && len <= root_distance(a, fa) &&
        len <= root_distance(b, fb)) {
      return d;
    }
    if (depth >= kMaxRefineDepth) throw BoundaryRoot{};
    const cplx m = 0.5 * (a + b);
    const cplx fm = eval(m);
    return increment(a, m, fa, fm, depth + 1) + increment(m, b, fm, fb, depth + 1);
  }

  [[nodiscard]] double root_distance(cplx s, cplx fs) const {
    return std::abs(fs) / std::abs(f_.derivative(s));
  }

  const QuasiPolynomial& f_;
  const OracleOptions& opts_;
};

class RootFinder {
 public:
  RootFinder(const QuasiPolynomial& f, const OracleOptions& opts, double diameter)
      : f_(f), opts_(opts), contour_(f, opts), diameter_(diameter) {}

  void search(const SearchRect& cell, int count) {
    if (count <= 0) return;
    const double size = cell.diameter();
    if (count == 1) {
      if (auto s = newton(center(cell), 1); s && inside(cell, *s)) {
        add(*s, 1);
        return;
      }
      if (size <= opts_.min_cell_fraction * diameter_) {
        throw Error(ErrorCode::NoConvergence, "Newton polish failed in a minimal cell");
      }
    } else if (size <= std::max(opts_.cluster_fraction, opts_.min_cell_fraction) * diameter_) {
      polish_cluster(cell, count);
      return;
    }
    split(cell, count);
  }

  std::vector<OracleRoot> take() { return std::move(roots_); }

 private:
  static cplx center(const SearchRect& r) {
    return {0.5 * (r.re_min + r.re_max), 0.5 * (r.im_min + r.im_max)};
  }

  bool inside(const SearchRect& cell, cplx s) const {
    return cell.expanded(1e-9 * diameter_).contains(s);
  }

  void add(cplx s, int multiplicity) {
    roots_.push_back({s, multiplicity, std::abs(f_.value(s))});
  }

  void split(const SearchRect& cell, int count) {
    // Off-centre fractions keep split lines away from symmetric root positions
    // such as the real axis.
    static constexpr std::array<double, 8> kFractions{0.5123456789, 0.4728171828, 0.45, 0.55,
                                                      0.4,          0.6,          0.35, 0.65};
    const bool vertical = cell.width() >= cell.height();
    int boundary_hits = 0;
    for (double frac : kFractions) {
      SearchRect lo = cell;
      SearchRect hi = cell;
      if (vertical) {
        const double x = cell.re_min + frac * cell.width();
        lo.re_max = x;
        hi.re_min = x;
      } else {
        const double y = cell.im_min + frac * cell.height();
        lo.im_max = y;
        hi.im_min = y;
      }
      int c_lo = 0;
      int c_hi = 0;
      try {
        c_lo = contour_.winding(lo);
        c_hi = contour_.winding(hi);
      } catch (const BoundaryRoot&) {
        ++boundary_hits;
        continue;
      }
      if (c_lo + c_hi != count || c_lo < 0 || c_hi < 0) continue;
      search(lo, c_lo);
      search(hi, c_hi);
      return;
    }
    // Every line runs into the cluster itself: the cell is as small as the
    // roots can be resolved.
    if (count >= 2 && boundary_hits == static_cast<int>(kFractions.size())) {
      polish_cluster(cell, count);
      return;
    }
    throw Error(ErrorCode::BoundaryRootSuspected, "no safe split line for a search cell");
  }

  // Newton's method on f (multiplicity 1) or on f' (a double root of f is a
  // simple root of f'). f^{(m)} never vanishes for m >= 2, so no higher order
  // is needed; larger clusters fall back to modified Newton on f.
  std::optional<cplx> newton(cplx s, int multiplicity) const {
    const double tol = opts_.polish_tol;
    for (int it = 0; it < opts_.max_newton; ++it) {
      cplx step;
      if (multiplicity == 2) {
        step = f_.derivative(s) / f_.second_derivative(s);
      } else {
        const cplx v = f_.value(s);
        if (multiplicity == 1 && std::abs(v) <= 0.25 * tol * std::max(1.0, std::abs(s))) {
          return s;
        }
        step = static_cast<double>(multiplicity) * v / f_.derivative(s);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
      s -= step;
      if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(s))) break;
    }
    if (std::abs(f_.value(s)) <= tol * std::max(1.0, std::abs(s))) return s;
    return std::nullopt;
  }

  void polish_cluster(const SearchRect& cell, int count) {
    const int order = count == 2 ? 2 : count;
    auto s = newton(center(cell), order);
    if (!s || !inside(cell, *s)) {
      throw Error(ErrorCode::NoConvergence, "could not polish a multiple root");
    }
    add(*s, count);
  }

  const QuasiPolynomial& f_;
  const OracleOptions& opts_;
  Contour contour_;
  double diameter_;
  std::vector<OracleRoot> roots_;
};

void sort_roots(std::vector<OracleRoot>& roots, double diameter) {
  // Quantized real parts make conjugate pairs compare equal.
  const double q = 1e-10 * std::max(1.0, diameter);
  std::sort(roots.begin(), roots.end(), [q](const OracleRoot& x, const OracleRoot& y) {
    const double kx = std::round(x.s.real() / q);
    const double ky = std::round(y.s.real() / q);
    if (kx != ky) return kx > ky;
    return x.s.imag() < y.s.imag();
  });
}

}  // namespace

void SearchRect::validate() const {
  if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) ||
      !std::isfinite(im_max)) {
    throw Error(ErrorCode::NonFinite, "search rectangle must be finite");
  }
  if (!(re_min < re_max) || !(im_min < im_max)) {
    throw Error(ErrorCode::InvalidParams, "search rectangle must have positive width and height");
  }
}

double SearchRect::diameter() const { return std::hypot(width(), height()); }

bool SearchRect::contains(std::complex<double> s) const {
  return s.real() >= re_min && s.real() <= re_max && s.imag() >= im_min && s.imag() <= im_max;
}

SearchRect SearchRect::expanded(double d) const {
  return {re_min - d, re_max + d, im_min - d, im_max + d};
}

CountResult count_roots(const ClosedLoopParams& cl, const SearchRect& rect,
                        const OracleOptions& opts) {
  cl.validate();
  rect.validate();
  const QuasiPolynomial f(cl);
  const Contour contour(f, opts);
  SearchRect r = rect;
  for (int attempt = 0; attempt <= opts.nudge_retries; ++attempt) {
    try {
      return {contour.winding(r), r};
    } catch (const BoundaryRoot&) {
      r = r.expanded(opts.nudge_fraction * rect.diameter());
    }
  }
  throw Error(ErrorCode::BoundaryRootSuspected,
              "a root stays on the rectangle boundary after nudging");
}

RootSet find_roots(const ClosedLoopParams& cl, const SearchRect& rect, const OracleOptions& opts) {
  const CountResult counted = count_roots(cl, rect, opts);
  const QuasiPolynomial f(cl);
  RootFinder finder(f, opts, counted.rect.diameter());
  finder.search(counted.rect, counted.count);

  RootSet out;
  out.roots = finder.take();
  out.total_count = counted.count;
  out.rect = counted.rect;
  sort_roots(out.roots, out.rect.diameter());
  return out;
}

CrossValidation compare_with_oracle(const ClosedLoopParams& cl, int n_branches,
                                    const CrossValidationOptions& opts) {
  CrossValidation out;
  out.spectrum = spectrum(cl, n_branches, opts.spectrum);

  double re_lo = std::numeric_limits<double>::infinity();
  double re_hi = -re_lo;
  double im_lo = re_lo;
  double im_hi = -re_lo;
  for (const Root& r : out.spectrum.roots) {
    re_lo = std::min(re_lo, r.s.real());
    re_hi = std::max(re_hi, r.s.real());
    im_lo = std::min(im_lo, r.s.imag());
    im_hi = std::max(im_hi, r.s.imag());
  }
  const double mx = opts.margin_fraction * std::max(re_hi - re_lo, 1.0);
  const double my = opts.margin_fraction * std::max(im_hi - im_lo, 1.0);
  const SearchRect rect{re_lo - mx, re_hi + mx, im_lo - my, im_hi + my};

  out.oracle = find_roots(cl, rect, opts.oracle);

  // Neighbouring branches may fall inside the margin; list them as expected too.
  const int extra = 3 + (3 * n_branches + 9) / 10;
  const int wide = std::min(n_branches + extra, opts.spectrum.w.max_branch);
  const Spectrum extended = spectrum(cl, wide, opts.spectrum);
  for (const Root& r : extended.roots) {
    if (out.oracle.rect.contains(r.s)) {
      out.expected.push_back(r);
      out.expected_count += r.multiplicity;
    }
  }

  std::ostringstream msg;
  msg.precision(17);
  for (const Root& r : out.spectrum.roots) {
    if (!out.oracle.rect.contains(r.s)) {
      msg.str("");
      msg << "spectrum root " << r.s << " (branch " << r.branch << ") outside search rectangle";
      out.issues.push_back(msg.str());
    }
  }
  if (out.expected_count != out.oracle.total_count) {
    msg.str("");
    msg << "count mismatch: Lambert W gives " << out.expected_count << ", argument principle gives "
        << out.oracle.total_count;
    out.issues.push_back(msg.str());
  }

  std::vector<int> used(out.oracle.roots.size(), 0);
  for (const Root& r : out.expected) {
    std::size_t best = out.oracle.roots.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.oracle.roots.size(); ++i) {
      const double d = std::abs(out.oracle.roots[i].s - r.s);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == out.oracle.roots.size()) {
      msg.str("");
      msg << "no oracle root for " << r.s;
      out.issues.push_back(msg.str());
      continue;
    }
    out.max_distance = std::max(out.max_distance, best_d);
    used[best] += r.multiplicity;
    if (best_d > opts.match_tol) {
      msg.str("");
      msg << "root " << r.s << " (branch " << r.branch << ") is " << best_d
          << " from the nearest oracle root";
      out.issues.push_back(msg.str());
    }
  }
  for (std::size_t i = 0; i < out.oracle.roots.size(); ++i) {
    if (used[i] != out.oracle.roots[i].multiplicity) {
      msg.str("");
      msg << "oracle root " << out.oracle.roots[i].s << " of multiplicity "
          << out.oracle.roots[i].multiplicity << " matched " << used[i] << " time(s)";
      out.issues.push_back(msg.str());
    }
  }
  out.match = out.issues.empty();
  return out;
}

CrossValidation cross_validate(const ClosedLoopParams& cl, int n_branches,
                               const CrossValidationOptions& opts) {
  CrossValidation report = compare_with_oracle(cl, n_branches, opts);
  if (!report.match) {
    std::string msg = "Lambert W spectrum and argument-principle roots disagree";
    for (const auto& issue : report.issues) msg += "; " + issue;
    throw Error(ErrorCode::MismatchDetected, msg);
  }
  return report;
}

}  // namespace tdeig::oracle
