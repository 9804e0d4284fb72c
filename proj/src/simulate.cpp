#include "tdeig/simulate.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "tdeig/error.hpp"

namespace tdeig::sim {
namespace {

constexpr double kOverflow = 1e300;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct LineFit {
  double slope = 0.0;
  double rms = 0.0;
};

LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
  const auto n = static_cast<double>(t.size());
  double mt = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    mt += t[i];
    my += y[i];
  }
  mt /= n;
  my /= n;
  double stt = 0.0;
  double sty = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    stt += (t[i] - mt) * (t[i] - mt);
    sty += (t[i] - mt) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = stt > 0.0 ? sty / stt : 0.0;
  double ss = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = y[i] - (my + fit.slope * (t[i] - mt));
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

}  // namespace

History History::constant(double c) { return History(Constant{c}); }

History History::linear(double c0, double c1) { return History(Linear{c0, c1}); }

History History::samples(std::vector<double> times, std::vector<double> values) {
  if (times.size() != values.size() || times.size() < 2) {
    throw Error(ErrorCode::InvalidParams, "sample history needs matching times/values, >= 2 points");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw Error(ErrorCode::InvalidParams, "sample history times must be strictly increasing");
    }
  }
  return History(Samples{std::move(times), std::move(values)});
}

double History::operator()(double t) const {
  return std::visit(Overloaded{
                        [](const Constant& c) { return c.c; },
                        [t](const Linear& l) { return l.c0 + l.c1 * t; },
                        [t](const Samples& s) {
                          // Clamp to the outermost segments (extrapolates up to 0-).
                          auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
                          std::size_t i = static_cast<std::size_t>(it - s.times.begin());
                          i = std::clamp<std::size_t>(i, 1, s.times.size() - 1);
                          const double t0 = s.times[i - 1];
                          const double t1 = s.times[i];
                          const double w = (t - t0) / (t1 - t0);
                          return s.values[i - 1] + w * (s.values[i] - s.values[i - 1]);
                        },
                    },
                    form_);
}

void History::validate(double h) const {
  if (const auto* s = std::get_if<Samples>(&form_)) {
    if (s->times.front() > -h || s->times.back() >= 0.0) {
      throw Error(ErrorCode::InvalidParams, "sample history must span [-h, 0)");
    }
    for (double v : s->values) {
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "history values must be finite");
    }
  } else if (!std::isfinite((*this)(-h)) || !std::isfinite((*this)(0.0))) {
    throw Error(ErrorCode::NonFinite, "history must be finite");
  }
}

Trajectory simulate(const ClosedLoopParams& cl, const InitialData& init, double t_final,
                    double step) {
  cl.validate();
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::InvalidStep, "step must be positive");
  if (!(t_final >= cl.h) || !std::isfinite(t_final)) {
    throw Error(ErrorCode::InvalidStep, "t_final must be finite and at least h");
  }
  if (!std::isfinite(init.x0)) throw Error(ErrorCode::NonFinite, "x0 must be finite");
  init.phi.validate(cl.h);

  const double ratio = cl.h / step;
  auto per_delay = static_cast<long>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(per_delay)) > 1e-12 * ratio || per_delay < 1) {
    per_delay = static_cast<long>(std::ceil(ratio));
  }
  const double dt = cl.h / static_cast<double>(per_delay);
  const auto n_steps = static_cast<long>(std::floor(t_final / dt + 1e-9));

  const double alpha = cl.alpha;
  const double beta = cl.beta;
  const auto& phi = init.phi;
  const long N = per_delay;

  Trajectory out;
  out.step = dt;
  out.times.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.values.reserve(static_cast<std::size_t>(n_steps) + 1);
  // Right-hand derivative at each grid point. The only jump in x(t-h) is at
  // t = h (phi(0-) vs x0), handled by left_deriv_at_h.
  std::vector<double> deriv;
  deriv.reserve(static_cast<std::size_t>(n_steps) + 1);

  auto& x = out.values;
  auto grid_time = [dt](long j) { return static_cast<double>(j) * dt; };
  x.push_back(init.x0);
  out.times.push_back(0.0);
  deriv.push_back(alpha * init.x0 + beta * phi(-cl.h));
  double left_deriv_at_h = 0.0;

  // Delayed value at grid index j (time j dt), approached from the right.
  auto delayed_right = [&](long j) { return j < 0 ? phi(grid_time(j)) : x[static_cast<std::size_t>(j)]; };
  // Approached from the left: differs only at j = 0.
  auto delayed_left = [&](long j) { return j <= 0 ? phi(grid_time(j)) : x[static_cast<std::size_t>(j)]; };
  auto delayed_mid = [&](long j) {
    if (j < 0) return phi(grid_time(j) + 0.5 * dt);
    const auto i = static_cast<std::size_t>(j);
    const double d_right = deriv[i];
    const double d_left = (j + 1 == N) ? left_deriv_at_h : deriv[i + 1];
    return 0.5 * (x[i] + x[i + 1]) + dt / 8.0 * (d_right - d_left);
  };

  for (long n = 0; n < n_steps; ++n) {
    const double xn = x.back();
    const long j = n - N;
    const double d0 = delayed_right(j);
    const double dm = delayed_mid(j);
    const double d1 = delayed_left(j + 1);

    const double k1 = alpha * xn + beta * d0;
    const double k2 = alpha * (xn + 0.5 * dt * k1) + beta * dm;
    const double k3 = alpha * (xn + 0.5 * dt * k2) + beta * dm;
    const double k4 = alpha * (xn + dt * k3) + beta * d1;
    const double next = xn + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (!std::isfinite(next) || std::abs(next) > kOverflow) {
      out.overflow = true;
      break;
    }
    x.push_back(next);
    out.times.push_back(grid_time(n + 1));
    deriv.push_back(alpha * next + beta * delayed_right(j + 1));
    if (n + 1 == N) left_deriv_at_h = alpha * next + beta * phi(0.0);
  }
  return out;
}

DominantEstimate estimate_dominant_eig(const Trajectory& traj, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "tail_fraction must lie in (0, 1]");
  }
  const std::size_t len = traj.values.size();
  if (len < 2 || traj.times.size() != len) {
    throw Error(ErrorCode::InsufficientData, "trajectory too short");
  }
  const auto start = static_cast<std::size_t>(
      std::floor((1.0 - tail_fraction) * static_cast<double>(len - 1)));
  if (len - start < 10) throw Error(ErrorCode::InsufficientData, "tail holds fewer than 10 samples");

  const auto& t = traj.times;
  const auto& x = traj.values;
  bool all_zero = true;
  for (std::size_t i = start; i < len; ++i) {
    if (!std::isfinite(x[i])) throw Error(ErrorCode::InsufficientData, "non-finite samples in tail");
    if (x[i] != 0.0) all_zero = false;
  }
  if (all_zero) throw Error(ErrorCode::InsufficientData, "trajectory tail is identically zero");

  std::vector<double> crossings;
  std::vector<std::size_t> crossing_index;
  for (std::size_t i = start; i + 1 < len; ++i) {
    if ((x[i] < 0.0 && x[i + 1] >= 0.0) || (x[i] > 0.0 && x[i + 1] <= 0.0)) {
      const double w = x[i] / (x[i] - x[i + 1]);
      crossings.push_back(t[i] + w * (t[i + 1] - t[i]));
      crossing_index.push_back(i);
    }
  }

  DominantEstimate est;
  est.zero_crossings = static_cast<int>(crossings.size());
  std::vector<double> pt;
  std::vector<double> py;

  if (crossings.size() < 2) {
    for (std::size_t i = start; i < len; ++i) {
      if (x[i] == 0.0) throw Error(ErrorCode::InsufficientData, "zero sample in monotone tail");
      pt.push_back(t[i]);
      py.push_back(std::log(std::abs(x[i])));
    }
    const LineFit fit = fit_line(pt, py);
    est.eigenvalue = {fit.slope, 0.0};
    est.fit_residual = fit.rms;
    est.envelope_points = static_cast<int>(pt.size());
    return est;
  }

  if (crossings.size() < 10) {
    throw Error(ErrorCode::InsufficientData,
                "oscillating tail holds fewer than five periods (" +
                    std::to_string(crossings.size()) + " zero crossings)");
  }
  const double omega = std::numbers::pi * static_cast<double>(crossings.size() - 1) /
                       (crossings.back() - crossings.front());

  // One envelope point per half-cycle: the |x| maximum between crossings,
  // refined by a parabola through the neighbouring samples.
  for (std::size_t c = 0; c + 1 < crossing_index.size(); ++c) {
    std::size_t best = crossing_index[c] + 1;
    for (std::size_t i = best; i <= crossing_index[c + 1]; ++i) {
      if (std::abs(x[i]) > std::abs(x[best])) best = i;
    }
    double tp = t[best];
    double yp = std::abs(x[best]);
    if (best > 0 && best + 1 < len) {
      const double ym = std::abs(x[best - 1]);
      const double y0 = yp;
      const double y1 = std::abs(x[best + 1]);
      const double denom = ym - 2.0 * y0 + y1;
      if (denom < 0.0) {
        const double off = 0.5 * (ym - y1) / denom;
        if (std::abs(off) <= 1.0) {
          tp += off * traj.step;
          yp = y0 - 0.25 * (ym - y1) * off;
        }
      }
    }
    if (yp <= 0.0) continue;
    pt.push_back(tp);
    py.push_back(std::log(yp));
  }
  if (pt.size() < 2) throw Error(ErrorCode::InsufficientData, "too few envelope peaks");
  const LineFit fit = fit_line(pt, py);
  est.eigenvalue = {fit.slope, omega};
  est.fit_residual = fit.rms;
  est.envelope_points = static_cast<int>(pt.size());
  return est;
}

void write_csv(const Trajectory& traj, std::ostream& os) {
  os << "t,x\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    os << fmt::format("{:.17g},{:.17g}\n", traj.times[i], traj.values[i]);
  }
}

Trajectory read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "t,x") {
    throw Error(ErrorCode::InvalidParams, "CSV header must be \"t,x\"");
  }
  Trajectory out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::InvalidParams, "malformed CSV row: " + line);
    try {
      out.times.push_back(std::stod(line.substr(0, comma)));
      out.values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParams, "malformed CSV row: " + line);
    }
  }
  if (out.times.size() >= 2) out.step = out.times[1] - out.times[0];
  return out;
}

}  // namespace tdeig::sim
