#pragma once

#include <complex>
#include <iosfwd>
#include <variant>
#include <vector>

#include "tdeig/spectrum.hpp"

namespace tdeig::sim {

/// Preset history phi on [-h, 0).
class History {
 public:
  struct Constant {
    double c = 0.0;
  };
  struct Linear {
    double c0 = 0.0;
    double c1 = 0.0;  // phi(t) = c0 + c1 t
  };
  struct Samples {
    std::vector<double> times;
    std::vector<double> values;
  };

  static History constant(double c);
  static History linear(double c0, double c1);
  /// Piecewise-linear through the samples; times strictly increasing, the
  /// first at or before -h and the last before 0.
  static History samples(std::vector<double> times, std::vector<double> values);

  /// phi(t); at t = 0 this is the left limit phi(0-).
  [[nodiscard]] double operator()(double t) const;
  /// Throws InvalidParams unless phi is defined on all of [-h, 0).
  void validate(double h) const;

  [[nodiscard]] const std::variant<Constant, Linear, Samples>& form() const { return form_; }

 private:
  explicit History(std::variant<Constant, Linear, Samples> f) : form_(std::move(f)) {}
  std::variant<Constant, Linear, Samples> form_;
};

struct InitialData {
  double x0 = 1.0;
  History phi = History::constant(1.0);
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  double step = 0.0;
  /// |x| exceeded 1e300; the trajectory stops at the last finite sample.
  bool overflow = false;
};

/**
 * Method of steps for x' = alpha x(t) + beta x(t-h): classical RK4 on a grid
 * whose step divides h, with the delayed half-step values taken from the
 * cubic Hermite interpolant of the stored solution. The requested step is
 * reduced when it does not divide h. Global error is O(step^4).
 */
[[nodiscard]] Trajectory simulate(const ClosedLoopParams& cl, const InitialData& init,
                                  double t_final, double step);

struct DominantEstimate {
  std::complex<double> eigenvalue;  // decay rate + i angular frequency
  /// RMS deviation of the log-envelope from its straight-line fit.
  double fit_residual = 0.0;
  int zero_crossings = 0;
  int envelope_points = 0;
};

/// Dominant eigenvalue from the last tail_fraction of the trajectory: decay
/// rate from a least-squares fit to the log of the peak envelope, frequency
/// from the mean zero-crossing spacing. Throws InsufficientData when the
/// tail is too short or, if oscillating, holds fewer than five periods.
[[nodiscard]] DominantEstimate estimate_dominant_eig(const Trajectory& traj,
                                                     double tail_fraction = 0.5);

/// CSV with header "t,x" and 17 significant digits per value.
void write_csv(const Trajectory& traj, std::ostream& os);
[[nodiscard]] Trajectory read_csv(std::istream& is);

}  // namespace tdeig::sim
