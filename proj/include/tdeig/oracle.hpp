#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tdeig/spectrum.hpp"

namespace tdeig::oracle {

struct SearchRect {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  void validate() const;
  [[nodiscard]] double width() const { return re_max - re_min; }
  [[nodiscard]] double height() const { return im_max - im_min; }
  [[nodiscard]] double diameter() const;
  [[nodiscard]] bool contains(std::complex<double> s) const;
  /// Every edge moved outwards by d.
  [[nodiscard]] SearchRect expanded(double d) const;
};

struct OracleRoot {
  std::complex<double> s;
  int multiplicity = 1;
  double residual = 0.0;  // |f(s)|
};

struct RootSet {
  /// Sorted by descending real part, ties by ascending imaginary part.
  std::vector<OracleRoot> roots;
  int total_count = 0;
  /// Rectangle actually used; differs from the request after a nudge.
  SearchRect rect;
};

struct OracleOptions {
  /// Largest phase change of f accepted between neighbouring boundary samples.
  double phase_step = 1.5707963267948966;
  /// |f| below boundary_tol times the size of its terms flags a boundary root.
  double boundary_tol = 1e-11;
  int nudge_retries = 5;
  double nudge_fraction = 1e-3;
  /// Cells holding several roots stop splitting below this fraction of the diameter.
  double cluster_fraction = 1e-6;
  double min_cell_fraction = 1e-9;
  double polish_tol = 1e-12;
  int max_newton = 80;
};

struct CountResult {
  int count = 0;
  SearchRect rect;
};

/// Winding number of f(s) = s - alpha - beta e^{-s h} around the rectangle,
/// nudging the edges outwards when a root sits on the boundary.
[[nodiscard]] CountResult count_roots(const ClosedLoopParams& cl, const SearchRect& rect,
                                      const OracleOptions& opts = {});

/// All roots inside the rectangle, polished with Newton's method.
[[nodiscard]] RootSet find_roots(const ClosedLoopParams& cl, const SearchRect& rect,
                                 const OracleOptions& opts = {});

struct CrossValidation {
  Spectrum spectrum;
  RootSet oracle;
  /// Lambert W roots (over extra branches) that fall inside the search rectangle.
  std::vector<Root> expected;
  int expected_count = 0;
  double max_distance = 0.0;
  bool match = false;
  std::vector<std::string> issues;
};

struct CrossValidationOptions {
  OracleOptions oracle;
  SpectrumOptions spectrum;
  double match_tol = 1e-8;
  double margin_fraction = 0.1;
};

/// Compares spectrum(cl, n_branches) with the argument-principle roots in a
/// rectangle enclosing it. Never throws on mismatch; see cross_validate.
[[nodiscard]] CrossValidation compare_with_oracle(const ClosedLoopParams& cl, int n_branches,
                                                  const CrossValidationOptions& opts = {});

/// As compare_with_oracle, but throws MismatchDetected when the paths disagree.
CrossValidation cross_validate(const ClosedLoopParams& cl, int n_branches,
                               const CrossValidationOptions& opts = {});

}  // namespace tdeig::oracle
