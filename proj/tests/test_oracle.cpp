#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "support.hpp"
#include "tdeig/oracle.hpp"

using namespace tdeig;
using namespace tdeig::oracle;
using tdeig::test::code_of;
using cplx = std::complex<double>;

TEST_CASE("count_roots") {
  CHECK(count_roots({1.0, -1.0, 1.0}, {-3.5, 0.5, -21.0, 21.0}).count == 8);
  CHECK(count_roots({-1.0, 0.0, 1.0}, {-2.0, 0.0, -1.0, 1.0}).count == 1);
  CHECK(count_roots({0.0, 0.0, 1.0}, {1.0, 2.0, -1.0, 1.0}).count == 0);
  // Only the three upper pairs of the assigned loop reach Re > -2.
  CHECK(count_roots({-1.0, -2.0, 1.0}, {-2.0, 1.0, -16.0, 16.0}).count == 6);

  CHECK(code_of([] { (void)count_roots({0.0, 1.0, 1.0}, {1.0, 1.0, 0.0, 1.0}); }) ==
        ErrorCode::InvalidParams);
  CHECK(code_of([] { (void)count_roots({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0, 1.0}); }) ==
        ErrorCode::InvalidParams);
  CHECK(code_of([] { (void)count_roots({0.0, 1.0, 1.0}, {0.0, INFINITY, 0.0, 1.0}); }) ==
        ErrorCode::NonFinite);
}

TEST_CASE("count_roots nudges a boundary through a root") {
  // The root -1 sits on the right edge.
  const SearchRect r{-2.0, -1.0, -1.0, 1.0};
  const CountResult c = count_roots({-1.0, 0.0, 1.0}, r);
  CHECK(c.count == 1);
  CHECK(c.rect.re_max > r.re_max);
  CHECK(c.rect.re_max - r.re_max == doctest::Approx(1e-3 * r.diameter()));

  OracleOptions strict;
  strict.nudge_retries = 0;
  CHECK(code_of([&] { (void)count_roots({-1.0, 0.0, 1.0}, r, strict); }) ==
        ErrorCode::BoundaryRootSuspected);

  // The double root 0 on a corner.
  const CountResult d = count_roots({1.0, -1.0, 1.0}, {0.0, 1.0, 0.0, 1.0});
  CHECK(d.count == 2);
}

TEST_CASE("find_roots on the assigned loop") {
  const RootSet rs = find_roots({-1.0, -2.0, 1.0}, {-4.0, 1.0, -22.0, 22.0});
  CHECK(rs.total_count == 8);
  REQUIRE(rs.roots.size() == 8u);
  const std::vector<cplx> upper = {
      {-0.092484322291466409932, 1.9972826910394639949},
      {-1.3630198328819770901, 7.8075189136005864481},
      {-1.9531533908076886957, 14.069524340056119413},
      {-2.3223086234725219282, 20.355482584501743135},
  };
  for (std::size_t i = 0; i < upper.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(rs.roots[2 * i].s - std::conj(upper[i])) < 1e-11);
    CHECK(std::abs(rs.roots[2 * i + 1].s - upper[i]) < 1e-11);
    CHECK(rs.roots[2 * i].multiplicity == 1);
  }
  // Printed values.
  CHECK(std::abs(rs.roots[1].s - cplx(-0.092484, 1.99730)) < 5e-4);
  CHECK(std::abs(rs.roots[7].s - cplx(-2.32231, 20.3555)) < 5e-4);
}

TEST_CASE("find_roots degenerate and double roots") {
  const RootSet one = find_roots({-1.0, 0.0, 1.0}, {-2.0, 0.0, -1.0, 1.0});
  REQUIRE(one.roots.size() == 1u);
  CHECK(one.roots[0].s == cplx(-1.0, 0.0));
  CHECK(one.roots[0].multiplicity == 1);

  for (const SearchRect& r : {SearchRect{-0.2, 0.25, -0.2, 0.3}, SearchRect{-0.5, 0.5, -0.5, 0.5},
                              SearchRect{-1.0, 0.7, -3.0, 3.0}}) {
    const RootSet dbl = find_roots({1.0, -1.0, 1.0}, r);
    CHECK(dbl.total_count == 2);
    REQUIRE(dbl.roots.size() == 1u);
    CHECK(dbl.roots[0].multiplicity == 2);
    CHECK(std::abs(dbl.roots[0].s) < 1e-12);
  }

  const RootSet none = find_roots({0.0, 0.0, 1.0}, {1.0, 2.0, -1.0, 1.0});
  CHECK(none.total_count == 0);
  CHECK(none.roots.empty());
}

TEST_CASE("oracle properties on random systems") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> delay(0.2, 3.0);
  std::uniform_real_distribution<double> frac(0.2, 0.8);
  for (int trial = 0; trial < 40; ++trial) {
    const ClosedLoopParams cl{coef(rng), coef(rng), delay(rng)};
    CAPTURE(cl.alpha);
    CAPTURE(cl.beta);
    CAPTURE(cl.h);
    const SearchRect rect{-6.0, 3.5, -25.0, 25.0};
    const RootSet rs = find_roots(cl, rect);

    int mult = 0;
    for (const auto& r : rs.roots) {
      mult += r.multiplicity;
      CHECK(std::abs(char_residual(cl, r.s)) <= 1e-12 * std::max(1.0, std::abs(r.s)));
      if (std::abs(r.s.imag()) > 1e-9) {
        const bool has_conj = std::any_of(rs.roots.begin(), rs.roots.end(), [&](const auto& t) {
          return std::abs(t.s - std::conj(r.s)) < 1e-10;
        });
        CHECK(has_conj);
      }
    }
    CHECK(mult == rs.total_count);

    // Subdivision invariance on two random cuts.
    const double x = rs.rect.re_min + frac(rng) * rs.rect.width();
    const double y = rs.rect.im_min + frac(rng) * rs.rect.height();
    const SearchRect parts[] = {
        {rs.rect.re_min, x, rs.rect.im_min, y},
        {x, rs.rect.re_max, rs.rect.im_min, y},
        {rs.rect.re_min, x, y, rs.rect.im_max},
        {x, rs.rect.re_max, y, rs.rect.im_max},
    };
    OracleOptions no_nudge;
    no_nudge.nudge_retries = 0;
    int sum = 0;
    for (const auto& p : parts) sum += count_roots(cl, p, no_nudge).count;
    CHECK(sum == rs.total_count);
  }
}

TEST_CASE("cross_validate") {
  auto r = cross_validate({1.0, -1.0, 1.0}, 3);
  CHECK(r.match);
  CHECK(r.max_distance <= 1e-8);
  CHECK(r.oracle.total_count == r.expected_count);
  CHECK(r.expected_count >= 8);
  const auto dbl = std::find_if(r.oracle.roots.begin(), r.oracle.roots.end(),
                                [](const OracleRoot& o) { return o.multiplicity == 2; });
  REQUIRE(dbl != r.oracle.roots.end());
  CHECK(std::abs(dbl->s) < 1e-12);

  r = cross_validate({-1.0, -2.0, 1.0}, 4);
  CHECK(r.match);
  CHECK(r.max_distance <= 1e-8);

  r = cross_validate({-1.0, 0.0, 1.0}, 1);
  CHECK(r.match);
  CHECK(r.oracle.total_count == 1);
  CHECK(r.expected.size() == 1u);

  r = cross_validate({0.3, 0.4, 0.7}, 0);
  CHECK(r.match);

  CrossValidationOptions impossible;
  impossible.match_tol = -1.0;
  CHECK(code_of([&] { (void)cross_validate({-1.0, -2.0, 1.0}, 2, impossible); }) ==
        ErrorCode::MismatchDetected);
  const auto report = compare_with_oracle({-1.0, -2.0, 1.0}, 2, impossible);
  CHECK_FALSE(report.match);
  CHECK_FALSE(report.issues.empty());
}

TEST_CASE("cross_validate on random systems") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> delay(0.2, 3.0);
  std::uniform_int_distribution<int> branches(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const ClosedLoopParams cl{coef(rng), coef(rng), delay(rng)};
    const int n = branches(rng);
    CAPTURE(cl.alpha);
    CAPTURE(cl.beta);
    CAPTURE(cl.h);
    CAPTURE(n);
    const auto r = compare_with_oracle(cl, n);
    for (const auto& issue : r.issues) MESSAGE(issue);
    CHECK(r.match);
    CHECK(r.max_distance <= 1e-8);
  }
}
