#include <doctest.h>

#include <cmath>

#include "ssvg/quadrature.hpp"

using namespace ssvg;

TEST_CASE("Gauss rule integrates polynomials of degree 2n-1 exactly") {
    const GaussRule& r = GaussRule::of(5);
    // int_{-1}^{1} x^8 dx = 2/9
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i)
        s += r.w[i] * std::pow(r.x[i], 8);
    CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
    double wsum = 0.0;
    for (double w : r.w) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("graded quadrature resolves endpoint singularities") {
    // int_0^1 s^{-1/2} ds = 2
    const double a = graded_integrate([](double s) { return 1.0 / std::sqrt(s); },
                                      0.0, 1.0, true, false);
    CHECK(a == doctest::Approx(2.0).epsilon(1e-7));
    // int_0^1 (1-s)^{-0.3} ds = 1/0.7
    const double b = graded_integrate(
        [](double s) { return std::pow(1.0 - s, -0.3); }, 0.0, 1.0, false, true);
    CHECK(b == doctest::Approx(1.0 / 0.7).epsilon(1e-10));
    // smooth case
    const double c = graded_integrate([](double s) { return std::cos(s); }, 0.0,
                                      1.0, false, false);
    CHECK(c == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
}

TEST_CASE("power moments") {
    CHECK(power_moment(2.0, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(power_moment(-1.0, 0.5, 2.0) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(power_moment(-0.5, 0.0, 4.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_THROWS(power_moment(-1.5, 0.0, 1.0));
}

TEST_CASE("linear weighted cell matches closed forms") {
    // int_1^2 s^{-1} (3 + 2 s) ds = 3 ln 2 + 2
    CHECK(linear_weighted_cell(-1.0, 1.0, 2.0, 3.0, 2.0) ==
          doctest::Approx(3.0 * std::log(2.0) + 2.0).epsilon(1e-14));
    // int_0^1 s^{1/2} (0 + 5 s) ds = 2
    CHECK(linear_weighted_cell(0.5, 0.0, 1.0, 0.0, 5.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
}
