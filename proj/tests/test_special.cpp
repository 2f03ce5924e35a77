#include <doctest.h>

#include "ssvg/special.hpp"

using namespace ssvg;

TEST_CASE("gauss_2f1 trivial and terminating cases") {
    CHECK(gauss_2f1(0.0, 0.3, 1.1, -5.0) == 1.0);
    CHECK(gauss_2f1(0.4, 0.0, 1.1, -5.0) == 1.0);
    CHECK(gauss_2f1(0.2, 0.7, 1.4, 0.0) == 1.0);
    // 2F1(-1, b; c; x) = 1 - (b/c) x
    CHECK(gauss_2f1(-1.0, 2.0, 3.0, -2.0) == doctest::Approx(1.0 + 4.0 / 3.0).epsilon(1e-14));
    CHECK(gauss_2f1(2.0, -1.0, 4.0, -0.5) == doctest::Approx(1.25).epsilon(1e-14));
}

TEST_CASE("gauss_2f1 against high-precision references") {
    CHECK(gauss_2f1(0.2, -0.2, 0.7, -3.0) ==
          doctest::Approx(1.1065934725904679).epsilon(1e-13));
    CHECK(gauss_2f1(-0.25, 0.25, 0.75, -50.0) ==
          doctest::Approx(1.7807351701612215).epsilon(1e-13));
    CHECK(gauss_2f1(0.45, -0.45, 0.55, -10000.0) ==
          doctest::Approx(55.374337927921445).epsilon(1e-12));
}

TEST_CASE("gauss_2f1 domain restrictions") {
    CHECK_THROWS_AS(gauss_2f1(0.2, 0.3, 0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(0.2, 0.3, -2.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(0.2, 0.3, 1.1, 0.5), std::domain_error);
    // integer a - b is outside the connection formula's domain for x < -1
    CHECK_THROWS_AS(gauss_2f1(0.2, 1.2, 1.7, -5.0), std::domain_error);
}

TEST_CASE("fbm_c against high-precision references") {
    CHECK(fbm_c(0.25) == doctest::Approx(0.64599800374075197).epsilon(1e-14));
    CHECK(fbm_c(0.3) == doctest::Approx(0.73028293407992297).epsilon(1e-14));
    CHECK(fbm_c(0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fbm_c(0.7) == doctest::Approx(1.0918091308839126).epsilon(1e-14));
    CHECK(fbm_c(0.75) == doctest::Approx(1.0696446350319903).epsilon(1e-14));
}
