#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ssvg/kernels.hpp"

using namespace ssvg;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(HurstIndex(0.0), std::domain_error);
    CHECK_THROWS_AS(HurstIndex(1.0), std::domain_error);
    CHECK_THROWS_AS(AlphaParam(-0.5), std::domain_error);
    CHECK_NOTHROW(HurstIndex(0.5));
    CHECK_NOTHROW(AlphaParam(-0.49));
}

TEST_CASE("fBm kernel against high-precision references") {
    CHECK(kernel_eval(KernelSpec::fbm(HurstIndex(0.7)), 2.0, 1.0) ==
          doctest::Approx(1.1224396819570321).epsilon(1e-12));
    CHECK(kernel_eval(KernelSpec::fbm(HurstIndex(0.25)), 2.0, 1.0) ==
          doctest::Approx(0.68980635367530223).epsilon(1e-12));
    CHECK(kernel_eval(KernelSpec::fbm(HurstIndex(0.75)), 5.0, 0.1) ==
          doctest::Approx(2.4888503074485713).epsilon(1e-12));
    CHECK(kernel_eval(KernelSpec::fbm(HurstIndex(0.3)), 1.7, 0.4) ==
          doctest::Approx(0.76277096749187216).epsilon(1e-12));
}

TEST_CASE("Brownian kernel is the indicator") {
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.5));
    CHECK(kernel_eval(spec, 2.0, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kernel_eval(spec, 1.0, 0.999) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Volterra property: kernel vanishes for s >= t") {
    for (const KernelSpec& spec :
         {KernelSpec::fbm(HurstIndex(0.7)),
          KernelSpec::power_markov(AlphaParam(0.5), 0.8, 2.0)}) {
        CHECK(kernel_eval(spec, 1.0, 1.0) == 0.0);
        CHECK(kernel_eval(spec, 1.0, 1.5) == 0.0);
    }
}

TEST_CASE("power-Markov kernel closed form") {
    const KernelSpec spec = KernelSpec::power_markov(AlphaParam(0.5), 0.8, 2.0);
    const double t = 3.0, s = 1.2;
    const double expected =
        2.0 * std::pow(t, 0.8 - 0.5 - 0.5) * std::pow(s, 0.5);
    CHECK(kernel_eval(spec, t, s) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("factorization z(t,s) = (t-s)^(beta-1/2) F(s/t)") {
    for (const KernelSpec& spec :
         {KernelSpec::fbm(HurstIndex(0.25)), KernelSpec::fbm(HurstIndex(0.75)),
          KernelSpec::power_markov(AlphaParam(0.0), 1.0, 1.0)}) {
        for (double t : {0.5, 2.0})
            for (double s : {0.1 * t, 0.6 * t, 0.95 * t}) {
                const double z = kernel_eval(spec, t, s);
                const double f = std::pow(t - s, spec.beta() - 0.5) *
                                 factor_eval(spec, s / t);
                CHECK(f == doctest::Approx(z).epsilon(1e-11));
            }
    }
}

TEST_CASE("kernel identity residual at reference points") {
    CHECK(kernel_identity_residual(KernelSpec::fbm(HurstIndex(0.75)),
                                   AlphaParam(0.0), 0.5, 2.0) < 1e-6);
    CHECK(kernel_identity_residual(KernelSpec::fbm(HurstIndex(0.25)),
                                   AlphaParam(1.0), 0.1, 5.0) < 1e-6);
    CHECK(kernel_identity_residual(KernelSpec::fbm(HurstIndex(0.25)),
                                   AlphaParam(-0.25), 0.5, 1.0) < 1e-6);
    // power-Markov case with elementary closed form on both sides
    CHECK(kernel_identity_residual(
              KernelSpec::power_markov(AlphaParam(0.5), 1.0, 1.0),
              AlphaParam(0.5), 1.0, 2.0) < 1e-8);
}
