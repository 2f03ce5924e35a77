#include "ssvg/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "ssvg/special.hpp"

namespace ssvg {

HurstIndex::HurstIndex(double v) : value(v) {
    if (!(v > 0.0 && v < 1.0))
        throw std::domain_error("HurstIndex: H must lie in (0,1)");
}

AlphaParam::AlphaParam(double v) : value(v) {
    if (!(v > -0.5))
        throw std::domain_error("AlphaParam: alpha must exceed -1/2");
}

KernelSpec KernelSpec::fbm(HurstIndex H) {
    KernelSpec k;
    k.variant_ = Variant::fbm;
    k.beta_ = H.value;
    k.hurst_ = H.value;
    k.c_of_h_ = fbm_c(H.value);
    k.desc_ = "fbm(H=" + std::to_string(H.value) + ")";
    return k;
}

KernelSpec KernelSpec::power_markov(AlphaParam alpha, double beta, double c) {
    if (!(beta > 0.0)) throw std::domain_error("KernelSpec: beta must be positive");
    if (!(c > 0.0)) throw std::domain_error("KernelSpec: c must be positive");
    KernelSpec k;
    k.variant_ = Variant::power_markov;
    k.beta_ = beta;
    k.pm_alpha_ = alpha.value;
    k.pm_c_ = c;
    k.desc_ = "power_markov(alpha=" + std::to_string(alpha.value) +
              ", beta=" + std::to_string(beta) + ", c=" + std::to_string(c) + ")";
    return k;
}

KernelSpec KernelSpec::custom(double beta, std::function<double(double)> factor,
                              std::string label) {
    if (!(beta > 0.0)) throw std::domain_error("KernelSpec: beta must be positive");
    if (!factor) throw std::invalid_argument("KernelSpec: factor function required");
    KernelSpec k;
    k.variant_ = Variant::custom;
    k.beta_ = beta;
    k.factor_ = std::move(factor);
    k.desc_ = std::move(label);
    return k;
}

double KernelSpec::hurst() const {
    if (variant_ != Variant::fbm)
        throw std::logic_error("KernelSpec: hurst() on non-fbm spec");
    return hurst_;
}

double kernel_eval(const KernelSpec& spec, double t, double s) {
    if (!(t > 0.0) || !(s > 0.0))
        throw std::domain_error("kernel_eval: t, s must be positive");
    if (s >= t) return 0.0;
    switch (spec.variant()) {
    case KernelSpec::Variant::fbm: {
        const double H = spec.hurst_;
        return spec.c_of_h_ * std::pow(t - s, H - 0.5) *
               gauss_2f1(0.5 - H, H - 0.5, H + 0.5, 1.0 - t / s);
    }
    case KernelSpec::Variant::power_markov:
        return spec.pm_c_ * std::pow(t, spec.beta_ - 0.5 - spec.pm_alpha_) *
               std::pow(s, spec.pm_alpha_);
    case KernelSpec::Variant::custom:
        return std::pow(t - s, spec.beta_ - 0.5) * spec.factor_(s / t);
    }
    return 0.0;
}

double factor_eval(const KernelSpec& spec, double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("factor_eval: x must lie in (0,1)");
    switch (spec.variant()) {
    case KernelSpec::Variant::fbm: {
        const double H = spec.hurst_;
        return spec.c_of_h_ * gauss_2f1(0.5 - H, H - 0.5, H + 0.5, 1.0 - 1.0 / x);
    }
    case KernelSpec::Variant::power_markov:
        return spec.pm_c_ * std::pow(x, spec.pm_alpha_) *
               std::pow(1.0 - x, 0.5 - spec.beta_);
    case KernelSpec::Variant::custom:
        return spec.factor_(x);
    }
    return 0.0;
}

double kernel_identity_residual(const KernelSpec& spec, AlphaParam alpha,
                                double s, double t, const QuadOptions& opt) {
    if (!(0.0 < s && s < t))
        throw std::domain_error("kernel_identity_residual: need 0 < s < t");
    const double a = alpha.value, b = spec.beta();
    // LHS integrand is singular at u = s through z(u,s) ~ (u-s)^(b-1/2); both
    // ends are graded because the power factors vary over decades when
    // t/s is large.
    const double lhs =
        std::pow(t, b - a - 0.5) *
        graded_integrate(
            [&](double u) { return std::pow(u, a - b - 0.5) * kernel_eval(spec, u, s); },
            s, t, /*sing_a=*/true, /*sing_b=*/true, opt);
    // RHS integrand is singular at u = t through z(t,u) ~ (t-u)^(b-1/2).
    const double rhs =
        std::pow(s, a) *
        graded_integrate(
            [&](double u) { return kernel_eval(spec, t, u) * std::pow(u, -a - 1.0); },
            s, t, /*sing_a=*/true, /*sing_b=*/true, opt);
    const double floor = 1e-12;
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), floor});
}

} // namespace ssvg
