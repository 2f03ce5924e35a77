#ifndef SSVG_KERNELS_HPP
#define SSVG_KERNELS_HPP

#include <functional>
#include <string>

#include "ssvg/quadrature.hpp"

namespace ssvg {

// Hurst index of fractional Brownian motion, H in (0,1).
struct HurstIndex {
    double value;
    explicit HurstIndex(double v);
};

// Transformation parameter, alpha > -1/2 strictly.
struct AlphaParam {
    double value;
    explicit AlphaParam(double v);
};

// A self-similar Volterra kernel family.  The kernel z(t,s) vanishes for
// s >= t and is homogeneous of degree beta - 1/2, so it factors as
// z(t,s) = (t-s)^(beta-1/2) * F(s/t) with F the shape factor on (0,1).
//
// Custom factor functions are assumed non-degenerate (time sections
// linearly independent with dense span) and finite on (0,1); neither
// property is decidable from samples, so they are not checked.
class KernelSpec {
public:
    enum class Variant { fbm, power_markov, custom };

    static KernelSpec fbm(HurstIndex H);
    static KernelSpec power_markov(AlphaParam alpha, double beta, double c);
    static KernelSpec custom(double beta, std::function<double(double)> factor,
                             std::string label = "custom");

    Variant variant() const { return variant_; }
    double beta() const { return beta_; }
    double hurst() const;       // fbm only
    double pm_alpha() const { return pm_alpha_; }
    double pm_c() const { return pm_c_; }
    const std::string& description() const { return desc_; }

private:
    KernelSpec() = default;
    Variant variant_ = Variant::custom;
    double beta_ = 0.0;
    double hurst_ = 0.0;
    double c_of_h_ = 0.0;                    // cached c(H) for fbm
    double pm_alpha_ = 0.0, pm_c_ = 0.0;     // power-Markov parameters
    std::function<double(double)> factor_;
    std::string desc_;

    friend double kernel_eval(const KernelSpec&, double, double);
    friend double factor_eval(const KernelSpec&, double);
};

// z(t,s); zero whenever s >= t (Volterra property).
double kernel_eval(const KernelSpec& spec, double t, double s);

// Shape factor F(x), x in (0,1), with z(t,s) = (t-s)^(beta-1/2) F(s/t).
double factor_eval(const KernelSpec& spec, double x);

// Relative residual of the two-sided kernel identity
//   t^(b-a-1/2) * int_s^t u^(a-b-1/2) z(u,s) du
//     = s^a * int_s^t z(t,u) u^(-a-1) du,   0 < s < t,
// with both sides computed by singularity-aware quadrature.
double kernel_identity_residual(const KernelSpec& spec, AlphaParam alpha,
                                double s, double t, const QuadOptions& opt = {});

} // namespace ssvg

#endif
