#include "dqm/magnetics.hpp"

#include <cmath>

namespace dqm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// coth(x) - 1 = 2 e^{-2x} / (1 - e^{-2x}); add 1 back for coth itself
double coth(double x) {
    const double em = std::exp(-2.0 * x);
    return 1.0 + 2.0 * em / (1.0 - em);
}

// csch(x) = 2 e^{-x} / (1 - e^{-2x}), underflows to 0 gracefully
double csch(double x) {
    return 2.0 * std::exp(-x) / (-std::expm1(-2.0 * x));
}

}  // namespace

double persistent_current(const SystemConfig& config, const PotentialSpec& potential,
                          const QuantumNumbers& qn) {
    if (config.phi == static_cast<double>(qn.ell))
        throw KinkPoint("persistent_current: |ell - phi| is not differentiable at phi = ell");
    const DerivedParams d = derive_params(config, potential, qn);
    const double e_signed = config.charge_sign * config.charge;
    const double a2 = config.alpha * config.alpha;
    return e_signed * d.omega_c / (kTwoPi * a2) +
           config.charge * std::abs(qn.ell - config.phi) / (kTwoPi * a2) * d.omega0 / d.j;
}

double magnetization_zero_T(const SystemConfig& config, const PotentialSpec& potential,
                            const QuantumNumbers& qn) {
    const DerivedParams d = derive_params(config, potential, qn);
    const double M = config.mass;
    const double a2 = config.alpha * config.alpha;
    const double e2 = config.charge * config.charge;
    return -config.charge * std::abs(qn.ell - config.phi) / (2.0 * M * a2) -
           e2 * config.B / (4.0 * M * M * a2) * (2.0 * qn.n + 1.0 + d.j) / d.omega0;
}

double magnetization_finite_T(const ThermoInput& input) {
    const DerivedParams d = input.derived();
    const SystemConfig& cfg = input.config;
    const double M = cfg.mass;
    const double a2 = cfg.alpha * cfg.alpha;
    const double e2 = cfg.charge * cfg.charge;
    const double x = input.beta * d.omega0;
    return -e2 * cfg.B / (4.0 * M * M * a2 * d.omega0) * (d.j + coth(x)) -
           cfg.charge * std::abs(input.ell - cfg.phi) / (2.0 * M * a2);
}

double susceptibility_zero_T(const SystemConfig& config, const PotentialSpec& potential,
                             const QuantumNumbers& qn) {
    const DerivedParams d = derive_params(config, potential, qn);
    const Anharmonic v = to_anharmonic(potential, config.mass);
    if (v.a == 0.0) return 0.0;
    const double M = config.mass;
    const double a2 = config.alpha * config.alpha;
    const double e2 = config.charge * config.charge;
    const double w3 = d.omega0 * d.omega0 * d.omega0;
    return -2.0 * v.a * e2 / (4.0 * M * M * M * a2) * (2.0 * qn.n + 1.0 + d.j) / w3;
}

double susceptibility_finite_T(const ThermoInput& input, DerivativeMethod method) {
    if (method == DerivativeMethod::finite_difference) {
        const double h = std::max(1e-6, 1e-6 * input.config.B);
        ThermoInput up = input, dn = input;
        up.config.B = input.config.B + h;
        dn.config.B = std::max(0.0, input.config.B - h);
        const double span = up.config.B - dn.config.B;
        return (magnetization_finite_T(up) - magnetization_finite_T(dn)) / span;
    }
    const DerivedParams d = input.derived();
    const SystemConfig& cfg = input.config;
    const double M = cfg.mass;
    const double a2 = cfg.alpha * cfg.alpha;
    // G = e^2 / (4 M^2 alpha^2), so omega0^2 = 2a/M + G B^2 and
    // M(B) = -G B [j + coth(beta omega0)] / omega0 - const.
    const double G = cfg.charge * cfg.charge / (4.0 * M * M * a2);
    const double w = d.omega0;
    const double x = input.beta * w;
    const double jc = d.j + coth(x);
    const double cs = csch(x);
    const double B = cfg.B;
    return -G * jc / w +
           G * G * B * B * (input.beta * cs * cs / (w * w) + jc / (w * w * w));
}

MagneticReport magnetic_report_zero_T(const SystemConfig& config,
                                      const PotentialSpec& potential,
                                      const QuantumNumbers& qn) {
    MagneticReport rep;
    rep.persistent_current = persistent_current(config, potential, qn);
    rep.magnetization = magnetization_zero_T(config, potential, qn);
    rep.susceptibility = susceptibility_zero_T(config, potential, qn);
    return rep;
}

MagneticReport magnetic_report_finite_T(const ThermoInput& input) {
    MagneticReport rep;
    rep.persistent_current =
        persistent_current(input.config, input.potential, {0, input.ell});
    rep.magnetization = magnetization_finite_T(input);
    rep.susceptibility = susceptibility_finite_T(input);
    rep.finite_temperature = true;
    rep.beta = input.beta;
    return rep;
}

}  // namespace dqm
