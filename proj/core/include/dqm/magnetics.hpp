#pragma once

// Persistent current, magnetization, and magnetic susceptibility, at zero
// and finite temperature. Flux derivatives are taken with respect to the
// physical AB flux Phi_AB = (2 pi / e) * phi, hence the e/(2 pi) chain-rule
// factors. Operations that differentiate |ell - phi| refuse the kink phi =
// ell instead of choosing a one-sided derivative.

#include "dqm/thermo.hpp"

namespace dqm {

struct MagneticReport {
    double persistent_current = 0.0;
    double magnetization = 0.0;
    double susceptibility = 0.0;
    bool finite_temperature = false;
    double beta = 0.0;  ///< meaningful only when finite_temperature
};

/// How susceptibility_finite_T differentiates M(B).
enum class DerivativeMethod { analytic, finite_difference };

/// I = e omega_c/(2 pi alpha^2) + (|e| |ell-phi|/(2 pi alpha^2)) omega0 / j.
/// This equals -dE/dPhi_AB for every level and is temperature independent.
/// Throws KinkPoint at phi = ell.
double persistent_current(const SystemConfig& config, const PotentialSpec& potential,
                          const QuantumNumbers& qn);

/// M = -|e||ell-phi|/(2 M alpha^2) - (e^2 B/(4 M^2 alpha^2)) (2n+1+j)/omega0,
/// i.e. -dE/dB for the level (n, ell).
double magnetization_zero_T(const SystemConfig& config, const PotentialSpec& potential,
                            const QuantumNumbers& qn);

/// M = -(e^2 B/(4 M^2 alpha^2 omega0))[ j + coth(beta omega0) ]
///     - |e||ell-phi|/(2 M alpha^2), i.e. -dF/dB.
double magnetization_finite_T(const ThermoInput& input);

/// chi = -(2 a e^2/(4 M^3 alpha^2)) (2n+1+j) / omega0^3. Identically zero
/// when the quadratic coefficient a vanishes.
double susceptibility_zero_T(const SystemConfig& config, const PotentialSpec& potential,
                             const QuantumNumbers& qn);

/// dM/dB of the finite-temperature magnetization. The analytic branch
/// differentiates the coth and 1/omega0 factors in closed form; the
/// finite-difference branch is a five-point-free central difference kept
/// as an audit path.
double susceptibility_finite_T(const ThermoInput& input,
                               DerivativeMethod method = DerivativeMethod::analytic);

MagneticReport magnetic_report_zero_T(const SystemConfig& config,
                                      const PotentialSpec& potential,
                                      const QuantumNumbers& qn);

MagneticReport magnetic_report_finite_T(const ThermoInput& input);

}  // namespace dqm
