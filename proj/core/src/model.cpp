#include "dqm/model.hpp"

#include <cmath>

namespace dqm {

void SystemConfig::validate() const {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw DomainError("SystemConfig: alpha must lie in (0, 1]");
    if (!(mass > 0.0)) throw DomainError("SystemConfig: mass must be > 0");
    if (!(charge > 0.0)) throw DomainError("SystemConfig: charge must be > 0");
    if (!(B >= 0.0)) throw DomainError("SystemConfig: B must be >= 0");
    if (charge_sign != 1 && charge_sign != -1)
        throw DomainError("SystemConfig: charge_sign must be +1 or -1");
    if (!std::isfinite(phi)) throw DomainError("SystemConfig: phi must be finite");
}

void QuantumNumbers::validate() const {
    if (n < 0) throw DomainError("QuantumNumbers: n must be >= 0");
}

void validate(const PotentialSpec& potential) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Anharmonic>) {
                if (!(p.a >= 0.0) || !(p.b >= 0.0) || !std::isfinite(p.c))
                    throw DomainError("Anharmonic: requires a >= 0, b >= 0, finite c");
            } else if constexpr (std::is_same_v<T, Harmonic>) {
                if (!(p.omega > 0.0)) throw DomainError("Harmonic: omega must be > 0");
            } else if constexpr (std::is_same_v<T, InverseSquare>) {
                if (!(p.b > 0.0)) throw DomainError("InverseSquare: b must be > 0");
            } else {
                if (!(p.De > 0.0) || !(p.r0 > 0.0))
                    throw DomainError("Pseudoharmonic: requires De > 0 and r0 > 0");
            }
        },
        potential);
}

Anharmonic to_anharmonic(const PotentialSpec& potential, double mass) {
    return std::visit(
        [mass](const auto& p) -> Anharmonic {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Anharmonic>) {
                return p;
            } else if constexpr (std::is_same_v<T, Harmonic>) {
                return {0.5 * mass * p.omega * p.omega, 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, Pseudoharmonic>) {
                return {p.De / (p.r0 * p.r0), p.De * p.r0 * p.r0, -2.0 * p.De};
            } else if constexpr (std::is_same_v<T, ShiftedPseudoharmonic>) {
                return {p.De / (p.r0 * p.r0), p.De * p.r0 * p.r0, 0.0};
            } else {  // InverseSquare
                return {0.0, p.b, 0.0};
            }
        },
        potential);
}

DerivedParams derive_params(const SystemConfig& config,
                            const PotentialSpec& potential,
                            const QuantumNumbers& qn,
                            CyclotronFactor factor) {
    config.validate();
    validate(potential);
    qn.validate();

    const Anharmonic v = to_anharmonic(potential, config.mass);
    const double M = config.mass;
    const double denom = (factor == CyclotronFactor::eb_over_2m) ? 2.0 * M : M;
    const double omega_c = config.charge * config.B / denom;
    const double dl = qn.ell - config.phi;

    DerivedParams d;
    d.omega_c = omega_c;
    d.ell_prime = std::abs(dl) / config.alpha;
    d.Omega = std::sqrt(2.0 * M * v.a +
                        M * M * omega_c * omega_c / (config.alpha * config.alpha));
    d.j = std::sqrt(dl * dl / (config.alpha * config.alpha) + 2.0 * M * v.b);
    d.omega0 = d.Omega / M;
    d.Q = omega_c * std::abs(dl) / (config.alpha * config.alpha);
    d.P = d.Q + d.omega0 * (d.j + 1.0);
    d.mass = M;
    d.alpha = config.alpha;
    d.c = v.c;

    if (!(d.Omega > 0.0))
        throw DegenerateConfinement(
            "derive_params: Omega = 0 (a = 0 and B = 0); no bound spectrum");
    return d;
}

}  // namespace dqm
