#pragma once

// Domain types and the parameter-derivation layer shared by every other
// module: the conical-background environment (defect parameter alpha,
// magnetic field, AB flux), the anharmonic potential family, and the
// derived oscillator parameters the closed forms are written in.

#include <variant>

#include "dqm/errors.hpp"

namespace dqm {

/// Physical environment: conical defect, magnetic field, AB flux, particle.
///
/// alpha in (0, 1]: angular-deficit parameter (alpha = 1 is flat space).
/// phi is the dimensionless flux ratio Phi_AB / Phi_0 with Phi_0 = 2*pi/e.
/// The axial motion is frozen (k = 0 throughout).
struct SystemConfig {
    double alpha = 1.0;
    double B = 0.0;        ///< field magnitude, >= 0
    double phi = 0.0;      ///< AB flux ratio, any real
    double mass = 1.0;
    double charge = 1.0;   ///< |e| > 0
    int charge_sign = +1;  ///< sign convention carried by e in the currents

    /// Throws DomainError if any invariant is violated.
    void validate() const;
};

// Anharmonic family V(r) = a r^2 + b / r^2 + c and its named special cases.
struct Anharmonic {
    double a = 0.0;  ///< >= 0
    double b = 0.0;  ///< >= 0
    double c = 0.0;
};
struct Harmonic {
    double omega = 1.0;  ///< > 0
};
struct Pseudoharmonic {
    double De = 1.0;  ///< dissociation energy, > 0
    double r0 = 1.0;  ///< equilibrium separation, > 0
};
struct ShiftedPseudoharmonic {
    double De = 1.0;
    double r0 = 1.0;
};
struct InverseSquare {
    double b = 1.0;  ///< > 0
};

using PotentialSpec = std::variant<Anharmonic, Harmonic, Pseudoharmonic,
                                   ShiftedPseudoharmonic, InverseSquare>;

/// Throws DomainError if the variant's parameter constraints are violated.
void validate(const PotentialSpec& potential);

/// Maps any variant onto (a, b, c). Harmonic: a = M*omega^2/2. Pseudoharmonic:
/// a = De/r0^2, b = De*r0^2, c = -2 De (c = 0 for the shifted form).
Anharmonic to_anharmonic(const PotentialSpec& potential, double mass);

struct QuantumNumbers {
    int n = 0;    ///< radial quantum number, >= 0
    int ell = 0;  ///< orbital quantum number, any sign

    void validate() const;
};

/// Cyclotron-frequency convention. The canonical reading is |e|B/(2M);
/// eb_over_m exists solely because the published entropy tables were
/// computed with |e|B/M, and the table-reproduction path must match them.
enum class CyclotronFactor { eb_over_2m, eb_over_m };

/// Oscillator parameters derived from config + potential + quantum numbers.
struct DerivedParams {
    double omega_c = 0.0;    ///< cyclotron frequency, >= 0
    double ell_prime = 0.0;  ///< |ell - phi| / alpha
    double Omega = 0.0;      ///< sqrt(2 M a + M^2 omega_c^2 / alpha^2)
    double j = 0.0;          ///< sqrt((ell - phi)^2/alpha^2 + 2 M b)
    double omega0 = 0.0;     ///< Omega / M
    double P = 0.0;          ///< Q + omega0 (j + 1): spectrum offset at n = 0
    double Q = 0.0;          ///< (omega_c / alpha^2) |ell - phi|

    // carried along so Lambda(E) can be formed on demand
    double mass = 1.0;
    double alpha = 1.0;
    double c = 0.0;

    /// Lambda = 2 M (E - c) - 2 M omega_c ell' / alpha for a caller-supplied E.
    double lambda_at(double energy) const {
        return 2.0 * mass * (energy - c) - 2.0 * mass * omega_c * ell_prime / alpha;
    }
};

/// Computes the full parameter bundle. Pure: identical inputs give
/// bitwise-identical outputs. Throws DegenerateConfinement when Omega = 0
/// (a = 0 and B = 0), where the bound-state family collapses.
DerivedParams derive_params(const SystemConfig& config,
                            const PotentialSpec& potential,
                            const QuantumNumbers& qn,
                            CyclotronFactor factor = CyclotronFactor::eb_over_2m);

}  // namespace dqm
