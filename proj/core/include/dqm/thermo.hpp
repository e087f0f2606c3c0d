#pragma once

// Closed-form partition function and derived thermodynamic quantities at
// fixed orbital quantum number. The additive potential constant c is forced
// to zero here; pass add_offset = true to shift F and U back by c.
// Boltzmann constant kappa = 1 throughout; C and S are C/kappa, S/kappa.

#include "dqm/model.hpp"

namespace dqm {

struct ThermoInput {
    double beta = 1.0;  ///< inverse temperature, > 0
    SystemConfig config;
    PotentialSpec potential = Harmonic{};
    int ell = 0;

    /// omega0, j, Q with c zeroed. Throws on invalid input.
    DerivedParams derived() const;
};

/// ln Z = -beta (omega0 j + Q) - ln(2 sinh(beta omega0)); always finite.
double log_partition_function(const ThermoInput& input);

/// Z itself. Throws Overflow when ln Z leaves the representable range.
double partition_function(const ThermoInput& input);

/// F = Q + omega0 j + (1/beta) ln(2 sinh(beta omega0))
double free_energy(const ThermoInput& input, bool add_offset = false);

/// U = Q + omega0 [ j + coth(beta omega0) ]
double mean_energy(const ThermoInput& input, bool add_offset = false);

/// C/kappa = (beta omega0)^2 / sinh^2(beta omega0)
double heat_capacity(const ThermoInput& input);

/// S/kappa = beta omega0 coth(beta omega0) - ln(2 sinh(beta omega0))
double entropy_thermo(const ThermoInput& input);

}  // namespace dqm
