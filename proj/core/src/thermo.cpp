#include "dqm/thermo.hpp"

#include <cmath>

namespace dqm {

namespace {

// ln(2 sinh x) = x + ln(1 - e^{-2x}); stable for every x > 0
double log_2sinh(double x) {
    return x + std::log1p(-std::exp(-2.0 * x));
}

}  // namespace

DerivedParams ThermoInput::derived() const {
    if (!(beta > 0.0)) throw DomainError("ThermoInput: beta must be > 0");
    PotentialSpec zeroed = potential;
    if (auto* anh = std::get_if<Anharmonic>(&zeroed)) anh->c = 0.0;
    DerivedParams d = derive_params(config, zeroed, {0, ell});
    d.c = 0.0;  // all variants: thermodynamics drops the additive constant
    return d;
}

double log_partition_function(const ThermoInput& input) {
    const DerivedParams d = input.derived();
    const double x = input.beta * d.omega0;
    return -input.beta * (d.omega0 * d.j + d.Q) - log_2sinh(x);
}

double partition_function(const ThermoInput& input) {
    const double lz = log_partition_function(input);
    if (lz < -745.0 || lz > 709.0)
        throw Overflow("partition_function: value not representable; use log form");
    return std::exp(lz);
}

double free_energy(const ThermoInput& input, bool add_offset) {
    const DerivedParams d = input.derived();
    const double shift = add_offset ? to_anharmonic(input.potential, input.config.mass).c : 0.0;
    return d.Q + d.omega0 * d.j + log_2sinh(input.beta * d.omega0) / input.beta + shift;
}

double mean_energy(const ThermoInput& input, bool add_offset) {
    const DerivedParams d = input.derived();
    const double x = input.beta * d.omega0;
    const double shift = add_offset ? to_anharmonic(input.potential, input.config.mass).c : 0.0;
    return d.Q + d.omega0 * (d.j + 1.0 / std::tanh(x)) + shift;
}

double heat_capacity(const ThermoInput& input) {
    const DerivedParams d = input.derived();
    const double x = input.beta * d.omega0;
    // x / sinh x = 2 x e^{-x} / (1 - e^{-2x}), safe for large x
    const double ratio = 2.0 * x * std::exp(-x) / (-std::expm1(-2.0 * x));
    return ratio * ratio;
}

double entropy_thermo(const ThermoInput& input) {
    const DerivedParams d = input.derived();
    const double x = input.beta * d.omega0;
    const double em = std::exp(-2.0 * x);
    // x (coth x - 1) - ln(1 - e^{-2x})
    return 2.0 * x * em / (1.0 - em) - std::log1p(-em);
}

}  // namespace dqm
