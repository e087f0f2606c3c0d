#include "dqm/spectrum.hpp"

#include <cmath>

namespace dqm {

namespace {

CaseTag tag_of(const PotentialSpec& potential) {
    return std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Harmonic>) return CaseTag::harmonic;
            else if constexpr (std::is_same_v<T, Pseudoharmonic>) return CaseTag::pseudoharmonic;
            else if constexpr (std::is_same_v<T, ShiftedPseudoharmonic>) return CaseTag::shifted_pseudoharmonic;
            else if constexpr (std::is_same_v<T, InverseSquare>) return CaseTag::inverse_square;
            else return CaseTag::general;
        },
        potential);
}

}  // namespace

EnergyLevel energy(const SystemConfig& config, const PotentialSpec& potential,
                   const QuantumNumbers& qn, CyclotronFactor factor) {
    const CaseTag tag = tag_of(potential);
    if (tag == CaseTag::inverse_square && !(config.B > 0.0))
        throw CaseDNeedsField("energy: inverse-square potential binds only with B > 0");
    const DerivedParams d = derive_params(config, potential, qn, factor);
    const double e = d.c + d.Q + d.omega0 * (2.0 * qn.n + d.j + 1.0);
    return {qn, e, tag};
}

RadialState::RadialState(QuantumNumbers qn, DerivedParams params)
    : qn_(qn), params_(params) {
    norm_log_ = 0.5 * (std::log(2.0 * params_.Omega / params_.alpha) +
                       log_gamma(qn_.n + 1.0) - log_gamma(qn_.n + params_.j + 1.0));
}

double RadialState::operator()(double r) const {
    if (r < 0.0) throw DomainError("RadialState: r must be >= 0");
    const double j = params_.j;
    const double Om = params_.Omega;
    if (r == 0.0) return (j > 0.0) ? 0.0 : std::exp(norm_log_);
    const double s = Om * r * r;
    const double L = laguerre(qn_.n, j, s);
    const double expo = norm_log_ + 0.5 * j * std::log(Om) + j * std::log(r) - 0.5 * s;
    if (L == 0.0) return 0.0;
    const double mag = expo + std::log(std::abs(L));
    if (mag < -744.0) return 0.0;
    return (L > 0.0 ? 1.0 : -1.0) * std::exp(mag);
}

double RadialState::tail_radius() const {
    // Omega r^2 / 2 ~ 45 plus slack for the polynomial growth of L_n
    return std::sqrt(2.0 * (45.0 + 12.0 * qn_.n) / params_.Omega) + 3.0;
}

RadialState wavefunction(const SystemConfig& config, const PotentialSpec& potential,
                         const QuantumNumbers& qn, CyclotronFactor factor) {
    if (tag_of(potential) == CaseTag::inverse_square && !(config.B > 0.0))
        throw CaseDNeedsField("wavefunction: inverse-square potential binds only with B > 0");
    return RadialState(qn, derive_params(config, potential, qn, factor));
}

double effective_potential(const SystemConfig& config, const PotentialSpec& potential,
                           double r, int ell, LinearFieldTerm term) {
    if (!(r > 0.0)) throw DomainError("effective_potential: r must be > 0");
    config.validate();
    validate(potential);
    const Anharmonic v = to_anharmonic(potential, config.mass);
    const double M = config.mass;
    const double a2 = config.alpha * config.alpha;
    const double eB = config.charge * config.B;
    const double dl = ell - config.phi;
    const double linear = (term == LinearFieldTerm::signed_reading) ? dl : std::abs(dl);
    return (v.a + eB * eB / (8.0 * M * a2)) * r * r +
           (v.b + dl * dl / (2.0 * M * a2)) / (r * r) +
           (eB / (2.0 * M)) * linear / a2 + v.c;
}

EnergyLevel landau_limit(const SystemConfig& config, const PotentialSpec& potential,
                         const QuantumNumbers& qn) {
    SystemConfig flat = config;
    flat.alpha = 1.0;
    return energy(flat, potential, qn);
}

}  // namespace dqm
