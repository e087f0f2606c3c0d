#include "dqm/infoentropy.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <tuple>

#include "dqm/parallel.hpp"

namespace dqm {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double measure_weight(PositionMeasure m, double alpha, double r) {
    switch (m) {
        case PositionMeasure::plain_dr: return 1.0;
        case PositionMeasure::radial_r_dr: return r;
        case PositionMeasure::conical_alpha_r_dr: return alpha * r;
    }
    return 1.0;
}

// renormalized position density under the chosen measure
struct PositionDensity {
    const RadialState& state;
    PositionMeasure measure;
    double inv_norm = 1.0;
    double quad_error = 0.0;

    PositionDensity(const RadialState& s, PositionMeasure m, double tol)
        : state(s), measure(m) {
        const double alpha = s.params().alpha;
        const QuadratureResult q = integrate_semiline(
            [&](double r) {
                const double psi = s(r);
                return psi * psi * measure_weight(m, alpha, r);
            },
            tol);
        inv_norm = 1.0 / q.value;
        quad_error = q.abs_error_estimate * inv_norm;
    }

    double operator()(double r) const {
        const double psi = state(r);
        return psi * psi * measure_weight(measure, state.params().alpha, r) * inv_norm;
    }
};

double neg_p_log_p(double p) { return (p > 0.0) ? -p * std::log(p) : 0.0; }

// composite Simpson over samples[i0 .. i1] (i1 - i0 even), spacing h
double simpson(const std::vector<double>& samples, int i0, int i1, double h) {
    double acc = samples[i0] + samples[i1];
    for (int i = i0 + 1; i < i1; i += 2) acc += 4.0 * samples[i];
    for (int i = i0 + 2; i < i1; i += 2) acc += 2.0 * samples[i];
    return acc * h / 3.0;
}

struct TailFit {
    bool ok = false;
    double gamma = 0.0;
    double mass = 0.0;     // integral_P^inf sigma
    double entropy = 0.0;  // integral_P^inf (-sigma ln sigma)
};

// Fit sigma ~ c p^{-gamma} from the masses of the windows [P/4, P/2] and
// [P/2, P]; window averages are immune to the oscillatory zeros of |FT|.
TailFit fit_tail(const std::vector<double>& sigma, double dp) {
    TailFit fit;
    const int last = static_cast<int>(sigma.size()) - 1;
    const int i2 = last / 2;
    const int i1 = last / 4;
    const double m1 = simpson(sigma, i1, i2, dp);
    const double m2 = simpson(sigma, i2, last, dp);
    if (!(m1 > 0.0) || !(m2 > 0.0) || !(m1 > m2)) return fit;
    const double gamma = 1.0 + std::log2(m1 / m2);
    if (!(gamma > 1.05)) return fit;
    const double P = last * dp;
    const double c = m2 * (gamma - 1.0) /
                     (std::pow(P, 1.0 - gamma) * (std::pow(2.0, gamma - 1.0) - 1.0));
    fit.ok = true;
    fit.gamma = gamma;
    fit.mass = m2 / (std::pow(2.0, gamma - 1.0) - 1.0);
    fit.entropy = fit.mass * (-std::log(c) + gamma * std::log(P) + gamma / (gamma - 1.0));
    return fit;
}

struct SigmaSamples {
    std::vector<double> sigma;
    double dp = 0.0;
};

// sigma(p) on a uniform grid [0, p_max], evaluated from one shared radial
// Simpson grid; the rotor recurrence keeps the per-momentum cost at one
// complex multiply per radial node.
SigmaSamples sample_sigma(const RadialState& state, const PositionDensity& rho,
                          MomentumRule rule, double p_max, int num_p) {
    const double R = state.tail_radius();
    const double h_max = std::min(0.3 / p_max, R / 2000.0);
    int n_r = static_cast<int>(std::ceil(R / h_max));
    if (n_r % 2 != 0) ++n_r;
    const double h = R / n_r;

    std::vector<double> g(n_r + 1);
    for (int i = 0; i <= n_r; ++i) {
        const double val = rho(i * h);
        g[i] = (rule == MomentumRule::ft_of_wavefunction) ? std::sqrt(val) : val;
    }

    SigmaSamples out;
    out.dp = p_max / (num_p - 1);
    out.sigma.resize(num_p);
    for (int k = 0; k < num_p; ++k) {
        const double p = k * out.dp;
        const std::complex<double> step = std::polar(1.0, -p * h);
        std::complex<double> z(1.0, 0.0);
        std::complex<double> acc = g[0];  // Simpson weight applied below
        double wsum_end = g[n_r];
        std::complex<double> acc4(0.0), acc2(0.0);
        for (int i = 1; i < n_r; ++i) {
            z *= step;
            if (i % 2 == 1)
                acc4 += g[i] * z;
            else
                acc2 += g[i] * z;
        }
        z *= step;
        acc += 4.0 * acc4 + 2.0 * acc2 + wsum_end * z;
        const std::complex<double> ft = acc * (h / 3.0) * kInvSqrt2Pi;
        out.sigma[k] = (rule == MomentumRule::ft_of_wavefunction) ? std::norm(ft)
                                                                  : std::abs(ft);
    }
    return out;
}

double entropy_from_samples(const SigmaSamples& s, const TailFit& tail,
                            MomentumRule rule, double* error_estimate) {
    const int last = static_cast<int>(s.sigma.size()) - 1;
    std::vector<double> f(s.sigma.size());
    for (size_t i = 0; i < s.sigma.size(); ++i) f[i] = neg_p_log_p(s.sigma[i]);
    const double ent_grid = simpson(f, 0, last, s.dp);
    const double mass_grid = simpson(s.sigma, 0, last, s.dp);

    // p-resolution estimate from the half-density Simpson reading
    double ent_coarse = ent_grid;
    if (last % 4 == 0) {
        double acc = f[0] + f[last];
        for (int i = 2; i < last; i += 4) acc += 4.0 * f[i];
        for (int i = 4; i < last; i += 4) acc += 2.0 * f[i];
        ent_coarse = acc * (2.0 * s.dp) / 3.0;
    }

    double result;
    if (rule == MomentumRule::ft_of_density_modulus_raw) {
        // half-line, unnormalized: the convention of the published tables
        result = ent_grid + tail.entropy;
    } else {
        const double total = 2.0 * (mass_grid + tail.mass);
        const double raw = 2.0 * (ent_grid + tail.entropy);
        result = raw / total + std::log(total);
    }
    if (error_estimate)
        *error_estimate = std::abs(ent_grid - ent_coarse) + 0.1 * std::abs(tail.entropy);
    return result;
}

RadialState state_for_row(const ReferenceRow& row, CyclotronFactor cyclotron) {
    SystemConfig cfg;
    cfg.alpha = row.alpha;
    cfg.B = row.B;
    cfg.phi = row.phi;
    PotentialSpec pot;
    switch (row.table) {
        case 1: pot = Harmonic{row.param1}; break;
        case 2: pot = Pseudoharmonic{row.param2, row.param1}; break;
        default: pot = InverseSquare{row.param1}; break;
    }
    return wavefunction(cfg, pot, {row.n, 0}, cyclotron);
}

}  // namespace

double differential_entropy_semiline(const std::function<double(double)>& f,
                                     double tol) {
    return integrate_semiline([&](double r) { return neg_p_log_p(f(r)); }, tol).value;
}

double position_entropy(const RadialState& state, const DensityConvention& conv,
                        double tol) {
    const PositionDensity rho(state, conv.position_measure, tol * 0.1);
    return integrate_semiline([&](double r) { return neg_p_log_p(rho(r)); }, tol).value;
}

double momentum_entropy(const RadialState& state, const DensityConvention& conv,
                        const MomentumGrid& grid, double tol) {
    const PositionDensity rho(state, conv.position_measure, 1e-11);
    const bool fixed_cutoff = grid.p_max > 0.0;
    const DerivedParams& d = state.params();
    double p_max = fixed_cutoff
                       ? grid.p_max
                       : std::max(30.0, 60.0 * std::sqrt(d.Omega)) * (1.0 + 0.25 * state.qn().n);

    const int attempts = fixed_cutoff ? 1 : 5;
    for (int attempt = 0; attempt < attempts; ++attempt, p_max *= 2.0) {
        const double R = state.tail_radius();
        int num_p = (grid.num_points > 0)
                        ? grid.num_points
                        : static_cast<int>(std::ceil(p_max / (3.14159265358979 / (8.0 * R))));
        num_p = ((num_p + 7) / 8) * 8 + 1;  // 8m + 1: windows stay Simpson-compatible

        const SigmaSamples s = sample_sigma(state, rho, conv.momentum_rule, p_max, num_p);
        const TailFit tail = fit_tail(s.sigma, s.dp);
        if (!tail.ok) continue;

        const int last = num_p - 1;
        const double mass_grid = simpson(s.sigma, 0, last, s.dp);
        const double rel_tail = tail.mass / (mass_grid + tail.mass);
        const bool acceptable = rel_tail < 1e-4 || (tail.gamma >= 3.0 && rel_tail < 1e-3);
        if (!acceptable && attempt + 1 < attempts) continue;
        if (!acceptable && fixed_cutoff && rel_tail > 0.02)
            throw TailMassExceeded("momentum_entropy: cutoff leaves too much tail mass");
        (void)tol;
        return entropy_from_samples(s, tail, conv.momentum_rule, nullptr);
    }
    throw TailMassExceeded("momentum_entropy: no cutoff within budget resolved the tail");
}

EntropyReport entropy_report(const RadialState& state, const DensityConvention& conv,
                             double position_tol, double momentum_tol) {
    EntropyReport rep;
    rep.convention = conv;

    const PositionDensity rho(state, conv.position_measure, position_tol * 0.1);
    const QuadratureResult qr =
        integrate_semiline([&](double r) { return neg_p_log_p(rho(r)); }, position_tol);
    rep.s_position = qr.value;
    rep.quad_error_position = qr.abs_error_estimate + rho.quad_error;

    // momentum side, with the error estimate surfaced
    const DerivedParams& d = state.params();
    double p_max = std::max(30.0, 60.0 * std::sqrt(d.Omega)) * (1.0 + 0.25 * state.qn().n);
    bool done = false;
    for (int attempt = 0; attempt < 5 && !done; ++attempt, p_max *= 2.0) {
        const double R = state.tail_radius();
        int num_p = static_cast<int>(std::ceil(p_max / (3.14159265358979 / (8.0 * R))));
        num_p = ((num_p + 7) / 8) * 8 + 1;
        const SigmaSamples s = sample_sigma(state, rho, conv.momentum_rule, p_max, num_p);
        const TailFit tail = fit_tail(s.sigma, s.dp);
        if (!tail.ok) continue;
        const double mass_grid = simpson(s.sigma, 0, num_p - 1, s.dp);
        const double rel_tail = tail.mass / (mass_grid + tail.mass);
        if (!(rel_tail < 1e-4 || (tail.gamma >= 3.0 && rel_tail < 1e-3)) && attempt < 4)
            continue;
        rep.s_momentum =
            entropy_from_samples(s, tail, conv.momentum_rule, &rep.quad_error_momentum);
        done = true;
    }
    if (!done)
        throw TailMassExceeded("entropy_report: no cutoff within budget resolved the tail");
    (void)momentum_tol;
    rep.total = rep.s_position + rep.s_momentum;
    return rep;
}

BbmResult bbm_check(const EntropyReport& report) {
    BbmResult res;
    res.margin = report.total - report.bbm_bound;
    res.satisfied = res.margin >= 0.0;
    return res;
}

CalibrationResult calibrate_convention(const std::vector<ReferenceRow>& anchors) {
    if (anchors.empty())
        throw DomainError("calibrate_convention: at least one anchor row required");

    const PositionMeasure measures[] = {PositionMeasure::plain_dr,
                                        PositionMeasure::radial_r_dr,
                                        PositionMeasure::conical_alpha_r_dr};
    const MomentumRule rules[] = {MomentumRule::ft_of_density_modulus,
                                  MomentumRule::ft_of_wavefunction,
                                  MomentumRule::ft_of_density_modulus_raw};
    const CyclotronFactor factors[] = {CyclotronFactor::eb_over_2m,
                                       CyclotronFactor::eb_over_m};

    CalibrationResult best;
    best.best_residual = std::numeric_limits<double>::infinity();
    for (PositionMeasure m : measures)
        for (MomentumRule r : rules)
            for (CyclotronFactor f : factors) {
                const DensityConvention conv{m, r};
                double residual = 0.0;
                try {
                    for (const ReferenceRow& row : anchors) {
                        const RadialState state = state_for_row(row, f);
                        const double sr = position_entropy(state, conv, 1e-8);
                        const double sp = momentum_entropy(state, conv);
                        residual = std::max(residual, std::abs(sr - row.s_r));
                        residual = std::max(residual, std::abs(sp - row.s_p));
                    }
                } catch (const Error&) {
                    residual = std::numeric_limits<double>::infinity();
                }
                best.residual_matrix.push_back(residual);
                if (residual < best.best_residual) {
                    best.best_residual = residual;
                    best.convention = conv;
                    best.cyclotron = f;
                }
            }
    if (!(best.best_residual <= 0.05))
        throw NoConventionMatches("calibrate_convention: best residual exceeds 0.05");
    return best;
}

std::vector<ReproducedRow> reproduce_table(int which, const DensityConvention& conv,
                                           CyclotronFactor cyclotron,
                                           double momentum_tol) {
    const std::vector<ReferenceRow>& rows = reference_table(which);

    // distinct parameter sets (the anchors repeat) computed once each
    using Key = std::tuple<int, double, double, double, double, double>;
    std::map<Key, int> index_of;
    std::vector<const ReferenceRow*> distinct;
    std::vector<int> row_to_distinct(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const ReferenceRow& row = rows[i];
        const Key key{row.n, row.alpha, row.param1, row.param2, row.B, row.phi};
        auto [it, inserted] = index_of.try_emplace(key, static_cast<int>(distinct.size()));
        if (inserted) distinct.push_back(&row);
        row_to_distinct[i] = it->second;
    }

    struct Computed {
        double s_r = 0.0, s_p = 0.0;
        bool failed = false;
        std::string error;
    };
    std::vector<Computed> computed(distinct.size());
    parallel_for(static_cast<int>(distinct.size()), [&](int i) {
        try {
            const RadialState state = state_for_row(*distinct[i], cyclotron);
            computed[i].s_r = position_entropy(state, conv, 1e-8);
            computed[i].s_p = momentum_entropy(state, conv, {}, momentum_tol);
        } catch (const std::exception& ex) {
            computed[i].failed = true;
            computed[i].error = ex.what();
        }
    });

    std::vector<ReproducedRow> out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        ReproducedRow& r = out[i];
        r.ref = rows[i];
        const Computed& c = computed[row_to_distinct[i]];
        r.failed = c.failed;
        r.error = c.error;
        if (!c.failed) {
            r.s_r = c.s_r;
            r.s_p = c.s_p;
            r.total = c.s_r + c.s_p;
            r.bbm_margin = r.total - kBbmBound1D;
            r.residual_r = c.s_r - rows[i].s_r;
            r.residual_p = c.s_p - rows[i].s_p;
        }
    }
    return out;
}

}  // namespace dqm
