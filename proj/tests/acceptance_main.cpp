// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are stated inline with each line.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dqm/infoentropy.hpp"
#include "dqm/magnetics.hpp"
#include "dqm/oracle.hpp"
#include "dqm/spectrum.hpp"
#include "dqm/thermo.hpp"

using namespace dqm;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " [" << idx << "] " << name << ": "
              << detail << std::endl;
    if (!ok) ++g_failures;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ------------------------------------------------------------- criterion 1

void criterion_oracle() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };

    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
        SystemConfig cfg;
        cfg.alpha = uni(0.3, 1.0);
        cfg.B = uni(0.2, 3.0);
        cfg.phi = uni(-1.0, 1.0);
        PotentialSpec pot;
        switch (k % 5) {
            case 0: pot = Anharmonic{uni(0.5, 3.0), uni(0.5, 3.0), uni(-1.0, 1.0)}; break;
            case 1: pot = Harmonic{uni(0.5, 3.0)}; break;
            case 2: pot = Pseudoharmonic{uni(0.5, 3.0), uni(0.5, 2.0)}; break;
            case 3: pot = ShiftedPseudoharmonic{uni(0.5, 3.0), uni(0.5, 2.0)}; break;
            default: pot = InverseSquare{uni(0.5, 3.0)}; break;
        }
        const int n = static_cast<int>(uni(0.0, 3.999));
        const int ell = static_cast<int>(uni(-2.0, 2.999));
        const double exact = energy(cfg, pot, {n, ell}).energy;
        const double numeric = numerov_eigenvalue(cfg, pot, ell, n);
        const double rel = std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
        worst = std::max(worst, rel);
        if (rel > 1e-5) ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 60.0) ok = false;
    report(1, "independent eigen-solver", ok,
           "20 seeded closed-form vs Numerov comparisons, worst rel " + num(worst) +
               " (tol 1e-5), " + num(secs) + " s (budget 60 s)");
}

// ------------------------------------------------------------- criterion 2

void criterion_wavefunctions() {
    SystemConfig cfg;
    cfg.alpha = 0.75;
    cfg.B = 1.0;
    cfg.phi = 0.75;
    const PotentialSpec pot = Anharmonic{1.0, 1.0, 0.0};

    double worst = 0.0;
    for (int n = 0; n <= 3; ++n) {
        const RadialState sn = wavefunction(cfg, pot, {n, 1});
        for (int m = n; m <= 3; ++m) {
            const RadialState sm = wavefunction(cfg, pot, {m, 1});
            const double ip = integrate_semiline(
                                  [&](double r) {
                                      return sn(r) * sm(r) * cfg.alpha * r;
                                  },
                                  1e-12)
                                  .value;
            worst = std::max(worst, std::abs(ip - (n == m ? 1.0 : 0.0)));
        }
    }

    bool nodes_ok = true;
    for (int n = 0; n <= 3; ++n) {
        const RadialState st = wavefunction(cfg, pot, {n, 1});
        int sign_changes = 0;
        double prev = st(1e-3);
        const double R = st.tail_radius();
        for (int i = 1; i <= 4000; ++i) {
            const double cur = st(1e-3 + i * (R - 1e-3) / 4000.0);
            if (prev * cur < 0.0) ++sign_changes;
            if (cur != 0.0) prev = cur;
        }
        if (sign_changes != n) nodes_ok = false;
    }

    report(2, "wavefunction orthonormality and nodes", worst <= 1e-8 && nodes_ok,
           "worst |<n|m> - delta_nm| " + num(worst) +
               " (tol 1e-8), node counts 0..3 " + (nodes_ok ? "correct" : "wrong"));
}

// ------------------------------------------------------------- criterion 3

void criterion_thermo() {
    ThermoInput in;
    in.config.alpha = 0.75;
    in.config.B = 1.0;
    in.config.phi = 0.75;
    in.potential = Anharmonic{1.0, 1.0, 0.0};
    in.ell = 1;

    double worst_series = 0.0, worst_identity = 0.0;
    for (double beta : {0.25, 1.0, 3.0}) {
        in.beta = beta;
        const DerivedParams d = in.derived();
        double Z = 0.0, U = 0.0;
        for (int n = 0; n < 2000; ++n) {
            const double E = d.Q + d.omega0 * (2.0 * n + d.j + 1.0);
            const double w = std::exp(-beta * E);
            Z += w;
            U += E * w;
        }
        U /= Z;
        worst_series = std::max(
            worst_series, std::abs(partition_function(in) - Z) / Z);
        worst_series = std::max(
            worst_series, std::abs(mean_energy(in) - U) / std::abs(U));
        worst_identity = std::max(
            worst_identity, std::abs(entropy_thermo(in) -
                                     beta * (mean_energy(in) - free_energy(in))));
    }

    const DerivedParams d = in.derived();
    in.beta = 1e-3 / d.omega0;  // beta omega0 = 1e-3
    const double c_classical = heat_capacity(in);

    const bool ok = worst_series <= 1e-8 && worst_identity <= 1e-12 &&
                    std::abs(c_classical - 1.0) <= 1e-4;
    report(3, "thermodynamics", ok,
           "closed forms vs 2000-level sums, worst rel " + num(worst_series) +
               " (tol 1e-8); S = beta (U - F) within " + num(worst_identity) +
               " (tol 1e-12); C at beta omega0 = 1e-3 is " + num(c_classical) +
               " (tol 1e-4 from 1)");
}

// ------------------------------------------------------------- criterion 4

void criterion_magnetics() {
    SystemConfig cfg;
    cfg.alpha = 0.75;
    cfg.B = 1.0;
    cfg.phi = 0.25;
    const PotentialSpec pot = Anharmonic{1.0, 1.0, 0.0};
    const QuantumNumbers qn{0, 1};  // ell > phi
    const double h = 1e-6;

    auto e_at_phi = [&](double phi) {
        SystemConfig c = cfg;
        c.phi = phi;
        return energy(c, pot, qn).energy;
    };
    const double i_fd = -(cfg.charge / (2.0 * M_PI)) *
                        (e_at_phi(cfg.phi + h) - e_at_phi(cfg.phi - h)) / (2.0 * h);
    const double i_closed = persistent_current(cfg, pot, qn);
    const double by_err = std::abs(i_fd - i_closed);

    // current from the free energy at several temperatures: the same value
    double t_spread = 0.0;
    for (double beta : {0.1, 1.0, 10.0}) {
        ThermoInput in{beta, cfg, pot, qn.ell};
        auto f_at_phi = [&](double phi) {
            ThermoInput j = in;
            j.config.phi = phi;
            return free_energy(j);
        };
        const double i_t = -(cfg.charge / (2.0 * M_PI)) *
                           (f_at_phi(cfg.phi + h) - f_at_phi(cfg.phi - h)) / (2.0 * h);
        t_spread = std::max(t_spread, std::abs(i_t - i_closed));
    }

    ThermoInput in{1.3, cfg, pot, qn.ell};
    const double chi_err =
        std::abs(susceptibility_finite_T(in, DerivativeMethod::analytic) -
                 susceptibility_finite_T(in, DerivativeMethod::finite_difference));
    const double chi_a0 = susceptibility_zero_T(cfg, InverseSquare{1.0}, qn);

    const bool ok = by_err <= 1e-6 && t_spread <= 1e-6 && chi_err <= 1e-5 &&
                    chi_a0 == 0.0;
    report(4, "magnetic properties", ok,
           "flux-derivative identity within " + num(by_err) +
               " (tol 1e-6); current spread over temperatures " + num(t_spread) +
               " (tol 1e-6, fd-limited); chi analytic vs fd " + num(chi_err) +
               " (tol 1e-5); chi(a = 0) = " + num(chi_a0) + " (exact 0)");
}

// ------------------------------------------------------------- criterion 5

void criterion_bbm() {
    DensityConvention conv;
    conv.position_measure = PositionMeasure::plain_dr;
    conv.momentum_rule = MomentumRule::ft_of_wavefunction;

    double worst_margin = 1e300;
    int states = 0;
    bool ok = true;

    // every distinct parameter set of the three published tables
    std::vector<std::string> seen;
    for (int t : {1, 2, 3})
        for (const ReferenceRow& row : reference_table(t)) {
            std::ostringstream key;
            key << t << ':' << row.n << ':' << row.alpha << ':' << row.param1 << ':'
                << row.param2 << ':' << row.B << ':' << row.phi;
            bool dup = false;
            for (const auto& s : seen) dup |= (s == key.str());
            if (dup) continue;
            seen.push_back(key.str());

            SystemConfig cfg;
            cfg.alpha = row.alpha;
            cfg.B = row.B;
            cfg.phi = row.phi;
            PotentialSpec pot;
            if (t == 1) pot = Harmonic{row.param1};
            else if (t == 2) pot = Pseudoharmonic{row.param2, row.param1};
            else pot = InverseSquare{row.param1};
            try {
                const RadialState st =
                    wavefunction(cfg, pot, {row.n, 0}, CyclotronFactor::eb_over_m);
                const BbmResult bbm = bbm_check(entropy_report(st, conv));
                worst_margin = std::min(worst_margin, bbm.margin);
                if (bbm.margin < -1e-6) ok = false;
            } catch (const std::exception&) {
                ok = false;
            }
            ++states;
        }

    // plus seeded random states across the families
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
    for (int k = 0; k < 50; ++k) {
        SystemConfig cfg;
        cfg.alpha = uni(0.3, 1.0);
        cfg.B = uni(0.3, 3.0);
        cfg.phi = uni(-1.0, 1.0);
        PotentialSpec pot;
        switch (k % 3) {
            case 0: pot = Harmonic{uni(0.5, 3.0)}; break;
            case 1: pot = Pseudoharmonic{uni(0.5, 3.0), uni(0.5, 2.0)}; break;
            default: pot = Anharmonic{uni(0.5, 3.0), uni(0.1, 2.0), 0.0}; break;
        }
        const int n = static_cast<int>(uni(0.0, 2.999));
        try {
            const RadialState st = wavefunction(cfg, pot, {n, 0});
            const BbmResult bbm = bbm_check(entropy_report(st, conv));
            worst_margin = std::min(worst_margin, bbm.margin);
            if (bbm.margin < -1e-6) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        ++states;
    }

    report(5, "entropic uncertainty bound", ok,
           std::to_string(states) + " states under the standard momentum rule, "
               "worst margin over 1 + ln(pi) is " + num(worst_margin) +
               " (tol -1e-6)");
}

// ------------------------------------------------------------- criterion 6

void criterion_tables() {
    // calibrate on two anchor rows, then recompute everything
    const auto& t1 = reference_table(1);
    CalibrationResult cal;
    bool cal_ok = true;
    try {
        cal = calibrate_convention({t1.front(), t1.at(1)});
    } catch (const Error&) {
        cal_ok = false;
    }
    if (!cal_ok) {
        report(6, "published-table reproduction", false, "calibration failed");
        return;
    }

    std::vector<ReproducedRow> all;
    for (int t : {1, 2, 3}) {
        const auto rows = reproduce_table(t, cal.convention, cal.cyclotron);
        all.insert(all.end(), rows.begin(), rows.end());
    }

    int failed_rows = 0, close_r = 0, close_p = 0;
    double worst_r = 0.0;
    for (const auto& row : all) {
        if (row.failed) {
            ++failed_rows;
            continue;
        }
        worst_r = std::max(worst_r, std::abs(row.residual_r));
        if (std::abs(row.residual_r) <= 5e-3) ++close_r;
        if (std::abs(row.residual_p) <= 5e-3) ++close_p;
    }

    // qualitative trends: wherever two rows differ in exactly one knob, the
    // computed entropies must move the same way the published ones do
    int trends = 0, trend_breaks = 0;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t k = i + 1; k < all.size(); ++k) {
            const ReferenceRow& a = all[i].ref;
            const ReferenceRow& b = all[k].ref;
            if (a.table != b.table || all[i].failed || all[k].failed) continue;
            int diffs = (a.n != b.n) + (a.alpha != b.alpha) + (a.param1 != b.param1) +
                        (a.param2 != b.param2) + (a.B != b.B) + (a.phi != b.phi);
            if (diffs != 1) continue;
            const double pub_r = b.s_r - a.s_r, got_r = all[k].s_r - all[i].s_r;
            const double pub_p = b.s_p - a.s_p, got_p = all[k].s_p - all[i].s_p;
            // thresholds sit well above the print noise of the source values
            // (~1e-5 for S_r, up to ~5e-2 for S_p on individual rows)
            if (std::abs(pub_r) > 5e-3) {
                ++trends;
                if (pub_r * got_r <= 0.0) ++trend_breaks;
            }
            if (std::abs(pub_p) > 0.15) {
                ++trends;
                if (pub_p * got_p <= 0.0) ++trend_breaks;
            }
        }

    // residuals published for inspection
    std::ofstream res("entropy_residuals.csv");
    res << "table,n,alpha,param1,param2,B,phi,S_r,S_p,residual_r,residual_p\n";
    for (const auto& row : all) {
        const ReferenceRow& r = row.ref;
        res << r.table << ',' << r.n << ',' << r.alpha << ',' << r.param1 << ','
            << r.param2 << ',' << r.B << ',' << r.phi << ',' << row.s_r << ','
            << row.s_p << ',' << row.residual_r << ',' << row.residual_p << '\n';
    }

    const int total = static_cast<int>(all.size());
    const bool ok = failed_rows == 0 && worst_r <= 1e-3 && trend_breaks == 0;
    report(6, "published-table reproduction", ok,
           "calibrated convention residual " + num(cal.best_residual) +
               "; position entropies within " + num(worst_r) + " (tol 1e-3) on " +
               std::to_string(total) + " rows; " + std::to_string(trends - trend_breaks) +
               "/" + std::to_string(trends) + " qualitative trends hold (all must); " +
               std::to_string(close_r) + "/" + std::to_string(total) +
               " S_r and " + std::to_string(close_p) + "/" + std::to_string(total) +
               " S_p cells within 5e-3 (reported, not gated); residuals in "
               "entropy_residuals.csv");
}

// ------------------------------------------------------------- criterion 7

void criterion_landau() {
    SystemConfig cfg;
    cfg.B = 1.5;
    cfg.phi = 0.25;
    const PotentialSpec pot = Anharmonic{1.0, 0.5, 0.0};
    const QuantumNumbers qn{1, 1};
    const double e1 = landau_limit(cfg, pot, qn).energy;

    auto gap = [&](double alpha) {
        SystemConfig c = cfg;
        c.alpha = alpha;
        return std::abs(energy(c, pot, qn).energy - e1);
    };
    const bool monotone = gap(0.9) > gap(0.99) && gap(0.99) > gap(0.999) &&
                          gap(0.999) > 0.0;
    // the gap closes linearly in (1 - alpha): halving the distance should
    // roughly halve the gap
    const double ratio = gap(0.998) / gap(0.999);
    const bool rate_ok = ratio > 1.0 && ratio < 4.0;

    SystemConfig flat = cfg;
    flat.alpha = 1.0;
    const bool exact = landau_limit(cfg, pot, qn).energy ==
                       energy(flat, pot, qn).energy;

    report(7, "flat-space limit", monotone && rate_ok && exact,
           "gap shrinks monotonically as alpha -> 1, linear-rate ratio " +
               num(ratio) + " (expected near 2, accepted within factor 2)");
}

// ------------------------------------------------------------- criterion 8

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(DQM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    out += "exit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
    return out;
}

void criterion_determinism() {
    const std::string a = run_cli("validate --sweep-seed 42");
    const std::string b = run_cli("validate --sweep-seed 42");
    const bool passed = a.find(", 0 failed") != std::string::npos &&
                        a.find("exit=0") != std::string::npos;
    report(8, "cli validation battery determinism", passed && a == b,
           std::string("two seed-42 runs ") +
               (a == b ? "byte-identical" : "DIFFER") + ", battery " +
               (passed ? "all passed" : "had failures"));
}

}  // namespace

int main() {
    criterion_oracle();
    criterion_wavefunctions();
    criterion_thermo();
    criterion_magnetics();
    criterion_bbm();
    criterion_tables();
    criterion_landau();
    criterion_determinism();
    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
              << " (" << (8 - g_failures) << "/8 criteria)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
