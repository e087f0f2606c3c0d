// dqm: command-line surface over the disclination bound-state library.
//
// Subcommands: spectrum, wavefunction, effective-potential, thermo,
// magnetics, entropy, tables, validate. Parameters come from an optional
// JSON config file (strict: unknown keys are rejected) overridden by flags.
// Exit codes: 0 success, 1 validation failure, 2 configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dqm/infoentropy.hpp"
#include "dqm/magnetics.hpp"
#include "dqm/oracle.hpp"
#include "dqm/parallel.hpp"
#include "dqm/spectrum.hpp"
#include "dqm/thermo.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// all serialized numbers carry 12 significant digits
double round12(double v) { return std::strtod(fmt(v).c_str(), nullptr); }

constexpr const char* kAssumptionsHeader =
    "# units: hbar = 1, M = 1 (unless overridden), |e| = 1, kappa = 1";

struct Params {
    double alpha = 1.0, B = 0.0, phi = 0.0, mass = 1.0, charge = 1.0;
    int charge_sign = 1;
    std::string potential = "harmonic";
    double a = 0.0, b = 1.0, c = 0.0, omega = 1.0, De = 1.0, r0 = 1.0;
    int n = 0, ell = 0;
    double beta = 1.0;

    std::string sweep;
    double sweep_min = 0.0, sweep_max = 0.0;
    int sweep_steps = 1;

    std::string output;
    std::string format;  // "csv" | "json"; empty = command default

    std::string measure = "plain";      // plain | radial | conical
    std::string rule = "raw";           // modulus | wavefunction | raw
    std::string cyclotron = "eb-over-m";  // eb-over-2m | eb-over-m
    int which = 0;                      // tables: 0 = all
    bool calibrate = false;

    double r_min = 0.0, r_max = 0.0;
    int points = 400;
    unsigned sweep_seed = 42;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void apply_json_config(const std::string& path, Params& p) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const std::exception& ex) {
        throw ConfigError(std::string("config parse error: ") + ex.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    const std::map<std::string, std::function<void(const ordered_json&)>> setters = {
        {"alpha", [&](const ordered_json& v) { p.alpha = v.get<double>(); }},
        {"B", [&](const ordered_json& v) { p.B = v.get<double>(); }},
        {"phi", [&](const ordered_json& v) { p.phi = v.get<double>(); }},
        {"mass", [&](const ordered_json& v) { p.mass = v.get<double>(); }},
        {"charge", [&](const ordered_json& v) { p.charge = v.get<double>(); }},
        {"charge_sign", [&](const ordered_json& v) { p.charge_sign = v.get<int>(); }},
        {"potential", [&](const ordered_json& v) { p.potential = v.get<std::string>(); }},
        {"a", [&](const ordered_json& v) { p.a = v.get<double>(); }},
        {"b", [&](const ordered_json& v) { p.b = v.get<double>(); }},
        {"c", [&](const ordered_json& v) { p.c = v.get<double>(); }},
        {"omega", [&](const ordered_json& v) { p.omega = v.get<double>(); }},
        {"De", [&](const ordered_json& v) { p.De = v.get<double>(); }},
        {"r0", [&](const ordered_json& v) { p.r0 = v.get<double>(); }},
        {"n", [&](const ordered_json& v) { p.n = v.get<int>(); }},
        {"ell", [&](const ordered_json& v) { p.ell = v.get<int>(); }},
        {"beta", [&](const ordered_json& v) { p.beta = v.get<double>(); }},
        {"sweep", [&](const ordered_json& v) { p.sweep = v.get<std::string>(); }},
        {"sweep_min", [&](const ordered_json& v) { p.sweep_min = v.get<double>(); }},
        {"sweep_max", [&](const ordered_json& v) { p.sweep_max = v.get<double>(); }},
        {"sweep_steps", [&](const ordered_json& v) { p.sweep_steps = v.get<int>(); }},
        {"output", [&](const ordered_json& v) { p.output = v.get<std::string>(); }},
        {"format", [&](const ordered_json& v) { p.format = v.get<std::string>(); }},
        {"measure", [&](const ordered_json& v) { p.measure = v.get<std::string>(); }},
        {"rule", [&](const ordered_json& v) { p.rule = v.get<std::string>(); }},
        {"cyclotron", [&](const ordered_json& v) { p.cyclotron = v.get<std::string>(); }},
        {"which", [&](const ordered_json& v) { p.which = v.get<int>(); }},
        {"r_min", [&](const ordered_json& v) { p.r_min = v.get<double>(); }},
        {"r_max", [&](const ordered_json& v) { p.r_max = v.get<double>(); }},
        {"points", [&](const ordered_json& v) { p.points = v.get<int>(); }},
        {"sweep_seed", [&](const ordered_json& v) { p.sweep_seed = v.get<unsigned>(); }},
    };
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        auto setter = setters.find(it.key());
        if (setter == setters.end())
            throw ConfigError("unknown config field: " + it.key());
        try {
            setter->second(it.value());
        } catch (const std::exception&) {
            throw ConfigError("bad value for config field: " + it.key());
        }
    }
}

dqm::SystemConfig system_config(const Params& p) {
    dqm::SystemConfig cfg;
    cfg.alpha = p.alpha;
    cfg.B = p.B;
    cfg.phi = p.phi;
    cfg.mass = p.mass;
    cfg.charge = p.charge;
    cfg.charge_sign = p.charge_sign;
    return cfg;
}

dqm::PotentialSpec potential_spec(const Params& p) {
    if (p.potential == "anharmonic") return dqm::Anharmonic{p.a, p.b, p.c};
    if (p.potential == "harmonic") return dqm::Harmonic{p.omega};
    if (p.potential == "pseudoharmonic") return dqm::Pseudoharmonic{p.De, p.r0};
    if (p.potential == "shifted-pseudoharmonic")
        return dqm::ShiftedPseudoharmonic{p.De, p.r0};
    if (p.potential == "inverse-square") return dqm::InverseSquare{p.b};
    throw ConfigError("unknown potential: " + p.potential);
}

dqm::DensityConvention convention(const Params& p) {
    dqm::DensityConvention conv;
    if (p.measure == "plain") conv.position_measure = dqm::PositionMeasure::plain_dr;
    else if (p.measure == "radial") conv.position_measure = dqm::PositionMeasure::radial_r_dr;
    else if (p.measure == "conical")
        conv.position_measure = dqm::PositionMeasure::conical_alpha_r_dr;
    else throw ConfigError("unknown measure: " + p.measure);
    if (p.rule == "modulus") conv.momentum_rule = dqm::MomentumRule::ft_of_density_modulus;
    else if (p.rule == "wavefunction")
        conv.momentum_rule = dqm::MomentumRule::ft_of_wavefunction;
    else if (p.rule == "raw")
        conv.momentum_rule = dqm::MomentumRule::ft_of_density_modulus_raw;
    else throw ConfigError("unknown rule: " + p.rule);
    return conv;
}

dqm::CyclotronFactor cyclotron_factor(const Params& p) {
    if (p.cyclotron == "eb-over-2m") return dqm::CyclotronFactor::eb_over_2m;
    if (p.cyclotron == "eb-over-m") return dqm::CyclotronFactor::eb_over_m;
    throw ConfigError("unknown cyclotron convention: " + p.cyclotron);
}

// sweep variable -> setter; integer variables round
const std::map<std::string, std::function<void(Params&, double)>>& sweep_setters() {
    static const std::map<std::string, std::function<void(Params&, double)>> m = {
        {"alpha", [](Params& p, double v) { p.alpha = v; }},
        {"B", [](Params& p, double v) { p.B = v; }},
        {"phi", [](Params& p, double v) { p.phi = v; }},
        {"beta", [](Params& p, double v) { p.beta = v; }},
        {"a", [](Params& p, double v) { p.a = v; }},
        {"b", [](Params& p, double v) { p.b = v; }},
        {"omega", [](Params& p, double v) { p.omega = v; }},
        {"De", [](Params& p, double v) { p.De = v; }},
        {"r0", [](Params& p, double v) { p.r0 = v; }},
        {"n", [](Params& p, double v) { p.n = static_cast<int>(std::lround(v)); }},
        {"ell", [](Params& p, double v) { p.ell = static_cast<int>(std::lround(v)); }},
    };
    return m;
}

std::vector<Params> expand_sweep(const Params& p) {
    if (p.sweep.empty()) return {p};
    auto it = sweep_setters().find(p.sweep);
    if (it == sweep_setters().end()) throw ConfigError("unknown sweep variable: " + p.sweep);
    if (p.sweep_steps < 1) throw ConfigError("sweep_steps must be >= 1");
    std::vector<Params> out;
    out.reserve(p.sweep_steps);
    for (int i = 0; i < p.sweep_steps; ++i) {
        const double x = (p.sweep_steps == 1)
                             ? p.sweep_min
                             : p.sweep_min + i * (p.sweep_max - p.sweep_min) /
                                                 (p.sweep_steps - 1);
        Params q = p;
        it->second(q, x);
        out.push_back(q);
    }
    return out;
}

double sweep_value(const Params& base, int i) {
    if (base.sweep_steps == 1) return base.sweep_min;
    return base.sweep_min +
           i * (base.sweep_max - base.sweep_min) / (base.sweep_steps - 1);
}

class Output {
public:
    explicit Output(const Params& p) {
        if (!p.output.empty()) {
            file_.open(p.output);
            if (!file_) throw ConfigError("cannot open output file: " + p.output);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_csv(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    os << kAssumptionsHeader << "\n";
    for (size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

void emit_series(const Params& p, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows,
                 const std::string& default_format) {
    Output out(p);
    const std::string format = p.format.empty() ? default_format : p.format;
    if (format == "csv") {
        emit_csv(out.stream(), header, rows);
    } else if (format == "json") {
        ordered_json doc;
        doc["assumptions"] = "hbar = 1, M = 1 (unless overridden), |e| = 1, kappa = 1";
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json obj;
            for (size_t i = 0; i < row.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        doc["rows"] = arr;
        out.stream() << doc.dump(2) << "\n";
    } else {
        throw ConfigError("unknown format: " + format);
    }
}

// ---------------------------------------------------------------- commands

int cmd_spectrum(const Params& p) {
    const std::vector<Params> sweep = expand_sweep(p);
    if (sweep.size() == 1 && p.format != "csv") {
        const auto level = dqm::energy(system_config(p), potential_spec(p), {p.n, p.ell});
        Output out(p);
        ordered_json doc;
        doc["energy"] = round12(level.energy);
        out.stream() << doc.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < sweep.size(); ++i) {
        const Params& q = sweep[i];
        const auto level = dqm::energy(system_config(q), potential_spec(q), {q.n, q.ell});
        rows.push_back({p.sweep, fmt(sweep_value(p, static_cast<int>(i))),
                        fmt(level.energy)});
    }
    emit_series(p, {"variable", "value", "energy"}, rows, "csv");
    return 0;
}

int cmd_wavefunction(const Params& p) {
    const auto state =
        dqm::wavefunction(system_config(p), potential_spec(p), {p.n, p.ell});
    const double r_max = (p.r_max > 0.0) ? p.r_max : state.tail_radius();
    if (p.points < 2) throw ConfigError("points must be >= 2");
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < p.points; ++i) {
        const double r = p.r_min + i * (r_max - p.r_min) / (p.points - 1);
        rows.push_back({fmt(r), fmt(state(r))});
    }
    emit_series(p, {"r", "psi"}, rows, "csv");
    return 0;
}

int cmd_effective_potential(const Params& p) {
    const auto cfg = system_config(p);
    const auto pot = potential_spec(p);
    const double r_min = (p.r_min > 0.0) ? p.r_min : 0.05;
    const double r_max = (p.r_max > 0.0) ? p.r_max : 10.0;
    if (p.points < 2) throw ConfigError("points must be >= 2");
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < p.points; ++i) {
        const double r = r_min + i * (r_max - r_min) / (p.points - 1);
        rows.push_back({fmt(r),
                        fmt(dqm::effective_potential(cfg, pot, r, p.ell,
                                                     dqm::LinearFieldTerm::signed_reading)),
                        fmt(dqm::effective_potential(cfg, pot, r, p.ell,
                                                     dqm::LinearFieldTerm::absolute_reading))});
    }
    emit_series(p, {"r", "V_eff_signed", "V_eff_absolute"}, rows, "csv");
    return 0;
}

int cmd_thermo(const Params& p) {
    const std::vector<Params> sweep = expand_sweep(p);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < sweep.size(); ++i) {
        const Params& q = sweep[i];
        dqm::ThermoInput in{q.beta, system_config(q), potential_spec(q), q.ell};
        rows.push_back({p.sweep.empty() ? "beta" : p.sweep,
                        fmt(p.sweep.empty() ? q.beta
                                            : sweep_value(p, static_cast<int>(i))),
                        fmt(dqm::log_partition_function(in)),
                        fmt(dqm::free_energy(in)), fmt(dqm::mean_energy(in)),
                        fmt(dqm::heat_capacity(in)), fmt(dqm::entropy_thermo(in))});
    }
    emit_series(p, {"variable", "value", "lnZ", "F", "U", "C", "S"}, rows,
                sweep.size() == 1 ? "json" : "csv");
    return 0;
}

int cmd_magnetics(const Params& p) {
    const std::vector<Params> sweep = expand_sweep(p);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < sweep.size(); ++i) {
        const Params& q = sweep[i];
        const auto cfg = system_config(q);
        const auto pot = potential_spec(q);
        const dqm::QuantumNumbers qn{q.n, q.ell};
        dqm::ThermoInput in{q.beta, cfg, pot, q.ell};
        rows.push_back({p.sweep.empty() ? "beta" : p.sweep,
                        fmt(p.sweep.empty() ? q.beta
                                            : sweep_value(p, static_cast<int>(i))),
                        fmt(dqm::persistent_current(cfg, pot, qn)),
                        fmt(dqm::magnetization_zero_T(cfg, pot, qn)),
                        fmt(dqm::susceptibility_zero_T(cfg, pot, qn)),
                        fmt(dqm::magnetization_finite_T(in)),
                        fmt(dqm::susceptibility_finite_T(in))});
    }
    emit_series(p,
                {"variable", "value", "I", "M_zero_T", "chi_zero_T", "M_finite_T",
                 "chi_finite_T"},
                rows, sweep.size() == 1 ? "json" : "csv");
    return 0;
}

int cmd_entropy(const Params& p) {
    const auto conv = convention(p);
    const auto factor = cyclotron_factor(p);
    const auto state =
        dqm::wavefunction(system_config(p), potential_spec(p), {p.n, p.ell}, factor);
    const auto rep = dqm::entropy_report(state, conv);
    const auto bbm = dqm::bbm_check(rep);
    Output out(p);
    ordered_json doc;
    doc["assumptions"] = "hbar = 1, M = 1 (unless overridden), |e| = 1, kappa = 1";
    doc["s_position"] = round12(rep.s_position);
    doc["s_momentum"] = round12(rep.s_momentum);
    doc["total"] = round12(rep.total);
    doc["bbm_bound"] = round12(rep.bbm_bound);
    doc["bbm_margin"] = round12(bbm.margin);
    doc["bbm_satisfied"] = bbm.satisfied;
    out.stream() << doc.dump(2) << "\n";
    return 0;
}

int cmd_tables(const Params& p) {
    dqm::DensityConvention conv = convention(p);
    dqm::CyclotronFactor factor = cyclotron_factor(p);
    if (p.calibrate) {
        const auto& t1 = dqm::reference_table(1);
        const auto cal = dqm::calibrate_convention({t1[0], t1[1]});
        conv = cal.convention;
        factor = cal.cyclotron;
    }
    std::vector<int> which = (p.which == 0) ? std::vector<int>{1, 2, 3}
                                            : std::vector<int>{p.which};
    std::vector<std::vector<std::string>> rows;
    for (int t : which) {
        const auto repro = dqm::reproduce_table(t, conv, factor);
        for (const auto& r : repro) {
            rows.push_back({std::to_string(r.ref.table), std::to_string(r.ref.n),
                            fmt(r.ref.alpha), fmt(r.ref.param1), fmt(r.ref.param2),
                            fmt(r.ref.B), fmt(r.ref.phi), fmt(r.s_r), fmt(r.s_p),
                            fmt(r.total), fmt(r.ref.s_r), fmt(r.ref.s_p),
                            fmt(r.residual_r), fmt(r.residual_p), fmt(r.bbm_margin),
                            r.failed ? r.error : "ok"});
        }
    }
    emit_series(p,
                {"table", "n", "alpha", "param1", "param2", "B", "phi", "S_r", "S_p",
                 "total", "ref_S_r", "ref_S_p", "residual_r", "residual_p",
                 "bbm_margin", "status"},
                rows, "csv");
    return 0;
}

// ------------------------------------------------------------- validation

struct Battery {
    std::ostream& os;
    int passed = 0;
    int failed = 0;

    void check(const std::string& name, bool ok, const std::string& detail) {
        os << (ok ? "pass" : "FAIL") << "  " << name << "  " << detail << "\n";
        (ok ? passed : failed) += 1;
    }
};

int cmd_validate(const Params& p) {
    Output out(p);
    std::ostream& os = out.stream();
    Battery bat{os};
    os << kAssumptionsHeader << "\n";
    os << "# validation battery, sweep seed " << p.sweep_seed << "\n";

    std::mt19937 rng(p.sweep_seed);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (rng() / 4294967296.0);
    };

    // 1. closed-form energies vs the independent Numerov oracle
    struct OracleCase {
        dqm::SystemConfig cfg;
        dqm::PotentialSpec pot;
        dqm::QuantumNumbers qn;
    };
    std::vector<OracleCase> cases;
    for (int i = 0; i < 20; ++i) {
        OracleCase oc;
        oc.cfg.alpha = uniform(0.3, 1.0);
        oc.cfg.phi = uniform(-1.0, 1.0);
        oc.qn.n = static_cast<int>(uniform(0.0, 2.999));
        oc.qn.ell = static_cast<int>(uniform(-2.0, 2.999));
        const int family = i % 5;
        oc.cfg.B = (family == 4) ? uniform(0.5, 3.0) : uniform(0.0, 3.0);
        switch (family) {
            case 0: oc.pot = dqm::Anharmonic{uniform(0.2, 2.0), uniform(0.0, 2.0), uniform(-1.0, 1.0)}; break;
            case 1: oc.pot = dqm::Harmonic{uniform(0.5, 2.5)}; break;
            case 2: oc.pot = dqm::Pseudoharmonic{uniform(0.5, 3.0), uniform(0.5, 2.0)}; break;
            case 3: oc.pot = dqm::ShiftedPseudoharmonic{uniform(0.5, 3.0), uniform(0.5, 2.0)}; break;
            default: oc.pot = dqm::InverseSquare{uniform(0.5, 3.0)}; break;
        }
        // a = 0 and B = 0 has no bound family; nudge the field on
        if (family == 4 && oc.cfg.B <= 0.0) oc.cfg.B = 1.0;
        cases.push_back(oc);
    }
    std::vector<std::string> oracle_lines(cases.size());
    std::vector<bool> oracle_ok(cases.size());
    dqm::parallel_for(static_cast<int>(cases.size()), [&](int i) {
        const OracleCase& oc = cases[i];
        std::ostringstream line;
        try {
            const double e_closed = dqm::energy(oc.cfg, oc.pot, oc.qn).energy;
            const double e_oracle =
                dqm::numerov_eigenvalue(oc.cfg, oc.pot, oc.qn.ell, oc.qn.n);
            const double rel = std::abs(e_oracle - e_closed) / (1.0 + std::abs(e_closed));
            oracle_ok[i] = rel <= 1e-5;
            char buf[128];
            std::snprintf(buf, sizeof(buf), "E=%.12g rel=%.3e", e_closed, rel);
            line << buf;
        } catch (const std::exception& ex) {
            oracle_ok[i] = false;
            line << "error: " << ex.what();
        }
        oracle_lines[i] = line.str();
    });
    for (size_t i = 0; i < cases.size(); ++i)
        bat.check("oracle-energy-" + std::to_string(i), oracle_ok[i], oracle_lines[i]);

    // 2. normalization and node counts
    for (int i = 0; i < 5; ++i) {
        dqm::SystemConfig cfg;
        cfg.alpha = uniform(0.4, 1.0);
        cfg.B = uniform(0.0, 2.0);
        cfg.phi = uniform(-0.9, 0.9);
        const dqm::PotentialSpec pot = dqm::Anharmonic{uniform(0.3, 1.5), uniform(0.0, 1.5), 0.0};
        const int ell = static_cast<int>(uniform(-2.0, 2.999));
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const auto sn = dqm::wavefunction(cfg, pot, {n, ell});
            for (int m = n; m <= 3; ++m) {
                const auto sm = dqm::wavefunction(cfg, pot, {m, ell});
                const double overlap =
                    dqm::integrate_semiline(
                        [&](double r) { return sn(r) * sm(r) * cfg.alpha * r; }, 1e-11)
                        .value;
                worst = std::max(worst, std::abs(overlap - (n == m ? 1.0 : 0.0)));
            }
        }
        bat.check("orthonormality-" + std::to_string(i), worst <= 1e-8,
                  "worst deviation " + fmt(worst));
    }

    // 3. thermodynamics: closed forms vs a 2000-level Boltzmann sum
    {
        dqm::SystemConfig cfg;
        cfg.alpha = 0.75;
        cfg.B = 1.0;
        cfg.phi = 0.75;
        const dqm::PotentialSpec pot = dqm::Anharmonic{1.0, 1.0, 0.0};
        const auto d = dqm::derive_params(cfg, pot, {0, 1});
        double worst = 0.0;
        for (double x : {0.05, 0.3, 1.0, 3.0, 10.0}) {
            const double beta = x / d.omega0;
            dqm::ThermoInput in{beta, cfg, pot, 1};
            double lnz_series = 0.0;
            {
                // sum exp(-beta E_n) stably via the n = 0 anchor
                double acc = 0.0;
                for (int n = 0; n < 2000; ++n) acc += std::exp(-beta * d.omega0 * 2.0 * n);
                lnz_series = -beta * (d.omega0 * (d.j + 1.0) + d.Q) + std::log(acc);
            }
            const double lnz = dqm::log_partition_function(in);
            worst = std::max(worst, std::abs(lnz - lnz_series) / std::abs(lnz_series));
            const double s_identity = dqm::entropy_thermo(in) -
                                      beta * (dqm::mean_energy(in) - dqm::free_energy(in));
            worst = std::max(worst, std::abs(s_identity));
        }
        bat.check("thermo-series", worst <= 1e-8, "worst rel deviation " + fmt(worst));
        dqm::ThermoInput tiny{1e-3 / d.omega0, cfg, pot, 1};
        bat.check("thermo-classical-limit",
                  std::abs(dqm::heat_capacity(tiny) - 1.0) <= 1e-4,
                  "C(beta omega0 = 1e-3) = " + fmt(dqm::heat_capacity(tiny)));
    }

    // 4. magnetics: derivative identities
    {
        dqm::SystemConfig cfg;
        cfg.alpha = 0.75;
        cfg.B = 1.0;
        cfg.phi = 0.25;
        const dqm::PotentialSpec pot = dqm::Anharmonic{1.0, 1.0, 0.0};
        const dqm::QuantumNumbers qn{0, 1};  // ell > phi
        const double h = 1e-6;
        auto e_at_phi = [&](double phi) {
            dqm::SystemConfig c = cfg;
            c.phi = phi;
            return dqm::energy(c, pot, qn).energy;
        };
        const double i_fd = -(cfg.charge / (2.0 * M_PI)) *
                            (e_at_phi(cfg.phi + h) - e_at_phi(cfg.phi - h)) / (2.0 * h);
        const double i_closed = dqm::persistent_current(cfg, pot, qn);
        bat.check("byers-yang", std::abs(i_fd - i_closed) <= 1e-6 * (1.0 + std::abs(i_closed)),
                  "closed " + fmt(i_closed) + " fd " + fmt(i_fd));

        double worst_t = 0.0;
        for (double beta : {0.1, 1.0, 10.0}) {
            dqm::ThermoInput in{beta, cfg, pot, qn.ell};
            auto f_at_phi = [&](double phi) {
                dqm::ThermoInput j = in;
                j.config.phi = phi;
                return dqm::free_energy(j);
            };
            const double i_t = -(cfg.charge / (2.0 * M_PI)) *
                               (f_at_phi(cfg.phi + h) - f_at_phi(cfg.phi - h)) / (2.0 * h);
            worst_t = std::max(worst_t, std::abs(i_t - i_closed));
        }
        bat.check("current-temperature-independence", worst_t <= 1e-6,
                  "worst |I(T) - I(0)| " + fmt(worst_t));

        auto m_at_b = [&](double B) {
            dqm::SystemConfig c = cfg;
            c.B = B;
            return dqm::magnetization_zero_T(c, pot, qn);
        };
        const double chi_fd = (m_at_b(cfg.B + h) - m_at_b(cfg.B - h)) / (2.0 * h);
        const double chi = dqm::susceptibility_zero_T(cfg, pot, qn);
        bat.check("susceptibility-chain", std::abs(chi_fd - chi) <= 1e-5,
                  "closed " + fmt(chi) + " fd " + fmt(chi_fd));
        dqm::ThermoInput in{1.0, cfg, pot, qn.ell};
        const double chi_t = dqm::susceptibility_finite_T(in);
        const double chi_t_fd =
            dqm::susceptibility_finite_T(in, dqm::DerivativeMethod::finite_difference);
        bat.check("susceptibility-finite-T", std::abs(chi_t - chi_t_fd) <= 1e-5,
                  "analytic " + fmt(chi_t) + " fd " + fmt(chi_t_fd));
        bat.check("susceptibility-a-zero",
                  dqm::susceptibility_zero_T(cfg, dqm::InverseSquare{1.0}, qn) == 0.0,
                  "chi(a = 0) exactly zero");
    }

    // 5. BBM bound on random states under the standard momentum rule
    {
        const dqm::DensityConvention conv{dqm::PositionMeasure::plain_dr,
                                          dqm::MomentumRule::ft_of_wavefunction};
        struct BbmCase {
            dqm::SystemConfig cfg;
            dqm::PotentialSpec pot;
            dqm::QuantumNumbers qn;
        };
        std::vector<BbmCase> bcases;
        for (int i = 0; i < 10; ++i) {
            BbmCase bc;
            bc.cfg.alpha = uniform(0.3, 1.0);
            bc.cfg.B = uniform(0.2, 3.0);
            bc.cfg.phi = uniform(-1.0, 1.0);
            bc.pot = dqm::Anharmonic{uniform(0.2, 2.0), uniform(0.05, 2.0), 0.0};
            bc.qn = {static_cast<int>(uniform(0.0, 2.999)),
                     static_cast<int>(uniform(-2.0, 2.999))};
            bcases.push_back(bc);
        }
        std::vector<double> margins(bcases.size());
        std::vector<std::string> errs(bcases.size());
        dqm::parallel_for(static_cast<int>(bcases.size()), [&](int i) {
            try {
                const auto state =
                    dqm::wavefunction(bcases[i].cfg, bcases[i].pot, bcases[i].qn);
                const auto rep = dqm::entropy_report(state, conv);
                margins[i] = dqm::bbm_check(rep).margin;
            } catch (const std::exception& ex) {
                margins[i] = -1.0;
                errs[i] = ex.what();
            }
        });
        for (size_t i = 0; i < bcases.size(); ++i)
            bat.check("bbm-" + std::to_string(i), margins[i] >= -1e-6,
                      errs[i].empty() ? "margin " + fmt(margins[i]) : errs[i]);
    }

    // 6. Landau limit: monotonic approach to alpha = 1
    {
        dqm::SystemConfig cfg;
        cfg.B = 1.5;
        cfg.phi = 0.25;
        const dqm::PotentialSpec pot = dqm::Anharmonic{1.0, 0.5, 0.0};
        const dqm::QuantumNumbers qn{1, 1};
        std::vector<double> es;
        for (double alpha : {0.9, 0.99, 0.999, 1.0}) {
            dqm::SystemConfig c = cfg;
            c.alpha = alpha;
            es.push_back(dqm::energy(c, pot, qn).energy);
        }
        const double e1 = dqm::landau_limit(cfg, pot, qn).energy;
        const bool monotone = std::abs(es[1] - e1) < std::abs(es[0] - e1) &&
                              std::abs(es[2] - e1) < std::abs(es[1] - e1) &&
                              es[3] == e1;
        bat.check("landau-limit", monotone,
                  "gaps " + fmt(es[0] - e1) + " " + fmt(es[1] - e1) + " " +
                      fmt(es[2] - e1));
    }

    os << "summary: " << bat.passed << " passed, " << bat.failed << " failed\n";
    return bat.failed == 0 ? 0 : 1;
}

}  // namespace

struct Cli {
    CLI::App app{"bound states on a conical background: spectra, thermodynamics, "
                 "magnetics, information entropies"};
    Params p;
    std::string config_path;
    CLI::App* spectrum;
    CLI::App* wavefn;
    CLI::App* veff;
    CLI::App* thermo;
    CLI::App* magnet;
    CLI::App* entropy;
    CLI::App* tables;
    CLI::App* validate;

    Cli();
};

Cli::Cli() {
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (strict keys)");
        sub->add_option("--alpha", p.alpha);
        sub->add_option("--B", p.B);
        sub->add_option("--phi", p.phi);
        sub->add_option("--mass", p.mass);
        sub->add_option("--charge", p.charge);
        sub->add_option("--charge-sign", p.charge_sign);
        sub->add_option("--potential", p.potential);
        sub->add_option("--a", p.a);
        sub->add_option("--b", p.b);
        sub->add_option("--c", p.c);
        sub->add_option("--omega", p.omega);
        sub->add_option("--De", p.De);
        sub->add_option("--r0", p.r0);
        sub->add_option("--n", p.n);
        sub->add_option("--ell", p.ell);
        sub->add_option("--beta", p.beta);
        sub->add_option("--sweep", p.sweep);
        sub->add_option("--sweep-min", p.sweep_min);
        sub->add_option("--sweep-max", p.sweep_max);
        sub->add_option("--sweep-steps", p.sweep_steps);
        sub->add_option("--output", p.output);
        sub->add_option("--format", p.format);
        return sub;
    };

    spectrum = add_common(app.add_subcommand("spectrum", "closed-form energies"));
    wavefn = add_common(app.add_subcommand("wavefunction", "radial state samples"));
    wavefn->add_option("--r-min", p.r_min);
    wavefn->add_option("--r-max", p.r_max);
    wavefn->add_option("--points", p.points);
    veff = add_common(app.add_subcommand("effective-potential", "effective potential curve"));
    veff->add_option("--r-min", p.r_min);
    veff->add_option("--r-max", p.r_max);
    veff->add_option("--points", p.points);
    thermo = add_common(app.add_subcommand("thermo", "partition-function quantities"));
    magnet = add_common(app.add_subcommand("magnetics", "currents and magnetization"));
    entropy = add_common(app.add_subcommand("entropy", "Shannon entropies"));
    entropy->add_option("--measure", p.measure);
    entropy->add_option("--rule", p.rule);
    entropy->add_option("--cyclotron", p.cyclotron);
    tables = add_common(app.add_subcommand("tables", "reference-table reproduction"));
    tables->add_option("--which", p.which);
    tables->add_option("--measure", p.measure);
    tables->add_option("--rule", p.rule);
    tables->add_option("--cyclotron", p.cyclotron);
    tables->add_flag("--calibrate", p.calibrate);
    validate = add_common(app.add_subcommand("validate", "oracle and property battery"));
    validate->add_option("--sweep-seed", p.sweep_seed);
}

int main(int argc, char** argv) {
    // First pass discovers the subcommand and any --config path; if a config
    // file is present, its values are loaded into fresh Params and argv is
    // parsed again on top, so command-line flags always win.
    Cli first;
    try {
        first.app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return first.app.exit(e) == 0 ? 0 : 2;
    }

    Cli cli;
    try {
        if (!first.config_path.empty()) apply_json_config(first.config_path, cli.p);
    } catch (const ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    }
    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return cli.app.exit(e) == 0 ? 0 : 2;
    }
    const Params& p = cli.p;

    try {
        if (cli.spectrum->parsed()) return cmd_spectrum(p);
        if (cli.wavefn->parsed()) return cmd_wavefunction(p);
        if (cli.veff->parsed()) return cmd_effective_potential(p);
        if (cli.thermo->parsed()) return cmd_thermo(p);
        if (cli.magnet->parsed()) return cmd_magnetics(p);
        if (cli.entropy->parsed()) return cmd_entropy(p);
        if (cli.tables->parsed()) return cmd_tables(p);
        if (cli.validate->parsed()) return cmd_validate(p);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const dqm::DomainError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const dqm::Error& ex) {
        std::cerr << "validation failure: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
