#include <cmath>

#include "doctest.h"
#include "dqm/spectrum.hpp"

using namespace dqm;

namespace {

SystemConfig worked_config() {
    SystemConfig cfg;
    cfg.alpha = 0.75;
    cfg.B = 1.0;
    cfg.phi = 0.75;
    return cfg;
}
const PotentialSpec kWorkedPot = Anharmonic{1.0, 1.0, 0.0};

}  // namespace

TEST_CASE("flat-space harmonic ground state") {
    SystemConfig cfg;  // alpha = 1, B = 0, phi = 0
    const EnergyLevel level = energy(cfg, Harmonic{1.0}, {0, 0});
    CHECK(level.energy == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(level.case_tag == CaseTag::harmonic);
}

TEST_CASE("worked-point energy") {
    const SystemConfig cfg = worked_config();
    const DerivedParams d = derive_params(cfg, kWorkedPot, {0, 1});
    const double expected = d.Q + d.omega0 * (d.j + 1.0);
    const EnergyLevel level = energy(cfg, kWorkedPot, {0, 1});
    CHECK(level.energy == doctest::Approx(expected).epsilon(1e-14));
    CHECK(level.energy == doctest::Approx(4.0573661755).epsilon(1e-9));
    // one oscillator quantum spacing between consecutive n
    const EnergyLevel next = energy(cfg, kWorkedPot, {1, 1});
    CHECK(next.energy - level.energy == doctest::Approx(2.0 * d.omega0).epsilon(1e-13));
}

TEST_CASE("inverse-square potential binds only with a field") {
    SystemConfig cfg;
    CHECK_THROWS_AS(energy(cfg, InverseSquare{1.0}, {0, 0}), CaseDNeedsField);
    CHECK_THROWS_AS(wavefunction(cfg, InverseSquare{1.0}, {0, 0}), CaseDNeedsField);

    cfg.B = 2.0;
    cfg.alpha = 0.5;
    cfg.phi = 0.25;
    const DerivedParams d = derive_params(cfg, InverseSquare{1.0}, {1, 1});
    const double expected =
        (d.omega_c / cfg.alpha) * (2.0 + 1.0 + d.j + std::abs(1.0 - 0.25) / cfg.alpha);
    CHECK(energy(cfg, InverseSquare{1.0}, {1, 1}).energy ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("radial state is normalized under the conical measure") {
    const SystemConfig cfg = worked_config();
    for (int n : {0, 2}) {
        const RadialState st = wavefunction(cfg, kWorkedPot, {n, 1});
        const auto q = integrate_semiline(
            [&](double r) {
                const double psi = st(r);
                return psi * psi * cfg.alpha * r;
            },
            1e-12);
        CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("first excited state changes sign exactly once") {
    const SystemConfig cfg = worked_config();
    const RadialState st = wavefunction(cfg, kWorkedPot, {1, 1});
    const DerivedParams& d = st.params();
    const double node = std::sqrt((1.0 + d.j) / d.Omega);
    CHECK(node == doctest::Approx(1.25257).epsilon(1e-5));
    CHECK(st(node - 1e-3) * st(node + 1e-3) < 0.0);

    int sign_changes = 0;
    double prev = st(1e-3);
    for (int i = 1; i <= 2000; ++i) {
        const double cur = st(1e-3 + i * (st.tail_radius() - 1e-3) / 2000.0);
        if (prev * cur < 0.0) ++sign_changes;
        if (cur != 0.0) prev = cur;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("deep-tail evaluation neither overflows nor yields NaN") {
    const SystemConfig cfg = worked_config();
    const RadialState st = wavefunction(cfg, kWorkedPot, {3, -2});
    for (double r : {50.0, 200.0, 1e4}) {
        const double v = st(r);
        CHECK(std::isfinite(v));
        CHECK(std::abs(v) < 1e-100);
    }
    CHECK_THROWS_AS(st(-1.0), DomainError);
}

TEST_CASE("effective potential readings") {
    SystemConfig cfg = worked_config();
    const int ell = 0;  // ell < phi: the two readings differ
    const double r = 1.3;
    const double signed_v =
        effective_potential(cfg, kWorkedPot, r, ell, LinearFieldTerm::signed_reading);
    const double abs_v =
        effective_potential(cfg, kWorkedPot, r, ell, LinearFieldTerm::absolute_reading);
    const double dl = ell - cfg.phi;
    const double linear_gap = (cfg.charge * cfg.B / (2.0 * cfg.mass)) *
                              (std::abs(dl) - dl) / (cfg.alpha * cfg.alpha);
    CHECK(abs_v - signed_v == doctest::Approx(linear_gap).epsilon(1e-13));

    // hand-evaluated quadratic + centrifugal pieces
    const double expect_signed =
        (1.0 + 1.0 / (8.0 * 0.5625)) * r * r + (1.0 + dl * dl / (2.0 * 0.5625)) / (r * r) +
        0.5 * dl / 0.5625;
    CHECK(signed_v == doctest::Approx(expect_signed).epsilon(1e-13));

    CHECK_THROWS_AS(effective_potential(cfg, kWorkedPot, 0.0, ell), DomainError);
}

TEST_CASE("landau limit is the alpha = 1 spectrum") {
    SystemConfig cfg = worked_config();
    const EnergyLevel lim = landau_limit(cfg, kWorkedPot, {1, 1});
    SystemConfig flat = cfg;
    flat.alpha = 1.0;
    CHECK(lim.energy == energy(flat, kWorkedPot, {1, 1}).energy);

    // energies approach it monotonically from above as alpha -> 1
    double prev_gap = 1e300;
    for (double alpha : {0.9, 0.99, 0.999}) {
        SystemConfig c = cfg;
        c.alpha = alpha;
        const double gap = std::abs(energy(c, kWorkedPot, {1, 1}).energy - lim.energy);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}
