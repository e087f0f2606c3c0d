#include <cmath>

#include "doctest.h"
#include "dqm/infoentropy.hpp"

using namespace dqm;

namespace {

// flat-space harmonic ground state with omega = w: a pure Gaussian profile
RadialState gaussian_state(double w) {
    SystemConfig cfg;  // alpha = 1, B = 0, phi = 0
    return wavefunction(cfg, Harmonic{w}, {0, 0});
}

// rebuild the bound state a reference row describes (M = 1, |e| = 1, ell = 0)
RadialState row_state(const ReferenceRow& row, CyclotronFactor cyclotron) {
    SystemConfig cfg;
    cfg.alpha = row.alpha;
    cfg.B = row.B;
    cfg.phi = row.phi;
    PotentialSpec pot;
    if (row.table == 1)
        pot = Harmonic{row.param1};
    else if (row.table == 2)
        pot = Pseudoharmonic{row.param2, row.param1};
    else
        pot = InverseSquare{row.param1};
    return wavefunction(cfg, pot, {row.n, 0}, cyclotron);
}

const DensityConvention kPublished{PositionMeasure::plain_dr,
                                   MomentumRule::ft_of_density_modulus_raw};

}  // namespace

TEST_CASE("entropy quadrature against the Gaussian closed form") {
    // f(r) = 2/sqrt(2 pi s^2) e^{-r^2/(2 s^2)} is a unit half-line density;
    // its differential entropy is ln(s sqrt(2 pi e)) - ln 2
    for (double s : {0.5, 1.0, 3.0}) {
        const double norm = 2.0 / std::sqrt(2.0 * M_PI * s * s);
        const double got = differential_entropy_semiline(
            [=](double r) { return norm * std::exp(-0.5 * r * r / (s * s)); });
        const double expected =
            0.5 * std::log(2.0 * M_PI * M_E * s * s) - std::log(2.0);
        CHECK(got == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("position entropy scaling law") {
    // rescaling the state by sqrt(w) shifts S_r by -(1/2) ln w
    DensityConvention conv;
    const double s1 = position_entropy(gaussian_state(1.0), conv);
    const double s4 = position_entropy(gaussian_state(4.0), conv);
    CHECK(s1 - s4 == doctest::Approx(0.5 * std::log(4.0)).epsilon(1e-7));
}

TEST_CASE("bbm inequality holds under the standard momentum rule") {
    DensityConvention conv;
    conv.position_measure = PositionMeasure::plain_dr;
    conv.momentum_rule = MomentumRule::ft_of_wavefunction;
    const EntropyReport rep = entropy_report(gaussian_state(1.0), conv);
    CHECK(rep.total == rep.s_position + rep.s_momentum);
    CHECK(rep.total >= kBbmBound1D - 1e-6);
    // half-line truncation adds entropy over the exact Gaussian pair, but
    // not much of it
    CHECK(rep.total < kBbmBound1D + 1.5);

    const BbmResult bbm = bbm_check(rep);
    CHECK(bbm.margin == doctest::Approx(rep.total - kBbmBound1D).epsilon(1e-12));
    CHECK(bbm.satisfied);
}

TEST_CASE("an anchor row of the published tables is reproduced") {
    const ReferenceRow row = reference_table(1).front();
    const RadialState st = row_state(row, CyclotronFactor::eb_over_m);
    CHECK(position_entropy(st, kPublished) ==
          doctest::Approx(row.s_r).scale(1.0).epsilon(1e-3));
    CHECK(momentum_entropy(st, kPublished) ==
          doctest::Approx(row.s_p).scale(1.0).epsilon(2e-3));
}

TEST_CASE("a starved momentum cutoff is rejected") {
    const ReferenceRow row = reference_table(1).front();
    const RadialState st = row_state(row, CyclotronFactor::eb_over_m);
    MomentumGrid tiny;
    tiny.p_max = 0.25;
    tiny.num_points = 65;
    CHECK_THROWS_AS(momentum_entropy(st, kPublished, tiny), TailMassExceeded);
}

TEST_CASE("calibration recovers the published convention") {
    const auto& t1 = reference_table(1);
    std::vector<ReferenceRow> anchors = {t1.front(), t1.at(1)};
    const CalibrationResult cal = calibrate_convention(anchors);
    CHECK(cal.convention.position_measure == PositionMeasure::plain_dr);
    CHECK(cal.convention.momentum_rule == MomentumRule::ft_of_density_modulus_raw);
    CHECK(cal.cyclotron == CyclotronFactor::eb_over_m);
    CHECK(cal.best_residual < 0.05);
    CHECK(cal.residual_matrix.size() == 18);

    CHECK_THROWS_AS(calibrate_convention({}), DomainError);
}

TEST_CASE("table reproduction pins every position entropy") {
    const auto rows = reproduce_table(2, kPublished, CyclotronFactor::eb_over_m);
    const auto& t2 = reference_table(2);
    REQUIRE(rows.size() == t2.size());
    for (const auto& row : rows) {
        REQUIRE_FALSE(row.failed);
        CHECK(row.total == doctest::Approx(row.s_r + row.s_p).epsilon(1e-12));
        CHECK(std::abs(row.residual_r) < 1e-4);
        CHECK(row.bbm_margin == doctest::Approx(row.total - kBbmBound1D).epsilon(1e-12));
    }
}
