#pragma once

// Independent numerical eigen-solver for the radial problem, used to
// validate the closed-form energies. Works on the log-radial axis
// t = ln r, where psi(e^t) = v(t) obeys
//   v'' + (Lambda e^{2t} - j^2 - Omega^2 e^{4t}) v = 0
// with a constant centrifugal term, so the origin singularity never
// enters the grid.

#include "dqm/model.hpp"

namespace dqm {

struct RadialGrid {
    enum class Spacing { logarithmic, uniform };
    double r_min = 0.0;    ///< 0 picks a default from (Lambda, j)
    double r_max = 0.0;    ///< 0 picks Omega r^2 / 2 >= 40 + slack
    int num_points = 8000;
    Spacing spacing = Spacing::logarithmic;
};

/// (n+1)-th lowest eigenvalue of the radial equation, by Numerov shooting
/// with node counting and bisection. Independent of the closed forms: the
/// bracket grows from Lambda = 0 upward, never seeded by analytic results.
/// Throws BracketingFailure if the level cannot be isolated and
/// GridTooCoarse if the N vs 2N Richardson check disagrees beyond 10 tol.
double numerov_eigenvalue(const SystemConfig& config, const PotentialSpec& potential,
                          int ell, int n, const RadialGrid& grid = {},
                          double tol = 1e-8);

}  // namespace dqm
