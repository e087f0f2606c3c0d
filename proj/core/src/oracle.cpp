#include "dqm/oracle.hpp"

#include <cmath>
#include <vector>

namespace dqm {

namespace {

struct Shot {
    int nodes = 0;
    double endpoint = 0.0;
};

// Numerov march of v'' = W v over a uniform grid in x, where x is either
// t = ln r (logarithmic) or r itself (uniform). Counts interior sign changes.
template <typename WFunc>
Shot shoot(const WFunc& W, double x0, double x1, int N, double u0, double u1) {
    const double h = (x1 - x0) / (N - 1);
    const double h2 = h * h / 12.0;
    double fp = 1.0 - h2 * W(x0);
    double fc = 1.0 - h2 * W(x0 + h);
    double up = u0, uc = u1;
    int nodes = 0;
    for (int i = 1; i < N - 1; ++i) {
        const double fn = 1.0 - h2 * W(x0 + (i + 1) * h);
        double un = ((12.0 - 10.0 * fc) * uc - fp * up) / fn;
        if (un * uc < 0.0) ++nodes;
        if (std::abs(un) > 1e250) {
            un *= 1e-250;
            uc *= 1e-250;
        }
        up = uc;
        uc = un;
        fp = fc;
        fc = fn;
    }
    return {nodes, uc};
}

struct Problem {
    double Omega, j, r_min, r_max;
    int N;
    RadialGrid::Spacing spacing;
};

Shot shoot_lambda(const Problem& pb, double lambda) {
    if (pb.spacing == RadialGrid::Spacing::logarithmic) {
        const double t0 = std::log(pb.r_min);
        const double t1 = std::log(pb.r_max);
        auto W = [&](double t) {
            const double r2 = std::exp(2.0 * t);
            return pb.j * pb.j + pb.Omega * pb.Omega * r2 * r2 - lambda * r2;
        };
        const double h = (t1 - t0) / (pb.N - 1);
        // regular solution psi ~ r^j, i.e. v ~ e^{j t}
        const double u0 = 1.0;
        const double u1 = std::exp(pb.j * h);
        return shoot(W, t0, t1, pb.N, u0, u1);
    }
    // uniform grid on the reduced form u = sqrt(r) psi
    auto W = [&](double r) {
        return (pb.j * pb.j - 0.25) / (r * r) + pb.Omega * pb.Omega * r * r - lambda;
    };
    const double h = (pb.r_max - pb.r_min) / (pb.N - 1);
    const double u0 = std::pow(pb.r_min, pb.j + 0.5);
    const double u1 = std::pow(pb.r_min + h, pb.j + 0.5);
    return shoot(W, pb.r_min, pb.r_max, pb.N, u0, u1);
}

// Node-count bisection: the interior node count jumps from n to n+1 exactly
// when lambda crosses the (n+1)-th eigenvalue.
double solve_lambda(const Problem& pb, int n, double tol) {
    double hi = 4.0 * pb.Omega;
    int guard = 0;
    while (shoot_lambda(pb, hi).nodes <= n) {
        hi *= 2.0;
        if (++guard > 60)
            throw BracketingFailure("numerov_eigenvalue: node count never exceeded n");
    }
    double lo = 0.0;
    for (int iter = 0; iter < 200 && (hi - lo) > tol * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (shoot_lambda(pb, mid).nodes <= n)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double numerov_eigenvalue(const SystemConfig& config, const PotentialSpec& potential,
                          int ell, int n, const RadialGrid& grid, double tol) {
    if (!(tol > 0.0)) throw DomainError("numerov_eigenvalue: tol must be > 0");
    if (n < 0 || n > 5) throw DomainError("numerov_eigenvalue: n must be in [0, 5]");
    const DerivedParams d = derive_params(config, potential, {n, ell});

    Problem pb;
    pb.Omega = d.Omega;
    pb.j = d.j;
    pb.N = grid.num_points;
    pb.spacing = grid.spacing;
    pb.r_max = (grid.r_max > 0.0)
                   ? grid.r_max
                   : std::sqrt(2.0 * (40.0 + 8.0 * n) / d.Omega);
    if (grid.r_min > 0.0) {
        pb.r_min = grid.r_min;
    } else if (pb.spacing == RadialGrid::Spacing::logarithmic) {
        // small enough that Lambda r^2 << j^2 + 1 at the left edge
        pb.r_min = 1e-4 / std::sqrt(std::max(1.0, 8.0 * d.Omega * (2.0 * n + d.j + 1.0)));
    } else {
        pb.r_min = pb.r_max / (pb.N - 1);
    }
    if (!(pb.r_min < pb.r_max))
        throw DomainError("numerov_eigenvalue: r_min must be < r_max");
    if (pb.N < 1000) throw DomainError("numerov_eigenvalue: num_points must be >= 1000");

    const double lam = solve_lambda(pb, n, tol);

    Problem fine = pb;
    fine.N = 2 * pb.N;
    const double lam_fine = solve_lambda(fine, n, tol);
    if (std::abs(lam_fine - lam) > 10.0 * tol * std::max(1.0, std::abs(lam_fine)))
        throw GridTooCoarse("numerov_eigenvalue: N vs 2N Richardson check failed");

    // E = c + Lambda/(2M) + omega_c ell' / alpha
    return d.c + lam_fine / (2.0 * config.mass) + d.omega_c * d.ell_prime / config.alpha;
}

}  // namespace dqm
