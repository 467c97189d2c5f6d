#include "asymptotics.hpp"

#include <cmath>

#include "errors.hpp"
#include "fp.hpp"
#include "pnomial.hpp"
#include "reedmuller.hpp"

namespace prm {

double theta_of_xi(int p, double xi) {
    require_prime(static_cast<std::uint32_t>(p));
    if (xi < 0) throw DomainError("theta_of_xi: xi must be >= 0");
    if (xi > 1.0) return (p - 1) - theta_of_xi(p, 1.0 / xi);  // reversed coefficients
    double num = 0.0, den = 0.0, pw = 1.0;
    for (int i = 0; i <= p - 1; ++i) {
        num += i * pw;
        den += pw;
        pw *= xi;
    }
    return num / den;
}

double solve_xi(int p, double theta, double tol) {
    require_prime(static_cast<std::uint32_t>(p));
    if (!(theta > 0.0) || !(theta < p - 1))
        throw DomainError("solve_xi: theta must lie strictly inside (0, p-1)");
    const double half = (p - 1) / 2.0;
    if (theta > half) return 1.0 / solve_xi(p, (p - 1) - theta, tol);
    // theta <= (p-1)/2 corresponds to xi in (0, 1]; bisect the monotone map.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (theta_of_xi(p, mid) < theta)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double entropy_h(int p, double theta, double tol) {
    require_prime(static_cast<std::uint32_t>(p));
    if (!(theta > 0.0) || !(theta < p - 1))
        throw DomainError("entropy_h: theta must lie strictly inside (0, p-1)");
    const double half = (p - 1) / 2.0;
    if (theta > half) return entropy_h(p, (p - 1) - theta, tol);  // count symmetry
    const double xi = solve_xi(p, theta, tol);
    double den = 0.0, pw = 1.0;
    for (int i = 0; i <= p - 1; ++i) {
        den += pw;
        pw *= xi;
    }
    const double lnp = std::log(static_cast<double>(p));
    return std::log(den) / lnp - theta * std::log(xi) / lnp;
}

double gamma0(int p, double theta) {
    require_prime(static_cast<std::uint32_t>(p));
    const double limit = (p - 1) / 3.0;
    if (!(theta > 0.0) || !(theta < limit))
        throw DomainError("gamma0: theta must lie strictly inside (0, (p-1)/3)");
    const double h = entropy_h(p, theta);
    if (theta < (p - 1) / 6.0) return 3.0 * (1.0 - h);
    return 3.0 * (1.0 - h) / entropy_h(p, 3.0 * theta);
}

std::pair<double, double> optimize_gamma0(int p, double tol) {
    // The first branch decreases in theta, so the minimum sits in the second
    // branch (or at its left edge). Coarse scan, then golden-section.
    const double lo0 = (p - 1) / 6.0;
    const double hi0 = (p - 1) / 3.0 * (1.0 - 1e-9);
    const int grid = 96;
    int best_i = 0;
    double best_v = gamma0(p, lo0 + (hi0 - lo0) * 1e-9);
    for (int i = 1; i <= grid; ++i) {
        const double th = lo0 + (hi0 - lo0) * i / (grid + 1.0);
        const double v = gamma0(p, th);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double a = lo0 + (hi0 - lo0) * std::max(0, best_i - 1) / (grid + 1.0);
    double b = lo0 + (hi0 - lo0) * std::min(grid + 1, best_i + 1) / (grid + 1.0);
    if (best_i == 0) a = lo0 + (hi0 - lo0) * 1e-12;

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = gamma0(p, c), fd = gamma0(p, d);
    while (b - a > tol * (p - 1)) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = gamma0(p, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = gamma0(p, d);
        }
    }
    const double theta0 = 0.5 * (a + b);
    return {gamma0(p, theta0), theta0 / (p - 1)};
}

AsymptoticPoint asymptotic_point(int p, double theta) {
    AsymptoticPoint pt;
    pt.p = p;
    pt.theta = theta;
    pt.xi = solve_xi(p, theta);
    pt.h = entropy_h(p, theta);
    if (theta > 0.0 && theta < (p - 1) / 3.0) pt.gamma0 = gamma0(p, theta);
    return pt;
}

double t_of_xi1(double xi1) {
    if (std::abs(xi1) < 1e-5) {
        // series around the removable hole: 1/2 + x/12 - x^3/720 + ...
        return 0.5 + xi1 / 12.0 - xi1 * xi1 * xi1 / 720.0;
    }
    if (xi1 > 700.0) return 1.0 - 1.0 / xi1;
    if (xi1 < -700.0) return -1.0 / xi1;
    return 1.0 - 1.0 / xi1 + 1.0 / std::expm1(xi1);
}

double solve_xi1(double t, double tol) {
    if (!(t > 0.0) || !(t < 1.0)) throw DomainError("solve_xi1: t must lie in (0,1)");
    double lo = -1.0, hi = 1.0;
    while (t_of_xi1(lo) > t) lo *= 2.0;
    while (t_of_xi1(hi) < t) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (t_of_xi1(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

LargePPoint large_p_point(int p, double t) {
    LargePPoint pt;
    pt.p = p;
    pt.t = t;
    pt.xi1 = solve_xi1(t);
    const double x = pt.xi1;
    const double lnp = std::log(static_cast<double>(p));
    pt.h_hat = 1.0 + (1.0 - x * std::exp(x) / std::expm1(x) + std::log(std::expm1(x) / x)) / lnp;
    return pt;
}

double large_p_limit_constant() {
    // gamma ln p = 3(1 - Hhat) ln p, with the p-dependence of Hhat confined
    // to a 1/ln p correction; evaluate at t = 1/6.
    const double x = solve_xi1(1.0 / 6.0);
    return 3.0 * (x * std::exp(x) / std::expm1(x) - 1.0 - std::log(std::expm1(x) / x));
}

double gamma_large_p(int p) {
    require_prime(static_cast<std::uint32_t>(p));
    static const double c = large_p_limit_constant();
    return c / std::log(static_cast<double>(p));
}

CodeReport smallest_code_scan(int p, const BigCount& n_limit) {
    require_prime(static_cast<std::uint32_t>(p));
    CodeReport best;
    bool found = false;

    int stale = 0;
    for (int m = 1; m <= 4096 && stale < 5; ++m) {
        const long long r = triortho_max_degree(p, m);
        const long long rt = static_cast<long long>(m) * (p - 1) - r - 1;
        BigCount floor_n;
        bool any_admissible = false;
        for (long long w = 0; w <= rt; ++w) {
            const BigCount d = delta_distance(m, rt, w, p);
            if (d < 2) break;  // non-increasing in w; nothing admissible beyond
            const BigCount n = pnomial_gt(m, w, p);
            const BigCount k = pnomial_le(m, w, p);
            any_admissible = true;
            floor_n = n;  // n shrinks with w; the last admissible w is the floor
            if (n > n_limit) continue;
            const double gamma = yield_gamma(n, k, d);
            if (gamma >= 1.0) continue;
            if (found && n >= best.n) continue;
            found = true;
            best = CodeReport{};
            best.p = p;
            best.n = n;
            best.k = k;
            best.d = d;
            best.d_certainty = Certainty::exact;
            best.gamma = gamma;
            best.construction.method = "manhattan-ball-scan";
            best.construction.p = p;
            best.construction.m = m;
            best.construction.r = r;
            best.construction.w = w;
            best.construction.distance_route = "closed-form";
        }
        const BigCount& bound = found ? std::min(best.n, n_limit) : n_limit;
        if (!any_admissible || floor_n > bound)
            ++stale;
        else
            stale = 0;
    }

    if (!found) {
        CodeReport none;
        none.p = p;
        none.construction.method = "manhattan-ball-scan";
        none.construction.p = p;
        none.construction.distance_route = "not-found";
        return none;
    }
    return best;
}

}  // namespace prm
