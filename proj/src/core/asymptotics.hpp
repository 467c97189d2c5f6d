#ifndef PRM_CORE_ASYMPTOTICS_HPP
#define PRM_CORE_ASYMPTOTICS_HPP

#include <optional>
#include <utility>

#include "bigint.hpp"
#include "report.hpp"

namespace prm {

// (theta, xi, H) bundle of the exponential-growth analysis of the
// coordinate-sum counts at one modulus.
struct AsymptoticPoint {
    int p{};
    double theta{};
    double xi{};
    double h{};
    std::optional<double> gamma0;
};

// Large-modulus counterpart: t in (0,1) with its subleading saddle location.
struct LargePPoint {
    int p{};
    double t{};
    double xi1{};
    double h_hat{};
};

// theta(xi) = (sum_{i=1}^{p-1} i xi^i) / (sum_{i=0}^{p-1} xi^i); strictly
// increasing on (0, inf), 0 at 0 and p-1 at infinity.
double theta_of_xi(int p, double xi);

// Unique xi > 0 with theta(xi) = theta.
double solve_xi(int p, double theta, double tol = 1e-13);

// Exponential growth rate (base p) of the coordinate-sum count at ratio
// theta: H = log_p(sum xi^i) - theta log_p(xi). H((p-1)/2) = 1.
double entropy_h(int p, double theta, double tol = 1e-13);

// Asymptotic yield parameter at ratio theta in (0, (p-1)/3):
// 3(1 - H(theta)) below the midpoint (p-1)/6, 3(1 - H(theta))/H(3 theta) above.
double gamma0(int p, double theta);

// Minimize gamma0 over theta; returns (minimum, t0 = theta0/(p-1)).
std::pair<double, double> optimize_gamma0(int p, double tol = 1e-12);

AsymptoticPoint asymptotic_point(int p, double theta);

// t(xi1) = 1 - 1/xi1 + 1/(e^{xi1} - 1); strictly increasing over the reals
// with a removable hole at xi1 = 0 (value 1/2).
double t_of_xi1(double xi1);
double solve_xi1(double t, double tol = 1e-13);

// Scaled large-modulus growth rate at ratio t, for a given p.
LargePPoint large_p_point(int p, double t);

// Limit constant c with gamma_p(1/6) ~ c / ln p, recomputed from the
// subleading saddle at t = 1/6 (not hardcoded).
double large_p_limit_constant();
double gamma_large_p(int p);

// Scan all (m, w) at maximal degree for the smallest block length whose
// yield parameter drops below 1; exact big-integer parameters throughout.
CodeReport smallest_code_scan(int p, const BigCount& n_limit);

}  // namespace prm

#endif
