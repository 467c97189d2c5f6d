#include "distill.hpp"

#include <cmath>

#include "errors.hpp"
#include "fp.hpp"

namespace prm {

DistillOutcome suppression_exact(const WeightEnumerator& z_support,
                                 const WeightEnumerator& z_stabilizer, const NoiseModel& noise) {
    require_prime(static_cast<std::uint32_t>(noise.p));
    if (z_support.length != z_stabilizer.length)
        throw DimensionError("suppression_exact: enumerator lengths differ");
    const double p = static_cast<double>(noise.p);
    const double delta = noise.delta;
    if (delta < 0.0 || delta > 1.0) throw DomainError("suppression_exact: delta outside [0,1]");
    const std::size_t n = z_support.length;

    // q(j) = (delta/p)^j (1 - (p-1) delta / p)^{n-j}
    const double per_err = delta / p;
    const double per_id = 1.0 - (p - 1.0) * delta / p;
    std::vector<double> q(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        q[j] = std::pow(per_err, static_cast<double>(j)) *
               std::pow(per_id, static_cast<double>(n - j));

    double accept = 0.0, logical_num = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double bj = z_support.coeff[j].convert_to<double>();
        const double aj = (z_support.coeff[j] - z_stabilizer.coeff[j]).convert_to<double>();
        accept += bj * q[j];
        logical_num += aj * q[j];  // stabilizer span is contained in the support space
    }

    DistillOutcome out;
    out.accept_prob = accept;
    out.delta_out = (accept > 0.0) ? (p / (p - 1.0)) * (logical_num / accept) : 0.0;
    out.cost = (accept > 0.0) ? static_cast<double>(n) / accept : 0.0;
    return out;
}

DistillOutcome suppression_estimate(int p, const BigCount& n, const BigCount& k,
                                    const BigCount& d, const BigCount& a_d, double delta_in) {
    require_prime(static_cast<std::uint32_t>(p));
    if (k < 1) throw DomainError("suppression_estimate: k must be >= 1");
    if (delta_in < 0.0 || delta_in > 1.0)
        throw DomainError("suppression_estimate: delta outside [0,1]");
    const double pd = static_cast<double>(p);
    const double nn = n.convert_to<double>();
    const double kk = k.convert_to<double>();
    const double dd = d.convert_to<double>();
    const double ad = a_d.convert_to<double>();

    const double keep = 1.0 - (pd - 1.0) / pd * delta_in;  // per-qudit identity probability
    const double n_bar = std::pow(keep, nn) * kk;          // expected surviving outputs

    DistillOutcome out;
    out.accept_prob = std::pow(keep, nn);
    out.cost = nn / n_bar;
    out.delta_out = ad / (n_bar * (pd - 1.0) * std::pow(pd, dd - 1.0)) *
                    std::pow(delta_in, dd) * std::pow(keep, nn - dd);
    return out;
}

std::optional<double> threshold(const std::function<double(double)>& delta_out, double lo,
                                double hi, double tol) {
    auto g = [&](double x) { return delta_out(x) - x; };
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0)) return std::nullopt;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

OverheadRatio concatenated_overhead(const BigCount& n, const BigCount& k, int rounds) {
    if (rounds < 1) throw DomainError("concatenated_overhead: rounds must be >= 1");
    if (n < 1 || k < 1) throw DomainError("concatenated_overhead: n, k must be >= 1");
    OverheadRatio r;
    r.numerator = 1;
    for (int i = 0; i < rounds; ++i) r.numerator *= n;
    r.denominator = 1;
    for (int i = 0; i + 1 < rounds; ++i) r.denominator *= k;
    const BigCount g = boost::multiprecision::gcd(r.numerator, r.denominator);
    r.numerator /= g;
    r.denominator /= g;
    r.value = std::exp(big_ln(r.numerator) - big_ln(r.denominator));
    return r;
}

}  // namespace prm
