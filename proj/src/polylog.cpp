#include "photongas/polylog.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "photongas/kahan.hpp"

namespace photongas {

namespace {

// n^p for small integer p without the cost of std::pow in the hot loop.
inline double ipow(double n, int p) {
    switch (p) {
        case 2: return n * n;
        case 3: return n * n * n;
        case 4: {
            const double n2 = n * n;
            return n2 * n2;
        }
        default: {
            double r = 1.0;
            for (int i = 0; i < p; ++i) r *= n;
            return r;
        }
    }
}

// Generalized exponential integral E_p(y) = int_1^inf exp(-y t) t^-p dt,
// p >= 1, y >= 0.  Upward recurrence from E_1 = -Ei(-y); stable for y >= 0.
double expint_en(int p, double y) {
    if (y == 0.0) return 1.0 / (p - 1);  // valid for p >= 2
    if (y > 700.0) return 0.0;           // exp(-y) underflows anyway
    const double ey = std::exp(-y);
    double e = -std::expint(-y);  // E_1(y)
    for (int k = 2; k <= p; ++k) e = (ey - y * e) / (k - 1);
    return e;
}

}  // namespace

double polylog(int p, double z) {
    if (p < 2)
        throw std::domain_error("polylog: order p must be >= 2, got " + std::to_string(p));
    if (!(z >= 0.0 && z <= 1.0))
        throw std::domain_error("polylog: fugacity z must lie in [0, 1], got " + std::to_string(z));
    if (z == 0.0) return 0.0;

    // Direct series sum_{n>=1} z^n / n^p until the next term is negligible.
    constexpr std::size_t max_terms = 1000000;
    constexpr double rel_cut = 1e-15;

    KahanSum acc;
    double zn = 1.0;
    std::size_t n = 0;
    while (n < max_terms) {
        ++n;
        zn *= z;
        const double term = zn / ipow(static_cast<double>(n), p);
        acc.add(term);
        if (term < rel_cut * acc.value()) break;
    }

    // Replace the truncated remainder by the analytic tail
    //   int_{M}^inf z^x x^-p dx = M^(1-p) E_p(M ln(1/z)),  M = n + 1/2,
    // which keeps the result accurate even at z = 1 where the series alone
    // converges too slowly (remainder ~ n^(1-p)).
    const double M = static_cast<double>(n) + 0.5;
    const double a = (z == 1.0) ? 0.0 : -std::log(z);
    acc.add(std::pow(M, 1.0 - p) * expint_en(p, a * M));

    return acc.value();
}

double zeta(int p) { return polylog(p, 1.0); }

}  // namespace photongas
