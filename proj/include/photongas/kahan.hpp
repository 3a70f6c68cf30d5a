#pragma once

namespace photongas {

/// Kahan compensated accumulator: keeps a running error term so long sums of
/// small terms do not lose precision to rounding.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;  // running compensation

    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

}  // namespace photongas
