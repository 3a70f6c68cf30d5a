#include "photongas/condensate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace photongas {

namespace {

void require_box(const BoxCavity& box) {
    if (!(box.L1 > 0.0) || !(box.L2 > 0.0) || !(box.L3 > 0.0))
        throw std::domain_error("condensate profile: all box edges must be > 0");
}

void require_n1(int N1) {
    if (N1 < 1)
        throw std::domain_error("condensate profile: N1 must be >= 1, got " +
                                std::to_string(N1));
}

double edge(const BoxCavity& box, int axis) {
    switch (axis) {
        case 1: return box.L1;
        case 2: return box.L2;
        case 3: return box.L3;
        default:
            throw std::domain_error("condensate profile: axis must be 1, 2 or 3, got " +
                                    std::to_string(axis));
    }
}

}  // namespace

double profile_value(const BoxCavity& box, int N1, double x1, double x2, double x3) {
    require_box(box);
    require_n1(N1);

    const double coords[3] = {x1, x2, x3};
    const double edges[3] = {box.L1, box.L2, box.L3};

    double log_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double half = 0.5 * edges[i];
        const double a = std::abs(coords[i]);
        if (a > half)
            throw std::domain_error("profile_value: coordinate " + std::to_string(i + 1) +
                                    " lies outside the box (|x| = " + std::to_string(a) +
                                    " m > L/2 = " + std::to_string(half) + " m)");
        if (a == half) return 0.0;  // exact wall
        const double c = std::cos(std::numbers::pi * coords[i] / edges[i]);
        if (c <= 0.0) return 0.0;   // rounding placed us on/past the wall
        log_sum += std::log(c);
    }
    return std::exp(static_cast<double>(N1) * log_sum);
}

std::vector<ProfileSample> profile_samples(const ProfileRequest& request) {
    require_box(request.box);
    require_n1(request.N1);
    const double L = edge(request.box, request.axis);
    if (request.n_points < 2)
        throw std::domain_error("profile_samples: need at least 2 points");

    std::vector<ProfileSample> samples;
    samples.reserve(static_cast<std::size_t>(request.n_points));
    const double half = 0.5 * L;
    const int n = request.n_points;
    for (int j = 0; j < n; ++j) {
        double x;
        if (j == 0)
            x = -half;
        else if (j == n - 1)
            x = half;
        else
            x = -half + L * static_cast<double>(j) / static_cast<double>(n - 1);

        double coords[3] = {0.0, 0.0, 0.0};
        coords[request.axis - 1] = x;
        samples.push_back({x, profile_value(request.box, request.N1,
                                            coords[0], coords[1], coords[2])});
    }
    return samples;
}

double half_width(const BoxCavity& box, int N1, int axis) {
    require_box(box);
    require_n1(N1);
    const double L = edge(box, axis);

    // Root of N1 ln cos(pi x / L) + ln 2 = 0 on (0, L/2); the left side
    // decreases from ln 2 to -inf, so bisection cannot miss.
    const double pi = std::numbers::pi;
    const double ln2 = std::numbers::ln2;
    double lo = 0.0;
    double hi = 0.5 * L;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double h = static_cast<double>(N1) * std::log(std::cos(pi * mid / L)) + ln2;
        (h > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace photongas
