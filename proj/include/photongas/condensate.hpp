#pragma once

#include <vector>

#include "photongas/cavity.hpp"

namespace photongas {

/// Sampling request for the condensate profile along one box axis.
struct ProfileRequest {
    BoxCavity box;
    int N1 = 1;        // condensate occupation, >= 1
    int axis = 1;      // 1, 2 or 3
    int n_points = 512;  // >= 2, endpoints included
};

struct ProfileSample {
    double x;  // coordinate along the chosen axis [m]
    double f;  // profile value in [0, 1]
};

/// Spatial condensate profile prod_i cos^N1(pi x_i / L_i) for coordinates
/// measured from the box center (|x_i| <= L_i/2).  Evaluated in the log
/// domain; values below the representable range come out as exactly 0,
/// as do the box walls.
double profile_value(const BoxCavity& box, int N1, double x1, double x2, double x3);

/// Uniform samples of the profile along one axis (other coordinates 0),
/// endpoints at -L/2 and +L/2 exactly.
std::vector<ProfileSample> profile_samples(const ProfileRequest& request);

/// Positive root of cos^N1(pi x / L) = 1/2 along the chosen axis, located by
/// bisection to 1e-12 relative.  Shrinks like N1^(-1/2); closed form
/// (L/pi) arccos(2^(-1/N1)).
double half_width(const BoxCavity& box, int N1, int axis);

}  // namespace photongas
