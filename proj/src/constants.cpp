#include "photongas/constants.hpp"

#include <stdexcept>
#include <string>

namespace photongas {

double beta_from_temperature(double temperature_K) {
    if (!(temperature_K > 0.0))
        throw std::domain_error("beta_from_temperature: temperature must be > 0 K, got " +
                                std::to_string(temperature_K));
    return 1.0 / (PhysicalConstants::k_B * temperature_K);
}

}  // namespace photongas
