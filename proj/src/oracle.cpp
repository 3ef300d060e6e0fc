#include "dvbc/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dvbc {

double optimal_frequency(std::size_t degree, double bc) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    if (bc == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(static_cast<double>(degree) / bc);
}

}  // namespace dvbc
