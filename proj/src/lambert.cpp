#include "hsc/lambert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsc {

double lambert_w0(double x) {
    if (x < 0.0) throw std::domain_error("lambert_w0: negative argument");
    if (x == 0.0) return 0.0;

    // Log-based start for large x, series-flavored start otherwise.
    double w;
    if (x > std::numbers::e) {
        const double lx = std::log(x);
        w = lx - std::log(lx);
    } else {
        w = x / (1.0 + x);
    }

    // Halley iteration on f(w) = w e^w - x.
    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if (std::abs(step) <= 1e-16 * std::max(std::abs(w), 1e-300)) break;
    }
    return w;
}

}  // namespace hsc
