#pragma once

namespace hsc {

/// Principal branch of the Lambert W function on x >= 0, i.e. the w >= 0
/// with w e^w = x, to 1e-12 relative residual. Throws on negative input.
double lambert_w0(double x);

}  // namespace hsc
