#pragma once

// Cancellation-free building blocks for the Robin closed forms. Internal.

namespace casimir::detail {

/// exp(-2x) (sinh(2x) - 2x).
double scaled_sinh_excess(double x);

/// exp(-4x) (12x - 8 sinh(2x) + sinh(4x)), which behaves like 6.4 x^5 at 0.
double scaled_s4(double x);

}  // namespace casimir::detail
