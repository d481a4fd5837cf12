#pragma once

#include <complex>

namespace fredholm {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Exponential integral E1(z) = integral from z to infinity of e^{-u}/u du,
/// principal branch, cut along the closed negative real axis.
///
/// The closed-form wave functions write this function as "E_i", but the
/// defining integral is the E1 convention; no Ei(x) = -E1(-x) flip is applied.
///
/// Routing: the power series is used for |z| < 4 and for the open left
/// half-plane (where the continued fraction stalls next to the cut);
/// everything else goes through the modified Lentz continued fraction.
/// Relative accuracy is better than 1e-12 for |z| <= 50.
///
/// Throws DomainError for z = 0, for z on the cut, and for non-finite z.
Complex e1(Complex z);

/// Convergent power series -gamma - ln z - sum (-z)^n / (n n!).
/// Exposed for consistency checks; prefer e1().
Complex e1_series(Complex z);

/// Continued fraction evaluated by the modified Lentz method.
/// Exposed for consistency checks; prefer e1().
Complex e1_continued_fraction(Complex z);

/// Incident plane wave e^{i k x}, without the (2 pi)^{-3/2} normalisation.
Complex plane_wave(double x, double k);

}  // namespace fredholm
