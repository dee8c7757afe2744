#pragma once

#include <complex>
#include <vector>

// Small real-polynomial helpers shared by the transfer-function code.
// Coefficients are stored in ascending powers; the variable may be s or z^-1
// depending on the caller.
namespace rdcalib::poly {

using Coeffs = std::vector<double>;

// Horner evaluation at a complex point.
std::complex<double> evaluate(const Coeffs& c, std::complex<double> x);

Coeffs multiply(const Coeffs& a, const Coeffs& b);
Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs scale(const Coeffs& a, double factor);
Coeffs derivative(const Coeffs& a);

// Drops trailing (highest-power) zero coefficients. Keeps at least one
// entry. Only exact zeros are removed: transfer-function coefficients carry
// physical units and can be legitimately tiny relative to each other.
Coeffs trim(const Coeffs& a);

int degree(const Coeffs& a);

// Long division a / b over ascending-power polynomials: a = q * b + r with
// degree(r) < degree(b). Requires the leading coefficient of b to be nonzero.
void divide(const Coeffs& a, const Coeffs& b, Coeffs& quotient, Coeffs& remainder);

// Roots via the companion-matrix eigenvalues of the monic polynomial.
std::vector<std::complex<double>> roots(const Coeffs& a);

}  // namespace rdcalib::poly
