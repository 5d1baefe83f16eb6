#pragma once

#include <complex>

namespace g4v {

using complexd = std::complex<double>;

/// Gauss hypergeometric 2F1(1, b; b+1; z) for real z <= 0 and complex b.
/// Direct series for small |z|, a Pfaff transformation near |z| = 1 and the
/// z -> 1/z inversion beyond; all regimes converge geometrically.
complexd hyp2f1_1b(complexd b, double z);

/// Antiderivative G(u) of e^{i delta u} sech(sigma u), continuous on the
/// whole axis, evaluated through hyp2f1_1b.
complexd sech_osc_antiderivative(double sigma, double delta, double u);

}  // namespace g4v
