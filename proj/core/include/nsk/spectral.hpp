/**********************************************************************
*  Copyright 2026 the nsk authors
*
*  Licensed under the Apache License, Version 2.0 (the "License");
*  you may not use this file except in compliance with the License.
*  You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
*  Unless required by applicable law or agreed to in writing, software
*  distributed under the License is distributed on an "AS IS" BASIS,
*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
*  implied. See the License for the specific language governing
*  permissions and limitations under the License.
**********************************************************************/

#ifndef NSK_SPECTRAL_HPP
#define NSK_SPECTRAL_HPP

#include <complex>
#include <cstdint>

#include "nsk/grid.hpp"

namespace nsk {

// Exact Fourier calculus on periodic fields.  All derivatives act on the
// trigonometric interpolant; the Nyquist mode is zeroed in odd-order
// operators so that real fields map to real fields.

/// d/dx_axis of f.
ScalarField ddx(const ScalarField& f, int axis);

/// d/dx_axis with the 2/3-rule mask applied in the same spectral pass.
ScalarField ddx_dealiased(const ScalarField& f, int axis);

VectorField grad(const ScalarField& f);
ScalarField divergence(const VectorField& F);
ScalarField laplacian(const ScalarField& f);
VectorField grad_laplacian(const ScalarField& f);

/// jacobian(F)(i,j) = d_i F_j (derivative index first).
TensorField jacobian(const VectorField& F);
TensorField jacobian_dealiased(const VectorField& F);

/// divergence(T)_j = sum_i d_i T(i,j), contracting the derivative index.
VectorField divergence(const TensorField& T);
VectorField divergence_dealiased(const TensorField& T);

/// Zero every mode with any |k_axis| > floor(n/3).  Idempotent.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& F);

/// Multiply mode k by exp(-|2 pi k|^2 * alpha).  Used by the heat oracle.
ScalarField heat_decay(const ScalarField& f, double alpha);

/// Spectral truncation of a field onto a coarser grid (same dim, smaller
/// even n).  Exact for fields band-limited below the coarse Nyquist.
ScalarField spectral_restrict(const ScalarField& fine, const GridSpec& coarse);
VectorField spectral_restrict(const VectorField& fine, const GridSpec& coarse);

/// Zero-padding interpolation onto a finer grid; exact for any field
/// (the trigonometric interpolant is resampled).
ScalarField spectral_prolong(const ScalarField& coarse, const GridSpec& fine);
VectorField spectral_prolong(const VectorField& coarse, const GridSpec& fine);

/// Fourier coefficient of mode k (integer wavevector, unused axes 0),
/// normalized so that f(x) = sum_k c_k exp(2 pi i k.x).
std::complex<double> fourier_coefficient(const ScalarField& f, const std::array<int, 3>& k);

double integrate(const ScalarField& f);
double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& F);
double linf_norm(const ScalarField& f);
double linf_norm(const VectorField& F);
double lgamma_norm(const ScalarField& f, double gamma);

/// Random trigonometric polynomial with modes 1 <= max|k_a| <= kmax,
/// coefficients drawn deterministically from the seed, scaled so the
/// amplitude max|f| equals `amplitude`.  Zero mean.
ScalarField random_band_limited(const GridSpec& g, int kmax, std::uint64_t seed,
                                double amplitude);

}  // namespace nsk

#endif
