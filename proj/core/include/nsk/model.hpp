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

#ifndef NSK_MODEL_HPP
#define NSK_MODEL_HPP

#include "nsk/grid.hpp"
#include "nsk/spectral.hpp"

namespace nsk {

/// Physical parameters of the capillary system with viscosity mu(rho)=2*nu*rho,
/// pressure p(rho)=rho^gamma and constant capillarity kappa.
///
/// eps selects the model family: eps=1 is the unscaled system, eps=0 the
/// pressureless one, 0<eps<1 the Mach-rescaled system (eps^2 = 1/Ma^2).
struct FluidParams {
    double nu = 0.1;
    double kappa = 0.0;
    double gamma = 2.0;
    double eps = 1.0;
    double rho_floor = 1e-8;

    void validate() const;
};

/// Conservative variables (rho, m = rho*u).
struct PrimitiveState {
    ScalarField rho;
    VectorField mom;

    PrimitiveState() = default;
    PrimitiveState(ScalarField r, VectorField m) : rho(std::move(r)), mom(std::move(m)) {}
    const GridSpec& grid() const { return rho.grid; }
    VectorField velocity(const FluidParams& p) const;
};

/// Augmented variables (rho, rho*w, rho*v) with w = u + v and
/// v = 2*nu*grad(log rho).
struct AugmentedState {
    ScalarField rho;
    VectorField mw;
    VectorField mv;

    AugmentedState() = default;
    const GridSpec& grid() const { return rho.grid; }
    VectorField velocity(const FluidParams& p) const;        // u = (mw-mv)/rho
    VectorField effective(const FluidParams& p) const;       // w = mw/rho
    VectorField drift(const FluidParams& p) const;           // v = mv/rho
};

/// Build the augmented view of a primitive state: mv = 2*nu*grad(rho),
/// mw = m + mv.
AugmentedState augment(const PrimitiveState& s, const FluidParams& p);

/// p(rho) = rho^gamma.
ScalarField pressure(const ScalarField& rho, const FluidParams& p);

/// Pressure potential H(rho) = rho^gamma/(gamma-1), normalized to H(0)=0.
/// Satisfies H''(rho) = p'(rho)/rho.
ScalarField pressure_potential(const ScalarField& rho, const FluidParams& p);

/// Bregman divergence H(rho|r) = H(rho) - H(r) - H'(r)(rho - r), >= 0.
ScalarField bregman(const ScalarField& rho, const ScalarField& r, const FluidParams& p);

/// v = 2*nu*grad(log rho), computed as 2*nu*grad(rho)/rho.
VectorField drift_velocity(const ScalarField& rho, const FluidParams& p);

/// w = u + drift_velocity(rho).
VectorField effective_velocity(const VectorField& u, const ScalarField& rho,
                               const FluidParams& p);

/// Capillary force in the expanded form
///   2*kappa^2 [ grad(rho*lap rho) + 1/2 grad|grad rho|^2 - div(grad rho x grad rho) ],
/// using 4*rho*grad(sqrt rho) x grad(sqrt rho) = grad rho x grad rho.
/// All products dealiased.  Sign: added to d/dt(rho u).
VectorField korteweg_force_expanded(const ScalarField& rho, const FluidParams& p);

/// Capillary force in the compact form 2*kappa^2 * rho * grad(lap rho).
/// Agrees with the expanded form for smooth positive densities.
VectorField korteweg_force_compact(const ScalarField& rho, const FluidParams& p);

/// 2*nu*div(rho*Du), Du = (grad u + grad^t u)/2.  Sign: added to d/dt(rho u).
VectorField viscous_force(const ScalarField& rho, const VectorField& u,
                          const FluidParams& p);

/// The weak-solution velocity-gradient surrogate:
///   T(i,j) = [ d_i(rho u_j) - 2 d_i(sqrt rho) * sqrt(rho) u_j ] / sqrt(rho),
/// which equals sqrt(rho) * d_i u_j for smooth positive states.
TensorField tensor_T(const ScalarField& rho, const VectorField& u);

/// Relative L2 distance between tensor_T and sqrt(rho)*jacobian(u).
double tensor_T_defect(const ScalarField& rho, const VectorField& u);

TensorField symmetric_part(const TensorField& T);
TensorField antisymmetric_part(const TensorField& T);
double frobenius_l2(const TensorField& T);  // sqrt(integral of |T|_F^2)

/// Pointwise max(rho, floor); reports the relative mass change caused by
/// the clamp through *mass_shift when non-null.
ScalarField clamp_floor(const ScalarField& rho, double floor, double* mass_shift = nullptr);

}  // namespace nsk

#endif
