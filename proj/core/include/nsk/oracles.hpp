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

#ifndef NSK_ORACLES_HPP
#define NSK_ORACLES_HPP

#include "nsk/solver.hpp"

namespace nsk {

/// Initial data on the irrotational family: u0 = -2 nu grad(log rho0),
/// i.e. m0 = -2 nu grad(rho0).
PrimitiveState irrotational_initial_data(const ScalarField& rho0, const FluidParams& p);

/// Exact Fourier solution of d/dt rho = 2 nu lap(rho): mode k decays by
/// exp(-8 pi^2 nu |k|^2 t).  Mean preserved.
ScalarField heat_solution(const ScalarField& rho0, const FluidParams& p, double t);

/// Pointwise residual of the effective-velocity cancellation
/// || u + 2 nu grad(log rho) ||_inf; zero on the irrotational family.
double irrotational_residual(const PrimitiveState& s, const FluidParams& p);

/// Residual of the stationary-w balance 2 nu div(rho grad v) against the
/// capillary force along the irrotational family.  Zero iff the heat
/// family solves the momentum equation, which requires kappa = 0.
double korteweg_balance_residual(const ScalarField& rho, const FluidParams& p);

/// Closed-form space-time target for manufactured-solution runs.
struct ManufacturedSolution {
    std::function<ScalarField(double)> rho;
    std::function<VectorField(double)> u;
    std::function<ScalarField(double)> drho_dt;
    std::function<VectorField(double)> du_dt;

    PrimitiveState state(double t) const;
};

/// Residual of the semi-discrete primitive system at the target:
/// adding this as a forcing makes the target an exact solution of the
/// spatial discretization, leaving pure time-integration error.
std::pair<ScalarField, VectorField> manufactured_source(const ManufacturedSolution& target,
                                                        const FluidParams& p, double t);

Forcing make_forcing(const ManufacturedSolution& target, const FluidParams& p);

}  // namespace nsk

#endif
