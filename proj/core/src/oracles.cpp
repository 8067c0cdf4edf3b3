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

#include "nsk/oracles.hpp"

#include <cmath>

namespace nsk {

PrimitiveState irrotational_initial_data(const ScalarField& rho0, const FluidParams& p) {
    for (double v : rho0.values)
        if (v < p.rho_floor)
            throw std::domain_error("irrotational_initial_data: density below floor");
    PrimitiveState s;
    s.rho = rho0;
    s.mom = (-2.0 * p.nu) * grad(rho0);
    return s;
}

ScalarField heat_solution(const ScalarField& rho0, const FluidParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_solution: t must be nonnegative");
    return heat_decay(rho0, 2.0 * p.nu * t);
}

double irrotational_residual(const PrimitiveState& s, const FluidParams& p) {
    VectorField u = s.velocity(p);
    VectorField v = drift_velocity(s.rho, p);
    return linf_norm(u + v);
}

double korteweg_balance_residual(const ScalarField& rho, const FluidParams& p) {
    // w-equation with w == 0 demands 2 nu div(rho grad v) = capillary force
    VectorField v = drift_velocity(rho, p);
    TensorField Jv = jacobian(v);
    TensorField flux(rho.grid);
    for (int i = 0; i < rho.grid.dim; ++i)
        for (int j = 0; j < rho.grid.dim; ++j) flux(i, j) = rho * Jv(i, j);
    VectorField lhs = (2.0 * p.nu) * divergence(flux);
    VectorField rhs = korteweg_force_expanded(rho, p);
    return linf_norm(lhs - rhs);
}

PrimitiveState ManufacturedSolution::state(double t) const {
    PrimitiveState s;
    s.rho = rho(t);
    VectorField vel = u(t);
    s.mom = s.rho * vel;
    return s;
}

std::pair<ScalarField, VectorField> manufactured_source(const ManufacturedSolution& target,
                                                        const FluidParams& p, double t) {
    PrimitiveState st = target.state(t);
    PrimitiveState rate = rhs_primitive(st, p);

    ScalarField src_cont = target.drho_dt(t) - rate.rho;

    // d/dt(rho u) = drho_dt * u + rho * du_dt
    VectorField u = target.u(t);
    VectorField dudt = target.du_dt(t);
    ScalarField drdt = target.drho_dt(t);
    VectorField dm(st.grid());
    for (int a = 0; a < st.grid().dim; ++a)
        for (std::size_t i = 0; i < dm[a].size(); ++i)
            dm[a][i] = drdt[i] * u[a][i] + st.rho[i] * dudt[a][i];
    VectorField src_mom = dm - rate.mom;
    return {std::move(src_cont), std::move(src_mom)};
}

Forcing make_forcing(const ManufacturedSolution& target, const FluidParams& p) {
    Forcing f;
    f.cont = [target, p](double t) { return manufactured_source(target, p, t).first; };
    f.mom = [target, p](double t) { return manufactured_source(target, p, t).second; };
    return f;
}

}  // namespace nsk
