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

#include "nsk/model.hpp"

#include <cmath>

namespace nsk {

void FluidParams::validate() const {
    if (!(nu > 0.0)) throw std::invalid_argument("FluidParams: nu must be positive");
    if (!(gamma > 1.0)) throw std::invalid_argument("FluidParams: gamma must exceed 1");
    if (!(kappa >= 0.0)) throw std::invalid_argument("FluidParams: kappa must be nonnegative");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("FluidParams: eps must lie in [0,1]");
    if (!(rho_floor > 0.0 && rho_floor < 1.0))
        throw std::invalid_argument("FluidParams: rho_floor must lie in (0,1)");
}

VectorField PrimitiveState::velocity(const FluidParams& p) const {
    VectorField u(grid());
    for (int a = 0; a < grid().dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            u[a][i] = mom[a][i] / std::max(rho[i], p.rho_floor);
    return u;
}

VectorField AugmentedState::velocity(const FluidParams& p) const {
    VectorField u(grid());
    for (int a = 0; a < grid().dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            u[a][i] = (mw[a][i] - mv[a][i]) / std::max(rho[i], p.rho_floor);
    return u;
}

VectorField AugmentedState::effective(const FluidParams& p) const {
    VectorField w(grid());
    for (int a = 0; a < grid().dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            w[a][i] = mw[a][i] / std::max(rho[i], p.rho_floor);
    return w;
}

VectorField AugmentedState::drift(const FluidParams& p) const {
    VectorField v(grid());
    for (int a = 0; a < grid().dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            v[a][i] = mv[a][i] / std::max(rho[i], p.rho_floor);
    return v;
}

AugmentedState augment(const PrimitiveState& s, const FluidParams& p) {
    AugmentedState a;
    a.rho = s.rho;
    a.mv = 2.0 * p.nu * grad(s.rho);  // rho * 2 nu grad(log rho) = 2 nu grad(rho)
    a.mw = s.mom + a.mv;
    return a;
}

ScalarField pressure(const ScalarField& rho, const FluidParams& p) {
    ScalarField out(rho.grid);
    for (std::size_t i = 0; i < rho.size(); ++i) out[i] = std::pow(rho[i], p.gamma);
    return out;
}

ScalarField pressure_potential(const ScalarField& rho, const FluidParams& p) {
    ScalarField out(rho.grid);
    const double c = 1.0 / (p.gamma - 1.0);
    for (std::size_t i = 0; i < rho.size(); ++i) out[i] = c * std::pow(rho[i], p.gamma);
    return out;
}

ScalarField bregman(const ScalarField& rho, const ScalarField& r, const FluidParams& p) {
    require_same_grid(rho.grid, r.grid, "bregman");
    ScalarField out(rho.grid);
    const double g = p.gamma;
    const double c = 1.0 / (g - 1.0);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        double H_rho = c * std::pow(rho[i], g);
        double H_r = c * std::pow(r[i], g);
        double dH_r = g * c * std::pow(r[i], g - 1.0);
        out[i] = H_rho - H_r - dH_r * (rho[i] - r[i]);
    }
    return out;
}

VectorField drift_velocity(const ScalarField& rho, const FluidParams& p) {
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] < p.rho_floor)
            throw std::domain_error("drift_velocity: density below floor");
    VectorField g = grad(rho);
    VectorField out(rho.grid);
    for (int a = 0; a < rho.grid.dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            out[a][i] = 2.0 * p.nu * g[a][i] / rho[i];
    return out;
}

VectorField effective_velocity(const VectorField& u, const ScalarField& rho,
                               const FluidParams& p) {
    require_same_grid(u.grid, rho.grid, "effective_velocity");
    return u + drift_velocity(rho, p);
}

VectorField korteweg_force_expanded(const ScalarField& rho, const FluidParams& p) {
    const GridSpec& g = rho.grid;
    VectorField out(g);
    if (p.kappa == 0.0) return out;
    const double c = 2.0 * p.kappa * p.kappa;

    ScalarField lap = laplacian(rho);
    VectorField gr = grad(rho);

    ScalarField rho_lap = rho * lap;
    ScalarField grad_sq(g);
    for (int a = 0; a < g.dim; ++a)
        for (std::size_t i = 0; i < grad_sq.size(); ++i)
            grad_sq[i] += gr[a][i] * gr[a][i];

    for (int k = 0; k < g.dim; ++k) {
        ScalarField term = ddx_dealiased(rho_lap, k);
        ScalarField half = ddx_dealiased(grad_sq, k);
        for (std::size_t i = 0; i < term.size(); ++i)
            out[k][i] = c * (term[i] + 0.5 * half[i]);
        for (int j = 0; j < g.dim; ++j) {
            ScalarField dj = ddx_dealiased(gr[j] * gr[k], j);
            for (std::size_t i = 0; i < term.size(); ++i) out[k][i] -= c * dj[i];
        }
    }
    return out;
}

VectorField korteweg_force_compact(const ScalarField& rho, const FluidParams& p) {
    VectorField out(rho.grid);
    if (p.kappa == 0.0) return out;
    const double c = 2.0 * p.kappa * p.kappa;
    VectorField gl = grad_laplacian(rho);
    for (int a = 0; a < rho.grid.dim; ++a) {
        ScalarField prod = dealias(rho * gl[a]);
        for (std::size_t i = 0; i < prod.size(); ++i) out[a][i] = c * prod[i];
    }
    return out;
}

VectorField viscous_force(const ScalarField& rho, const VectorField& u,
                          const FluidParams& p) {
    require_same_grid(rho.grid, u.grid, "viscous_force");
    TensorField J = jacobian(u);
    TensorField flux(rho.grid);
    for (int i = 0; i < rho.grid.dim; ++i)
        for (int j = 0; j < rho.grid.dim; ++j) {
            ScalarField& f = flux(i, j);
            const ScalarField& a = J(i, j);
            const ScalarField& b = J(j, i);
            f = ScalarField(rho.grid);
            for (std::size_t q = 0; q < f.size(); ++q)
                f[q] = rho[q] * 0.5 * (a[q] + b[q]);
        }
    VectorField out = divergence_dealiased(flux);
    for (int a = 0; a < rho.grid.dim; ++a)
        for (std::size_t q = 0; q < out[a].size(); ++q) out[a][q] *= 2.0 * p.nu;
    return out;
}

TensorField tensor_T(const ScalarField& rho, const VectorField& u) {
    require_same_grid(rho.grid, u.grid, "tensor_T");
    const GridSpec& g = rho.grid;
    ScalarField sq(g);
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::sqrt(rho[i]);
    VectorField grad_sq = grad(sq);

    TensorField T(g);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            ScalarField d = ddx(rho * u[j], i);
            ScalarField& t = T(i, j);
            t = ScalarField(g);
            for (std::size_t q = 0; q < t.size(); ++q)
                t[q] = (d[q] - 2.0 * grad_sq[i][q] * sq[q] * u[j][q]) / sq[q];
        }
    return T;
}

double tensor_T_defect(const ScalarField& rho, const VectorField& u) {
    TensorField T = tensor_T(rho, u);
    TensorField J = jacobian(u);
    const GridSpec& g = rho.grid;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (std::size_t q = 0; q < rho.size(); ++q) {
                double ref = std::sqrt(rho[q]) * J(i, j)[q];
                double d = T(i, j)[q] - ref;
                num += d * d;
                den += ref * ref;
            }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

TensorField symmetric_part(const TensorField& T) {
    TensorField out(T.grid);
    for (int i = 0; i < T.grid.dim; ++i)
        for (int j = 0; j < T.grid.dim; ++j) {
            ScalarField& s = out(i, j);
            s = ScalarField(T.grid);
            for (std::size_t q = 0; q < s.size(); ++q)
                s[q] = 0.5 * (T(i, j)[q] + T(j, i)[q]);
        }
    return out;
}

TensorField antisymmetric_part(const TensorField& T) {
    TensorField out(T.grid);
    for (int i = 0; i < T.grid.dim; ++i)
        for (int j = 0; j < T.grid.dim; ++j) {
            ScalarField& s = out(i, j);
            s = ScalarField(T.grid);
            for (std::size_t q = 0; q < s.size(); ++q)
                s[q] = 0.5 * (T(i, j)[q] - T(j, i)[q]);
        }
    return out;
}

double frobenius_l2(const TensorField& T) {
    double s = 0.0;
    for (int i = 0; i < T.grid.dim; ++i)
        for (int j = 0; j < T.grid.dim; ++j) {
            double nij = l2_norm(T(i, j));
            s += nij * nij;
        }
    return std::sqrt(s);
}

ScalarField clamp_floor(const ScalarField& rho, double floor, double* mass_shift) {
    ScalarField out(rho.grid);
    double before = 0.0, after = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        before += rho[i];
        out[i] = std::max(rho[i], floor);
        after += out[i];
    }
    if (mass_shift) {
        double denom = std::abs(before) > 0.0 ? std::abs(before) : 1.0;
        *mass_shift = std::abs(after - before) / denom;
    }
    return out;
}

}  // namespace nsk
