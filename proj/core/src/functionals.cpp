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

#include "nsk/functionals.hpp"

#include <cmath>

namespace nsk {

namespace {

// integral of rho |F|^2 evaluated pointwise
double weighted_sq(const ScalarField& rho, const VectorField& F) {
    ScalarField acc(rho.grid);
    for (int a = 0; a < rho.grid.dim; ++a)
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += rho[i] * F[a][i] * F[a][i];
    return integrate(acc);
}

double grad_sq_integral(const ScalarField& f) {
    VectorField g = grad(f);
    ScalarField acc(f.grid);
    for (int a = 0; a < f.grid.dim; ++a)
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += g[a][i] * g[a][i];
    return integrate(acc);
}

}  // namespace

double ReferenceState::consistency_defect(const FluidParams& p) const {
    VectorField lhs = W - V - U;
    double d = linf_norm(lhs);
    VectorField dv = V - drift_velocity(r, p);
    return std::max(d, linf_norm(dv));
}

ReferenceState make_reference_state(const ScalarField& r, const VectorField& U,
                                    const FluidParams& p) {
    ReferenceState ref;
    ref.r = r;
    ref.U = U;
    ref.V = drift_velocity(r, p);
    ref.W = U + ref.V;
    return ref;
}

double energy_primitive(const PrimitiveState& s, const FluidParams& p) {
    const GridSpec& g = s.grid();
    ScalarField acc(g);
    for (int a = 0; a < g.dim; ++a)
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += 0.5 * s.mom[a][i] * s.mom[a][i] / s.rho[i];
    if (p.eps > 0.0) {
        ScalarField H = pressure_potential(s.rho, p);
        const double e2 = p.eps * p.eps;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e2 * H[i];
    }
    double e = integrate(acc);
    if (p.kappa > 0.0) e += p.kappa * p.kappa * grad_sq_integral(s.rho);
    return e;
}

double energy_augmented(const AugmentedState& s, const FluidParams& p) {
    const GridSpec& g = s.grid();
    ScalarField acc(g);
    for (int a = 0; a < g.dim; ++a)
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += 0.5 * (s.mw[a][i] * s.mw[a][i] + s.mv[a][i] * s.mv[a][i]) / s.rho[i];
    if (p.eps > 0.0) {
        ScalarField H = pressure_potential(s.rho, p);
        const double e2 = p.eps * p.eps;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e2 * H[i];
    }
    double e = integrate(acc);
    if (p.kappa > 0.0) e += p.kappa * p.kappa * grad_sq_integral(s.rho);
    return e;
}

double dissipation(const AugmentedState& s, const FluidParams& p) {
    const GridSpec& g = s.grid();
    VectorField u = s.velocity(p);
    VectorField w = s.effective(p);
    TensorField Ju = jacobian(u);
    TensorField Jw = jacobian(w);

    // |sqrt(rho) D(u)|^2 + |sqrt(rho) A(w)|^2 pointwise
    ScalarField acc(g);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (std::size_t q = 0; q < acc.size(); ++q) {
                double du = 0.5 * (Ju(i, j)[q] + Ju(j, i)[q]);
                double aw = 0.5 * (Jw(i, j)[q] - Jw(j, i)[q]);
                acc[q] += s.rho[q] * (du * du + aw * aw);
            }

    if (p.eps > 0.0) {
        VectorField gr = grad(s.rho);
        const double e2 = p.eps * p.eps;
        for (std::size_t q = 0; q < acc.size(); ++q) {
            double g2 = 0.0;
            for (int a = 0; a < g.dim; ++a) g2 += gr[a][q] * gr[a][q];
            // p'(rho)/rho = gamma rho^(gamma-2)
            acc[q] += e2 * p.gamma * std::pow(s.rho[q], p.gamma - 2.0) * g2;
        }
    }
    double d = 2.0 * p.nu * integrate(acc);

    if (p.kappa > 0.0) {
        ScalarField lap = laplacian(s.rho);
        d += 4.0 * p.nu * p.kappa * p.kappa * integrate(lap * lap);
    }
    return d;
}

double rel_entropy(const AugmentedState& s, const ReferenceState& ref,
                   const FluidParams& p, bool pressureless) {
    require_same_grid(s.grid(), ref.r.grid, "rel_entropy");
    VectorField w = s.effective(p);
    VectorField v = s.drift(p);
    double e = 0.5 * weighted_sq(s.rho, w - ref.W) + 0.5 * weighted_sq(s.rho, v - ref.V);

    if (p.kappa > 0.0) {
        VectorField dg = grad(s.rho) - grad(ref.r);
        ScalarField acc(s.grid());
        for (int a = 0; a < s.grid().dim; ++a)
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += dg[a][i] * dg[a][i];
        e += p.kappa * p.kappa * integrate(acc);
    }

    if (!pressureless && p.eps > 0.0)
        e += p.eps * p.eps * integrate(bregman(s.rho, ref.r, p));
    return e;
}

std::array<double, 3> thm53_norms(const PrimitiveState& s, const ReferenceState& ref,
                                  const FluidParams& p) {
    require_same_grid(s.grid(), ref.r.grid, "thm53_norms");
    const GridSpec& g = s.grid();

    // || sqrt(rho) u - sqrt(r) U ||_L2
    ScalarField acc(g);
    for (int a = 0; a < g.dim; ++a)
        for (std::size_t i = 0; i < acc.size(); ++i) {
            double d = s.mom[a][i] / std::sqrt(std::max(s.rho[i], p.rho_floor)) -
                       std::sqrt(ref.r[i]) * ref.U[a][i];
            acc[i] += d * d;
        }
    double n_vel = std::sqrt(integrate(acc));

    VectorField dg = grad(s.rho) - grad(ref.r);
    double n_grad = l2_norm(dg);

    // L2 + Lgamma via height-1 splitting
    ScalarField low(g), high(g);
    for (std::size_t i = 0; i < low.size(); ++i) {
        double f = s.rho[i] - ref.r[i];
        if (std::abs(f) <= 1.0)
            low[i] = f;
        else
            high[i] = f;
    }
    double n_rho = l2_norm(low) + lgamma_norm(high, p.gamma);
    return {n_vel, n_grad, n_rho};
}

namespace {

DiagnosticsRecord fill_common(double t, const ScalarField& rho, const VectorField& mom) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.dim = rho.grid.dim;
    rec.mass = integrate(rho);
    for (int a = 0; a < rho.grid.dim; ++a) rec.momentum[static_cast<std::size_t>(a)] = integrate(mom[a]);
    return rec;
}

}  // namespace

DiagnosticsRecord base_record(double t, const PrimitiveState& s, const FluidParams& p) {
    DiagnosticsRecord rec = fill_common(t, s.rho, s.mom);
    rec.energy = energy_primitive(s, p);
    AugmentedState a = augment(s, p);
    rec.aug_energy = energy_augmented(a, p);
    rec.dissipation = dissipation(a, p);
    return rec;
}

DiagnosticsRecord base_record(double t, const AugmentedState& s, const FluidParams& p) {
    VectorField rho_u = s.mw - s.mv;
    DiagnosticsRecord rec = fill_common(t, s.rho, rho_u);
    PrimitiveState prim;
    prim.rho = s.rho;
    prim.mom = rho_u;
    rec.energy = energy_primitive(prim, p);
    rec.aug_energy = energy_augmented(s, p);
    rec.dissipation = dissipation(s, p);
    return rec;
}

}  // namespace nsk
