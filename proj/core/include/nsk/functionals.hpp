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

#ifndef NSK_FUNCTIONALS_HPP
#define NSK_FUNCTIONALS_HPP

#include <array>
#include <optional>

#include "nsk/model.hpp"

namespace nsk {

/// One diagnostic sample along a run.
struct DiagnosticsRecord {
    double t = 0.0;
    int dim = 1;
    double mass = 0.0;
    std::array<double, 3> momentum{0.0, 0.0, 0.0};
    double energy = 0.0;      // primitive energy
    double aug_energy = 0.0;  // augmented energy
    double dissipation = 0.0;
    std::optional<double> rel_entropy;
    std::optional<std::array<double, 3>> thm53;  // (velocity, grad rho, rho)
};

/// Smooth reference (r, U, W, V) with W = U + V and V = 2 nu grad(log r).
struct ReferenceState {
    ScalarField r;
    VectorField U;
    VectorField W;
    VectorField V;

    /// Largest violation of the construction identities W-V-U and
    /// V - drift_velocity(r); both should sit at roundoff.
    double consistency_defect(const FluidParams& p) const;
};

ReferenceState make_reference_state(const ScalarField& r, const VectorField& U,
                                    const FluidParams& p);

/// integral of [ rho|u|^2/2 + eps^2 H(rho) + kappa^2 |grad rho|^2 ].
double energy_primitive(const PrimitiveState& s, const FluidParams& p);

/// integral of [ rho(|w|^2+|v|^2)/2 + eps^2 H(rho) + kappa^2 |grad rho|^2 ].
double energy_augmented(const AugmentedState& s, const FluidParams& p);

/// 2 nu * integral(|sqrt(rho) Du|^2 + |sqrt(rho) Aw|^2
///                 + eps^2 p'(rho)/rho |grad rho|^2)
///   + 4 nu kappa^2 * integral(|lap rho|^2).
double dissipation(const AugmentedState& s, const FluidParams& p);

/// Relative entropy
///   integral[ rho(|w-W|^2+|v-V|^2)/2 + kappa^2 |grad rho - grad r|^2 ]
///   + eps^2 * integral H(rho|r)          (dropped when pressureless).
double rel_entropy(const AugmentedState& s, const ReferenceState& ref,
                   const FluidParams& p, bool pressureless);

/// The three convergence norms:
///   || sqrt(rho) u - sqrt(r) U ||_L2,
///   || grad rho - grad r ||_L2,
///   || rho - r ||_{L2+Lgamma}  via the height-1 splitting surrogate.
std::array<double, 3> thm53_norms(const PrimitiveState& s, const ReferenceState& ref,
                                  const FluidParams& p);

DiagnosticsRecord base_record(double t, const PrimitiveState& s, const FluidParams& p);
DiagnosticsRecord base_record(double t, const AugmentedState& s, const FluidParams& p);

}  // namespace nsk

#endif
