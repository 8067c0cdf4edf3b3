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

#ifndef NSK_SOLVER_HPP
#define NSK_SOLVER_HPP

#include <functional>
#include <string>

#include "nsk/functionals.hpp"
#include "nsk/model.hpp"

namespace nsk {

struct StepControl {
    double cfl = 0.4;
    double dt_max = 1e-2;
    double t_end = 0.1;
    double sample_every = 0.01;
    bool store_snapshots = false;

    void validate() const;
};

/// External forcing added to the right-hand side, time evaluated at the
/// RK stage times.  Used by manufactured-solution runs.
struct Forcing {
    std::function<ScalarField(double)> cont;
    std::function<VectorField(double)> mom;
};

template <class State>
struct Trajectory {
    std::vector<double> times;
    std::vector<DiagnosticsRecord> records;
    std::vector<State> snapshots;  // filled when ctrl.store_snapshots
    State final_state;
    long step_count = 0;
    bool aborted = false;
    std::string abort_reason;
};

/// Extra per-sample diagnostics (relative entropy against a reference,
/// convergence norms, ...).  Invoked after the base record is filled.
template <class State>
using SampleHook = std::function<void(double, const State&, DiagnosticsRecord&)>;

/// Semi-discrete right-hand side of the primitive system:
///   d/dt rho = -div m,
///   d/dt m   = -div(m x u) - eps^2 grad p(rho)
///              + 2 nu div(rho Du) + capillary force (expanded form),
/// with every nonlinear product dealiased by the 2/3 rule.
PrimitiveState rhs_primitive(const PrimitiveState& s, const FluidParams& p);

/// Semi-discrete right-hand side of the augmented system:
///   d/dt rho      = -div(rho u),
///   d/dt (rho w)  = -div(rho w x u) - eps^2 grad p + 2 nu div(rho grad w)
///                   - 2 nu div(rho grad v) + capillary force,
///   d/dt (rho v)  = -div(rho v x u) - 2 nu div(rho grad^t u),
/// with u = w - v recovered from the state.
AugmentedState rhs_augmented(const AugmentedState& s, const FluidParams& p);

/// dt = cfl * min( dx/(max|u| + eps*c_max), dx^2/(8 nu),
///                 1/(sqrt(2 rho_max) kappa (pi n)^2), dt_max ),
/// c_max = sqrt(gamma rho_max^(gamma-1)).
double stable_dt(const PrimitiveState& s, const FluidParams& p, const StepControl& c);
double stable_dt(const AugmentedState& s, const FluidParams& p, const StepControl& c);

PrimitiveState rk4_step(const PrimitiveState& s, const FluidParams& p, double dt,
                        double t = 0.0, const Forcing* forcing = nullptr);
AugmentedState rk4_step(const AugmentedState& s, const FluidParams& p, double dt,
                        double t = 0.0);

/// Advance to ctrl.t_end, sampling diagnostics every ctrl.sample_every
/// time units.  NaNs or a mass-changing floor clamp abort the run; the
/// trajectory then carries the last good state and the reason.
Trajectory<PrimitiveState> run(const PrimitiveState& s0, const FluidParams& p,
                               const StepControl& ctrl,
                               const SampleHook<PrimitiveState>& hook = nullptr,
                               const Forcing* forcing = nullptr);
Trajectory<AugmentedState> run(const AugmentedState& s0, const FluidParams& p,
                               const StepControl& ctrl,
                               const SampleHook<AugmentedState>& hook = nullptr);

}  // namespace nsk

#endif
