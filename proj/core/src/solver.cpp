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

#include "nsk/solver.hpp"

#include <cmath>

namespace nsk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct FloorViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_floor(const ScalarField& rho, double floor) {
    for (double v : rho.values)
        if (v < floor) throw FloorViolation("density fell below the floor");
}

double max_abs(const VectorField& F) {
    double m = 0.0;
    for (int a = 0; a < F.grid.dim; ++a)
        for (double v : F[a].values) m = std::max(m, std::abs(v));
    return m;
}

double max_val(const ScalarField& f) {
    double m = f.values.empty() ? 0.0 : f.values[0];
    for (double v : f.values) m = std::max(m, v);
    return m;
}

double dt_bound(double umax, double rho_max, const FluidParams& p, const StepControl& c,
                const GridSpec& g) {
    const double dx = g.dx();
    double dt = c.dt_max;
    double speed = umax + p.eps * std::sqrt(p.gamma * std::pow(rho_max, p.gamma - 1.0));
    if (speed > 0.0) dt = std::min(dt, dx / speed);
    dt = std::min(dt, dx * dx / (8.0 * p.nu));
    if (p.kappa > 0.0) {
        double pin = kPi * g.n;
        dt = std::min(dt, 1.0 / (std::sqrt(2.0 * rho_max) * p.kappa * pin * pin));
    }
    return c.cfl * dt;
}

// y + a*x, fieldwise
PrimitiveState saxpy(const PrimitiveState& y, double a, const PrimitiveState& x) {
    PrimitiveState out = y;
    axpy(out.rho, a, x.rho);
    axpy(out.mom, a, x.mom);
    return out;
}

AugmentedState saxpy(const AugmentedState& y, double a, const AugmentedState& x) {
    AugmentedState out = y;
    axpy(out.rho, a, x.rho);
    axpy(out.mw, a, x.mw);
    axpy(out.mv, a, x.mv);
    return out;
}

void accumulate(PrimitiveState& acc, double a, const PrimitiveState& x) {
    axpy(acc.rho, a, x.rho);
    axpy(acc.mom, a, x.mom);
}

void accumulate(AugmentedState& acc, double a, const AugmentedState& x) {
    axpy(acc.rho, a, x.rho);
    axpy(acc.mw, a, x.mw);
    axpy(acc.mv, a, x.mv);
}

bool state_finite(const PrimitiveState& s) {
    if (!s.rho.all_finite()) return false;
    for (int a = 0; a < s.grid().dim; ++a)
        if (!s.mom[a].all_finite()) return false;
    return true;
}

bool state_finite(const AugmentedState& s) {
    if (!s.rho.all_finite()) return false;
    for (int a = 0; a < s.grid().dim; ++a)
        if (!s.mw[a].all_finite() || !s.mv[a].all_finite()) return false;
    return true;
}

void add_forcing(PrimitiveState& rate, const Forcing* forcing, double t) {
    if (!forcing) return;
    if (forcing->cont) {
        ScalarField f = forcing->cont(t);
        axpy(rate.rho, 1.0, f);
    }
    if (forcing->mom) {
        VectorField f = forcing->mom(t);
        axpy(rate.mom, 1.0, f);
    }
}

}  // namespace

void StepControl::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("StepControl: cfl must lie in (0,1]");
    if (!(dt_max > 0.0)) throw std::invalid_argument("StepControl: dt_max must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("StepControl: t_end must be positive");
    if (!(sample_every > 0.0)) throw std::invalid_argument("StepControl: sample_every must be positive");
}

PrimitiveState rhs_primitive(const PrimitiveState& s, const FluidParams& p) {
    check_floor(s.rho, p.rho_floor);
    const GridSpec& g = s.grid();
    VectorField u = dealias(s.velocity(p));

    PrimitiveState rate;
    rate.rho = ScalarField(g);
    rate.mom = VectorField(g);

    for (int a = 0; a < g.dim; ++a) {
        ScalarField d = ddx_dealiased(s.mom[a], a);
        for (std::size_t i = 0; i < d.size(); ++i) rate.rho[i] -= d[i];
    }

    // convective flux d_j(m_k u_j)
    for (int k = 0; k < g.dim; ++k)
        for (int j = 0; j < g.dim; ++j) {
            ScalarField d = ddx_dealiased(s.mom[k] * u[j], j);
            for (std::size_t i = 0; i < d.size(); ++i) rate.mom[k][i] -= d[i];
        }

    if (p.eps > 0.0) {
        ScalarField pr = pressure(s.rho, p);
        const double e2 = p.eps * p.eps;
        for (int k = 0; k < g.dim; ++k) {
            ScalarField d = ddx_dealiased(pr, k);
            for (std::size_t i = 0; i < d.size(); ++i) rate.mom[k][i] -= e2 * d[i];
        }
    }

    axpy(rate.mom, 1.0, viscous_force(s.rho, u, p));
    if (p.kappa > 0.0) axpy(rate.mom, 1.0, korteweg_force_expanded(s.rho, p));
    return rate;
}

AugmentedState rhs_augmented(const AugmentedState& s, const FluidParams& p) {
    check_floor(s.rho, p.rho_floor);
    const GridSpec& g = s.grid();
    VectorField u = dealias(s.velocity(p));
    VectorField w = dealias(s.effective(p));
    VectorField v = dealias(s.drift(p));

    AugmentedState rate;
    rate.rho = ScalarField(g);
    rate.mw = VectorField(g);
    rate.mv = VectorField(g);

    // continuity: rho u = mw - mv exactly
    for (int a = 0; a < g.dim; ++a) {
        ScalarField d = ddx_dealiased(s.mw[a] - s.mv[a], a);
        for (std::size_t i = 0; i < d.size(); ++i) rate.rho[i] -= d[i];
    }

    for (int k = 0; k < g.dim; ++k)
        for (int j = 0; j < g.dim; ++j) {
            ScalarField dw = ddx_dealiased(s.mw[k] * u[j], j);
            ScalarField dv = ddx_dealiased(s.mv[k] * u[j], j);
            for (std::size_t i = 0; i < dw.size(); ++i) {
                rate.mw[k][i] -= dw[i];
                rate.mv[k][i] -= dv[i];
            }
        }

    if (p.eps > 0.0) {
        ScalarField pr = pressure(s.rho, p);
        const double e2 = p.eps * p.eps;
        for (int k = 0; k < g.dim; ++k) {
            ScalarField d = ddx_dealiased(pr, k);
            for (std::size_t i = 0; i < d.size(); ++i) rate.mw[k][i] -= e2 * d[i];
        }
    }

    TensorField Ju = jacobian(u);
    TensorField Jw = jacobian(w);
    TensorField Jv = jacobian(v);
    const double visc = 2.0 * p.nu;
    for (int k = 0; k < g.dim; ++k)
        for (int j = 0; j < g.dim; ++j) {
            // + 2 nu d_j(rho d_j w_k) - 2 nu d_j(rho d_j v_k)
            ScalarField dw = ddx_dealiased(s.rho * Jw(j, k), j);
            ScalarField dv = ddx_dealiased(s.rho * Jv(j, k), j);
            // - 2 nu d_j(rho d_k u_j)
            ScalarField du = ddx_dealiased(s.rho * Ju(k, j), j);
            for (std::size_t i = 0; i < dw.size(); ++i) {
                rate.mw[k][i] += visc * (dw[i] - dv[i]);
                rate.mv[k][i] -= visc * du[i];
            }
        }

    if (p.kappa > 0.0) axpy(rate.mw, 1.0, korteweg_force_expanded(s.rho, p));
    return rate;
}

double stable_dt(const PrimitiveState& s, const FluidParams& p, const StepControl& c) {
    return dt_bound(max_abs(s.velocity(p)), max_val(s.rho), p, c, s.grid());
}

double stable_dt(const AugmentedState& s, const FluidParams& p, const StepControl& c) {
    return dt_bound(max_abs(s.velocity(p)), max_val(s.rho), p, c, s.grid());
}

PrimitiveState rk4_step(const PrimitiveState& s, const FluidParams& p, double dt,
                        double t, const Forcing* forcing) {
    if (dt == 0.0) return s;
    PrimitiveState k1 = rhs_primitive(s, p);
    add_forcing(k1, forcing, t);
    PrimitiveState k2 = rhs_primitive(saxpy(s, 0.5 * dt, k1), p);
    add_forcing(k2, forcing, t + 0.5 * dt);
    PrimitiveState k3 = rhs_primitive(saxpy(s, 0.5 * dt, k2), p);
    add_forcing(k3, forcing, t + 0.5 * dt);
    PrimitiveState k4 = rhs_primitive(saxpy(s, dt, k3), p);
    add_forcing(k4, forcing, t + dt);

    PrimitiveState out = s;
    accumulate(out, dt / 6.0, k1);
    accumulate(out, dt / 3.0, k2);
    accumulate(out, dt / 3.0, k3);
    accumulate(out, dt / 6.0, k4);
    return out;
}

AugmentedState rk4_step(const AugmentedState& s, const FluidParams& p, double dt, double t) {
    (void)t;
    if (dt == 0.0) return s;
    AugmentedState k1 = rhs_augmented(s, p);
    AugmentedState k2 = rhs_augmented(saxpy(s, 0.5 * dt, k1), p);
    AugmentedState k3 = rhs_augmented(saxpy(s, 0.5 * dt, k2), p);
    AugmentedState k4 = rhs_augmented(saxpy(s, dt, k3), p);

    AugmentedState out = s;
    accumulate(out, dt / 6.0, k1);
    accumulate(out, dt / 3.0, k2);
    accumulate(out, dt / 3.0, k3);
    accumulate(out, dt / 6.0, k4);
    return out;
}

namespace {

template <class State>
void dealias_state(State& s);

template <>
void dealias_state(PrimitiveState& s) {
    s.rho = dealias(s.rho);
    s.mom = dealias(s.mom);
}

template <>
void dealias_state(AugmentedState& s) {
    s.rho = dealias(s.rho);
    s.mw = dealias(s.mw);
    s.mv = dealias(s.mv);
}

template <class State>
State do_step(const State& s, const FluidParams& p, double dt, double t, const Forcing* f);

template <>
PrimitiveState do_step(const PrimitiveState& s, const FluidParams& p, double dt, double t,
                       const Forcing* f) {
    return rk4_step(s, p, dt, t, f);
}

template <>
AugmentedState do_step(const AugmentedState& s, const FluidParams& p, double dt, double t,
                       const Forcing* f) {
    (void)f;
    return rk4_step(s, p, dt, t);
}

template <class State>
Trajectory<State> run_impl(State s, const FluidParams& p, const StepControl& ctrl,
                           const SampleHook<State>& hook, const Forcing* forcing) {
    p.validate();
    ctrl.validate();

    Trajectory<State> traj;
    dealias_state(s);
    double shift = 0.0;
    s.rho = clamp_floor(s.rho, p.rho_floor, &shift);
    if (shift > 1e-10) {
        traj.aborted = true;
        traj.abort_reason = "initial density clamp changed mass beyond tolerance";
        traj.final_state = s;
        return traj;
    }

    auto take_sample = [&](double t) {
        DiagnosticsRecord rec = base_record(t, s, p);
        if (hook) hook(t, s, rec);
        traj.times.push_back(t);
        traj.records.push_back(rec);
        if (ctrl.store_snapshots) traj.snapshots.push_back(s);
    };

    double t = 0.0;
    take_sample(t);
    long next_sample = 1;
    const double tiny = 1e-12 * ctrl.t_end;

    while (t < ctrl.t_end - tiny) {
        double target = std::min(next_sample * ctrl.sample_every, ctrl.t_end);
        double dt = stable_dt(s, p, ctrl);
        bool lands = false;
        if (t + dt >= target - tiny) {
            dt = target - t;
            lands = true;
        }
        State next;
        try {
            next = do_step(s, p, dt, t, forcing);
        } catch (const std::runtime_error& e) {
            traj.aborted = true;
            traj.abort_reason = e.what();
            break;
        }
        if (!state_finite(next)) {
            traj.aborted = true;
            traj.abort_reason = "non-finite state detected";
            break;
        }
        double mass_shift = 0.0;
        next.rho = clamp_floor(next.rho, p.rho_floor, &mass_shift);
        if (mass_shift > 1e-10) {
            traj.aborted = true;
            traj.abort_reason = "density floor clamp changed mass beyond tolerance";
            break;
        }
        s = std::move(next);
        ++traj.step_count;
        t = lands ? target : t + dt;
        if (lands) {
            take_sample(t);
            if (std::abs(target - next_sample * ctrl.sample_every) < tiny) ++next_sample;
        }
    }

    traj.final_state = std::move(s);
    return traj;
}

}  // namespace

Trajectory<PrimitiveState> run(const PrimitiveState& s0, const FluidParams& p,
                               const StepControl& ctrl, const SampleHook<PrimitiveState>& hook,
                               const Forcing* forcing) {
    return run_impl<PrimitiveState>(s0, p, ctrl, hook, forcing);
}

Trajectory<AugmentedState> run(const AugmentedState& s0, const FluidParams& p,
                               const StepControl& ctrl, const SampleHook<AugmentedState>& hook) {
    return run_impl<AugmentedState>(s0, p, ctrl, hook, nullptr);
}

}  // namespace nsk
