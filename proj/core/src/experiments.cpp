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

#include "nsk/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace nsk {

const ReferenceState& ReferenceTrajectory::at(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= 1e-10 * std::max(1.0, std::abs(t)))
            return states[i];
    throw std::out_of_range("ReferenceTrajectory: no sample at requested time");
}

ReferenceTrajectory make_reference(const InitialData& initial, const GridSpec& working,
                                   const FluidParams& params, const StepControl& ctrl,
                                   int refine) {
    if (refine < 2) throw std::invalid_argument("make_reference: refine must be >= 2");
    GridSpec fine(working.dim, working.n * refine);
    PrimitiveState s0 = initial(fine);

    StepControl fine_ctrl = ctrl;
    fine_ctrl.dt_max = ctrl.dt_max / (refine * refine);
    fine_ctrl.store_snapshots = false;

    ReferenceTrajectory ref;
    SampleHook<PrimitiveState> hook = [&](double t, const PrimitiveState& s,
                                          DiagnosticsRecord&) {
        ScalarField r = spectral_restrict(s.rho, working);
        VectorField m = spectral_restrict(s.mom, working);
        VectorField U(working);
        for (int a = 0; a < working.dim; ++a)
            for (std::size_t i = 0; i < r.size(); ++i)
                U[a][i] = m[a][i] / std::max(r[i], params.rho_floor);
        ref.times.push_back(t);
        ref.states.push_back(make_reference_state(r, U, params));
    };

    Trajectory<PrimitiveState> traj = run(s0, params, fine_ctrl, hook);
    ref.aborted = traj.aborted;
    return ref;
}

ReferenceTrajectory make_heat_reference(const ScalarField& rho0, const FluidParams& params,
                                        const StepControl& ctrl) {
    if (params.eps != 0.0)
        throw std::invalid_argument("make_heat_reference: requires the pressureless model (eps=0)");
    ReferenceTrajectory ref;
    long k = 0;
    double t = 0.0;
    while (true) {
        ScalarField r = heat_solution(rho0, params, t);
        ReferenceState st;
        st.r = r;
        st.V = drift_velocity(r, params);
        st.U = (-1.0) * st.V;
        st.W = st.U + st.V;  // identically zero, kept exact
        ref.times.push_back(t);
        ref.states.push_back(std::move(st));
        if (t >= ctrl.t_end - 1e-12 * ctrl.t_end) break;
        ++k;
        t = std::min(k * ctrl.sample_every, ctrl.t_end);
    }
    return ref;
}

void parallel_for_indexed(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("KORTEWEG_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(hw)) hw = static_cast<unsigned>(cap);
    }
    unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ls_slope: need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("ls_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

double fit_gronwall_constant(const std::vector<double>& times,
                             const std::vector<std::vector<double>>& entropy_series,
                             double floor) {
    std::vector<double> xs, ys;
    const double cut = 100.0 * std::max(floor, 1e-300);
    for (const auto& series : entropy_series) {
        if (series.empty() || series[0] <= cut) continue;
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (series[i] <= cut) continue;
            xs.push_back(times[i]);
            ys.push_back(std::log(series[i] / series[0]));
        }
    }
    if (xs.size() < 2) return 0.0;
    return ls_slope(xs, ys);
}

namespace {

// perturbation shapes eta, xi: fixed, smooth, unit L2 norm
ScalarField unit_shape(const GridSpec& g, std::uint64_t seed) {
    ScalarField f = random_band_limited(g, std::min(4, g.n / 4), seed, 1.0);
    double n2 = l2_norm(f);
    for (double& v : f.values) v /= n2;
    return f;
}

PrimitiveState perturb(const PrimitiveState& base, double delta, const ScalarField& eta,
                       const VectorField& xi, const FluidParams& params) {
    if (delta == 0.0) return base;
    PrimitiveState out;
    out.rho = ScalarField(base.grid());
    VectorField u = base.velocity(params);
    for (std::size_t i = 0; i < out.rho.size(); ++i)
        out.rho[i] = base.rho[i] * (1.0 + delta * eta[i]);
    out.mom = VectorField(base.grid());
    for (int a = 0; a < base.grid().dim; ++a)
        for (std::size_t i = 0; i < out.rho.size(); ++i)
            out.mom[a][i] = out.rho[i] * (u[a][i] + delta * xi[a][i]);
    return out;
}

}  // namespace

WeakStrongReport weak_strong_experiment(const WeakStrongConfig& cfg) {
    WeakStrongReport rep;
    rep.deltas.push_back(0.0);
    for (double d : cfg.deltas)
        if (d != 0.0) rep.deltas.push_back(d);

    PrimitiveState base = cfg.initial(cfg.grid);
    ScalarField eta = unit_shape(cfg.grid, cfg.seed);
    VectorField xi(cfg.grid);
    for (int a = 0; a < cfg.grid.dim; ++a)
        xi[a] = unit_shape(cfg.grid, cfg.seed + 17 * static_cast<std::uint64_t>(a) + 1);

    ReferenceTrajectory ref;
    if (cfg.use_heat_reference) {
        if (!cfg.rho0)
            throw std::invalid_argument("weak_strong_experiment: heat reference needs rho0");
        ref = make_heat_reference(cfg.rho0(cfg.grid), cfg.params, cfg.ctrl);
    } else {
        ref = make_reference(cfg.initial, cfg.grid, cfg.params, cfg.ctrl);
    }
    if (ref.aborted) {
        rep.aborted = true;
        rep.note = "reference run aborted";
        return rep;
    }
    rep.times = ref.times;

    const bool pressureless = cfg.params.eps == 0.0;
    rep.entropy.assign(rep.deltas.size(), {});
    rep.records.assign(rep.deltas.size(), {});
    std::vector<std::string> notes(rep.deltas.size());

    parallel_for_indexed(rep.deltas.size(), [&](std::size_t di) {
        PrimitiveState s0 = perturb(base, rep.deltas[di], eta, xi, cfg.params);
        std::vector<double>& series = rep.entropy[di];
        series.assign(ref.times.size(), std::nan(""));
        std::size_t sample_idx = 0;
        SampleHook<PrimitiveState> hook = [&](double t, const PrimitiveState& s,
                                              DiagnosticsRecord& rec) {
            const ReferenceState& rs = ref.at(t);
            AugmentedState a = augment(s, cfg.params);
            double e = rel_entropy(a, rs, cfg.params, pressureless);
            rec.rel_entropy = e;
            if (sample_idx < series.size()) series[sample_idx] = e;
            ++sample_idx;
        };
        Trajectory<PrimitiveState> traj = run(s0, cfg.params, cfg.ctrl, hook);
        rep.records[di] = std::move(traj.records);
        if (traj.aborted) {
            notes[di] = traj.abort_reason;
            series.resize(sample_idx);  // keep the partial series
        }
    });

    for (const auto& n : notes)
        if (!n.empty()) {
            rep.aborted = true;
            rep.note = n;
        }

    for (double e : rep.entropy[0]) rep.floor = std::max(rep.floor, e);

    std::vector<std::vector<double>> positive(rep.entropy.begin() + 1, rep.entropy.end());
    rep.gronwall_C = fit_gronwall_constant(rep.times, positive, rep.floor);
    for (std::size_t di = 1; di < rep.deltas.size(); ++di) {
        const auto& s = rep.entropy[di];
        rep.ratios.push_back((s.size() >= 2 && s.front() > 0.0) ? s.back() / s.front()
                                                                : std::nan(""));
    }
    return rep;
}

MachSweepReport mach_sweep(const MachSweepConfig& cfg) {
    for (std::size_t i = 0; i + 1 < cfg.eps_list.size(); ++i)
        if (!(cfg.eps_list[i] > cfg.eps_list[i + 1]))
            throw std::invalid_argument("mach_sweep: eps list must be strictly decreasing");
    for (double e : cfg.eps_list)
        if (!(e > 0.0 && e <= 1.0))
            throw std::invalid_argument("mach_sweep: eps values must lie in (0,1]");

    MachSweepReport rep;
    rep.eps_list = cfg.eps_list;
    rep.sup_norms.assign(cfg.eps_list.size(), {0.0, 0.0, 0.0});
    rep.records.assign(cfg.eps_list.size(), {});
    rep.failures.assign(cfg.eps_list.size() + 1, "");

    FluidParams limit_params = cfg.params;
    limit_params.eps = 0.0;
    ReferenceTrajectory ref = make_reference(cfg.initial, cfg.grid, limit_params, cfg.ctrl,
                                             cfg.refine);
    if (ref.aborted) {
        rep.failures.back() = "reference run aborted";
        return rep;
    }

    auto sweep_point = [&](double eps, std::array<double, 3>& sup, std::string& fail,
                           std::vector<DiagnosticsRecord>* recs) {
        FluidParams params = cfg.params;
        params.eps = eps;
        PrimitiveState s0 = cfg.initial(cfg.grid);
        SampleHook<PrimitiveState> hook = [&](double t, const PrimitiveState& s,
                                              DiagnosticsRecord& rec) {
            std::array<double, 3> n = thm53_norms(s, ref.at(t), params);
            rec.thm53 = n;
            for (int q = 0; q < 3; ++q)
                sup[static_cast<std::size_t>(q)] =
                    std::max(sup[static_cast<std::size_t>(q)], n[static_cast<std::size_t>(q)]);
        };
        Trajectory<PrimitiveState> traj = run(s0, params, cfg.ctrl, hook);
        if (recs) *recs = std::move(traj.records);
        if (traj.aborted) fail = traj.abort_reason;
    };

    parallel_for_indexed(cfg.eps_list.size(), [&](std::size_t i) {
        sweep_point(cfg.eps_list[i], rep.sup_norms[i], rep.failures[i], &rep.records[i]);
    });

    // degenerate eps = 0 point: must reproduce the reference
    {
        std::array<double, 3> sup{0.0, 0.0, 0.0};
        std::string fail;
        sweep_point(0.0, sup, fail, nullptr);
        rep.eps0_residual = std::max({sup[0], sup[1], sup[2]});
        if (!fail.empty()) rep.failures.back() = fail;
    }

    std::vector<double> lx, ly0, ly1, ly2;
    for (std::size_t i = 0; i < cfg.eps_list.size(); ++i) {
        if (!rep.failures[i].empty()) continue;
        lx.push_back(std::log(cfg.eps_list[i]));
        ly0.push_back(std::log(std::max(rep.sup_norms[i][0], 1e-300)));
        ly1.push_back(std::log(std::max(rep.sup_norms[i][1], 1e-300)));
        ly2.push_back(std::log(std::max(rep.sup_norms[i][2], 1e-300)));
    }
    if (lx.size() >= 2) {
        rep.slopes[0] = ls_slope(lx, ly0);
        rep.slopes[1] = ls_slope(lx, ly1);
        rep.slopes[2] = ls_slope(lx, ly2);
    }
    return rep;
}

TemporalOrderReport temporal_order_study(
    const InitialData& initial, const GridSpec& grid, const FluidParams& params,
    double t_end, const std::vector<double>& dts,
    const std::function<PrimitiveState(double)>& exact, const Forcing* forcing) {
    if (dts.size() < 3)
        throw std::invalid_argument("temporal_order_study: need at least three step sizes");
    TemporalOrderReport rep;
    rep.dts = dts;
    rep.errors.assign(dts.size(), 0.0);

    parallel_for_indexed(dts.size(), [&](std::size_t i) {
        const double dt = dts[i];
        PrimitiveState s = initial(grid);
        long steps = std::lround(t_end / dt);
        double t = 0.0;
        for (long k = 0; k < steps; ++k) {
            s = rk4_step(s, params, dt, t, forcing);
            t = (k + 1) * dt;
        }
        PrimitiveState ex = exact(t);
        double err = linf_norm(s.rho - ex.rho);
        for (int a = 0; a < grid.dim; ++a)
            err = std::max(err, linf_norm(s.mom[a] - ex.mom[a]));
        rep.errors[i] = err;
    });

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < dts.size(); ++i) {
        lx.push_back(std::log(dts[i]));
        ly.push_back(std::log(std::max(rep.errors[i], 1e-300)));
    }
    rep.slope = ls_slope(lx, ly);
    return rep;
}

SpatialOrderReport spatial_order_study(const InitialData& initial,
                                       const std::vector<int>& ns, int dim,
                                       const FluidParams& params, const StepControl& ctrl) {
    if (ns.size() < 3)
        throw std::invalid_argument("spatial_order_study: need at least three resolutions");
    SpatialOrderReport rep;
    rep.ns = ns;
    rep.errors.assign(ns.size(), 0.0);

    int n_max = 0;
    for (int n : ns) n_max = std::max(n, n_max);
    GridSpec fine(dim, 2 * n_max);
    StepControl fine_ctrl = ctrl;
    fine_ctrl.dt_max = ctrl.dt_max / 4.0;
    Trajectory<PrimitiveState> ref = run(initial(fine), params, fine_ctrl);
    if (ref.aborted) throw std::runtime_error("spatial_order_study: reference run aborted");

    parallel_for_indexed(ns.size(), [&](std::size_t i) {
        GridSpec g(dim, ns[static_cast<std::size_t>(i)]);
        Trajectory<PrimitiveState> traj = run(initial(g), params, ctrl);
        if (traj.aborted) throw std::runtime_error("spatial_order_study: run aborted");
        ScalarField r = spectral_restrict(ref.final_state.rho, g);
        VectorField m = spectral_restrict(ref.final_state.mom, g);
        double err = l2_norm(traj.final_state.rho - r);
        for (int a = 0; a < dim; ++a)
            err = std::max(err, l2_norm(traj.final_state.mom[a] - m[a]));
        rep.errors[i] = err;
    });

    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
        rep.ratios.push_back(rep.errors[i] / std::max(rep.errors[i + 1], 1e-300));
    return rep;
}

}  // namespace nsk
