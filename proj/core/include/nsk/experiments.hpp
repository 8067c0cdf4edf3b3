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

#ifndef NSK_EXPERIMENTS_HPP
#define NSK_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>

#include "nsk/oracles.hpp"
#include "nsk/solver.hpp"

namespace nsk {

/// Initial data realizable at any resolution (needed for refined
/// reference runs).
using InitialData = std::function<PrimitiveState(const GridSpec&)>;

/// Strong reference sampled on the working grid.
struct ReferenceTrajectory {
    std::vector<double> times;
    std::vector<ReferenceState> states;

    const ReferenceState& at(double t) const;
    bool aborted = false;
};

/// Numerically converged reference: the same solver at refine x resolution
/// and dt/refine^2, spectrally restricted to the working grid at sample
/// times.
ReferenceTrajectory make_reference(const InitialData& initial, const GridSpec& working,
                                   const FluidParams& params, const StepControl& ctrl,
                                   int refine = 2);

/// Exact reference on the irrotational heat family (pressureless system;
/// the momentum balance additionally requires kappa = 0).
ReferenceTrajectory make_heat_reference(const ScalarField& rho0, const FluidParams& params,
                                        const StepControl& ctrl);

struct WeakStrongConfig {
    GridSpec grid;
    FluidParams params;
    StepControl ctrl;
    InitialData initial;
    std::vector<double> deltas;           // delta = 0 always prepended
    std::uint64_t seed = 0x6e736b;        // perturbation shapes
    bool use_heat_reference = false;      // pressureless irrotational case
    std::function<ScalarField(const GridSpec&)> rho0;  // needed with heat reference
};

struct WeakStrongReport {
    std::vector<double> deltas;
    std::vector<double> times;
    std::vector<std::vector<double>> entropy;  // entropy[delta_idx][sample]
    std::vector<std::vector<DiagnosticsRecord>> records;  // per delta
    double floor = 0.0;        // sup_t entropy for delta = 0
    double gronwall_C = 0.0;   // pooled least-squares slope of log entropy
    std::vector<double> ratios;  // entropy(T)/entropy(0) per delta (>0 only)
    bool aborted = false;
    std::string note;
};

WeakStrongReport weak_strong_experiment(const WeakStrongConfig& cfg);

struct MachSweepConfig {
    GridSpec grid;
    FluidParams params;  // eps replaced per sweep point
    StepControl ctrl;
    InitialData initial;
    std::vector<double> eps_list;  // strictly decreasing, in (0,1]
    int refine = 2;
};

struct MachSweepReport {
    std::vector<double> eps_list;
    std::vector<std::array<double, 3>> sup_norms;  // per eps
    std::vector<std::vector<DiagnosticsRecord>> records;  // per eps
    std::array<double, 3> slopes{0.0, 0.0, 0.0};   // log-log fit per norm
    double eps0_residual = 0.0;  // degenerate eps = 0 point vs reference
    std::vector<std::string> failures;
};

MachSweepReport mach_sweep(const MachSweepConfig& cfg);

struct TemporalOrderReport {
    std::vector<double> dts;
    std::vector<double> errors;
    double slope = 0.0;
};

/// Fixed-step runs against an exact trajectory evaluator; the error is
/// the max Linf field discrepancy at t_end.
TemporalOrderReport temporal_order_study(
    const InitialData& initial, const GridSpec& grid, const FluidParams& params,
    double t_end, const std::vector<double>& dts,
    const std::function<PrimitiveState(double)>& exact, const Forcing* forcing = nullptr);

struct SpatialOrderReport {
    std::vector<int> ns;
    std::vector<double> errors;   // vs reference at 2 x max(n)
    std::vector<double> ratios;   // errors[i] / errors[i+1]
};

SpatialOrderReport spatial_order_study(const InitialData& initial,
                                       const std::vector<int>& ns, int dim,
                                       const FluidParams& params, const StepControl& ctrl);

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Pooled Gronwall constant: least-squares slope of log(E(t)/E(0)) over
/// samples with E > 100 * floor, pooled across the delta > 0 series.
double fit_gronwall_constant(const std::vector<double>& times,
                             const std::vector<std::vector<double>>& entropy_series,
                             double floor);

/// Worker-pool map over [0, n); worker count capped by KORTEWEG_THREADS.
/// Results are aggregated by index, so the output is independent of the
/// pool size.
void parallel_for_indexed(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nsk

#endif
