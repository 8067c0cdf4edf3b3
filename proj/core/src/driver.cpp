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

#include "nsk/driver.hpp"

#include <cmath>
#include <filesystem>

#include "nsk/csv.hpp"
#include "nsk/oracles.hpp"
#include "nsk/snapshot.hpp"

namespace nsk {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

ScalarField cosine_density(const GridSpec& g, double amplitude, int wavenumber) {
    return sample(g, [=](const std::array<double, 3>& x) {
        return 1.0 + amplitude * std::cos(kTwoPi * wavenumber * x[0]);
    });
}

}  // namespace

std::function<ScalarField(const GridSpec&)> make_initial_density(const RunConfig& cfg) {
    const InitialSpec ini = cfg.initial;
    switch (ini.kind) {
        case InitialSpec::Kind::Constant:
            return [ini](const GridSpec& g) { return ScalarField(g, ini.value); };
        case InitialSpec::Kind::SingleMode:
        case InitialSpec::Kind::Irrotational:
            return [ini](const GridSpec& g) {
                return cosine_density(g, ini.amplitude, ini.wavenumber);
            };
        case InitialSpec::Kind::Custom: {
            std::string path = ini.path;
            return [path](const GridSpec& g) {
                Snapshot snap = read_snapshot(path);
                const ScalarField& rho = snap.field("rho");
                if (rho.grid == g) return rho;
                if (g.n > snap.grid.n) return spectral_prolong(rho, g);
                return spectral_restrict(rho, g);
            };
        }
    }
    throw std::logic_error("make_initial_density: unreachable");
}

InitialData make_initial_data(const RunConfig& cfg) {
    const InitialSpec ini = cfg.initial;
    const FluidParams params = cfg.params;
    auto density = make_initial_density(cfg);

    switch (ini.kind) {
        case InitialSpec::Kind::Constant:
        case InitialSpec::Kind::SingleMode:
            return [density](const GridSpec& g) {
                PrimitiveState s;
                s.rho = density(g);
                s.mom = VectorField(g);
                return s;
            };
        case InitialSpec::Kind::Irrotational:
            return [density, params](const GridSpec& g) {
                return irrotational_initial_data(density(g), params);
            };
        case InitialSpec::Kind::Custom: {
            std::string path = ini.path;
            return [path](const GridSpec& g) {
                Snapshot snap = read_snapshot(path);
                static const char* names[3] = {"mom_x", "mom_y", "mom_z"};
                PrimitiveState s;
                s.rho = snap.field("rho");
                s.mom = VectorField(snap.grid);
                for (int a = 0; a < snap.grid.dim; ++a)
                    if (snap.has(names[a])) s.mom[a] = snap.field(names[a]);
                if (snap.grid == g) return s;
                PrimitiveState r;
                if (g.n > snap.grid.n) {
                    r.rho = spectral_prolong(s.rho, g);
                    r.mom = spectral_prolong(s.mom, g);
                } else {
                    r.rho = spectral_restrict(s.rho, g);
                    r.mom = spectral_restrict(s.mom, g);
                }
                return r;
            };
        }
    }
    throw std::logic_error("make_initial_data: unreachable");
}

int run_simulation(const RunConfig& cfg, std::ostream& log) {
    PrimitiveState s0 = make_initial_data(cfg)(cfg.grid);

    StepControl ctrl = cfg.ctrl;
    const bool snapshots = !cfg.outputs.snapshot_dir.empty();
    ctrl.store_snapshots = ctrl.store_snapshots || snapshots;

    Trajectory<PrimitiveState> traj = run(s0, cfg.params, ctrl);

    if (!cfg.outputs.csv_path.empty() && !traj.records.empty()) {
        write_csv(cfg.outputs.csv_path, traj.records);
        log << "wrote " << cfg.outputs.csv_path << " (" << traj.records.size()
            << " samples)\n";
    }
    if (snapshots) {
        std::filesystem::create_directories(cfg.outputs.snapshot_dir);
        for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof(name), "state_%05zu.nskf", i);
            write_state_snapshot(cfg.outputs.snapshot_dir + "/" + name,
                                 traj.snapshots[i].rho, traj.snapshots[i].mom);
        }
        log << "wrote " << traj.snapshots.size() << " snapshots to "
            << cfg.outputs.snapshot_dir << "\n";
    }

    const DiagnosticsRecord& last = traj.records.back();
    log << "model=" << to_string(cfg.model) << " dim=" << cfg.grid.dim
        << " n=" << cfg.grid.n << " steps=" << traj.step_count << "\n";
    log << "t=" << last.t << " mass=" << last.mass << " energy=" << last.energy
        << " aug_energy=" << last.aug_energy << " dissipation=" << last.dissipation
        << "\n";

    if (traj.aborted) {
        log << "solver aborted: " << traj.abort_reason << "\n";
        return 2;
    }
    return 0;
}

}  // namespace nsk
