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

#ifndef NSK_DRIVER_HPP
#define NSK_DRIVER_HPP

#include <ostream>

#include "nsk/config.hpp"
#include "nsk/experiments.hpp"

namespace nsk {

/// Initial-data factory usable at any resolution; custom snapshots are
/// spectrally resampled when the requested grid differs.
InitialData make_initial_data(const RunConfig& cfg);

/// The density family behind the initial data (needed by the heat oracle).
std::function<ScalarField(const GridSpec&)> make_initial_density(const RunConfig& cfg);

/// Execute one simulation per the config, write CSV/snapshots, report a
/// summary.  Returns 0 on success, 2 on solver abort.
int run_simulation(const RunConfig& cfg, std::ostream& log);

}  // namespace nsk

#endif
