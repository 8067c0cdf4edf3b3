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

#ifndef NSK_CSV_HPP
#define NSK_CSV_HPP

#include <ostream>
#include <string>

#include "nsk/functionals.hpp"

namespace nsk {

// Diagnostic CSV with the fixed column set
//   t, mass, mom_x[, mom_y, mom_z], energy, aug_energy, dissipation,
//   rel_entropy, n_vel, n_gradrho, n_rho
// where optional columns are left blank when not computed.  The schema
// is identical across every subcommand that emits records.

void write_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records);
void write_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records);

}  // namespace nsk

#endif
