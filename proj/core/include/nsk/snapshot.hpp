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

#ifndef NSK_SNAPSHOT_HPP
#define NSK_SNAPSHOT_HPP

#include <string>
#include <utility>

#include "nsk/grid.hpp"

namespace nsk {

// Binary field container:
//   magic "NSKF" | version u32=1 | dim u32 | n u32 | field_count u32
//   then per field: name_len u32 | name bytes | n^dim doubles
// all integers and doubles little-endian; values row-major.

struct SnapshotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Snapshot {
    GridSpec grid;
    std::vector<std::pair<std::string, ScalarField>> fields;

    const ScalarField& field(const std::string& name) const;
    bool has(const std::string& name) const;
};

void write_snapshot(const std::string& path, const GridSpec& grid,
                    const std::vector<std::pair<std::string, ScalarField>>& fields);

Snapshot read_snapshot(const std::string& path);

/// (rho, mom_x[, mom_y, mom_z]) convenience wrappers.
void write_state_snapshot(const std::string& path, const ScalarField& rho,
                          const VectorField& mom);

}  // namespace nsk

#endif
