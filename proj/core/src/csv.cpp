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

#include "nsk/csv.hpp"

#include <fstream>
#include <limits>

namespace nsk {

namespace {
void put(std::ostream& os, double v) {
    os.precision(std::numeric_limits<double>::max_digits10);
    os << v;
}
}  // namespace

void write_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records) {
    if (records.empty())
        throw std::invalid_argument("write_csv: records must be nonempty");
    const int dim = records.front().dim;
    static const char* mom_names[3] = {"mom_x", "mom_y", "mom_z"};

    os << "t,mass";
    for (int a = 0; a < dim; ++a) os << ',' << mom_names[a];
    os << ",energy,aug_energy,dissipation,rel_entropy,n_vel,n_gradrho,n_rho\n";

    for (const auto& r : records) {
        put(os, r.t);
        os << ',';
        put(os, r.mass);
        for (int a = 0; a < dim; ++a) {
            os << ',';
            put(os, r.momentum[static_cast<std::size_t>(a)]);
        }
        os << ',';
        put(os, r.energy);
        os << ',';
        put(os, r.aug_energy);
        os << ',';
        put(os, r.dissipation);
        os << ',';
        if (r.rel_entropy) put(os, *r.rel_entropy);
        if (r.thm53) {
            for (int q = 0; q < 3; ++q) {
                os << ',';
                put(os, (*r.thm53)[static_cast<std::size_t>(q)]);
            }
        } else {
            os << ",,,";
        }
        os << '\n';
    }
}

void write_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("write_csv: cannot open " + path);
    write_csv(os, records);
    if (!os) throw std::runtime_error("write_csv: write failed for " + path);
}

}  // namespace nsk
