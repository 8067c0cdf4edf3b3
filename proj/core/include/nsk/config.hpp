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

#ifndef NSK_CONFIG_HPP
#define NSK_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "nsk/model.hpp"
#include "nsk/solver.hpp"

namespace nsk {

enum class ModelKind { Pressured, Pressureless, Rescaled };

const char* to_string(ModelKind m);

struct InitialSpec {
    enum class Kind { Constant, SingleMode, Irrotational, Custom };
    Kind kind = Kind::Constant;
    double value = 1.0;       // constant family
    double amplitude = 0.1;   // single_mode / irrotational families
    int wavenumber = 1;
    std::string path;         // custom snapshot
};

struct OutputSpec {
    std::string csv_path;      // empty: no CSV written
    std::string snapshot_dir;  // empty: no snapshots written
};

struct RunConfig {
    ModelKind model = ModelKind::Pressured;
    FluidParams params;
    GridSpec grid{1, 128};
    InitialSpec initial;
    StepControl ctrl;
    OutputSpec outputs;
    std::uint64_t seed = 0;
};

/// Strict parse: unknown keys are rejected and every invariant violation
/// is reported, not just the first.
struct ParseResult {
    std::optional<RunConfig> config;
    std::vector<std::string> violations;
    bool ok() const { return config.has_value() && violations.empty(); }
};

ParseResult parse_config(const std::string& text);
ParseResult load_config(const std::string& path);

}  // namespace nsk

#endif
