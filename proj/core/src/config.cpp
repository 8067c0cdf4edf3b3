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

#include "nsk/config.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nsk {

using json = nlohmann::json;

const char* to_string(ModelKind m) {
    switch (m) {
        case ModelKind::Pressured: return "pressured";
        case ModelKind::Pressureless: return "pressureless";
        case ModelKind::Rescaled: return "rescaled";
    }
    return "?";
}

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& scope, std::vector<std::string>& out) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            out.push_back(scope + ": unknown key '" + it.key() + "'");
}

bool get_number(const json& obj, const char* key, double& dst, const std::string& scope,
                std::vector<std::string>& out) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_number()) {
        out.push_back(scope + "." + key + ": must be a number");
        return false;
    }
    dst = obj[key].get<double>();
    return true;
}

bool get_int(const json& obj, const char* key, long long& dst, const std::string& scope,
             std::vector<std::string>& out) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_number_integer()) {
        out.push_back(scope + "." + key + ": must be an integer");
        return false;
    }
    dst = obj[key].get<long long>();
    return true;
}

}  // namespace

ParseResult parse_config(const std::string& text) {
    ParseResult res;
    auto& bad = res.violations;

    json root = json::parse(text, nullptr, false);
    if (root.is_discarded()) {
        bad.push_back("config: not valid JSON");
        return res;
    }
    if (!root.is_object()) {
        bad.push_back("config: top level must be an object");
        return res;
    }

    RunConfig cfg;
    check_keys(root, {"model", "params", "grid", "initial", "ctrl", "outputs", "seed"},
               "config", bad);

    // --- model -----------------------------------------------------------
    bool have_model = false;
    if (!root.contains("model")) {
        bad.push_back("config: missing required key 'model'");
    } else if (!root["model"].is_string()) {
        bad.push_back("model: must be a string");
    } else {
        std::string m = root["model"].get<std::string>();
        have_model = true;
        if (m == "pressured") cfg.model = ModelKind::Pressured;
        else if (m == "pressureless") cfg.model = ModelKind::Pressureless;
        else if (m == "rescaled") cfg.model = ModelKind::Rescaled;
        else {
            bad.push_back("model: must be one of pressured|pressureless|rescaled");
            have_model = false;
        }
    }

    // --- params ----------------------------------------------------------
    bool eps_given = false;
    double eps_value = 0.0;
    if (root.contains("params")) {
        const json& p = root["params"];
        if (!p.is_object()) {
            bad.push_back("params: must be an object");
        } else {
            check_keys(p, {"nu", "kappa", "gamma", "eps", "rho_floor"}, "params", bad);
            get_number(p, "nu", cfg.params.nu, "params", bad);
            get_number(p, "kappa", cfg.params.kappa, "params", bad);
            get_number(p, "gamma", cfg.params.gamma, "params", bad);
            eps_given = get_number(p, "eps", eps_value, "params", bad);
            get_number(p, "rho_floor", cfg.params.rho_floor, "params", bad);
        }
    }
    if (!(cfg.params.nu > 0.0)) bad.push_back("params.nu: must be positive");
    if (!(cfg.params.gamma > 1.0)) bad.push_back("params.gamma: gamma must exceed 1");
    if (!(cfg.params.kappa >= 0.0)) bad.push_back("params.kappa: must be nonnegative");
    if (!(cfg.params.rho_floor > 0.0 && cfg.params.rho_floor < 1.0))
        bad.push_back("params.rho_floor: must lie in (0,1)");

    // model / eps consistency; defaults are the model's canonical value
    if (have_model) {
        switch (cfg.model) {
            case ModelKind::Pressured:
                cfg.params.eps = 1.0;
                if (eps_given && eps_value != 1.0)
                    bad.push_back("model/params.eps: model=pressured requires eps=1");
                break;
            case ModelKind::Pressureless:
                cfg.params.eps = 0.0;
                if (eps_given && eps_value != 0.0)
                    bad.push_back("model/params.eps: model=pressureless requires eps=0");
                break;
            case ModelKind::Rescaled:
                if (!eps_given) {
                    bad.push_back("model/params.eps: model=rescaled requires an explicit eps in (0,1)");
                } else if (!(eps_value > 0.0 && eps_value < 1.0)) {
                    bad.push_back("model/params.eps: model=rescaled requires 0 < eps < 1");
                } else {
                    cfg.params.eps = eps_value;
                }
                break;
        }
    }

    // --- grid --------------------------------------------------------------
    long long dim = 1, n = 128;
    if (root.contains("grid")) {
        const json& g = root["grid"];
        if (!g.is_object()) {
            bad.push_back("grid: must be an object");
        } else {
            check_keys(g, {"dim", "n"}, "grid", bad);
            get_int(g, "dim", dim, "grid", bad);
            get_int(g, "n", n, "grid", bad);
        }
    }
    if (dim < 1 || dim > 3) bad.push_back("grid.dim: must be 1, 2 or 3");
    if (n < 8 || n % 2 != 0) bad.push_back("grid.n: must be even and >= 8");
    if (bad.empty() || (dim >= 1 && dim <= 3 && n >= 8 && n % 2 == 0))
        cfg.grid = GridSpec(static_cast<int>(std::max(1LL, std::min(3LL, dim))),
                            (n >= 8 && n % 2 == 0) ? static_cast<int>(n) : 128);

    // --- initial -----------------------------------------------------------
    if (root.contains("initial")) {
        const json& ini = root["initial"];
        if (!ini.is_object()) {
            bad.push_back("initial: must be an object");
        } else {
            check_keys(ini, {"type", "value", "amplitude", "wavenumber", "path"}, "initial", bad);
            std::string type = "constant";
            if (ini.contains("type")) {
                if (!ini["type"].is_string()) bad.push_back("initial.type: must be a string");
                else type = ini["type"].get<std::string>();
            } else {
                bad.push_back("initial: missing required key 'type'");
            }
            if (type == "constant") cfg.initial.kind = InitialSpec::Kind::Constant;
            else if (type == "single_mode") cfg.initial.kind = InitialSpec::Kind::SingleMode;
            else if (type == "irrotational") cfg.initial.kind = InitialSpec::Kind::Irrotational;
            else if (type == "custom") cfg.initial.kind = InitialSpec::Kind::Custom;
            else bad.push_back("initial.type: must be one of constant|single_mode|irrotational|custom");

            get_number(ini, "value", cfg.initial.value, "initial", bad);
            get_number(ini, "amplitude", cfg.initial.amplitude, "initial", bad);
            long long k = cfg.initial.wavenumber;
            if (get_int(ini, "wavenumber", k, "initial", bad))
                cfg.initial.wavenumber = static_cast<int>(k);
            if (ini.contains("path")) {
                if (!ini["path"].is_string()) bad.push_back("initial.path: must be a string");
                else cfg.initial.path = ini["path"].get<std::string>();
            }
        }
    } else {
        bad.push_back("config: missing required key 'initial'");
    }
    switch (cfg.initial.kind) {
        case InitialSpec::Kind::Constant:
            if (!(cfg.initial.value > 0.0)) bad.push_back("initial.value: must be positive");
            break;
        case InitialSpec::Kind::SingleMode:
        case InitialSpec::Kind::Irrotational:
            if (!(cfg.initial.amplitude > 0.0 && cfg.initial.amplitude < 1.0))
                bad.push_back("initial.amplitude: must lie in (0,1) to keep the density positive");
            if (cfg.initial.wavenumber < 1 || cfg.initial.wavenumber > cfg.grid.n / 3)
                bad.push_back("initial.wavenumber: must lie in [1, n/3]");
            break;
        case InitialSpec::Kind::Custom:
            if (cfg.initial.path.empty())
                bad.push_back("initial.path: required for type=custom");
            else if (!std::filesystem::exists(cfg.initial.path))
                bad.push_back("initial.path: snapshot file does not exist: " + cfg.initial.path);
            break;
    }

    // --- ctrl ----------------------------------------------------------------
    if (root.contains("ctrl")) {
        const json& c = root["ctrl"];
        if (!c.is_object()) {
            bad.push_back("ctrl: must be an object");
        } else {
            check_keys(c, {"cfl", "dt_max", "t_end", "sample_every", "store_snapshots"},
                       "ctrl", bad);
            get_number(c, "cfl", cfg.ctrl.cfl, "ctrl", bad);
            get_number(c, "dt_max", cfg.ctrl.dt_max, "ctrl", bad);
            get_number(c, "t_end", cfg.ctrl.t_end, "ctrl", bad);
            get_number(c, "sample_every", cfg.ctrl.sample_every, "ctrl", bad);
            if (c.contains("store_snapshots")) {
                if (!c["store_snapshots"].is_boolean())
                    bad.push_back("ctrl.store_snapshots: must be a boolean");
                else cfg.ctrl.store_snapshots = c["store_snapshots"].get<bool>();
            }
        }
    }
    if (!(cfg.ctrl.cfl > 0.0 && cfg.ctrl.cfl <= 1.0)) bad.push_back("ctrl.cfl: must lie in (0,1]");
    if (!(cfg.ctrl.dt_max > 0.0)) bad.push_back("ctrl.dt_max: must be positive");
    if (!(cfg.ctrl.t_end > 0.0)) bad.push_back("ctrl.t_end: must be positive");
    if (!(cfg.ctrl.sample_every > 0.0)) bad.push_back("ctrl.sample_every: must be positive");

    // --- outputs / seed -------------------------------------------------------
    if (root.contains("outputs")) {
        const json& o = root["outputs"];
        if (!o.is_object()) {
            bad.push_back("outputs: must be an object");
        } else {
            check_keys(o, {"csv", "snapshot_dir"}, "outputs", bad);
            if (o.contains("csv")) {
                if (!o["csv"].is_string()) bad.push_back("outputs.csv: must be a string");
                else cfg.outputs.csv_path = o["csv"].get<std::string>();
            }
            if (o.contains("snapshot_dir")) {
                if (!o["snapshot_dir"].is_string()) bad.push_back("outputs.snapshot_dir: must be a string");
                else cfg.outputs.snapshot_dir = o["snapshot_dir"].get<std::string>();
            }
        }
    }
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer())
            bad.push_back("seed: must be a nonnegative integer");
        else {
            long long s = root["seed"].get<long long>();
            if (s < 0) bad.push_back("seed: must be a nonnegative integer");
            else cfg.seed = static_cast<std::uint64_t>(s);
        }
    }

    if (bad.empty()) res.config = cfg;
    return res;
}

ParseResult load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult res;
        res.violations.push_back("config: cannot open file " + path);
        return res;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace nsk
