// Copyright 2026 The qromlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "cli_common.hpp"
#include "qromlab/qsim/state_vector.hpp"

namespace qromlab::cli {

CLI::App *add_command(CLI::App &app, const std::string &name,
                      const std::string &description, Common &common) {
    CLI::App *sub = app.add_subcommand(name, description);
    sub->add_option("--seed", common.seed, "master seed")->required();
    sub->add_option("--out", common.out, "JSON summary path (default stdout)");
    sub->add_option("--csv", common.csv, "CSV detail path");
    return sub;
}

std::shared_ptr<const sigma::Schnorr> make_group(unsigned order,
                                                 std::uint64_t challenges) {
    if (order == 11) {
        return sigma::schnorr_group_11(challenges == 0 ? 8 : challenges);
    }
    if (order == 67) {
        return sigma::schnorr_group_67(challenges == 0 ? 64 : challenges);
    }
    throw ConfigError("group", "must be 11 or 67");
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool within_3sigma(const Proportion &p, double expected) {
    return std::abs(p.mean() - expected) <= 3.0 * p.stderr_() + kInequalitySlack;
}

namespace {

int emit(const std::string &name, const Common &common, Report &rep) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["experiment"] = name;
    j["seed"] = common.seed;
    j["config"] = rep.config;
    j["constants"] = rep.constants;
    j["result"] = rep.result;
    j["holds"] = rep.holds;
    const std::string text = j.dump(2) + "\n";
    if (common.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream(common.out) << text;
    }
    if (!common.csv.empty()) {
        std::ofstream(common.csv) << rep.csv.str();
    }
    return rep.holds ? 0 : 1;
}

/// Turns {"schema_version": 1, "experiment": e, "k": v, ...} into argv.
std::vector<std::string> config_to_args(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open " + path);
    }
    const auto j = nlohmann::json::parse(in);
    if (!j.is_object()) {
        throw ConfigError("config", "must be a JSON object");
    }
    if (j.value("schema_version", 0) != kSchemaVersion) {
        throw ConfigError("schema_version", "expected " + std::to_string(kSchemaVersion));
    }
    if (!j.contains("experiment") || !j["experiment"].is_string()) {
        throw ConfigError("experiment", "missing or not a string");
    }
    std::vector<std::string> args{j["experiment"].get<std::string>()};
    for (const auto &[key, value] : j.items()) {
        if (key == "schema_version" || key == "experiment") {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                args.push_back("--" + key);
            }
            continue;
        }
        args.push_back("--" + key);
        args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    return args;
}

int run(int argc, char **argv) {
    CLI::App app{"qromlab: measure-and-reprogram and Fiat-Shamir experiments"};
    app.require_subcommand(1);
    Registry reg;
    register_reprogram(app, reg);
    register_sigma(app, reg);
    register_signatures(app, reg);
    register_extract(app, reg);
    std::string config_path;
    CLI::App *run_cfg = app.add_subcommand("run", "run an experiment from a JSON config");
    run_cfg->add_option("--config", config_path, "JSON config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        std::cerr << app.help();
        return code == 0 ? 2 : code;
    }

    if (run_cfg->parsed()) {
        auto args = config_to_args(config_path);
        std::vector<char *> cargv{argv[0]};
        for (auto &a : args) {
            cargv.push_back(a.data());
        }
        return run(static_cast<int>(cargv.size()), cargv.data());
    }
    for (auto &[sub, action] : reg.actions) {
        if (sub->parsed()) {
            Report rep = action();
            return emit(sub->get_name(), reg.common, rep);
        }
    }
    std::cerr << app.help();
    return 2;
}

} // namespace
} // namespace qromlab::cli

int main(int argc, char **argv) {
    qromlab::qsim::set_warning_handler(
        [](const std::string &msg) { std::cerr << "warning: " << msg << "\n"; });
    try {
        return qromlab::cli::run(argc, argv);
    } catch (const qromlab::cli::ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
