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

#pragma once

#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qromlab/common.hpp"
#include "qromlab/sigma/protocol.hpp"

namespace qromlab::cli {

inline constexpr int kSchemaVersion = 1;

/// Thrown for invalid flag combinations; names the offending field.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string &field, const std::string &what)
        : std::runtime_error("config field '" + field + "': " + what) {}
};

struct Common {
    std::uint64_t seed = 0;
    std::string out;
    std::string csv;
};

struct Report {
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json constants = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::ostringstream csv;
    bool holds = true;

    void check(bool ok) { holds = holds && ok; }
};

using Action = std::function<Report()>;

/// Subcommand with --seed (required), --out and --csv attached.
CLI::App *add_command(CLI::App &app, const std::string &name,
                      const std::string &description, Common &common);

/// Registry filled by the register_* functions; the selected action runs
/// after parsing.
struct Registry {
    Common common;
    std::vector<std::pair<CLI::App *, Action>> actions;

    void add(CLI::App *sub, Action action) { actions.emplace_back(sub, std::move(action)); }
};

void register_reprogram(CLI::App &app, Registry &reg);
void register_sigma(CLI::App &app, Registry &reg);
void register_signatures(CLI::App &app, Registry &reg);
void register_extract(CLI::App &app, Registry &reg);

/// Schnorr group by subgroup order (11 or 67); challenges 0 picks the
/// default |C| (8 or 64).
std::shared_ptr<const sigma::Schnorr> make_group(unsigned order,
                                                 std::uint64_t challenges = 0);

/// Writes a CSV number with round-trip precision.
std::string num(double v);

/// |observed - expected| <= 3 stderr (a zero stderr demands equality).
bool within_3sigma(const Proportion &p, double expected);

} // namespace qromlab::cli
