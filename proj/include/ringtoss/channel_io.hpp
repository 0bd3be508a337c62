// Copyright 2026 The Ringtoss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringtoss/errors.hpp"
#include "ringtoss/presets.hpp"
#include "ringtoss/prob.hpp"

namespace ringtoss {

// Channel spec document: {"px": [...], "pygx": [[...], ...], "name": optional}.
inline joint_source parse_channel_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw error("channel spec must be a JSON object");
    if (!doc.contains("px")) throw error("channel spec missing field 'px'");
    if (!doc.contains("pygx")) throw error("channel spec missing field 'pygx'");
    std::vector<double> px;
    try {
        px = doc.at("px").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("field 'px' must be an array of reals: ") + e.what());
    }
    std::vector<std::vector<double>> rows;
    try {
        rows = doc.at("pygx").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("field 'pygx' must be an array of rows: ") + e.what());
    }
    return build_joint(discrete_dist(std::move(px)), std::move(rows));
}

inline joint_source load_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open channel file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw error("channel file '" + path + "': " + e.what());
    }
    try {
        return parse_channel_json(doc);
    } catch (const error& e) {
        throw error("channel file '" + path + "': " + e.what());
    }
}

// Either a named preset ("bsc:0.11") or a path to a channel spec file.
inline joint_source load_channel(const std::string& preset, const std::string& file) {
    if (!preset.empty() && !file.empty()) {
        throw error("give either a preset or a channel file, not both");
    }
    if (!preset.empty()) return make_preset(preset);
    if (!file.empty()) return load_channel_file(file);
    throw error("no channel given: use --preset or --channel");
}

}  // namespace ringtoss
