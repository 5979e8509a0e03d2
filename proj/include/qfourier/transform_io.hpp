// Copyright 2026 The qfourier Authors
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

#include <string>
#include <vector>

#include <json.hpp>

#include "qfourier/transforms.hpp"

namespace qfourier {

nlohmann::json to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Window& w);
Window window_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Phase& phase);
Phase phase_from_json(const nlohmann::json& j);

/// {family, phase:{...}, window:{...}, lambda, z_sign}
nlohmann::json to_json(const TransformSpec& spec);
TransformSpec spec_from_json(const nlohmann::json& j);

/// Comma-separated numbers, e.g. "1,1.5,2".
std::vector<double> parse_number_list(const std::string& text);

/// "lo,hi,count"
GridSpec parse_grid(const std::string& text);

/// Window flag syntax:
///   bump:center,radius[,amplitude]
///   separable:cx,rx,cy,ry[,amplitude]
///   box:x0,x1,y0,y1[,amplitude]
Window parse_window(const std::string& text);

}  // namespace qfourier
