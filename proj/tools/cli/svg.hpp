// Copyright 2026 The ratsep Authors
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

#include <optional>
#include <span>
#include <string>

#include "ratsep/certification.hpp"
#include "ratsep/convex.hpp"

namespace ratsep::cli {

// Deterministic 2-D drawing: one polygon for conv(vertices), one arrow per
// ray clipped to the viewport, one line per cut boundary <a, x> = beta and a
// marker for the query point. The viewport is the bounding box of vertices,
// ray anchors and tips, and the point, padded by 20% on each side.
// Throws DimensionMismatch unless dim == 2.
std::string render_svg(const VPolyhedron& set, std::span<const Certificate> cuts,
                       const std::optional<Vector>& point);

}  // namespace ratsep::cli
