// Copyright 2026 The entaudit Authors
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

#include <array>

namespace entaudit {

/// Perturbation sizes probed by the continuity scans, largest first.
inline constexpr std::array<double, 3> kContinuityScales{1e-2, 1e-3, 1e-4};
/// Largest change accepted at the smallest scale.
inline constexpr double kContinuityThreshold = 1e-3;

/// Scalar verdict for observed moduli (largest change seen at each scale).
///
/// Equals the modulus at the smallest scale when the moduli shrink with the
/// scale. If a modulus grows as the scale shrinks, the growth is added on top
/// of the threshold so the result always exceeds it.
double continuity_violation(const std::array<double, 3>& moduli);

}  // namespace entaudit
