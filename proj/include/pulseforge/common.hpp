// Copyright 2026 The Pulseforge Authors
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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pulseforge {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

using Cx = std::complex<double>;
inline constexpr Cx kI{0.0, 1.0};

// Unit conversions used at config boundaries; everything internal is SI
// (rad/s, seconds).
inline double mhz_to_rad(double mhz) { return kTwoPi * mhz * 1e6; }
inline double rad_to_mhz(double rad) { return rad / (kTwoPi * 1e6); }
inline double ns_to_s(double ns) { return ns * 1e-9; }
inline double s_to_ns(double s) { return s * 1e9; }
inline double us_to_s(double us) { return us * 1e-6; }

inline double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace pulseforge
