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
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulseforge/common.hpp"

namespace pulseforge {

/// One piecewise-constant sample: I = amp cos(phase), Q = amp sin(phase).
struct Segment {
  double amplitude = 0.0;  // dimensionless, in [0, 1]
  double phase = 0.0;      // radians, in [0, 2pi)

  bool operator==(const Segment&) const = default;
};

/// A named multi-channel piecewise-constant waveform with a uniform segment
/// duration. Durations are carried in nanoseconds so that serialization is
/// an identity on every stored field.
struct PwcWaveform {
  std::string name;
  double segment_duration_ns = 0.0;
  std::map<std::string, std::vector<Segment>> channels;

  double dt_seconds() const { return ns_to_s(segment_duration_ns); }

  int num_segments() const {
    return channels.empty() ? 0
                            : static_cast<int>(channels.begin()->second.size());
  }

  double duration_seconds() const { return num_segments() * dt_seconds(); }

  bool operator==(const PwcWaveform&) const = default;

  void validate() const {
    if (!(segment_duration_ns > 0.0))
      throw std::invalid_argument("waveform: segment duration must be > 0");
    const int n = num_segments();
    for (const auto& [id, segs] : channels) {
      if (static_cast<int>(segs.size()) != n)
        throw std::invalid_argument("waveform: channel '" + id +
                                    "' has mismatched segment count");
      for (const auto& s : segs) {
        if (s.amplitude < 0.0 || s.amplitude > 1.0)
          throw std::invalid_argument("waveform: amplitude outside [0, 1]");
        if (s.phase < 0.0 || s.phase >= kTwoPi)
          throw std::invalid_argument("waveform: phase outside [0, 2pi)");
      }
    }
  }
};

/// Concatenation in time; both waveforms must share dt and channel set.
inline PwcWaveform concat(const PwcWaveform& a, const PwcWaveform& b) {
  if (a.channels.empty()) return b;
  if (b.channels.empty()) return a;
  if (a.segment_duration_ns != b.segment_duration_ns)
    throw std::invalid_argument("concat: segment durations differ");
  PwcWaveform out = a;
  for (const auto& [id, segs] : b.channels) {
    auto it = out.channels.find(id);
    if (it == out.channels.end())
      throw std::invalid_argument("concat: channel sets differ");
    it->second.insert(it->second.end(), segs.begin(), segs.end());
  }
  return out;
}

/// Returns a copy with `offset` added to every segment phase of `channel`.
inline PwcWaveform with_phase_offset(const PwcWaveform& w,
                                     const std::string& channel,
                                     double offset) {
  PwcWaveform out = w;
  auto it = out.channels.find(channel);
  if (it == out.channels.end())
    throw std::invalid_argument("with_phase_offset: no such channel");
  for (auto& s : it->second) s.phase = wrap_phase(s.phase + offset);
  return out;
}

// ---------------------------------------------------------------------------
// Discrete action space

/// The finite action set the learning agent selects from: every action fixes
/// (amplitude, phase) for the next segment of each controlled channel.
struct ActionGrid {
  std::vector<double> amplitude_levels;  // sorted, in [0, 1]
  std::vector<double> phase_levels;      // sorted, in [0, 2pi)
  std::vector<std::string> channels;     // 1 or 2 channel ids

  int per_channel_size() const {
    return static_cast<int>(amplitude_levels.size() * phase_levels.size());
  }

  int size() const {
    int total = 1;
    for (std::size_t c = 0; c < channels.size(); ++c) total *= per_channel_size();
    return total;
  }

  void validate() const {
    if (amplitude_levels.empty() || phase_levels.empty() || channels.empty())
      throw std::invalid_argument("action grid: empty level or channel list");
    if (channels.size() > 2)
      throw std::invalid_argument("action grid: at most 2 channels per action");
    if (size() > 512)
      throw std::invalid_argument("action grid: more than 512 actions");
    for (std::size_t i = 1; i < amplitude_levels.size(); ++i)
      if (amplitude_levels[i] <= amplitude_levels[i - 1])
        throw std::invalid_argument("action grid: amplitude levels not sorted");
    for (std::size_t i = 1; i < phase_levels.size(); ++i)
      if (phase_levels[i] <= phase_levels[i - 1])
        throw std::invalid_argument("action grid: phase levels not sorted");
    for (double a : amplitude_levels)
      if (a < 0.0 || a > 1.0)
        throw std::invalid_argument("action grid: amplitude level outside [0, 1]");
    for (double p : phase_levels)
      if (p < 0.0 || p >= kTwoPi)
        throw std::invalid_argument("action grid: phase level outside [0, 2pi)");
  }

  static std::vector<double> linear_amplitudes(int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? 0.0 : double(i) / double(n - 1);
    return v;
  }

  static std::vector<double> uniform_phases(int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = kTwoPi * double(i) / double(n);
    return v;
  }
};

/// Row-major decode over (amplitude, phase) per channel; channel 0 is the
/// most significant digit.
inline std::vector<Segment> action_to_segments(int action_index,
                                               const ActionGrid& grid) {
  if (action_index < 0 || action_index >= grid.size())
    throw std::invalid_argument("action_to_segments: index out of range");
  const int per = grid.per_channel_size();
  const int np = static_cast<int>(grid.phase_levels.size());
  std::vector<Segment> out(grid.channels.size());
  int rem = action_index;
  for (int c = static_cast<int>(grid.channels.size()) - 1; c >= 0; --c) {
    const int sub = rem % per;
    rem /= per;
    out[c].amplitude = grid.amplitude_levels[sub / np];
    out[c].phase = grid.phase_levels[sub % np];
  }
  return out;
}

/// Inverse of action_to_segments; segments must sit exactly on grid points.
inline int encode_action(const std::vector<Segment>& segments,
                         const ActionGrid& grid) {
  if (segments.size() != grid.channels.size())
    throw std::invalid_argument("encode_action: channel count mismatch");
  const int np = static_cast<int>(grid.phase_levels.size());
  int index = 0;
  for (std::size_t c = 0; c < segments.size(); ++c) {
    int ai = -1, pi = -1;
    for (std::size_t i = 0; i < grid.amplitude_levels.size(); ++i)
      if (grid.amplitude_levels[i] == segments[c].amplitude) ai = static_cast<int>(i);
    for (std::size_t i = 0; i < grid.phase_levels.size(); ++i)
      if (grid.phase_levels[i] == segments[c].phase) pi = static_cast<int>(i);
    if (ai < 0 || pi < 0)
      throw std::invalid_argument("encode_action: segment not on the grid");
    index = index * grid.per_channel_size() + ai * np + pi;
  }
  return index;
}

/// Expands a full action sequence into a waveform with one segment per action.
inline PwcWaveform assemble_waveform(const std::vector<int>& actions,
                                     const ActionGrid& grid,
                                     double segment_duration_ns,
                                     const std::string& name = "") {
  if (actions.empty())
    throw std::invalid_argument("assemble_waveform: empty action list");
  PwcWaveform w;
  w.name = name;
  w.segment_duration_ns = segment_duration_ns;
  for (const auto& id : grid.channels) w.channels[id] = {};
  for (int a : actions) {
    const auto segs = action_to_segments(a, grid);
    for (std::size_t c = 0; c < grid.channels.size(); ++c)
      w.channels[grid.channels[c]].push_back(segs[c]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Analytic baselines

/// Gaussian-plus-derivative pulse sampled at segment midpoints: I carries the
/// Gaussian (sigma = duration/4), Q carries beta * sigma * dI/dt. The default
/// single-qubit comparison gate.
inline PwcWaveform drag_baseline(double duration_ns, double amp, double beta,
                                 int segments,
                                 const std::string& channel = "d0") {
  if (segments < 4)
    throw std::invalid_argument("drag_baseline: need at least 4 segments");
  PwcWaveform w;
  w.name = "drag";
  w.segment_duration_ns = duration_ns / segments;
  auto& segs = w.channels[channel];
  const double sigma = duration_ns / 4.0;
  const double t0 = duration_ns / 2.0;
  for (int k = 0; k < segments; ++k) {
    const double t = (k + 0.5) * w.segment_duration_ns;
    const double gauss = amp * std::exp(-0.5 * (t - t0) * (t - t0) / (sigma * sigma));
    const double di = -beta * (t - t0) / sigma * gauss;
    Segment s;
    s.amplitude = std::min(1.0, std::hypot(gauss, di));
    s.phase = wrap_phase(std::atan2(di, gauss));
    segs.push_back(s);
  }
  return w;
}

/// Flat-top pulse with Gaussian rise and fall over `edge_segments` on each
/// side; the stock cross-resonance drive shape.
inline PwcWaveform square_gaussian(double duration_ns, double amp, double phase,
                                   int segments, int edge_segments,
                                   const std::string& channel = "u0") {
  if (segments < 2 * edge_segments)
    throw std::invalid_argument("square_gaussian: edges longer than the pulse");
  PwcWaveform w;
  w.name = "square_gaussian";
  w.segment_duration_ns = duration_ns / segments;
  auto& segs = w.channels[channel];
  const double sigma = std::max(1, edge_segments) / 2.0;
  for (int k = 0; k < segments; ++k) {
    double env = 1.0;
    const double mid = k + 0.5;
    if (mid < edge_segments) {
      const double d = edge_segments - mid;
      env = std::exp(-0.5 * d * d / (sigma * sigma));
    } else if (mid > segments - edge_segments) {
      const double d = mid - (segments - edge_segments);
      env = std::exp(-0.5 * d * d / (sigma * sigma));
    }
    segs.push_back({clamp01(amp * env), wrap_phase(phase)});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Serialization ("pulse_schema": 1)

inline nlohmann::json waveform_to_json(const PwcWaveform& w) {
  nlohmann::json j;
  j["pulse_schema"] = 1;
  j["name"] = w.name;
  j["dt_ns"] = w.segment_duration_ns;
  nlohmann::json chans = nlohmann::json::object();
  for (const auto& [id, segs] : w.channels) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : segs) arr.push_back({{"amp", s.amplitude}, {"phase", s.phase}});
    chans[id] = std::move(arr);
  }
  j["channels"] = std::move(chans);
  return j;
}

inline PwcWaveform waveform_from_json(const nlohmann::json& j) {
  if (!j.contains("pulse_schema") || j.at("pulse_schema").get<int>() != 1)
    throw std::invalid_argument("waveform: unsupported or missing pulse_schema");
  PwcWaveform w;
  w.name = j.value("name", "");
  w.segment_duration_ns = j.at("dt_ns").get<double>();
  for (const auto& [id, arr] : j.at("channels").items()) {
    auto& segs = w.channels[id];
    for (const auto& e : arr)
      segs.push_back({e.at("amp").get<double>(), e.at("phase").get<double>()});
  }
  w.validate();
  return w;
}

// ---------------------------------------------------------------------------

/// Per-qubit accumulated virtual-Z angle, wrapped to [0, 2pi). Passed by
/// value and threaded explicitly through gate compilation.
struct VirtualFrame {
  std::vector<double> phase;  // one entry per qubit

  static VirtualFrame zero(int qubits) {
    VirtualFrame f;
    f.phase.assign(qubits, 0.0);
    return f;
  }

  void add(int qubit, double angle) {
    phase.at(qubit) = wrap_phase(phase.at(qubit) + angle);
  }
};

}  // namespace pulseforge
