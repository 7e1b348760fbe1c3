// Copyright 2026 The jetcut Authors
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

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace jetcut {

using Vec3 = Eigen::Vector3d;

/// Massless-direction particle record: 3-momentum in GeV plus energy.
/// Construction enforces e > 0, |p| > 0 and e >= |p| - 1e-6 e.
class Particle {
 public:
  Particle(double px, double py, double pz, double e);

  double px() const { return p_.x(); }
  double py() const { return p_.y(); }
  double pz() const { return p_.z(); }
  double e() const { return e_; }
  const Vec3& momentum() const { return p_; }

  bool operator==(const Particle&) const = default;

 private:
  Vec3 p_;
  double e_;
};

/// Unit vector along the particle's 3-momentum.
Vec3 direction(const Particle& p);

/// Opening angle in [0, pi] between two directions.
double angle_between(const Vec3& a, const Vec3& b);
double angle_between(const Particle& a, const Particle& b);

/// A collision event: ordered particles plus the two truth quark axes.
class Event {
 public:
  Event(std::int64_t id, std::vector<Particle> particles,
        std::array<Vec3, 2> truth_axes);

  std::int64_t id() const { return id_; }
  std::span<const Particle> particles() const { return particles_; }
  const std::array<Vec3, 2>& truth_axes() const { return truth_axes_; }
  std::size_t size() const { return particles_.size(); }

  bool operator==(const Event&) const = default;

 private:
  std::int64_t id_;
  std::vector<Particle> particles_;
  std::array<Vec3, 2> truth_axes_;
};

struct GeneratorConfig {
  int n_particles = 6;
  double angular_spread = 0.3;  // radians; 0 puts every particle on its axis
  double energy_min = 1.0;      // GeV
  double energy_max = 50.0;     // GeV
  std::uint64_t seed = 0;
  std::int64_t event_id = 0;

  void validate() const;
};

/// Generated event together with the generator's own particle-to-axis log.
struct LabelledEvent {
  Event event;
  std::vector<int> truth_labels;  // 0 or 1 per particle
};

/// Toy back-to-back two-jet event.
///
/// Draws an axis u uniformly on the sphere (truth axes u and -u), labels each
/// particle with an axis (both labels always occur), then samples each
/// direction uniformly in solid angle inside the cone of half-angle
/// `angular_spread` around its axis and the energy uniformly in
/// [energy_min, energy_max]. Momenta are massless: p = E * direction.
LabelledEvent generate_labelled_event(const GeneratorConfig& cfg);
Event generate_two_jet_event(const GeneratorConfig& cfg);

/// `count` events with seeds seed, seed+1, ... and ids 0..count-1.
std::vector<LabelledEvent> generate_sample(GeneratorConfig cfg, int count);

// JSON-lines event files, one object per line:
//   {"id": 7, "particles": [[px,py,pz,e], ...], "truth_axes":
//   [[x,y,z],[x,y,z]]}
std::vector<Event> read_events(const std::filesystem::path& path);
std::vector<Event> parse_events(std::istream& in);
void write_events(std::span<const Event> events,
                  const std::filesystem::path& path);
void write_events(std::span<const Event> events, std::ostream& out);

}  // namespace jetcut
