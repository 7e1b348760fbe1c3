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

#include "jetcut/event.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "jetcut/rng.hpp"
#include "json.hpp"

namespace jetcut {

namespace {

constexpr double kUnitTolerance = 1e-9;

// Orthonormal pair (u, v) completing `axis` to a right-handed frame.
std::pair<Vec3, Vec3> transverse_basis(const Vec3& axis) {
  const Vec3 helper = std::abs(axis.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 u = axis.cross(helper).normalized();
  Vec3 v = axis.cross(u);
  return {u, v};
}

Vec3 sample_in_cone(Rng& rng, const Vec3& axis, double spread) {
  const double cos_min = std::cos(spread);
  const double cos_theta = 1.0 - rng.uniform() * (1.0 - cos_min);
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  if (cos_theta >= 1.0) return axis;
  const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
  const auto [u, v] = transverse_basis(axis);
  Vec3 d =
      cos_theta * axis + sin_theta * (std::cos(phi) * u + std::sin(phi) * v);
  return d.normalized();
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& field,
                             const std::string& what) {
  std::ostringstream msg;
  msg << "event file line " << line << ": field '" << field << "': " << what;
  throw std::runtime_error(msg.str());
}

Vec3 parse_vec3(const nlohmann::json& j, std::size_t line,
                const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    parse_fail(line, field, "expected an array of 3 numbers");
  Vec3 v;
  for (int c = 0; c < 3; ++c) {
    if (!j[c].is_number()) parse_fail(line, field, "non-numeric component");
    v[c] = j[c].get<double>();
  }
  return v;
}

nlohmann::json to_json(const Event& ev) {
  nlohmann::json particles = nlohmann::json::array();
  for (const auto& p : ev.particles())
    particles.push_back({p.px(), p.py(), p.pz(), p.e()});
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& a : ev.truth_axes()) axes.push_back({a.x(), a.y(), a.z()});
  return {{"id", ev.id()}, {"particles", particles}, {"truth_axes", axes}};
}

}  // namespace

Particle::Particle(double px, double py, double pz, double e)
    : p_(px, py, pz), e_(e) {
  if (!p_.allFinite() || !std::isfinite(e))
    throw std::invalid_argument("particle: non-finite component");
  if (!(e > 0.0)) throw std::invalid_argument("particle: energy must be > 0");
  const double pmag = p_.norm();
  if (!(pmag > 0.0))
    throw std::invalid_argument("particle: zero 3-momentum has no direction");
  if (e < pmag - 1e-6 * e)
    throw std::invalid_argument("particle: |p| exceeds energy");
}

Vec3 direction(const Particle& p) { return p.momentum().normalized(); }

double angle_between(const Vec3& a, const Vec3& b) {
  // atan2 form stays accurate near 0 and pi where acos loses digits.
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double angle_between(const Particle& a, const Particle& b) {
  return angle_between(a.momentum(), b.momentum());
}

Event::Event(std::int64_t id, std::vector<Particle> particles,
             std::array<Vec3, 2> truth_axes)
    : id_(id), particles_(std::move(particles)), truth_axes_(truth_axes) {
  if (particles_.size() < 2)
    throw std::invalid_argument("event: needs at least 2 particles");
  for (const auto& a : truth_axes_) {
    if (!a.allFinite() || std::abs(a.norm() - 1.0) > kUnitTolerance)
      throw std::invalid_argument("event: truth axis is not unit-norm");
  }
}

void GeneratorConfig::validate() const {
  if (n_particles < 2)
    throw std::invalid_argument("generator: n_particles must be >= 2");
  if (!(angular_spread >= 0.0 && angular_spread < std::numbers::pi / 2))
    throw std::invalid_argument(
        "generator: angular_spread must be in [0, pi/2)");
  if (!(energy_min > 0.0 && energy_max >= energy_min))
    throw std::invalid_argument("generator: invalid energy range");
}

LabelledEvent generate_labelled_event(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  const double cos_t = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
  const Vec3 axis(sin_t * std::cos(phi), sin_t * std::sin(phi), cos_t);
  const std::array<Vec3, 2> axes{axis, -axis};

  const auto n = static_cast<std::size_t>(cfg.n_particles);
  std::vector<int> labels(n);
  for (auto& l : labels) l = rng.uniform() < 0.5 ? 0 : 1;
  // Both jets must be populated: if the draw put everything on one side,
  // move the last particle to the other axis.
  if (std::all_of(labels.begin(), labels.end(),
                  [&](int l) { return l == labels[0]; }))
    labels.back() = 1 - labels[0];

  std::vector<Particle> particles;
  particles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 dir = sample_in_cone(rng, axes[labels[i]], cfg.angular_spread);
    const double e = rng.uniform(cfg.energy_min, cfg.energy_max);
    particles.emplace_back(e * dir.x(), e * dir.y(), e * dir.z(), e);
  }
  return {Event(cfg.event_id, std::move(particles), axes), std::move(labels)};
}

Event generate_two_jet_event(const GeneratorConfig& cfg) {
  return generate_labelled_event(cfg).event;
}

std::vector<LabelledEvent> generate_sample(GeneratorConfig cfg, int count) {
  std::vector<LabelledEvent> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const std::uint64_t base = cfg.seed;
  for (int i = 0; i < count; ++i) {
    cfg.seed = base + static_cast<std::uint64_t>(i);
    cfg.event_id = i;
    out.push_back(generate_labelled_event(cfg));
  }
  return out;
}

std::vector<Event> parse_events(std::istream& in) {
  std::vector<Event> events;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      parse_fail(line, "<record>", e.what());
    }
    if (!j.is_object()) parse_fail(line, "<record>", "expected a JSON object");

    if (!j.contains("id") || !j["id"].is_number_integer())
      parse_fail(line, "id", "missing or not an integer");
    const auto id = j["id"].get<std::int64_t>();

    if (!j.contains("particles") || !j["particles"].is_array())
      parse_fail(line, "particles", "missing or not an array");
    std::vector<Particle> particles;
    const auto& jp = j["particles"];
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const std::string field = "particles[" + std::to_string(i) + "]";
      if (!jp[i].is_array() || jp[i].size() != 4)
        parse_fail(line, field, "expected [px, py, pz, e]");
      std::array<double, 4> v{};
      for (std::size_t c = 0; c < 4; ++c) {
        if (!jp[i][c].is_number()) parse_fail(line, field, "non-numeric value");
        v[c] = jp[i][c].get<double>();
      }
      try {
        particles.emplace_back(v[0], v[1], v[2], v[3]);
      } catch (const std::invalid_argument& e) {
        parse_fail(line, field, e.what());
      }
    }

    if (!j.contains("truth_axes"))
      parse_fail(line, "truth_axes", "missing (required for evaluation)");
    const auto& ja = j["truth_axes"];
    if (!ja.is_array() || ja.size() != 2)
      parse_fail(line, "truth_axes", "expected exactly 2 axes");
    std::array<Vec3, 2> axes{parse_vec3(ja[0], line, "truth_axes[0]"),
                             parse_vec3(ja[1], line, "truth_axes[1]")};

    try {
      events.emplace_back(id, std::move(particles), axes);
    } catch (const std::invalid_argument& e) {
      parse_fail(line, "<record>", e.what());
    }
  }
  return events;
}

std::vector<Event> read_events(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open event file " + path.string());
  return parse_events(in);
}

void write_events(std::span<const Event> events, std::ostream& out) {
  // nlohmann/json prints doubles with the shortest round-trip representation.
  for (const auto& ev : events) out << to_json(ev).dump() << '\n';
}

void write_events(std::span<const Event> events,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write event file " + path.string());
  write_events(events, out);
}

}  // namespace jetcut
