// Copyright 2026 The qdrate Authors
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

#include "qdrate/model.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace qdrate {

Configuration Configuration::parse(std::string_view bits) {
  Configuration c;
  c.occupancy.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw ModelError("configuration '" + std::string(bits) + "' must contain only 0 and 1");
    }
    c.occupancy.push_back(ch == '1' ? 1 : 0);
  }
  return c;
}

std::size_t Configuration::electrons() const {
  std::size_t count = 0;
  for (auto bit : occupancy) count += bit != 0;
  return count;
}

std::string Configuration::str() const {
  std::string s;
  for (auto bit : occupancy) s.push_back(bit ? '1' : '0');
  return s;
}

std::optional<SiteToggle> single_toggle(const Configuration& from, const Configuration& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::optional<SiteToggle> toggle;
  for (std::size_t s = 0; s < from.size(); ++s) {
    if (from.occupied(s) == to.occupied(s)) continue;
    if (toggle) return std::nullopt;
    toggle = SiteToggle{s, to.occupied(s) ? Toggle::fill : Toggle::empty};
  }
  return toggle;
}

bool is_single_hop(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) return false;
  int emptied = 0;
  int filled = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a.occupied(s) && !b.occupied(s)) ++emptied;
    if (!a.occupied(s) && b.occupied(s)) ++filled;
  }
  return emptied == 1 && filled == 1;
}

std::string StateSpace::label(std::size_t state) const {
  if (state < labels.size() && !labels[state].empty()) return labels[state];
  return "s" + std::to_string(state);
}

std::optional<std::size_t> StateSpace::find(const Configuration& c) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == c) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> StateSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == name) return i;
  }
  return std::nullopt;
}

SiteToggle channel_toggle(const RateModel& model, const IncoherentChannel& channel) {
  auto toggle = single_toggle(model.space.states.at(channel.from), model.space.states.at(channel.to));
  if (!toggle) throw ModelError("channel is not a one-electron transition");
  return *toggle;
}

bool ValidationReport::mentions(std::string_view text) const {
  for (const auto& v : violations) {
    if (v.message.find(text) != std::string::npos) return true;
  }
  return false;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.message << '\n';
  return os.str();
}

namespace {

std::string channel_name(std::size_t k, const IncoherentChannel& ch) {
  return "channel " + std::to_string(k) + " (" + std::to_string(ch.from) + "->" +
         std::to_string(ch.to) + ")";
}

}  // namespace

ValidationReport validate_model(const RateModel& model) {
  ValidationReport report;
  auto add = [&report](std::string msg, std::vector<std::size_t> idx) {
    report.violations.push_back({std::move(msg), std::move(idx)});
  };

  const auto& space = model.space;
  const std::size_t n = space.size();
  if (n == 0) add("state space is empty", {});
  if (!space.labels.empty() && space.labels.size() != n) {
    add("label count " + std::to_string(space.labels.size()) + " does not match state count " +
            std::to_string(n),
        {});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (space.states[i].size() != space.sites) {
      add("state " + std::to_string(i) + ": configuration length " +
              std::to_string(space.states[i].size()) + " does not match site count " +
              std::to_string(space.sites),
          {i});
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (space.states[i] == space.states[j]) {
        add("states " + std::to_string(j) + " and " + std::to_string(i) + ": duplicate configuration",
            {j, i});
      }
    }
  }

  if (!model.energies.empty() && model.energies.size() != n) {
    add("energy count " + std::to_string(model.energies.size()) + " does not match state count " +
            std::to_string(n),
        {});
  }
  for (std::size_t i = 0; i < model.energies.size(); ++i) {
    if (!std::isfinite(model.energies[i])) add("state " + std::to_string(i) + ": energy is not finite", {i});
  }

  for (std::size_t k = 0; k < model.couplings.size(); ++k) {
    const auto& c = model.couplings[k];
    const std::string name = "coupling " + std::to_string(k);
    if (c.a >= n || c.b >= n) {
      add(name + ": state index out of range", {k});
      continue;
    }
    if (c.a == c.b) add(name + ": couples a state to itself", {k, c.a});
    if (!std::isfinite(c.omega)) add(name + ": omega is not finite", {k});
    if (c.a != c.b && !is_single_hop(space.states[c.a], space.states[c.b])) {
      add(name + ": not a single-electron hop between two sites", {k, c.a, c.b});
    }
    for (std::size_t m = 0; m < k; ++m) {
      const auto& o = model.couplings[m];
      if ((o.a == c.a && o.b == c.b) || (o.a == c.b && o.b == c.a)) {
        add(name + ": duplicates coupling " + std::to_string(m), {m, k});
      }
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t k = 0; k < model.channels.size(); ++k) {
    const auto& ch = model.channels[k];
    const std::string name = channel_name(k, ch);
    if (ch.from >= n || ch.to >= n) {
      add(name + ": state index out of range", {k});
      continue;
    }
    if (!(ch.rate >= 0.0) || !std::isfinite(ch.rate)) add(name + ": negative rate", {k});
    if (ch.from == ch.to) {
      add(name + ": self transition", {k, ch.from});
    } else if (!single_toggle(space.states[ch.from], space.states[ch.to])) {
      add(name + ": not a one-electron transition", {k, ch.from, ch.to});
    }
    auto [it, inserted] = seen.emplace(std::make_pair(ch.from, ch.to), k);
    if (!inserted) add(name + ": duplicates channel " + std::to_string(it->second), {it->second, k});
  }
  return report;
}

void require_valid(const RateModel& model) {
  auto report = validate_model(model);
  if (!report.ok()) throw ModelError("invalid rate model:\n" + report.str());
}

}  // namespace qdrate
