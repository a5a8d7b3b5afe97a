#pragma once

#include <span>
#include <string>

#include "d2dsim/clustering.hpp"
#include "d2dsim/simulation.hpp"
#include "d2dsim/topology.hpp"

namespace d2dsim {

// JSON wire formats. indent < 0 emits compact single-line JSON; keys are
// emitted in sorted order and doubles round-trip exactly, so equal inputs
// always serialize to identical bytes.

std::string to_json_string(const Topology& topology, int indent = -1);
std::string to_json_string(const Clustering& clustering, std::span<const Point> points,
                           int indent = -1);
std::string to_json_string(const SimConfig& config, int indent = -1);
std::string to_json_string(const SimOutput& output, int indent = -1);

Topology topology_from_json(const std::string& text);
SimOutput output_from_json(const std::string& text);

/// Applies the fields present in `text` on top of `base`; missing keys keep
/// the base value, unknown keys are rejected with std::invalid_argument.
SimConfig config_from_json(const std::string& text, SimConfig base = {});

}  // namespace d2dsim
