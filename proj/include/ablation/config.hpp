#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ablation/params.hpp"

namespace ablation {

// Flat `name = value` configuration, one entry per line, `#` comments.
// Recognized keys: r0, r1, kappa, rho, c, sigma, V0, tau, T_ambient.

/// Parses a config stream into params on top of the given base values.
/// Throws param_error on unknown keys or malformed lines.
PhysicalParams parse_config(std::istream& in, PhysicalParams base = {});

PhysicalParams load_config(const std::string& path, PhysicalParams base = {});

/// Applies `key=value` overrides (CLI flags funnel through this).
void apply_override(PhysicalParams& p, const std::string& key, const std::string& value);

/// Writes a config that parses back to the same params (r1 omitted when infinite).
void dump_config(std::ostream& out, const PhysicalParams& p);

} // namespace ablation
