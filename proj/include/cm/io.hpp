#pragma once

#include "cm/holo_map.hpp"
#include "cm/hypersurface.hpp"
#include "cm/initial_value.hpp"

#include <string>

namespace cm {

/// JSON readers with full invariant re-validation; errors carry term
/// diagnostics.  Writers are canonical: fixed key order, canonical term
/// order, rationals as "p/q".  emit(parse(x)) == x byte-for-byte for
/// canonical inputs.
Hypersurface parse_surface(const std::string& text);
HoloMap parse_map(const std::string& text);
InitialValue parse_sigma(const std::string& text);

std::string emit_surface(const Hypersurface& M);
std::string emit_map(const HoloMap& phi);
std::string emit_sigma(const InitialValue& sigma);

} // namespace cm
