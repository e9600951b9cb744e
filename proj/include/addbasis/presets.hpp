#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addbasis/placement.hpp"

namespace addbasis {

// Built-in constructions selectable by name from the CLI.  All but `simple`
// are segment placements; `simple` is the classical 2t-element basis and has
// no placement form.
enum class Preset { Simple, Mrose7, Klove7, Kohonen42 };

std::vector<std::string> preset_names();
std::optional<Preset> preset_from_name(std::string_view name);
const char* to_string(Preset p);

bool preset_has_placement(Preset p);
const Placement& preset_placement(Preset p); // throws InputError for Simple
IntSet preset_basis(Preset p, int t);

} // namespace addbasis
