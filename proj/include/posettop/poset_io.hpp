#pragma once

#include <string>

#include "posettop/poset.hpp"

namespace posettop {

/// {"elements": ["a", ...], "relations": [["a","c"], ...]} — relations may be
/// any generating set; covers are recomputed on load.
std::string poset_to_json(const Poset& P);
Poset poset_from_json(const std::string& text);

/// One "x < y" pair per line; '#' starts a comment; elements may also be
/// declared alone on a line.
std::string poset_to_text(const Poset& P);
Poset poset_from_text(const std::string& text);

/// Hasse diagram, edges drawn cover-wise (lower -> upper).
std::string poset_to_dot(const Poset& P);

/// Reads a poset from a file path, sniffing JSON vs text format.
Poset load_poset_file(const std::string& path);

}  // namespace posettop
