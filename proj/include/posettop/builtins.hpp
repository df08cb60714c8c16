#pragma once

#include <string>
#include <vector>

#include "posettop/poset.hpp"

namespace posettop {

/// Named example posets: chain{n}, fence{p}, circle4, sphere6, max5 (the
/// 4-element poset with maximum d), qcube{n}. Throws ParseError on unknown
/// names.
Poset builtin_poset(const std::string& name);

std::vector<std::string> builtin_names();

/// The Boolean cube Q_1^n with bit-string labels (coordinate i is character
/// i, so Q_2 lists 00, 10, 01, 11).
Poset qcube(int n);

}  // namespace posettop
