#pragma once
// Named rings used by the CLI and the test suites.

#include <string>
#include <utility>
#include <vector>

#include "nfold/ring.hpp"

namespace nfold {

// Q[x] and F_5[x] with omega in {x^2, x^3, x^4, x^2(x-1)}, then F_4[x;Frob]
// with omega in {x, x^2}.
const std::vector<std::pair<std::string, RingSpec>>& ring_presets();
std::vector<std::string> default_commutative_presets();
std::vector<std::string> skew_presets();

// A preset name, an inline JSON ring, or a path to a JSON file with a ring
// (either the ring itself or an object with a "ring" member).
Ring parse_ring(const std::string& text);
Ring preset_ring(const std::string& name);

}  // namespace nfold
