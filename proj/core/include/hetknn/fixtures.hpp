#pragma once

#include <span>
#include <string_view>

#include "hetknn/matrix.hpp"

namespace hetknn {

/// Names of the embedded case-study matrices: case1, case2, case3.
std::span<const std::string_view> fixture_names() noexcept;

/// case1: 3x3 normalized decision matrix (crisp, interval, fuzzy).
/// case2: 4x4 multi-criteria decision matrix (crisp, fuzzy, fuzzy, interval).
/// case3: 5x3 multi-attribute decision matrix (crisp, interval, fuzzy).
/// Unknown names throw std::invalid_argument listing the available ones.
DataMatrix fixture(std::string_view name);

}  // namespace hetknn
