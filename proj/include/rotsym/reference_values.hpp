#pragma once

// Published values used to check reproduction of known results.

#include <array>
#include <cstdint>

namespace rotsym {

/// W_{F3(n)}(0) for n = 3..10 (index n - 3).
const std::array<std::int64_t, 8>& published_cubic_zero_values();

/// Row c holds (W_{f0}(c), W_{f1}(c), W_{f2}(c), W_{f3}(c)) on 6 variables.
const std::array<std::array<std::int32_t, 4>, 64>& published_subfamily_spectra_n6();

}  // namespace rotsym
