#include "rotsym/reference_values.hpp"

namespace rotsym {

const std::array<std::int64_t, 8>& published_cubic_zero_values() {
  static constexpr std::array<std::int64_t, 8> kValues = {6, 8, 20, 28, 56, 96, 168, 304};
  return kValues;
}

const std::array<std::array<std::int32_t, 4>, 64>& published_subfamily_spectra_n6() {
  static constexpr std::array<std::array<std::int32_t, 4>, 64> kRows = {{
    {36, 28, 28, 4},
    {4, 12, 4, 12},
    {12, 20, 4, -4},
    {-4, -12, -4, 4},
    {12, -4, 20, 4},
    {-4, 12, -4, -4},
    {-12, 4, -4, -4},
    {4, -12, 4, 4},
    {12, 20, -4, 4},
    {12, 4, 4, 12},
    {4, -4, 4, -4},
    {-12, -4, -4, 4},
    {4, -12, -12, 4},
    {-12, 4, -4, -4},
    {-4, 12, -4, -4},
    {12, -4, 4, 4},
    {12, 4, 20, -4},
    {-4, 4, -4, -12},
    {4, 12, 12, 4},
    {4, -4, 4, -4},
    {4, 4, -4, -4},
    {4, 4, 4, 4},
    {-4, -4, -12, 4},
    {-4, -4, -4, -4},
    {-12, -4, 4, -4},
    {4, -4, 12, -12},
    {-4, -12, -4, 4},
    {-4, 4, -12, -4},
    {-4, -4, 12, -4},
    {-4, -4, -12, 4},
    {4, 4, 4, 4},
    {4, 4, 12, -4},
    {4, 4, 12, 12},
    {4, 4, 4, 20},
    {-4, -4, 4, -12},
    {-4, -4, -4, 12},
    {12, 4, 4, 12},
    {-4, 4, -4, 4},
    {4, 12, -4, -12},
    {4, -4, 4, 12},
    {-4, -4, 12, -4},
    {-4, -4, 4, 4},
    {4, 4, 4, 4},
    {4, 4, -4, -4},
    {-12, -4, 4, -4},
    {4, -4, -4, -12},
    {-4, -12, -4, 4},
    {-4, 4, 4, -4},
    {-4, -4, -12, 4},
    {-4, -4, -4, 12},
    {4, 4, -4, -4},
    {4, 4, 4, 20},
    {-12, -4, -4, 4},
    {4, -4, 4, -4},
    {-4, -12, 4, -4},
    {-4, 4, -4, -12},
    {4, 4, -12, 4},
    {4, 4, -4, 12},
    {-4, -4, -4, -4},
    {-4, -4, 4, -12},
    {12, 4, -4, 4},
    {-4, 4, 4, -4},
    {4, 12, 4, -4},
    {4, -4, -4, 20},
  }};
  return kRows;
}

}  // namespace rotsym
