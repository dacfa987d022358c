#pragma once

#include <vector>

#include "comather/tables.hpp"

namespace comather {

// Fixture CSVs compiled into the library at configure time.
const std::vector<GoldenBlock>& embedded_golden_blocks();

}  // namespace comather
