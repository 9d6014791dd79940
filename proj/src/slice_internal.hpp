#pragma once

#include <cstdint>
#include <vector>

#include "bkneser/hochster.hpp"

namespace bkneser::detail {

/// Face enumeration on word-sized adjacency rows.
ComplexSlice enumerate_faces(const std::vector<std::uint64_t>& rows, std::uint64_t w, const OracleGuards& guards);

}  // namespace bkneser::detail
