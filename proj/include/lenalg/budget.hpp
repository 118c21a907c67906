#pragma once

#include <cstdint>

namespace lenalg {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Work-unit cap for exhaustive enumeration: LENALG_BUDGET when set to a
// positive integer, kDefaultBudget otherwise.
std::uint64_t enumeration_budget();

// a^b, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b);

}  // namespace lenalg
