#include "lenalg/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace lenalg {

std::uint64_t enumeration_budget() {
  const char* env = std::getenv("LENALG_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  std::uint64_t v = 0;
  const auto end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc{} || ptr != end || v == 0) return kDefaultBudget;
  return v;
}

std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > max / a) return max;
    r *= a;
  }
  return r;
}

}  // namespace lenalg
