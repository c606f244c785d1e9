#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace quon::config {

inline constexpr std::size_t kDefaultEnumerationCap = 8;
inline constexpr std::size_t kOracleWordBudget = 9;
inline constexpr std::size_t kQPermanentCap = 16;

/// Largest n for which S_n may be enumerated. QUON_ENUM_CAP overrides the default.
inline std::size_t enumeration_cap() {
  if (const char* env = std::getenv("QUON_ENUM_CAP"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used == std::string(env).size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationCap;
}

}  // namespace quon::config
