#pragma once

#include <string_view>

namespace psurf {

// Three-valued answer for questions the decision procedure cannot always settle.
enum class TriState { Yes, No, Unknown };

constexpr std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace psurf
