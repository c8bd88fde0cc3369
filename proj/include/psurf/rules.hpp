#pragma once

#include <string>
#include <utility>
#include <vector>

namespace psurf {

// One rule applied during classification: a stable identifier plus a short
// statement of the mathematical fact used.
struct RuleCite {
  std::string id;
  std::string note;

  friend bool operator==(const RuleCite&, const RuleCite&) = default;
};

using RuleTrace = std::vector<RuleCite>;

inline void cite(RuleTrace* trace, std::string id, std::string note) {
  if (trace) trace->push_back({std::move(id), std::move(note)});
}

}  // namespace psurf
