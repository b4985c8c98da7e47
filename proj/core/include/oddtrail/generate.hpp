#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddtrail/graph.hpp"

namespace oddtrail {

enum class SignRule { kNone, kAllNegative, kRandomOddParity };

struct InstanceSpec {
  int degree = 4;  // must be even
  int order = 5;
  std::uint64_t seed = 1;
  int connectivity_floor = 0;
  // Forces lambda to this value instead of only bounding it from below.
  std::optional<int> exact_connectivity;
  SignRule sign = SignRule::kNone;
  int retry_budget = 20000;
};

struct Instance {
  MultiGraph graph;
  std::vector<int> sign;  // empty for SignRule::kNone
};

// Configuration-model pairing, resampled until the graph is connected and
// meets the connectivity requirement. Deterministic per spec.
Instance generate(const InstanceSpec& spec);

}  // namespace oddtrail
