#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddtrail/decomposition.hpp"
#include "oddtrail/graph.hpp"

namespace oddtrail {

struct Expectation {
  std::optional<int> parts;
  bool odd_edges = false;      // every part has an odd number of edges
  bool odd_negatives = false;  // every part has an odd number of negative edges
  bool rooted = false;         // every part contains dec.root
};

struct Violation {
  std::string condition;
  std::string detail;  // e.g. "not a partition: edge 7 uncovered"
  std::vector<int> ids;
};

struct Certificate {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::string> checked;
};

// Checks a decomposition against g from scratch: exact edge partition, every
// part connected with even degrees, and whatever `expect` asks for. `sign` is
// needed only for odd_negatives.
Certificate verify_decomposition(const MultiGraph& g, const Decomposition& dec, const Expectation& expect,
                                 std::span<const int> sign = {});

}  // namespace oddtrail
