#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unbruijn/euler.hpp"

namespace unbruijn {

/// Length of the shortest alternating walk between two vertex classes,
/// i.e. the shortest walk that maintains word-orientation continuity.
/// std::nullopt when no such walk exists (diagnostic; does not occur for
/// these graphs, whose alternating diameter is n-1).
std::optional<int> alternating_distance(const UGraph& g, std::uint32_t u, std::uint32_t v);

/// A set of type-respecting duplicate edges whose insertion leaves exactly
/// two odd-degree vertices, plus the closed-form duplicate bound for
/// comparison.  The achieved count can undercut the bound.
struct Eulerization {
  struct Duplicate {
    std::uint32_t edge;  // base edge class index
    std::uint64_t read;  // orientation: the member read along the pairing walk
  };

  std::vector<Duplicate> duplicates;
  std::uint64_t bound_extra = 0;  // (n-1)(ov/2 - 1) when ov > 2, else 0
  int odd_before = 0;
  int odd_after = 0;
  std::array<std::int64_t, 2> endpoints{-1, -1};  // odd pair left unmatched

  std::string to_json(const UGraph& g) const;
};

/// Pair up odd-degree vertices (exact minimum pairing up to 12 odd vertices,
/// greedy beyond) and duplicate the edges of a shortest alternating walk for
/// every pair except one, which remains as the future path endpoints.  Each
/// walk departs and arrives on its endpoints' minority incidence types, so
/// the augmented graph stays balanced.
Eulerization eulerize(const UGraph& g);

/// l(k,n) + (n-1)(ov(k,n)/2 - 1); defined only for ov(k,n) > 2.
std::uint64_t upper_bound_length(int k, int n);

/// Worst-case suboptimality ratio r(k,n) as an exact reduced rational:
/// 0 when ov is 0 or 2, otherwise (n-1)(ov/2 - 1) / l(k,n).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Ratio&) const = default;
};

Ratio ratio(int k, int n);

}  // namespace unbruijn
