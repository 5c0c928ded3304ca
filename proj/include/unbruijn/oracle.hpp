#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "unbruijn/words.hpp"

namespace unbruijn {

struct SearchLimits {
  std::uint64_t node_budget = kDefaultSearchBudget;  // per exists_cover call
};

/// Result of the exhaustive search for a length-L unoriented cover.
/// Budget exhaustion is an explicit inconclusive outcome, never a false
/// negative.
struct CoverSearch {
  enum class Outcome { Found, Exhausted, Budget };
  Outcome outcome = Outcome::Exhausted;
  std::optional<Word> witness;  // lexicographically smallest cover when found
  std::uint64_t nodes = 0;
};

CoverSearch exists_cover(int k, int n, std::uint64_t length, SearchLimits lim = {});

/// Smallest cover length, searching upward from the analytic floor l(k,n).
/// `exhaustive` is true when every shorter length is ruled out, either by
/// the floor itself or by an exhausted search.
struct SearchResult {
  int k = 0, n = 0;
  bool found = false;
  std::uint64_t min_length = 0;  // valid when found
  std::optional<Word> witness;
  std::uint64_t floor = 0;  // l(k,n)
  bool exhaustive = false;
  std::uint64_t nodes = 0;

  std::string to_json() const;
};

SearchResult min_cover_length(int k, int n, SearchLimits lim = {});

}  // namespace unbruijn
