#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unbruijn/eulerize.hpp"

namespace unbruijn {

/// Optimal unoriented cover length l(k,n) = (k^n + k^ceil(n/2) + 2n - 2)/2.
/// The numerator is always even; overflow is reported.
std::uint64_t optimal_length(int k, int n);

/// Decode a list of overlapping reads into the word they spell; each read
/// must extend the previous one by exactly one symbol.
Word decode_reads(int k, int n, std::span<const std::uint64_t> reads);
Word decode(const AlternatingPath& path);

/// Forward-subword coverage of the reflected-pair classes of length n.
/// A class is covered when either member occurs as a forward subword, and
/// duplicated when it occurs two or more times (one occurrence of a
/// palindrome counts once; reading it backwards is not a duplicate).
struct CoverageReport {
  int k = 0, n = 0;
  std::uint64_t length = 0;
  std::vector<std::uint32_t> counts;      // per class, aligned with enumerate_classes order
  std::vector<std::uint64_t> missing;     // class rep codes, ascending
  std::vector<std::uint64_t> duplicated;  // class rep codes with count >= 2, ascending
  bool cover = false;
  bool optimal = false;

  std::string to_json() const;
};

CoverageReport verify(const Word& w, int k, int n, std::uint64_t cap = kDefaultGraphCap);

/// End-to-end construction of an unoriented de Bruijn sequence: build
/// uBg(k,n), Eulerize if needed, balance the palindromic incidences, walk an
/// alternating Eulerian path, decode.  The result always verifies as a
/// cover; it has optimal length exactly when optimal_exists(k,n).
struct GenerateResult {
  int k = 0, n = 0;
  Word sequence;
  bool optimal = false;
  std::uint64_t optimal_len = 0;
  std::uint64_t bound_extra = 0;
  // duplicated parallel edges used, as (class label, orientation string)
  std::vector<std::pair<std::string, std::string>> duplicates;
  AlternatingPath path;  // empty for the trivial k=1 / n=1 cases

  std::string to_json() const;
};

GenerateResult generate(int k, int n, std::uint64_t cap = kDefaultGraphCap);

}  // namespace unbruijn
