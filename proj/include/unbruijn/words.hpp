#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unbruijn/common.hpp"

namespace unbruijn {

using Symbol = std::uint8_t;

/// A finite word over the alphabet {0, ..., k-1}.  Words compare by length
/// first, then by k-ary numeric value, so within a fixed length comparison
/// is plain integer comparison of the k-ary expansion.
class Word {
 public:
  Word(int k, std::vector<Symbol> symbols);

  /// Parse from digit characters 0-9 then a-z (text I/O supports k <= 36;
  /// the data model itself is not capped).
  static Word parse(int k, std::string_view text);

  /// Decode the integer code of a length-`len` word (leftmost symbol most
  /// significant).
  static Word from_code(int k, int len, std::uint64_t code);

  int alphabet() const { return k_; }
  std::size_t length() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Symbol at(std::size_t i) const { return syms_.at(i); }
  const std::vector<Symbol>& symbols() const { return syms_; }

  Word reflected() const;
  bool is_palindrome() const;
  Word prefix() const;  ///< all but the last symbol; length must be >= 1
  Word suffix() const;  ///< all but the first symbol; length must be >= 1

  std::string str() const;
  std::uint64_t code() const;  ///< k-ary value; overflow is reported

  bool operator==(const Word& other) const;
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  int k_;
  std::vector<Symbol> syms_;
};

/// A reflected pair [v]: the set {v, reflect(v)} represented by its
/// numerically larger member.
struct PairClass {
  Word rep;
  bool palindrome = false;

  std::string label() const;  ///< "[" + rep + "]"
  bool operator==(const PairClass& other) const { return rep == other.rep; }
};

PairClass canonicalize(const Word& w);

/// All reflected-pair classes of length-m words, sorted by rep numerically.
/// Exactly (k^m + k^ceil(m/2))/2 classes.
std::vector<PairClass> enumerate_classes(int k, int m);

std::uint64_t count_classes(int k, int m);      ///< (k^m + k^ceil(m/2))/2
std::uint64_t count_palindromes(int k, int m);  ///< k^ceil(m/2)

/// Number of length-(n-1) words whose first and last n-2 symbols both form
/// palindromes: k when n is even, k^2 when n is odd.  Requires n >= 3.
std::uint64_t count_both_palindromic(int k, int n);

// Code-level helpers used by the graph and search machinery.  A length-len
// word over k symbols is identified with its k-ary value in [0, k^len).
std::uint64_t reflect_code(std::uint64_t code, int k, int len);
bool palindrome_code(std::uint64_t code, int k, int len);

inline std::uint64_t canonical_code(std::uint64_t code, int k, int len) {
  std::uint64_t r = reflect_code(code, k, len);
  return r > code ? r : code;
}

std::string code_str(std::uint64_t code, int k, int len);

}  // namespace unbruijn
