#include "unbruijn/words.hpp"

#include <algorithm>
#include <cassert>

namespace unbruijn {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

char symbol_char(Symbol s) { return kDigits[s]; }

int symbol_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

Word::Word(int k, std::vector<Symbol> symbols) : k_(k), syms_(std::move(symbols)) {
  if (k < 1) throw std::invalid_argument("alphabet size k must be >= 1");
  for (Symbol s : syms_)
    if (s >= k_)
      throw std::invalid_argument("symbol " + std::to_string(int(s)) +
                                  " out of range for k=" + std::to_string(k_));
}

Word Word::parse(int k, std::string_view text) {
  if (k > 36)
    throw std::invalid_argument("text I/O supports k <= 36 (got k=" + std::to_string(k) + ")");
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) {
    int v = symbol_value(c);
    if (v < 0 || v >= k)
      throw std::invalid_argument(std::string("invalid symbol '") + c +
                                  "' for alphabet of size " + std::to_string(k));
    syms.push_back(static_cast<Symbol>(v));
  }
  return Word(k, std::move(syms));
}

Word Word::from_code(int k, int len, std::uint64_t code) {
  std::vector<Symbol> syms(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    syms[static_cast<std::size_t>(i)] = static_cast<Symbol>(code % k);
    code /= k;
  }
  if (code != 0) throw std::invalid_argument("code out of range for word length");
  return Word(k, std::move(syms));
}

Word Word::reflected() const {
  std::vector<Symbol> rev(syms_.rbegin(), syms_.rend());
  return Word(k_, std::move(rev));
}

bool Word::is_palindrome() const {
  return std::equal(syms_.begin(), syms_.begin() + syms_.size() / 2, syms_.rbegin());
}

Word Word::prefix() const {
  if (syms_.empty()) throw std::invalid_argument("prefix of the empty word is undefined");
  return Word(k_, std::vector<Symbol>(syms_.begin(), syms_.end() - 1));
}

Word Word::suffix() const {
  if (syms_.empty()) throw std::invalid_argument("suffix of the empty word is undefined");
  return Word(k_, std::vector<Symbol>(syms_.begin() + 1, syms_.end()));
}

std::string Word::str() const {
  if (k_ > 36)
    throw std::invalid_argument("text I/O supports k <= 36 (got k=" + std::to_string(k_) + ")");
  std::string out;
  out.reserve(syms_.size());
  for (Symbol s : syms_) out.push_back(symbol_char(s));
  return out;
}

std::uint64_t Word::code() const {
  std::uint64_t acc = 0;
  for (Symbol s : syms_) acc = add_checked(mul_checked(acc, k_), s);
  return acc;
}

bool Word::operator==(const Word& other) const {
  return k_ == other.k_ && syms_ == other.syms_;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  assert(k_ == other.k_ && "comparing words over different alphabets");
  if (auto c = syms_.size() <=> other.syms_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(syms_.begin(), syms_.end(),
                                                other.syms_.begin(), other.syms_.end());
}

std::string PairClass::label() const { return "[" + rep.str() + "]"; }

PairClass canonicalize(const Word& w) {
  Word r = w.reflected();
  bool pal = (r == w);
  return PairClass{std::max(w, r), pal};
}

std::vector<PairClass> enumerate_classes(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("enumerate_classes requires k >= 1, m >= 1");
  std::uint64_t total = pow_checked(k, static_cast<unsigned>(m));
  std::vector<PairClass> classes;
  classes.reserve(static_cast<std::size_t>(count_classes(k, m)));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t r = reflect_code(code, k, m);
    if (r > code) continue;  // canonical rep is the larger member
    classes.push_back(PairClass{Word::from_code(k, m, code), r == code});
  }
  return classes;
}

std::uint64_t count_classes(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("count_classes requires k >= 1, m >= 1");
  unsigned __int128 words = pow_u128(k, static_cast<unsigned>(m));
  unsigned __int128 pals = pow_u128(k, static_cast<unsigned>((m + 1) / 2));
  return narrow_checked((words + pals) / 2);
}

std::uint64_t count_palindromes(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("count_palindromes requires k >= 1, m >= 1");
  return pow_checked(k, static_cast<unsigned>((m + 1) / 2));
}

std::uint64_t count_both_palindromic(int k, int n) {
  if (k < 1 || n < 3) throw std::invalid_argument("count_both_palindromic requires k >= 1, n >= 3");
  return n % 2 == 0 ? static_cast<std::uint64_t>(k)
                    : mul_checked(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k));
}

std::uint64_t reflect_code(std::uint64_t code, int k, int len) {
  std::uint64_t out = 0;
  for (int i = 0; i < len; ++i) {
    out = out * static_cast<std::uint64_t>(k) + code % static_cast<std::uint64_t>(k);
    code /= static_cast<std::uint64_t>(k);
  }
  return out;
}

bool palindrome_code(std::uint64_t code, int k, int len) {
  return reflect_code(code, k, len) == code;
}

std::string code_str(std::uint64_t code, int k, int len) {
  std::string out(static_cast<std::size_t>(len), '0');
  for (int i = len - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[code % static_cast<std::uint64_t>(k)];
    code /= static_cast<std::uint64_t>(k);
  }
  return out;
}

}  // namespace unbruijn
