#include "unbruijn/oracle.hpp"

#include <vector>

#include "json.hpp"
#include "unbruijn/sequence.hpp"

namespace unbruijn {

namespace {

// Depth-first search over words extended one symbol at a time, pruning when
// the uncovered class count exceeds the remaining extensions (each new
// symbol completes at most one subword).  Symbols are tried ascending, so
// the first cover found is the lexicographically smallest of its length.
struct Dfs {
  int k, n;
  std::uint64_t target_len;
  std::uint64_t budget;
  std::uint64_t state_mod;  // k^(n-1)
  std::uint32_t num_classes;
  std::vector<std::uint32_t> class_of;  // word code -> class index
  std::vector<std::uint32_t> count;     // occurrences per class
  std::uint32_t covered = 0;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::vector<Symbol> word;

  bool run(std::uint64_t state, std::uint64_t depth) {
    if (covered == num_classes) return true;  // extensions keep any cover a cover
    if (num_classes - covered > target_len - depth) return false;
    for (int s = 0; s < k; ++s) {
      if (++nodes > budget) {
        budget_hit = true;
        return false;
      }
      word.push_back(static_cast<Symbol>(s));
      std::uint64_t next = state * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(s);
      std::uint32_t cls = 0;
      bool scored = depth + 1 >= static_cast<std::uint64_t>(n);
      if (scored) {
        cls = class_of[next];
        if (count[cls]++ == 0) ++covered;
      }
      if (run(next % state_mod, depth + 1)) return true;
      if (scored && --count[cls] == 0) --covered;
      word.pop_back();
      if (budget_hit) return false;
    }
    return false;
  }
};

Dfs make_dfs(int k, int n, std::uint64_t length, const SearchLimits& lim) {
  if (k < 1 || n < 1) throw std::invalid_argument("cover search requires k >= 1, n >= 1");
  std::uint64_t total = pow_checked(k, static_cast<unsigned>(n));
  if (total > kDefaultGraphCap)
    throw limit_error("k^n too large for the cover search");
  Dfs d;
  d.k = k;
  d.n = n;
  d.target_len = length;
  d.budget = lim.node_budget;
  d.state_mod = pow_checked(k, static_cast<unsigned>(n - 1));
  d.class_of.assign(total, 0);
  std::uint32_t idx = 0;
  for (std::uint64_t code = 0; code < total; ++code)
    if (reflect_code(code, k, n) <= code) d.class_of[code] = idx++;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t r = reflect_code(code, k, n);
    if (r > code) d.class_of[code] = d.class_of[r];
  }
  d.num_classes = idx;
  d.count.assign(idx, 0);
  d.word.reserve(length);
  return d;
}

}  // namespace

CoverSearch exists_cover(int k, int n, std::uint64_t length, SearchLimits lim) {
  Dfs d = make_dfs(k, n, length, lim);
  CoverSearch out;
  if (d.num_classes > (length >= static_cast<std::uint64_t>(n) ? length - n + 1 : 0)) {
    // Not enough subword slots; no search needed.
    out.outcome = CoverSearch::Outcome::Exhausted;
    return out;
  }
  bool found = d.run(0, 0);
  out.nodes = d.nodes;
  if (found) {
    d.word.resize(length, 0);  // pad: extending a cover keeps it a cover
    out.outcome = CoverSearch::Outcome::Found;
    out.witness = Word(k, d.word);
  } else {
    out.outcome = d.budget_hit ? CoverSearch::Outcome::Budget : CoverSearch::Outcome::Exhausted;
  }
  return out;
}

SearchResult min_cover_length(int k, int n, SearchLimits lim) {
  SearchResult out;
  out.k = k;
  out.n = n;
  out.floor = optimal_length(k, n);
  // A cover of length n * count_classes always exists, so the loop ends.
  std::uint64_t last = mul_checked(count_classes(k, n), static_cast<std::uint64_t>(n));
  for (std::uint64_t len = out.floor; len <= last; ++len) {
    CoverSearch r = exists_cover(k, n, len, lim);
    out.nodes += r.nodes;
    if (r.outcome == CoverSearch::Outcome::Found) {
      out.found = true;
      out.min_length = len;
      out.witness = std::move(r.witness);
      out.exhaustive = true;  // shorter lengths exhausted or below the floor
      return out;
    }
    if (r.outcome == CoverSearch::Outcome::Budget) {
      out.floor = len;  // smallest length not ruled out
      out.exhaustive = false;
      return out;
    }
  }
  throw std::logic_error("no cover found below the trivial concatenation length");
}

std::string SearchResult::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["floor"] = floor;
  j["found"] = found;
  if (found) {
    j["min_length"] = min_length;
    j["witness"] = witness->str();
  } else {
    j["min_length"] = nullptr;
    j["witness"] = nullptr;
  }
  j["exhaustive"] = exhaustive;
  j["nodes"] = nodes;
  return j.dump();
}

}  // namespace unbruijn
