#include "unbruijn/eulerize.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "json.hpp"
#include "unbruijn/sequence.hpp"

namespace unbruijn {

namespace {

// Shortest directed shift distance between two length-(n-1) orientation
// words: the smallest m with the last n-1-m symbols of `a` equal to the
// first n-1-m symbols of `b`.  Alternating walks in uBg are exactly the
// orientation-continuous word walks, so this is the alternating distance
// between oriented states; m = n-1 always works, which is the diameter.
int shift_dist(std::uint64_t a, std::uint64_t b, int k, int len) {
  std::uint64_t mod = 1;
  for (int m = 0; m <= len; ++m) {
    std::uint64_t asuf = a % pow_checked(k, static_cast<unsigned>(len - m));
    std::uint64_t bpre = b / mod;
    if (asuf == bpre) return m;
    mod *= static_cast<std::uint64_t>(k);
  }
  return len;  // unreachable: m = len always matches
}

// The words read along the unique shortest walk realizing shift_dist(a, b).
std::vector<std::uint64_t> walk_words(std::uint64_t a, std::uint64_t b, int k, int len) {
  int m = shift_dist(a, b, k, len);
  std::vector<Symbol> c(static_cast<std::size_t>(len + m));
  for (int i = len - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<Symbol>(a % k);
    a /= static_cast<std::uint64_t>(k);
  }
  for (int i = m - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(len + i)] = static_cast<Symbol>(b % k);
    b /= static_cast<std::uint64_t>(k);
  }
  std::vector<std::uint64_t> words;
  words.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::uint64_t w = 0;
    for (int j = 0; j <= len; ++j)
      w = w * static_cast<std::uint64_t>(k) + c[static_cast<std::size_t>(i + j)];
    words.push_back(w);
  }
  return words;
}

std::uint64_t bound_extra_for(int n, std::uint64_t ov) {
  if (ov <= 2) return 0;
  return mul_checked(static_cast<std::uint64_t>(n - 1), ov / 2 - 1);
}

// Oriented endpoint states for the pairing walks.  A walk must depart its
// start on the start's minority incidence type and arrive at its end on the
// end's minority type; then each duplicated walk adds one minority end at
// both endpoints and an I/II pair at every interior vertex, keeping every
// non-palindromic vertex balanced.
struct OddStates {
  std::uint64_t depart;
  std::uint64_t arrive;
};

OddStates odd_states(const UGraph& g, std::uint32_t v) {
  std::uint64_t rep = g.vertex_rep(v);
  if (g.vertex_palindrome(v)) return {rep, rep};
  int type_i = 0, type_ii = 0;
  for (const UGraph::Incidence& inc : g.incidences(v)) {
    if (inc.type == IncidenceType::TypeI) ++type_i;
    else if (inc.type == IncidenceType::TypeII) ++type_ii;
  }
  assert(std::abs(type_i - type_ii) == 1);
  std::uint64_t refl = reflect_code(rep, g.k(), g.n() - 1);
  // TypeI departures run from the rep state, TypeII from the reflection;
  // TypeI arrivals land on the reflection, TypeII on the rep.
  if (type_i < type_ii) return {rep, refl};
  return {refl, rep};
}

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // indices into the odd list
  int omit = -1;                           // index into pairs: left unmatched
  long realized = 0;
};

// Exact search over perfect matchings: minimize total walk length excluding
// the single omitted pair (the future path endpoints).
void exact_search(const std::vector<std::vector<int>>& d, std::vector<int>& left,
                  std::vector<std::pair<int, int>>& acc, Matching& best) {
  if (left.empty()) {
    long total = 0;
    int max_at = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      total += d[acc[i].first][acc[i].second];
      if (d[acc[i].first][acc[i].second] > d[acc[max_at].first][acc[max_at].second])
        max_at = static_cast<int>(i);
    }
    long realized = total - d[acc[max_at].first][acc[max_at].second];
    if (best.omit < 0 || realized < best.realized) {
      best.pairs = acc;
      best.omit = max_at;
      best.realized = realized;
    }
    return;
  }
  int a = left.front();
  for (std::size_t i = 1; i < left.size(); ++i) {
    int b = left[i];
    std::vector<int> rest;
    rest.reserve(left.size() - 2);
    for (std::size_t j = 1; j < left.size(); ++j)
      if (j != i) rest.push_back(left[j]);
    acc.push_back({a, b});
    exact_search(d, rest, acc, best);
    acc.pop_back();
  }
}

Matching greedy_search(const std::vector<std::vector<int>>& d, const UGraph& g,
                       const std::vector<std::uint32_t>& odd) {
  struct Cand {
    int a, b, dist;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      cands.push_back({static_cast<int>(i), static_cast<int>(j), d[i][j]});
  std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
    return std::tuple(x.dist, g.vertex_rep(odd[x.a]), g.vertex_rep(odd[x.b])) <
           std::tuple(y.dist, g.vertex_rep(odd[y.a]), g.vertex_rep(odd[y.b]));
  });
  Matching m;
  std::vector<bool> taken(odd.size(), false);
  std::size_t matched = 0;
  for (const Cand& c : cands) {
    if (matched + 2 >= odd.size()) break;  // leave the final pair unmatched
    if (taken[c.a] || taken[c.b]) continue;
    taken[c.a] = taken[c.b] = true;
    matched += 2;
    m.pairs.push_back({c.a, c.b});
    m.realized += c.dist;
  }
  std::vector<int> rest;
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (!taken[i]) rest.push_back(static_cast<int>(i));
  assert(rest.size() == 2);
  m.pairs.push_back({rest[0], rest[1]});
  m.omit = static_cast<int>(m.pairs.size()) - 1;
  return m;
}

}  // namespace

std::optional<int> alternating_distance(const UGraph& g, std::uint32_t u, std::uint32_t v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw std::out_of_range("vertex index out of range");
  int len = g.n() - 1;
  std::uint64_t ur = g.vertex_rep(u), vr = g.vertex_rep(v);
  std::uint64_t umem[2] = {ur, reflect_code(ur, g.k(), len)};
  std::uint64_t vmem[2] = {vr, reflect_code(vr, g.k(), len)};
  int best = len + 1;
  for (std::uint64_t a : umem)
    for (std::uint64_t b : vmem) best = std::min(best, shift_dist(a, b, g.k(), len));
  if (best > len) return std::nullopt;
  return best;
}

Eulerization eulerize(const UGraph& g) {
  Eulerization out;
  std::vector<std::uint32_t> odd = g.odd_vertices();
  out.odd_before = static_cast<int>(odd.size());
  out.bound_extra = bound_extra_for(g.n(), odd.size());
  if (odd.size() <= 2) {
    out.odd_after = out.odd_before;
    if (odd.size() == 2) out.endpoints = {odd[0], odd[1]};
    return out;
  }

  std::vector<OddStates> st;
  st.reserve(odd.size());
  for (std::uint32_t v : odd) st.push_back(odd_states(g, v));

  const int len = g.n() - 1;
  std::vector<std::vector<int>> d(odd.size(), std::vector<int>(odd.size(), 0));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      if (i != j) d[i][j] = shift_dist(st[i].depart, st[j].arrive, g.k(), len);

  Matching match;
  if (odd.size() <= 12) {
    std::vector<int> all(odd.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::pair<int, int>> acc;
    exact_search(d, all, acc, match);
  } else {
    match = greedy_search(d, g, odd);
  }

  for (std::size_t p = 0; p < match.pairs.size(); ++p) {
    auto [a, b] = match.pairs[p];
    if (static_cast<int>(p) == match.omit) {
      out.endpoints = {odd[a], odd[b]};
      continue;
    }
    for (std::uint64_t wrd : walk_words(st[a].depart, st[b].arrive, g.k(), len))
      out.duplicates.push_back({g.edge_index_code(wrd), wrd});
  }
  std::sort(out.endpoints.begin(), out.endpoints.end());
  out.odd_after = 2;
  return out;
}

std::string Eulerization::to_json(const UGraph& g) const {
  nlohmann::ordered_json j;
  j["duplicates"] = nlohmann::ordered_json::array();
  for (const Duplicate& d : duplicates)
    j["duplicates"].push_back({{"edge", g.edge_label(d.edge)},
                               {"orientation", code_str(d.read, g.k(), g.n())}});
  j["bound"] = bound_extra;
  j["used"] = duplicates.size();
  return j.dump();
}

std::uint64_t upper_bound_length(int k, int n) {
  std::uint64_t ov = ov_formula(k, n);
  if (ov <= 2)
    throw std::invalid_argument("upper_bound_length requires more than two odd vertices "
                                "(ov(" + std::to_string(k) + "," + std::to_string(n) +
                                ") = " + std::to_string(ov) + ")");
  return add_checked(optimal_length(k, n), bound_extra_for(n, ov));
}

Ratio ratio(int k, int n) {
  std::uint64_t ov = ov_formula(k, n);
  if (ov <= 2) return Ratio{0, 1};
  std::uint64_t num = bound_extra_for(n, ov);
  std::uint64_t den = optimal_length(k, n);
  std::uint64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

}  // namespace unbruijn
