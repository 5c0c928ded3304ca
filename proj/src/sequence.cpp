#include "unbruijn/sequence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

#include "json.hpp"

namespace unbruijn {

std::uint64_t optimal_length(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("optimal_length requires k >= 1, n >= 1");
  unsigned __int128 words = pow_u128(k, static_cast<unsigned>(n));
  unsigned __int128 pals = pow_u128(k, static_cast<unsigned>((n + 1) / 2));
  return narrow_checked((words + pals + 2 * static_cast<unsigned __int128>(n) - 2) / 2);
}

Word decode_reads(int k, int n, std::span<const std::uint64_t> reads) {
  if (reads.empty()) return Word(k, {});
  std::uint64_t mod = pow_checked(k, static_cast<unsigned>(n - 1));
  std::vector<Symbol> syms = Word::from_code(k, n, reads[0]).symbols();
  for (std::size_t i = 1; i < reads.size(); ++i) {
    if (reads[i - 1] % mod != reads[i] / static_cast<std::uint64_t>(k))
      throw std::invalid_argument("discontinuous path at step " + std::to_string(i + 1) + ": " +
                                  code_str(reads[i], k, n) + " cannot follow " +
                                  code_str(reads[i - 1], k, n));
    syms.push_back(static_cast<Symbol>(reads[i] % static_cast<std::uint64_t>(k)));
  }
  return Word(k, std::move(syms));
}

Word decode(const AlternatingPath& path) {
  std::vector<std::uint64_t> reads;
  reads.reserve(path.steps.size());
  for (const AlternatingPath::Step& s : path.steps) reads.push_back(s.read);
  return decode_reads(path.k, path.n, reads);
}

CoverageReport verify(const Word& w, int k, int n, std::uint64_t cap) {
  if (k < 1 || n < 1) throw std::invalid_argument("verify requires k >= 1, n >= 1");
  if (w.alphabet() != k)
    throw std::invalid_argument("word alphabet does not match k=" + std::to_string(k));
  std::uint64_t total = pow_checked(k, static_cast<unsigned>(n));
  if (total > cap)
    throw limit_error("k^n = " + std::to_string(total) + " exceeds the size cap " +
                      std::to_string(cap));

  // Class index by canonical code, in enumerate_classes order (ascending rep).
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint64_t> reps;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (reflect_code(code, k, n) > code) continue;
    index.emplace(code, static_cast<std::uint32_t>(reps.size()));
    reps.push_back(code);
  }

  CoverageReport rep;
  rep.k = k;
  rep.n = n;
  rep.length = w.length();
  rep.counts.assign(reps.size(), 0);

  if (w.length() >= static_cast<std::size_t>(n)) {
    std::uint64_t mod = pow_checked(k, static_cast<unsigned>(n - 1));
    std::uint64_t window = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      window = (window % mod) * static_cast<std::uint64_t>(k) + w.at(i);
      if (i + 1 >= static_cast<std::size_t>(n))
        rep.counts[index.at(canonical_code(window, k, n))] += 1;
    }
  }
  for (std::uint32_t c = 0; c < rep.counts.size(); ++c) {
    if (rep.counts[c] == 0) rep.missing.push_back(reps[c]);
    if (rep.counts[c] >= 2) rep.duplicated.push_back(reps[c]);
  }
  rep.cover = rep.missing.empty();
  rep.optimal = rep.cover && rep.length == optimal_length(k, n);
  return rep;
}

std::string CoverageReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["length"] = length;
  j["cover"] = cover;
  j["optimal"] = optimal;
  j["missing"] = nlohmann::ordered_json::array();
  for (std::uint64_t code : missing) j["missing"].push_back("[" + code_str(code, k, n) + "]");
  j["duplicated"] = nlohmann::ordered_json::array();
  for (std::uint64_t code : duplicated) j["duplicated"].push_back("[" + code_str(code, k, n) + "]");
  return j.dump();
}

GenerateResult generate(int k, int n, std::uint64_t cap) {
  if (k < 1 || n < 1) throw std::invalid_argument("generate requires k >= 1, n >= 1");
  GenerateResult out{k, n, Word(k, {}), false, optimal_length(k, n), 0, {}, {}};

  if (k == 1) {
    out.sequence = Word(k, std::vector<Symbol>(static_cast<std::size_t>(n), 0));
    out.optimal = true;
    return out;
  }
  if (n == 1) {
    std::vector<Symbol> syms(static_cast<std::size_t>(k));
    std::iota(syms.begin(), syms.end(), Symbol{0});
    out.sequence = Word(k, std::move(syms));
    out.optimal = true;
    return out;
  }

  UGraph g = UGraph::build(k, n, cap);
  Eulerization ez = eulerize(g);
  out.bound_extra = ez.bound_extra;
  Multigraph mg(g);
  for (const Eulerization::Duplicate& d : ez.duplicates) {
    mg.add_duplicate(d.edge);
    out.duplicates.push_back({g.edge_label(d.edge), code_str(d.read, k, n)});
  }
  TypeAssignment asg = balance_palindromic_types(mg);
  out.path = alternating_hierholzer(mg, asg);
  out.sequence = decode(out.path);

  CoverageReport check = verify(out.sequence, k, n, cap);
  if (!check.cover)
    throw std::logic_error("generated sequence fails coverage verification");
  out.optimal = check.optimal;
  assert(out.optimal == optimal_exists(k, n));
  assert(out.optimal == ez.duplicates.empty());
  return out;
}

std::string GenerateResult::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["sequence"] = sequence.str();
  j["length"] = sequence.length();
  j["optimal"] = optimal;
  j["optimal_length"] = optimal_len;
  j["duplicates"] = duplicates.size();
  nlohmann::ordered_json ez;
  ez["duplicates"] = nlohmann::ordered_json::array();
  for (const auto& [edge, orientation] : duplicates)
    ez["duplicates"].push_back({{"edge", edge}, {"orientation", orientation}});
  ez["bound"] = bound_extra;
  ez["used"] = duplicates.size();
  j["eulerization"] = ez;
  return j.dump();
}

}  // namespace unbruijn
