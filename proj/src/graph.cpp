#include "unbruijn/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace unbruijn {

const char* to_string(IncidenceType t) {
  switch (t) {
    case IncidenceType::TypeI: return "I";
    case IncidenceType::TypeII: return "II";
    case IncidenceType::Both: return "both";
  }
  return "?";
}

namespace {

void check_size(int k, int n, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("graph construction requires k >= 1");
  if (n < 2) throw std::invalid_argument("graph construction requires n >= 2");
  std::uint64_t edges = pow_checked(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  if (edges > cap)
    throw limit_error("k^n = " + std::to_string(edges) + " exceeds the size cap " +
                      std::to_string(cap));
}

}  // namespace

DGraph DGraph::build(int k, int n, std::uint64_t cap) {
  check_size(k, n, cap);
  std::uint64_t vcount = pow_checked(static_cast<std::uint64_t>(k), static_cast<unsigned>(n - 1));
  std::uint64_t ecount = vcount * static_cast<std::uint64_t>(k);
  return DGraph(k, n, vcount, ecount);
}

UGraph UGraph::build(int k, int n, std::uint64_t cap) {
  check_size(k, n, cap);
  UGraph g(k, n);
  const std::uint64_t nverts = pow_checked(static_cast<std::uint64_t>(k), static_cast<unsigned>(n - 1));
  const std::uint64_t nedges = nverts * static_cast<std::uint64_t>(k);

  for (std::uint64_t code = 0; code < nverts; ++code) {
    std::uint64_t r = reflect_code(code, k, n - 1);
    if (r > code) continue;
    g.vindex_.emplace(code, static_cast<std::uint32_t>(g.vreps_.size()));
    g.vreps_.push_back(code);
    g.vpal_.push_back(r == code);
  }

  auto vertex_of = [&](std::uint64_t word) {
    return g.vindex_.at(canonical_code(word, k, n - 1));
  };
  // Incidence type at a vertex end, from the definition applied to the
  // canonical reps.  For palindromic edge words at non-palindromic vertices
  // both defining clauses agree; the assert guards that.
  auto end_type = [&](std::uint64_t erep, std::uint32_t v, bool prefix_end) {
    if (g.vpal_[v]) return IncidenceType::Both;
    std::uint64_t r = g.vreps_[v];
    std::uint64_t endpoint = prefix_end ? erep / static_cast<std::uint64_t>(k)
                                        : erep % (nverts);
    if (endpoint == r) return prefix_end ? IncidenceType::TypeI : IncidenceType::TypeII;
    assert(endpoint == reflect_code(r, k, n - 1));
    return prefix_end ? IncidenceType::TypeII : IncidenceType::TypeI;
  };

  for (std::uint64_t code = 0; code < nedges; ++code) {
    std::uint64_t r = reflect_code(code, k, n);
    if (r > code) continue;
    Edge e;
    e.rep = code;
    e.vertex[0] = vertex_of(code / static_cast<std::uint64_t>(k));
    e.vertex[1] = vertex_of(code % nverts);
    // loop <=> palindromic edge word
    assert((e.vertex[0] == e.vertex[1]) == (r == code));
    e.type[0] = end_type(code, e.vertex[0], true);
    e.type[1] = end_type(code, e.vertex[1], false);
    g.eindex_.emplace(code, static_cast<std::uint32_t>(g.edges_.size()));
    g.edges_.push_back(e);
  }
  assert(g.edges_.size() == count_classes(k, n));

  // CSR incidence table; edges ascending, so per-vertex lists are ordered.
  std::vector<std::uint32_t> deg(g.vreps_.size(), 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.vertex[0]];
    ++deg[e.vertex[1]];
  }
  g.inc_offset_.assign(g.vreps_.size() + 1, 0);
  for (std::size_t v = 0; v < g.vreps_.size(); ++v)
    g.inc_offset_[v + 1] = g.inc_offset_[v] + deg[v];
  g.inc_.resize(g.inc_offset_.back());
  std::vector<std::uint32_t> cursor(g.inc_offset_.begin(), g.inc_offset_.end() - 1);
  for (std::uint32_t ei = 0; ei < g.edges_.size(); ++ei) {
    const Edge& e = g.edges_[ei];
    g.inc_[cursor[e.vertex[0]]++] = Incidence{ei, e.type[0]};
    g.inc_[cursor[e.vertex[1]]++] = Incidence{ei, e.type[1]};
  }
  return g;
}

std::uint32_t UGraph::vertex_index(const Word& member) const {
  if (static_cast<int>(member.length()) != n_ - 1 || member.alphabet() != k_)
    throw std::out_of_range("not a vertex of uBg(" + std::to_string(k_) + "," +
                            std::to_string(n_) + "): " + member.str());
  return vertex_index_code(member.code());
}

std::uint32_t UGraph::vertex_index_code(std::uint64_t member_code) const {
  auto it = vindex_.find(canonical_code(member_code, k_, n_ - 1));
  if (it == vindex_.end()) throw std::out_of_range("unknown vertex class");
  return it->second;
}

std::uint32_t UGraph::edge_index(const Word& member) const {
  if (static_cast<int>(member.length()) != n_ || member.alphabet() != k_)
    throw std::out_of_range("not an edge of uBg(" + std::to_string(k_) + "," +
                            std::to_string(n_) + "): " + member.str());
  return edge_index_code(member.code());
}

std::uint32_t UGraph::edge_index_code(std::uint64_t member_code) const {
  auto it = eindex_.find(canonical_code(member_code, k_, n_));
  if (it == eindex_.end()) throw std::out_of_range("unknown edge class");
  return it->second;
}

std::span<const UGraph::Incidence> UGraph::incidences(std::uint32_t v) const {
  if (v >= vreps_.size()) throw std::out_of_range("vertex index out of range");
  return {inc_.data() + inc_offset_[v], inc_.data() + inc_offset_[v + 1]};
}

int UGraph::degree(std::uint32_t v) const {
  if (v >= vreps_.size()) throw std::out_of_range("vertex index out of range");
  return static_cast<int>(inc_offset_[v + 1] - inc_offset_[v]);
}

std::vector<std::uint32_t> UGraph::odd_vertices() const {
  std::vector<std::uint32_t> odd;
  for (std::uint32_t v = 0; v < vreps_.size(); ++v)
    if (degree(v) % 2 != 0) odd.push_back(v);
  return odd;
}

int UGraph::loop_count(std::uint32_t v) const {
  int loops = 0;
  for (const Incidence& inc : incidences(v))
    if (edges_[inc.edge].loop()) ++loops;
  return loops / 2;  // a loop appears twice in the incidence table
}

std::string UGraph::to_dot() const {
  auto marker = [](IncidenceType t) {
    switch (t) {
      case IncidenceType::TypeI: return "normal";
      case IncidenceType::TypeII: return "none";
      case IncidenceType::Both: return "odot";
    }
    return "none";
  };
  std::ostringstream out;
  out << "graph ubg_" << k_ << "_" << n_ << " {\n";
  out << "  // uBg(" << k_ << "," << n_ << "): " << vreps_.size() << " vertices, "
      << edges_.size() << " edge classes; TypeI ends carry an arrowhead\n";
  out << "  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < vreps_.size(); ++v)
    out << "  v" << v << " [label=\"" << vertex_label(v) << "\"];\n";
  for (std::uint32_t ei = 0; ei < edges_.size(); ++ei) {
    const Edge& e = edges_[ei];
    out << "  v" << e.vertex[0] << " -- v" << e.vertex[1] << " [label=\"" << edge_label(ei)
        << (e.loop() ? " x2" : "") << "\", dir=both, arrowtail=" << marker(e.type[0])
        << ", arrowhead=" << marker(e.type[1]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::uint64_t ov_formula(int k, int n) {
  if (k < 2 || n < 2) throw std::invalid_argument("ov_formula requires k >= 2, n >= 2");
  std::uint64_t uk = static_cast<std::uint64_t>(k);
  bool keven = k % 2 == 0, neven = n % 2 == 0;
  if (neven && keven) return pow_checked(uk, static_cast<unsigned>(n / 2));
  if (!neven && keven)
    return pow_checked(uk, static_cast<unsigned>((n + 1) / 2)) - uk * uk + uk;
  if (neven)  // k odd
    return 2 * (pow_checked(uk, static_cast<unsigned>(n / 2)) - uk);
  return pow_checked(uk, static_cast<unsigned>((n + 1) / 2)) +
         pow_checked(uk, static_cast<unsigned>((n - 1) / 2)) - uk * uk - uk;
}

}  // namespace unbruijn
