#include "unbruijn/euler.hpp"

#include <algorithm>
#include <cassert>
#include <list>
#include <sstream>

namespace unbruijn {

bool optimal_exists(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("optimal_exists requires k >= 1, n >= 1");
  if (k == 1 || n == 1) return true;
  return (k == 2 || k % 2 == 1) && n <= 3;
}

namespace {

IncidenceType opposite(IncidenceType t) {
  assert(t != IncidenceType::Both);
  return t == IncidenceType::TypeI ? IncidenceType::TypeII : IncidenceType::TypeI;
}

ConditionReport conditions_from_counts(const std::vector<int>& deg,
                                       const std::vector<std::array<int, 2>>& typed,
                                       const UGraph& base) {
  ConditionReport r;
  r.even_balanced = true;
  r.odd_off_by_one = true;
  for (std::uint32_t v = 0; v < deg.size(); ++v) {
    bool odd = deg[v] % 2 != 0;
    if (odd) r.odd.push_back(v);
    if (base.vertex_palindrome(v)) continue;  // conditions 2-3 concern non-palindromic vertices
    int diff = typed[v][0] - typed[v][1];
    if (!odd && diff != 0) r.even_balanced = false;
    if (odd && diff != 1 && diff != -1) r.odd_off_by_one = false;
  }
  r.odd_count = static_cast<int>(r.odd.size());
  r.odd_count_ok = r.odd_count == 0 || r.odd_count == 2;
  return r;
}

}  // namespace

Multigraph::Multigraph(const UGraph& g)
    : base_(&g), copies_(g.edge_count(), 0), degree_(g.vertex_count(), 0) {
  arcs_.reserve(g.edge_count());
  for (std::uint32_t ei = 0; ei < g.edge_count(); ++ei) {
    const UGraph::Edge& e = g.edge(ei);
    arcs_.push_back(Arc{e.rep, ei, e.vertex, e.type, 0});
    degree_[e.vertex[0]] += 1;
    degree_[e.vertex[1]] += 1;
  }
}

void Multigraph::add_duplicate(std::uint32_t edge_index) {
  if (edge_index >= base_->edge_count())
    throw std::out_of_range("duplicate of unknown edge class");
  const UGraph::Edge& e = base_->edge(edge_index);
  arcs_.push_back(Arc{e.rep, edge_index, e.vertex, e.type, ++copies_[edge_index]});
  degree_[e.vertex[0]] += 1;
  degree_[e.vertex[1]] += 1;
}

int Multigraph::degree(std::uint32_t v) const { return degree_.at(v); }

std::vector<std::uint32_t> Multigraph::odd_vertices() const {
  std::vector<std::uint32_t> odd;
  for (std::uint32_t v = 0; v < degree_.size(); ++v)
    if (degree_[v] % 2 != 0) odd.push_back(v);
  return odd;
}

ConditionReport check_conditions(const UGraph& g) {
  return check_conditions(Multigraph(g));
}

ConditionReport check_conditions(const Multigraph& g) {
  const UGraph& base = g.base();
  std::vector<int> deg(base.vertex_count(), 0);
  std::vector<std::array<int, 2>> typed(base.vertex_count(), {0, 0});
  for (const Multigraph::Arc& a : g.arcs()) {
    for (int end = 0; end < 2; ++end) {
      deg[a.vertex[end]] += 1;
      if (a.type[end] == IncidenceType::TypeI) typed[a.vertex[end]][0] += 1;
      if (a.type[end] == IncidenceType::TypeII) typed[a.vertex[end]][1] += 1;
    }
  }
  return conditions_from_counts(deg, typed, base);
}

TypeAssignment balance_palindromic_types(const Multigraph& g) {
  const UGraph& base = g.base();
  // Per palindromic vertex, its arc ends in deterministic order.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> ends(base.vertex_count());
  std::span<const Multigraph::Arc> arcs = g.arcs();
  for (std::uint32_t ai = 0; ai < arcs.size(); ++ai)
    for (std::uint8_t end = 0; end < 2; ++end)
      if (base.vertex_palindrome(arcs[ai].vertex[end]))
        ends[arcs[ai].vertex[end]].push_back({ai, end});

  TypeAssignment asg;
  for (std::uint32_t v = 0; v < base.vertex_count(); ++v) {
    if (ends[v].empty()) continue;
    auto& list = ends[v];
    std::sort(list.begin(), list.end(), [&](auto a, auto b) {
      return std::tuple(arcs[a.first].rep, arcs[a.first].copy, a.second) <
             std::tuple(arcs[b.first].rep, arcs[b.first].copy, b.second);
    });
    int balance = 0;  // #I - #II so far
    // Loops first, split (I, II); pairs are adjacent after the sort.
    for (auto [ai, end] : list) {
      if (!arcs[ai].loop()) continue;
      IncidenceType t = end == 0 ? IncidenceType::TypeI : IncidenceType::TypeII;
      asg.entries.push_back({ai, end, t});
      balance += t == IncidenceType::TypeI ? 1 : -1;
    }
    for (auto [ai, end] : list) {
      if (arcs[ai].loop()) continue;
      IncidenceType t = balance <= 0 ? IncidenceType::TypeI : IncidenceType::TypeII;
      asg.entries.push_back({ai, end, t});
      balance += t == IncidenceType::TypeI ? 1 : -1;
    }
    if (balance != 0 && balance != 1 && balance != -1)
      throw std::logic_error("balancing failed at palindromic vertex " + base.vertex_label(v));
  }
  return asg;
}

bool AlternatingPath::closed(const UGraph& g) const {
  if (steps.empty()) return false;
  std::uint64_t first = steps.front().read / static_cast<std::uint64_t>(k);
  std::uint64_t last = steps.back().read % pow_checked(k, static_cast<unsigned>(n - 1));
  return g.vertex_index_code(first) == g.vertex_index_code(last);
}

std::string AlternatingPath::reads_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out.push_back(',');
    out += code_str(steps[i].read, k, n);
  }
  return out;
}

namespace {

// The walker.  Arc ends carry resolved TypeI/TypeII; at a non-palindromic
// vertex a TypeI end departs exactly when the orientation word equals the
// canonical rep (TypeII when it equals the reflection), so walking by type
// and walking by orientation continuity are the same walk.
struct Walker {
  struct ArcRec {
    std::uint64_t rep;
    std::uint32_t edge;
    std::array<std::uint32_t, 2> vertex;
    std::array<IncidenceType, 2> type;
    std::uint16_t copy;
    bool virt;
  };
  struct StepRec {
    std::uint32_t arc;
    std::uint8_t dep_end;
  };

  const UGraph& base;
  std::vector<ArcRec> arcs;
  std::vector<bool> used;
  // Per vertex, sorted end lists split by resolved type, with skip cursors.
  std::vector<std::array<std::vector<std::pair<std::uint32_t, std::uint8_t>>, 2>> bucket;
  std::vector<std::array<std::size_t, 2>> cursor;

  explicit Walker(const UGraph& g) : base(g) {}

  void index_ends() {
    bucket.assign(base.vertex_count(), {});
    cursor.assign(base.vertex_count(), {0, 0});
    for (std::uint32_t ai = 0; ai < arcs.size(); ++ai)
      for (std::uint8_t end = 0; end < 2; ++end) {
        IncidenceType t = arcs[ai].type[end];
        if (t == IncidenceType::Both)
          throw std::invalid_argument(
              "incidence at palindromic vertex " + base.vertex_label(arcs[ai].vertex[end]) +
              " left unassigned; balancing must cover every Both incidence");
        bucket[arcs[ai].vertex[end]][t == IncidenceType::TypeII].push_back({ai, end});
      }
    for (auto& b : bucket)
      for (auto& lst : b)
        std::sort(lst.begin(), lst.end(), [&](auto a, auto c) {
          return std::tuple(arcs[a.first].rep, arcs[a.first].copy, a.second) <
                 std::tuple(arcs[c.first].rep, arcs[c.first].copy, c.second);
        });
    used.assign(arcs.size(), false);
  }

  bool has_unused(std::uint32_t v) {
    for (int t = 0; t < 2; ++t) {
      auto& lst = bucket[v][t];
      auto& cur = cursor[v][t];
      while (cur < lst.size() && used[lst[cur].first]) ++cur;
      if (cur < lst.size()) return true;
    }
    return false;
  }

  // Smallest unused end of the required type at v; asserts availability,
  // which the balanced-count argument guarantees mid-walk.
  std::pair<std::uint32_t, std::uint8_t> take(std::uint32_t v, IncidenceType t) {
    auto& lst = bucket[v][t == IncidenceType::TypeII];
    auto& cur = cursor[v][t == IncidenceType::TypeII];
    while (cur < lst.size() && used[lst[cur].first]) ++cur;
    if (cur >= lst.size())
      throw std::logic_error("walk stranded at vertex " + base.vertex_label(v) +
                             " needing a Type " + to_string(t) + " departure");
    auto ret = lst[cur];
    used[ret.first] = true;
    return ret;
  }

  // Alternating sub-walk from `start` departing on `dep_type`, stopping the
  // first time it returns to `start` arriving on the opposite type.
  std::list<StepRec> walk(std::uint32_t start, IncidenceType dep_type) {
    std::list<StepRec> steps;
    IncidenceType stop_arrival = opposite(dep_type);
    std::uint32_t cur = start;
    IncidenceType need = dep_type;
    while (true) {
      auto [ai, end] = take(cur, need);
      steps.push_back({ai, end});
      std::uint8_t other = static_cast<std::uint8_t>(1 - end);
      cur = arcs[ai].vertex[other];
      IncidenceType arrived = arcs[ai].type[other];
      if (cur == start && arrived == stop_arrival) break;
      need = opposite(arrived);
    }
    return steps;
  }

  IncidenceType arrival_type(const StepRec& s) const {
    return arcs[s.arc].type[1 - s.dep_end];
  }
  std::uint32_t arrival_vertex(const StepRec& s) const {
    return arcs[s.arc].vertex[1 - s.dep_end];
  }

  // Hierholzer: initial circuit, then splice sub-circuits at every position
  // whose arrival vertex still has unused ends.  A spliced circuit departs
  // on the type opposite to the arrival there and returns on the arrival's
  // type, so the merged circuit stays alternating.
  std::list<StepRec> run(std::list<StepRec> circuit) {
    for (auto it = circuit.begin(); it != circuit.end(); ++it) {
      std::uint32_t w = arrival_vertex(*it);
      while (has_unused(w)) {
        std::list<StepRec> sub = walk(w, opposite(arrival_type(*it)));
        circuit.splice(std::next(it), sub);
      }
    }
    for (bool u : used)
      if (!u) throw std::logic_error("walk terminated with unused edges");
    return circuit;
  }
};

}  // namespace

AlternatingPath alternating_hierholzer(const Multigraph& g, const TypeAssignment& assignment) {
  const UGraph& base = g.base();
  std::vector<std::uint32_t> odd = g.odd_vertices();
  if (odd.size() != 0 && odd.size() != 2)
    throw std::invalid_argument(
        "condition 1 violated: " + std::to_string(odd.size()) +
        " odd-degree vertices (need 0 or 2); Eulerize the graph first");

  Walker w(base);
  std::span<const Multigraph::Arc> arcs = g.arcs();
  w.arcs.reserve(arcs.size() + 1);
  for (const Multigraph::Arc& a : arcs)
    w.arcs.push_back({a.rep, a.edge, a.vertex, a.type, a.copy, false});
  for (const TypeAssignment::Entry& e : assignment.entries) {
    if (e.arc >= arcs.size() || e.end > 1 || e.type == IncidenceType::Both)
      throw std::invalid_argument("malformed type assignment entry");
    if (!base.vertex_palindrome(w.arcs[e.arc].vertex[e.end]))
      throw std::invalid_argument("type assignment targets a non-palindromic vertex");
    w.arcs[e.arc].type[e.end] = e.type;
  }

  // Balance check: every vertex equal, except the two odd ones off by one.
  {
    std::vector<std::array<int, 2>> typed(base.vertex_count(), {0, 0});
    for (const Walker::ArcRec& a : w.arcs)
      for (int end = 0; end < 2; ++end) {
        if (a.type[end] == IncidenceType::Both)
          throw std::invalid_argument(
              "incidence at palindromic vertex " + base.vertex_label(a.vertex[end]) +
              " left unassigned; balancing must cover every Both incidence");
        typed[a.vertex[end]][a.type[end] == IncidenceType::TypeII] += 1;
      }
    for (std::uint32_t v = 0; v < base.vertex_count(); ++v) {
      int diff = typed[v][0] - typed[v][1];
      bool is_odd = std::find(odd.begin(), odd.end(), v) != odd.end();
      if (!is_odd && diff != 0)
        throw std::invalid_argument("unbalanced incidence types at even vertex " +
                                    base.vertex_label(v));
      if (is_odd && diff != 1 && diff != -1)
        throw std::invalid_argument("incidence types at odd vertex " + base.vertex_label(v) +
                                    " must differ by exactly one");
    }
    // Virtual edge between the odd pair, typed with each endpoint's
    // minority type so alternation holds across it.
    if (odd.size() == 2) {
      auto minority = [&](std::uint32_t v) {
        return typed[v][0] < typed[v][1] ? IncidenceType::TypeI : IncidenceType::TypeII;
      };
      // End 0 at the larger odd vertex: the walk starts there, crosses the
      // virtual edge first, and after its removal the path starts at the
      // smaller odd vertex.
      w.arcs.push_back({UINT64_MAX, Multigraph::kVirtualEdge,
                        {odd[1], odd[0]},
                        {minority(odd[1]), minority(odd[0])},
                        0, true});
    }
  }

  w.index_ends();

  std::list<Walker::StepRec> circuit;
  if (odd.size() == 2) {
    std::uint32_t ve = static_cast<std::uint32_t>(w.arcs.size() - 1);
    w.used[ve] = true;
    circuit.push_back({ve, 0});
    IncidenceType arrived = w.arcs[ve].type[1];
    std::uint32_t cur = w.arcs[ve].vertex[1];
    // Continue until the circuit closes back at the start of the virtual
    // edge on the type opposite to its departure end.
    IncidenceType stop_arrival = opposite(w.arcs[ve].type[0]);
    std::uint32_t start = w.arcs[ve].vertex[0];
    while (!(cur == start && arrived == stop_arrival)) {
      auto [ai, end] = w.take(cur, opposite(arrived));
      circuit.push_back({ai, end});
      cur = w.arcs[ai].vertex[1 - end];
      arrived = w.arcs[ai].type[1 - end];
    }
  } else if (base.edge_count() > 0) {
    circuit = w.walk(0, IncidenceType::TypeI);  // circuit case starts at [0...0]
  }

  circuit = w.run(std::move(circuit));

  AlternatingPath path;
  path.k = base.k();
  path.n = base.n();
  if (odd.size() == 2) {
    assert(!circuit.empty() && w.arcs[circuit.front().arc].virt);
    path.start_vertex = odd[0];
    circuit.pop_front();
  } else {
    path.start_vertex = 0;
  }
  path.steps.reserve(circuit.size());
  for (const Walker::StepRec& s : circuit) {
    const Walker::ArcRec& a = w.arcs[s.arc];
    assert(!a.virt);
    std::uint64_t read =
        s.dep_end == 0 ? a.rep : reflect_code(a.rep, base.k(), base.n());
    path.steps.push_back({a.edge, read});
  }
  return path;
}

namespace {

struct StepView {
  std::uint64_t read;
  std::uint64_t prefix, suffix;  // length n-1 codes
};

std::vector<StepView> step_views(const AlternatingPath& p) {
  std::uint64_t mod = pow_checked(p.k, static_cast<unsigned>(p.n - 1));
  std::vector<StepView> v;
  v.reserve(p.steps.size());
  for (const AlternatingPath::Step& s : p.steps)
    v.push_back({s.read, s.read / static_cast<std::uint64_t>(p.k), s.read % mod});
  return v;
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

}  // namespace

bool check_orientation_continuity(const UGraph& g, const AlternatingPath& p, std::string* why) {
  if (p.steps.empty()) return true;
  std::vector<StepView> sv = step_views(p);
  for (std::size_t i = 0; i < sv.size(); ++i) {
    std::uint64_t canon = canonical_code(sv[i].read, p.k, p.n);
    if (p.steps[i].edge >= g.edge_count() || g.edge(p.steps[i].edge).rep != canon)
      return fail(why, "step " + std::to_string(i + 1) + " reads a word outside its edge class");
  }
  if (g.vertex_index_code(sv.front().prefix) != p.start_vertex)
    return fail(why, "step 1 does not start at the declared start vertex");
  for (std::size_t i = 0; i + 1 < sv.size(); ++i)
    if (sv[i].suffix != sv[i + 1].prefix)
      return fail(why, "orientation discontinuity at step " + std::to_string(i + 2) + ": " +
                           code_str(sv[i + 1].read, p.k, p.n) + " cannot follow " +
                           code_str(sv[i].read, p.k, p.n));
  return true;
}

bool check_type_alternation(const UGraph& g, const AlternatingPath& p, std::string* why) {
  if (p.steps.empty()) return true;
  std::vector<StepView> sv = step_views(p);
  for (std::size_t i = 0; i < sv.size(); ++i) {
    std::uint64_t canon = canonical_code(sv[i].read, p.k, p.n);
    if (p.steps[i].edge >= g.edge_count() || g.edge(p.steps[i].edge).rep != canon)
      return fail(why, "step " + std::to_string(i + 1) + " reads a word outside its edge class");
  }
  // Entry/exit types at the vertex shared by consecutive steps, relative to
  // the canonical rep.  Palindromic vertices impose no restriction.
  std::uint32_t at = g.vertex_index_code(sv.front().prefix);
  if (at != p.start_vertex)
    return fail(why, "step 1 does not start at the declared start vertex");
  for (std::size_t i = 0; i + 1 < sv.size(); ++i) {
    std::uint32_t v = g.vertex_index_code(sv[i].suffix);
    std::uint32_t v2 = g.vertex_index_code(sv[i + 1].prefix);
    if (v != v2)
      return fail(why, "steps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                           " do not share a vertex");
    if (g.vertex_palindrome(v)) continue;
    std::uint64_t rep = g.vertex_rep(v);
    IncidenceType entered =
        sv[i].suffix == rep ? IncidenceType::TypeII : IncidenceType::TypeI;
    IncidenceType left =
        sv[i + 1].prefix == rep ? IncidenceType::TypeI : IncidenceType::TypeII;
    if (entered == left)
      return fail(why, "type alternation violated at step " + std::to_string(i + 2) +
                           " (vertex " + g.vertex_label(v) + " entered and left on Type " +
                           to_string(entered) + ")");
  }
  return true;
}

std::vector<std::uint64_t> directed_euler(const DGraph& g) {
  const std::uint64_t vcount = g.vertex_count();
  const int k = g.k();
  std::vector<std::uint32_t> next_digit(vcount, 0);
  std::vector<std::uint64_t> circuit;
  circuit.reserve(g.edge_count());

  // Iterative Hierholzer; edges recorded in reverse pop order.
  struct Frame {
    std::uint64_t vertex;
    std::uint64_t in_edge;
  };
  std::vector<Frame> stack;
  stack.push_back({0, UINT64_MAX});
  while (!stack.empty()) {
    std::uint64_t v = stack.back().vertex;
    if (next_digit[v] < static_cast<std::uint32_t>(k)) {
      std::uint64_t e = g.out_edge(v, static_cast<int>(next_digit[v]++));
      stack.push_back({g.edge_target(e), e});
    } else {
      if (stack.back().in_edge != UINT64_MAX) circuit.push_back(stack.back().in_edge);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != g.edge_count())
    throw std::logic_error("directed walk did not cover every edge");
  return circuit;
}

}  // namespace unbruijn
