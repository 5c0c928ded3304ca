#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "unbruijn/euler.hpp"
#include "unbruijn/sequence.hpp"

using namespace unbruijn;

namespace {

std::array<int, 2> assigned_counts(const Multigraph& g, const TypeAssignment& asg,
                                   std::uint32_t v) {
  std::array<int, 2> c{0, 0};
  std::span<const Multigraph::Arc> arcs = g.arcs();
  std::vector<std::array<IncidenceType, 2>> resolved;
  for (const Multigraph::Arc& a : arcs) resolved.push_back(a.type);
  for (const TypeAssignment::Entry& e : asg.entries) resolved[e.arc][e.end] = e.type;
  for (std::uint32_t ai = 0; ai < arcs.size(); ++ai)
    for (int end = 0; end < 2; ++end)
      if (arcs[ai].vertex[end] == v)
        ++c[resolved[ai][end] == IncidenceType::TypeII];
  return c;
}

AlternatingPath run_hierholzer(const UGraph& g) {
  Multigraph mg(g);
  return alternating_hierholzer(mg, balance_palindromic_types(mg));
}

}  // namespace

TEST_CASE("optimal existence rule") {
  CHECK(optimal_exists(2, 3));
  CHECK_FALSE(optimal_exists(3, 4));
  CHECK_FALSE(optimal_exists(4, 3));
  CHECK(optimal_exists(1, 9));   // trivial
  CHECK(optimal_exists(9, 1));   // trivial
  CHECK(optimal_exists(7, 2));
  CHECK_FALSE(optimal_exists(6, 2));

  // equivalent to at most two odd vertices
  for (int k = 2; k <= 8; ++k)
    for (int n = 2; n <= 8; ++n)
      CHECK(optimal_exists(k, n) == (ov_formula(k, n) <= 2));

  std::set<std::pair<int, int>> truth;
  for (int k = 2; k <= 8; ++k)
    for (int n = 2; n <= 8; ++n)
      if (optimal_exists(k, n)) truth.insert({k, n});
  std::set<std::pair<int, int>> expect;
  for (int k : {2, 3, 5, 7})
    for (int n : {2, 3}) expect.insert({k, n});
  CHECK(truth == expect);
}

TEST_CASE("existence conditions report") {
  ConditionReport r33 = check_conditions(UGraph::build(3, 3));
  CHECK(r33.all_ok());
  CHECK(r33.odd_count == 0);

  ConditionReport r24 = check_conditions(UGraph::build(2, 4));
  CHECK_FALSE(r24.odd_count_ok);
  CHECK(r24.odd_count == 4);
  CHECK(r24.even_balanced);  // conditions 2 and 3 hold regardless
  CHECK(r24.odd_off_by_one);

  ConditionReport r22 = check_conditions(UGraph::build(2, 2));
  CHECK(r22.all_ok());
  CHECK(r22.odd_count == 2);

  for (int k = 2; k <= 4; ++k)
    for (int n = 2; n <= 6; ++n) {
      ConditionReport r = check_conditions(UGraph::build(k, n));
      CHECK(r.even_balanced);
      CHECK(r.odd_off_by_one);
    }
}

TEST_CASE("balancing splits palindromic incidences evenly") {
  UGraph g = UGraph::build(2, 3);
  Multigraph mg(g);
  TypeAssignment asg = balance_palindromic_types(mg);

  // [00] and [11] have odd degree 3: split 2/1 or 1/2
  for (const char* label : {"00", "11"}) {
    std::uint32_t v = g.vertex_index(Word::parse(2, label));
    auto [i, ii] = assigned_counts(mg, asg, v);
    CHECK(std::abs(i - ii) == 1);
    CHECK(i + ii == 3);
  }
  // each loop at a palindromic vertex is split one TypeI, one TypeII
  std::uint32_t loop000 = g.edge_index(Word::parse(2, "000"));
  std::multiset<IncidenceType> loop_types;
  for (const TypeAssignment::Entry& e : asg.entries)
    if (mg.arcs()[e.arc].edge == loop000) loop_types.insert(e.type);
  CHECK(loop_types == std::multiset<IncidenceType>{IncidenceType::TypeI, IncidenceType::TypeII});
}

TEST_CASE("balancing covers every palindromic vertex of uBg(3,3)") {
  UGraph g = UGraph::build(3, 3);
  Multigraph mg(g);
  TypeAssignment asg = balance_palindromic_types(mg);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.vertex_palindrome(v)) continue;
    auto [i, ii] = assigned_counts(mg, asg, v);
    CHECK(i == ii);  // all degrees even here
    CHECK(i + ii == g.degree(v));
  }
}

TEST_CASE("alternating Hierholzer reproduces the worked small cases") {
  AlternatingPath p23 = run_hierholzer(UGraph::build(2, 3));
  CHECK(decode(p23).str() == "00010111");
  CHECK(p23.reads_string() == "000,001,010,101,011,111");

  AlternatingPath p32 = run_hierholzer(UGraph::build(3, 2));
  CHECK(p32.steps.size() == 6);
  CHECK(decode(p32).str() == "0011220");

  AlternatingPath p22 = run_hierholzer(UGraph::build(2, 2));
  CHECK(decode(p22).str() == "0011");
}

TEST_CASE("a single vertex with one loop is walked once") {
  UGraph g = UGraph::build(1, 2);
  REQUIRE(g.vertex_count() == 1);
  REQUIRE(g.edge_count() == 1);
  AlternatingPath p = run_hierholzer(g);
  REQUIRE(p.steps.size() == 1);
  CHECK(decode(p).str() == "00");
}

TEST_CASE("paths start at the smaller odd vertex, circuits at the zero class") {
  UGraph g23 = UGraph::build(2, 3);
  AlternatingPath p = run_hierholzer(g23);
  CHECK(g23.vertex_label(p.start_vertex) == "[00]");
  CHECK_FALSE(p.closed(g23));

  UGraph g33 = UGraph::build(3, 3);
  AlternatingPath c = run_hierholzer(g33);
  CHECK(g33.vertex_label(c.start_vertex) == "[00]");
  CHECK(c.closed(g33));
}

TEST_CASE("every optimal case yields a machine-checked alternating Eulerian path") {
  for (int k = 1; k <= 6; ++k)
    for (int n = 2; n <= 6; ++n) {
      if (!optimal_exists(k, n)) continue;
      UGraph g = UGraph::build(k, n);
      AlternatingPath p = run_hierholzer(g);
      CHECK(p.steps.size() == g.edge_count());
      // every edge class exactly once
      std::set<std::uint32_t> seen;
      for (const AlternatingPath::Step& s : p.steps) seen.insert(s.edge);
      CHECK(seen.size() == g.edge_count());
      std::string why;
      CHECK_MESSAGE(check_orientation_continuity(g, p, &why), why);
      CHECK_MESSAGE(check_type_alternation(g, p, &why), why);
    }
}

TEST_CASE("the two admissibility checks agree on corrupted paths") {
  for (int k : {2, 3}) {
    UGraph g = UGraph::build(k, 3);
    AlternatingPath p = run_hierholzer(g);
    for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
      AlternatingPath q = p;
      std::swap(q.steps[i], q.steps[i + 1]);
      CHECK(check_orientation_continuity(g, q) == check_type_alternation(g, q));
    }
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      AlternatingPath q = p;
      q.steps[i].read = reflect_code(q.steps[i].read, g.k(), g.n());
      CHECK(check_orientation_continuity(g, q) == check_type_alternation(g, q));
    }
  }
}

TEST_CASE("an Eulerian but non-alternating walk is rejected by both checks") {
  // 000,001,010 then reading 011 is invalid: 011 cannot follow 010
  UGraph g = UGraph::build(2, 3);
  AlternatingPath p;
  p.k = 2;
  p.n = 3;
  p.start_vertex = g.vertex_index(Word::parse(2, "00"));
  for (const char* read : {"000", "001", "010", "011", "111"})
    p.steps.push_back(
        {g.edge_index(Word::parse(2, read)), Word::parse(2, read).code()});
  std::string why1, why2;
  CHECK_FALSE(check_orientation_continuity(g, p, &why1));
  CHECK_FALSE(check_type_alternation(g, p, &why2));
  CHECK(why1.find("011") != std::string::npos);
  CHECK(why2.find("[10]") != std::string::npos);
}

TEST_CASE("duplicating one edge still walks to a one-repeat cover") {
  // uBg(3,3) has no odd vertices.  A duplicated plain edge leaves two odd
  // vertices (path case); a duplicated loop at a palindromic vertex keeps
  // every degree even (circuit case).  A duplicated loop at a
  // non-palindromic vertex adds two incidences of one type and so breaks
  // the balance condition: no alternating Eulerian path exists there.
  UGraph g = UGraph::build(3, 3);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    Multigraph mg(g);
    mg.add_duplicate(e);
    TypeAssignment asg = balance_palindromic_types(mg);
    bool walkable = !g.edge(e).loop() || g.vertex_palindrome(g.edge(e).vertex[0]);
    if (!walkable) {
      CHECK_FALSE(check_conditions(mg).even_balanced);
      CHECK_THROWS_WITH_AS(alternating_hierholzer(mg, asg),
                           doctest::Contains("unbalanced"), std::invalid_argument);
      continue;
    }
    AlternatingPath p = alternating_hierholzer(mg, asg);
    CHECK(p.steps.size() == g.edge_count() + 1);
    std::string why;
    CHECK_MESSAGE(check_orientation_continuity(g, p, &why), why);
    CHECK_MESSAGE(check_type_alternation(g, p, &why), why);
    CoverageReport r = verify(decode(p), 3, 3);
    CHECK(r.cover);
    REQUIRE(r.duplicated.size() == 1);
    CHECK(r.duplicated[0] == g.edge(e).rep);
  }
  // two disjoint plain duplicates leave four odd vertices: refused
  Multigraph mg(g);
  mg.add_duplicate(g.edge_index(Word::parse(3, "100")));
  mg.add_duplicate(g.edge_index(Word::parse(3, "221")));
  REQUIRE(mg.odd_vertices().size() == 4);
  CHECK_THROWS_AS(alternating_hierholzer(mg, balance_palindromic_types(mg)),
                  std::invalid_argument);
}

TEST_CASE("a loop duplicate walks when bracketed by compensating ends") {
  // [010] duplicates as two TypeII incidences at [10]; [100] and [201] each
  // add one TypeI incidence there, restoring balance.  The other new ends
  // fall on [00] (palindromic, rebalanced by assignment) and [20], which
  // becomes one of the two odd path endpoints.
  UGraph g = UGraph::build(3, 3);
  Multigraph mg(g);
  for (const char* w : {"010", "100", "201"}) mg.add_duplicate(g.edge_index(Word::parse(3, w)));
  REQUIRE(mg.odd_vertices().size() == 2);
  ConditionReport cr = check_conditions(mg);
  CHECK(cr.all_ok());
  AlternatingPath p = alternating_hierholzer(mg, balance_palindromic_types(mg));
  CHECK(p.steps.size() == g.edge_count() + 3);
  std::string why;
  CHECK_MESSAGE(check_orientation_continuity(g, p, &why), why);
  CHECK_MESSAGE(check_type_alternation(g, p, &why), why);
  CoverageReport r = verify(decode(p), 3, 3);
  CHECK(r.cover);
  std::set<std::string> dup;
  for (std::uint64_t code : r.duplicated) dup.insert("[" + code_str(code, 3, 3) + "]");
  CHECK(dup == std::set<std::string>{"[010]", "[100]", "[201]"});
}

TEST_CASE("hierholzer refuses graphs with more than two odd vertices") {
  UGraph g = UGraph::build(2, 4);
  Multigraph mg(g);
  TypeAssignment asg = balance_palindromic_types(mg);
  CHECK_THROWS_WITH_AS(alternating_hierholzer(mg, asg),
                       doctest::Contains("condition 1"), std::invalid_argument);
}

TEST_CASE("hierholzer refuses an incomplete assignment") {
  UGraph g = UGraph::build(2, 3);
  Multigraph mg(g);
  CHECK_THROWS_WITH_AS(alternating_hierholzer(mg, TypeAssignment{}),
                       doctest::Contains("unassigned"), std::invalid_argument);
}

TEST_CASE("directed Euler circuits cover every edge once and close up") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n) {
      DGraph g = DGraph::build(k, n);
      std::vector<std::uint64_t> circuit = directed_euler(g);
      REQUIRE(circuit.size() == g.edge_count());
      std::set<std::uint64_t> seen(circuit.begin(), circuit.end());
      CHECK(seen.size() == g.edge_count());
      for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
        CHECK(g.edge_target(circuit[i]) == g.edge_source(circuit[i + 1]));
      CHECK(g.edge_target(circuit.back()) == g.edge_source(circuit.front()));
      CHECK(g.edge_source(circuit.front()) == 0);
    }
}

TEST_CASE("directed circuit on Bg(2,2)") {
  std::vector<std::uint64_t> c = directed_euler(DGraph::build(2, 2));
  CHECK(c.size() == 4);
}
