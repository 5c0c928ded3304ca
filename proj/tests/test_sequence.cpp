#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "unbruijn/sequence.hpp"

using namespace unbruijn;

namespace {

std::vector<std::uint64_t> reads_of(int k, std::initializer_list<const char*> words) {
  std::vector<std::uint64_t> out;
  for (const char* w : words) out.push_back(Word::parse(k, w).code());
  return out;
}

}  // namespace

TEST_CASE("optimal length closed form") {
  CHECK(optimal_length(2, 3) == 8);
  CHECK(optimal_length(3, 3) == 20);
  CHECK(optimal_length(2, 4) == 13);
  CHECK(optimal_length(1, 7) == 7);
  CHECK(optimal_length(5, 1) == 5);
  CHECK(optimal_length(2, 5) == 24);
  CHECK(optimal_length(4, 3) == 42);
  CHECK_THROWS_AS(optimal_length(2, 300), std::overflow_error);
}

TEST_CASE("decoding reads into a word") {
  CHECK(decode_reads(2, 3, reads_of(2, {"000", "001", "010", "101", "011", "111"})).str() ==
        "00010111");
  CHECK(decode_reads(2, 3, reads_of(2, {"000"})).str() == "000");
  CHECK(decode_reads(2, 3,
                     reads_of(2, {"000", "001", "010", "101", "011", "111", "110", "100"}))
            .str() == "0001011100");
  CHECK_THROWS_WITH_AS(decode_reads(2, 3, reads_of(2, {"000", "001", "101"})),
                       doctest::Contains("step 3"), std::invalid_argument);
}

TEST_CASE("verify accepts the worked optimal cover") {
  CoverageReport r = verify(Word::parse(2, "00010111"), 2, 3);
  CHECK(r.cover);
  CHECK(r.optimal);
  CHECK(r.missing.empty());
  CHECK(r.duplicated.empty());
  CHECK(r.length == 8);
  CHECK(std::accumulate(r.counts.begin(), r.counts.end(), 0u) == 6);
}

TEST_CASE("verify pinpoints missing classes") {
  CoverageReport r = verify(Word::parse(2, "0001011"), 2, 3);
  CHECK_FALSE(r.cover);
  REQUIRE(r.missing.size() == 1);
  CHECK(code_str(r.missing[0], 2, 3) == "111");
  CHECK_FALSE(r.optimal);
}

TEST_CASE("verify reports the duplicated pair of the length-14 binary cover") {
  CoverageReport r = verify(Word::parse(2, "00001100101111"), 2, 4);
  CHECK(r.cover);
  CHECK_FALSE(r.optimal);  // 14 > 13
  CHECK(r.length == 14);
  REQUIRE(r.duplicated.size() == 1);
  CHECK(code_str(r.duplicated[0], 2, 4) == "1100");
  CHECK(r.to_json() ==
        R"({"k":2,"n":4,"length":14,"cover":true,"optimal":false,"missing":[],"duplicated":["[1100]"]})");
}

TEST_CASE("a classical de Bruijn sequence covers but is not optimal") {
  CoverageReport r = verify(Word::parse(2, "0100011101"), 2, 3);
  CHECK(r.cover);
  CHECK_FALSE(r.optimal);  // length 10 > 8
}

TEST_CASE("verify edge cases") {
  CoverageReport shorty = verify(Word::parse(2, "01"), 2, 3);
  CHECK_FALSE(shorty.cover);
  CHECK(shorty.missing.size() == 6);  // everything missing, gracefully
  CHECK_THROWS_AS(verify(Word::parse(3, "012"), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify(Word::parse(2, "0101"), 2, 40), limit_error);
}

TEST_CASE("palindromic classes are not double counted") {
  // 0100010 reads 010 twice forward: genuinely duplicated
  CoverageReport r = verify(Word::parse(2, "0100010"), 2, 3);
  REQUIRE_FALSE(r.duplicated.empty());
  CHECK(code_str(r.duplicated[0], 2, 3) == "010");
  // but a single occurrence of a palindrome counts once
  CoverageReport single = verify(Word::parse(2, "00010111"), 2, 3);
  CHECK(single.duplicated.empty());
}

TEST_CASE("generation hits the optimal lengths of the worked examples") {
  GenerateResult g22 = generate(2, 2);
  CHECK(g22.sequence.str() == "0011");
  CHECK(g22.optimal);

  GenerateResult g32 = generate(3, 2);
  CHECK(g32.sequence.str() == "0011220");
  CHECK(g32.optimal);

  GenerateResult g23 = generate(2, 3);
  CHECK(g23.sequence.str() == "00010111");
  CHECK(g23.optimal);

  GenerateResult g33 = generate(3, 3);
  CHECK(g33.sequence.length() == 20);
  CHECK(g33.optimal);
  CHECK(g33.duplicates.empty());
}

TEST_CASE("generation of the suboptimal binary n=4 case") {
  GenerateResult g = generate(2, 4);
  CHECK(g.sequence.length() == 14);  // l(2,4) + 1
  CHECK_FALSE(g.optimal);
  REQUIRE(g.duplicates.size() == 1);
  CHECK(g.duplicates[0].first == "[1100]");
  CoverageReport r = verify(g.sequence, 2, 4);
  CHECK(r.cover);
  REQUIRE(r.duplicated.size() == 1);
  CHECK(code_str(r.duplicated[0], 2, 4) == "1100");
}

TEST_CASE("trivial generations") {
  CHECK(generate(1, 5).sequence.str() == "00000");
  CHECK(generate(1, 5).optimal);
  CHECK(generate(4, 1).sequence.str() == "0123");
  CHECK(generate(4, 1).optimal);
  CHECK(generate(1, 1).sequence.str() == "0");
  CHECK_THROWS_AS(generate(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(generate(2, 40), limit_error);
}

TEST_CASE("every generated sequence verifies as a cover") {
  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n <= 5; ++n) {
      GenerateResult g = generate(k, n);
      CoverageReport r = verify(g.sequence, k, n);
      CHECK(r.cover);
      CHECK(g.optimal == optimal_exists(k, n));
      if (g.optimal) {
        CHECK(g.sequence.length() == optimal_length(k, n));
        CHECK(r.duplicated.empty());
      }
      // subword count identity: L - n + 1 forward subwords split into one
      // per class plus repetitions
      if (n <= static_cast<int>(g.sequence.length())) {
        std::uint64_t subwords = g.sequence.length() - n + 1;
        std::uint64_t reps = 0;
        for (std::uint32_t c : r.counts) reps += c > 0 ? c - 1 : 0;
        CHECK(subwords == count_classes(k, n) + reps);
        if (g.optimal) CHECK(reps == 0);
      }
    }
}

TEST_CASE("larger instances stay within the duplicate bound and verify") {
  for (auto [k, n] : {std::pair{2, 8}, {3, 6}, {6, 4}}) {
    GenerateResult g = generate(k, n);
    CHECK_FALSE(g.optimal);
    CHECK(g.duplicates.size() <= g.bound_extra);
    CHECK(g.sequence.length() == optimal_length(k, n) + g.duplicates.size());
    CHECK(verify(g.sequence, k, n).cover);
  }
}

TEST_CASE("coverage is closed under reflection") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n) {
      Word w = generate(k, n).sequence;
      CHECK(verify(w, k, n).cover == verify(w.reflected(), k, n).cover);
    }
  // also for a non-cover
  Word bad = Word::parse(2, "0001011");
  CHECK(verify(bad, 2, 3).cover == verify(bad.reflected(), 2, 3).cover);
}

TEST_CASE("decoded directed circuits are classical de Bruijn sequences") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n) {
      DGraph g = DGraph::build(k, n);
      std::vector<std::uint64_t> circuit = directed_euler(g);
      Word b = decode_reads(k, n, circuit);
      CHECK(b.length() == g.edge_count() + n - 1);
      // every length-n word exactly once as a forward subword
      std::vector<int> seen(g.edge_count(), 0);
      std::uint64_t mod = pow_checked(k, static_cast<unsigned>(n - 1));
      std::uint64_t window = 0;
      for (std::size_t i = 0; i < b.length(); ++i) {
        window = (window % mod) * static_cast<std::uint64_t>(k) + b.at(i);
        if (i + 1 >= static_cast<std::size_t>(n)) seen[window] += 1;
      }
      CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(g.edge_count()));
      // a classical sequence is also an unoriented cover
      CHECK(verify(b, k, n).cover);
    }
}

TEST_CASE("generate reports match the JSON schema") {
  GenerateResult g = generate(2, 4);
  std::string j = g.to_json();
  CHECK(j.find("\"optimal\":false") != std::string::npos);
  CHECK(j.find("\"duplicates\":1") != std::string::npos);
  CHECK(j.find("\"edge\":\"[1100]\"") != std::string::npos);
  CHECK(j.find("\"bound\":3") != std::string::npos);
  CHECK(j.find("\"used\":1") != std::string::npos);
}
