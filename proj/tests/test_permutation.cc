#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hesscoh/permutation.hh"

using namespace hesscoh;

TEST_CASE("construction and validation") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.length() == 0);
  CHECK(Permutation({3, 2, 1}).length() == 3);
  CHECK_THROWS(Permutation({1, 1, 3}));
  CHECK_THROWS(Permutation({0, 1, 2}));
  CHECK_THROWS(Permutation({1, 2, 4}));
}

TEST_CASE("simple transpositions and composition convention") {
  Permutation s1 = Permutation::simple(1, 3);
  Permutation s2 = Permutation::simple(2, 3);
  CHECK(s1.word() == std::vector<int>{2, 1, 3});
  CHECK(s2.word() == std::vector<int>{1, 3, 2});
  // (u o v)(i) = u(v(i))
  CHECK(compose(s1, s2).word() == std::vector<int>{2, 3, 1});
  CHECK(compose(s2, s1).word() == std::vector<int>{3, 1, 2});
}

TEST_CASE("inverse and length") {
  for (const Permutation& w : symmetric_group(5)) {
    CHECK(compose(w, w.inverse()).is_identity());
    CHECK(w.inverse().length() == w.length());
  }
}

TEST_CASE("canonical reduced word is reduced, lex-smallest, round-trips") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& w : symmetric_group(n)) {
      std::vector<int> b = w.reduced_word();
      CHECK(static_cast<int>(b.size()) == w.length());
      CHECK(is_reduced_word(b, n));
      CHECK(from_reduced_word(b, n) == w);
    }
  }
  // lex-smallest: the longest element of S_3 is s1 s2 s1, not s2 s1 s2
  CHECK(Permutation({3, 2, 1}).reduced_word() == std::vector<int>{1, 2, 1});
}

TEST_CASE("is_reduced_word") {
  CHECK(is_reduced_word({1, 2, 1}, 3));
  CHECK(is_reduced_word({2, 1, 2}, 3));
  CHECK(!is_reduced_word({1, 1}, 3));
  CHECK(!is_reduced_word({1, 2, 1, 2}, 3));
  CHECK(is_reduced_word({}, 3));
}

TEST_CASE("Bruhat order agrees with the sorted-prefix oracle on S_4") {
  std::vector<Permutation> S4 = symmetric_group(4);
  for (const Permutation& v : S4)
    for (const Permutation& w : S4)
      CHECK(bruhat_leq(v, w) == bruhat_leq_tableau(v, w));
}

TEST_CASE("Bruhat basics") {
  Permutation id(4), w0({4, 3, 2, 1});
  for (const Permutation& w : symmetric_group(4)) {
    CHECK(bruhat_leq(id, w));
    CHECK(bruhat_leq(w, w0));
    CHECK(bruhat_leq(w, w));
  }
  CHECK(!bruhat_leq(w0, id));
}

TEST_CASE("reduced subword occurrences of s_1 in words for 321") {
  Permutation s1 = Permutation::simple(1, 3);
  auto occ1 = reduced_subword_occurrences(s1, {1, 2, 1});
  REQUIRE(occ1.size() == 2);
  CHECK(occ1[0] == std::vector<int>{1});
  CHECK(occ1[1] == std::vector<int>{3});
  auto occ2 = reduced_subword_occurrences(s1, {2, 1, 2});
  REQUIRE(occ2.size() == 1);
  CHECK(occ2[0] == std::vector<int>{2});
}

TEST_CASE("occurrences are strictly increasing index tuples of the right length") {
  Permutation w({4, 3, 2, 1});
  std::vector<int> b = w.reduced_word();
  for (const Permutation& v : symmetric_group(4)) {
    auto occs = reduced_subword_occurrences(v, b);
    std::set<std::vector<int>> seen;
    for (const auto& occ : occs) {
      CHECK(static_cast<int>(occ.size()) == v.length());
      CHECK(std::is_sorted(occ.begin(), occ.end()));
      // picks a reduced word for v
      std::vector<int> sub;
      for (int i : occ) sub.push_back(b[i - 1]);
      CHECK(is_reduced_word(sub, 4));
      CHECK(from_reduced_word(sub, 4) == v);
      CHECK(seen.insert(occ).second);
    }
    // occurrences exist iff v <= w in Bruhat order (subword criterion)
    CHECK(!occs.empty() == bruhat_leq(v, w));
  }
}

TEST_CASE("symmetric_group is lexicographically sorted and complete") {
  std::vector<Permutation> S4 = symmetric_group(4);
  CHECK(S4.size() == 24);
  CHECK(std::is_sorted(S4.begin(), S4.end()));
  CHECK(S4.front().is_identity());
  CHECK(S4.back() == Permutation({4, 3, 2, 1}));
}

namespace {
// independent brute-force count of reduced words
long brute_count(const Permutation& w) {
  if (w.is_identity()) return 1;
  long total = 0;
  const int n = w.n();
  for (int i = 1; i < n; ++i) {
    Permutation siw = compose(Permutation::simple(i, n), w);
    if (siw.length() == w.length() - 1) total += brute_count(siw);
  }
  return total;
}
}  // namespace

TEST_CASE("count_reduced_words matches brute force on S_4") {
  for (const Permutation& w : symmetric_group(4))
    CHECK(count_reduced_words(w) == brute_count(w));
  CHECK(count_reduced_words(Permutation({3, 2, 1})) == 2);
  CHECK(count_reduced_words(Permutation({4, 3, 2, 1})) == 16);
}

TEST_CASE("string form and parsing") {
  CHECK(Permutation({3, 2, 1, 4}).str() == "3214");
  CHECK(Permutation::parse("3214") == Permutation({3, 2, 1, 4}));
  CHECK(Permutation::parse("2,1,3") == Permutation({2, 1, 3}));
  CHECK_THROWS(Permutation::parse("331"));
  CHECK_THROWS(Permutation::parse(""));
}
