#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hesscoh/hessenberg.hh"

using namespace hesscoh;

namespace {
std::set<std::string> point_set(const std::vector<Permutation>& pts) {
  std::set<std::string> s;
  for (const Permutation& w : pts) s.insert(w.str());
  return s;
}
}  // namespace

TEST_CASE("validation names the violated constraint") {
  CHECK_THROWS(HessenbergFunction({2, 1, 3}));   // not nondecreasing
  CHECK_THROWS(HessenbergFunction({1, 1, 3}));   // h(2) < 2
  CHECK_THROWS(HessenbergFunction({2, 3, 4}));   // h(3) > n
  CHECK_THROWS(HessenbergFunction({}));
  CHECK_NOTHROW(HessenbergFunction({1, 2, 3}));
}

TEST_CASE("factories, parsing, indecomposability") {
  CHECK(HessenbergFunction::peterson(4).values() == std::vector<int>{2, 3, 4, 4});
  CHECK(HessenbergFunction::full(3).values() == std::vector<int>{3, 3, 3});
  CHECK(HessenbergFunction::minimal(3).values() == std::vector<int>{1, 2, 3});
  CHECK(HessenbergFunction::parse("3,3,4,4").str() == "3,3,4,4");
  CHECK_THROWS(HessenbergFunction::parse("3,x"));
  CHECK(HessenbergFunction::peterson(4).is_indecomposable());
  CHECK(!HessenbergFunction({1, 2, 3}).is_indecomposable());
  CHECK(!HessenbergFunction({2, 2, 3}).is_indecomposable());
}

TEST_CASE("partial order and box edits") {
  HessenbergFunction pet = HessenbergFunction::parse("2,3,4,4");
  HessenbergFunction h = HessenbergFunction::parse("3,3,4,4");
  CHECK(h_leq(pet, h));
  CHECK(!h_leq(h, pet));
  CHECK(h_leq(h, h));
  CHECK(add_box(pet, 3, 1) == h);
  CHECK(remove_box(HessenbergFunction::parse("2,4,4,4"), 4, 2) ==
        HessenbergFunction::parse("2,3,4,4"));
  CHECK_THROWS(remove_box(pet, 2, 2));  // not the lowest box of its column
  CHECK_THROWS(remove_box(HessenbergFunction::parse("1,2,3"), 1, 1));
}

TEST_CASE("corner boxes") {
  // corners of (2,4,4,4): (2,1) and (4,2)
  auto corners = corner_boxes(HessenbergFunction::parse("2,4,4,4"));
  REQUIRE(corners.size() == 2);
  CHECK(corners[0] == std::pair<int, int>{2, 1});
  CHECK(corners[1] == std::pair<int, int>{4, 2});
  CHECK(corner_boxes(HessenbergFunction::minimal(4)).empty());
}

TEST_CASE("fixed points of the Peterson function for n=3") {
  auto pts = fixed_points(HessenbergFunction::parse("2,3,3"));
  CHECK(point_set(pts) == std::set<std::string>{"123", "132", "213", "321"});
  CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("fixed points for n=4: Peterson list and the h=(3,3,4,4) additions") {
  std::set<std::string> peterson8 = {"1234", "1243", "1324", "1432",
                                     "2134", "2143", "3214", "4321"};
  CHECK(point_set(fixed_points(HessenbergFunction::parse("2,3,4,4"))) == peterson8);

  std::set<std::string> extra = {"2314", "3124", "3421", "4132"};
  std::set<std::string> want = peterson8;
  want.insert(extra.begin(), extra.end());
  CHECK(point_set(fixed_points(HessenbergFunction::parse("3,3,4,4"))) == want);
}

TEST_CASE("full Hessenberg function fixes everything") {
  CHECK(fixed_points(HessenbergFunction::full(4)).size() == 24);
}

TEST_CASE("monotonicity of fixed-point sets in the partial order") {
  auto hs = all_hessenberg_functions(4);
  for (const auto& h1 : hs)
    for (const auto& h2 : hs) {
      if (!h_leq(h1, h2)) continue;
      auto small = point_set(fixed_points(h1));
      auto big = point_set(fixed_points(h2));
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
}

TEST_CASE("minimal Hessenberg function of a permutation") {
  for (const Permutation& w : symmetric_group(4)) {
    HessenbergFunction hw = minimal_hessenberg(w);
    auto pts = point_set(fixed_points(hw));
    CHECK(pts.count(w.str()) == 1);
    // minimality: removing any corner box loses w
    for (auto [i, j] : corner_boxes(hw)) {
      auto smaller = point_set(fixed_points(remove_box(hw, i, j)));
      CHECK(smaller.count(w.str()) == 0);
    }
    // and h contains w iff h >= h_w
    for (const auto& h : all_hessenberg_functions(4))
      CHECK(point_set(fixed_points(h)).count(w.str()) == (h_leq(hw, h) ? 1 : 0));
  }
}

TEST_CASE("Catalan counts of Hessenberg functions") {
  CHECK(all_hessenberg_functions(2).size() == 2);
  CHECK(all_hessenberg_functions(3).size() == 5);
  CHECK(all_hessenberg_functions(4).size() == 14);
  CHECK(all_hessenberg_functions(5).size() == 42);
  CHECK(all_hessenberg_functions(6).size() == 132);
  auto hs = all_hessenberg_functions(4);
  CHECK(std::is_sorted(hs.begin(), hs.end(),
                       [](const HessenbergFunction& a, const HessenbergFunction& b) {
                         return a.values() < b.values();
                       }));
}

TEST_CASE("maximal consecutive strings of a subset") {
  SubsetA A{{1, 3, 4}};
  auto strings = A.strings();
  REQUIRE(strings.size() == 2);
  CHECK(strings[0] == std::pair<int, int>{1, 1});
  CHECK(strings[1] == std::pair<int, int>{3, 4});
  CHECK(A.contains(3));
  CHECK(!A.contains(2));
  CHECK(A.head(3) == 4);
  CHECK(A.tail(4) == 3);
  CHECK(A.head(1) == 1);
  CHECK(A.str() == "1,3,4");
  CHECK(SubsetA{}.str() == "{}");
}

TEST_CASE("v_A and w_A") {
  CHECK(subset_to_vA(SubsetA{{1, 3}}, 4) == Permutation({2, 1, 4, 3}));
  CHECK(subset_to_vA(SubsetA{{1, 2}}, 3) == Permutation({2, 3, 1}));  // s1 s2
  CHECK(subset_to_vA(SubsetA{}, 3).is_identity());
  CHECK(subset_to_wA(SubsetA{{1, 2}}, 3) == Permutation({3, 2, 1}));
  CHECK(subset_to_wA(SubsetA{}, 4).is_identity());
  // length of v_A is |A|
  for (int n = 2; n <= 5; ++n)
    for (const SubsetA& A : all_subsets(n))
      CHECK(subset_to_vA(A, n).length() == static_cast<int>(A.elems.size()));
}

TEST_CASE("Peterson fixed points are exactly the w_A") {
  for (int n = 2; n <= 6; ++n) {
    auto pairs = peterson_fixed_points(n);
    CHECK(pairs.size() == (size_t{1} << (n - 1)));
    std::set<std::string> from_subsets;
    for (const auto& [A, wA] : pairs) {
      CHECK(wA == subset_to_wA(A, n));
      from_subsets.insert(wA.str());
    }
    CHECK(from_subsets == point_set(fixed_points(HessenbergFunction::peterson(n))));
  }
}

TEST_CASE("w_A is the longest element of its parabolic subgroup") {
  // w_A has the maximal length among products of {s_i : i in A} and is an
  // involution; check length = sum over strings of len*(len+1)/2
  for (const SubsetA& A : all_subsets(5)) {
    Permutation wA = subset_to_wA(A, 5);
    CHECK(compose(wA, wA).is_identity());
    int want = 0;
    for (auto [a, b] : A.strings()) {
      int len = b - a + 2;  // block of len consecutive positions reversed
      want += len * (len - 1) / 2;
    }
    CHECK(wA.length() == want);
  }
}

TEST_CASE("v_A <= w_B in Bruhat order iff A is contained in B") {
  for (int n = 2; n <= 5; ++n)
    for (const SubsetA& A : all_subsets(n))
      for (const SubsetA& B : all_subsets(n)) {
        bool contained = std::includes(B.elems.begin(), B.elems.end(),
                                       A.elems.begin(), A.elems.end());
        CHECK(bruhat_leq(subset_to_vA(A, n), subset_to_wA(B, n)) == contained);
      }
}

TEST_CASE("subset enumeration order: cardinality, then lex") {
  auto subs = all_subsets(4);
  REQUIRE(subs.size() == 8);
  CHECK(subs[0].elems.empty());
  CHECK(subs[1].elems == std::vector<int>{1});
  CHECK(subs[3].elems == std::vector<int>{3});
  CHECK(subs[4].elems == std::vector<int>{1, 2});
  CHECK(subs[7].elems == std::vector<int>{1, 2, 3});
}
