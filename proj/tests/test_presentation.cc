#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hesscoh/billey.hh"
#include "hesscoh/macaulay.hh"
#include "hesscoh/presentation.hh"

using namespace hesscoh;

namespace {

// hand-built generators for n = 4, written out without the recursion
struct HandBuilt {
  Context ctx = VariableContext::x_vars(4, true);
  SparsePolynomial x(int i) const { return SparsePolynomial::variable(ctx, i - 1); }
  SparsePolynomial t() const { return SparsePolynomial::variable(ctx, 4); }
  SparsePolynomial g(int j) const {
    SparsePolynomial s(ctx);
    for (int k = 1; k <= j; ++k) s += x(k) - t().scaled(k);
    return s;
  }
  SparsePolynomial lin(int a, int b) const { return x(a) - x(b) - t(); }
};

SparsePolynomial t_pow(const Rational& c, int d) {
  return SparsePolynomial::monomial(VariableContext::t_only(), {d}, c);
}

}  // namespace

TEST_CASE("recursive generators match the expanded closed forms for n = 4") {
  HandBuilt H;
  const int n = 4;
  CHECK(f_ij(1, 1, n, true) == H.g(1));
  CHECK(f_ij(2, 2, n, true) == H.g(2));
  CHECK(f_ij(3, 3, n, true) == H.g(3));
  CHECK(f_ij(4, 4, n, true) == H.g(4));
  CHECK(f_ij(2, 1, n, true) == H.lin(1, 2) * H.g(1));
  CHECK(f_ij(3, 2, n, true) == H.lin(1, 2) * H.g(1) + H.lin(2, 3) * H.g(2));
  CHECK(f_ij(4, 3, n, true) ==
        H.lin(1, 2) * H.g(1) + H.lin(2, 3) * H.g(2) + H.lin(3, 4) * H.g(3));
  CHECK(f_ij(3, 1, n, true) == H.lin(1, 3) * H.lin(1, 2) * H.g(1));
  CHECK(f_ij(4, 2, n, true) ==
        H.lin(1, 3) * H.lin(1, 2) * H.g(1) +
            H.lin(2, 4) * (H.lin(1, 2) * H.g(1) + H.lin(2, 3) * H.g(2)));
  CHECK(f_ij(4, 1, n, true) ==
        H.lin(1, 4) * H.lin(1, 3) * H.lin(1, 2) * H.g(1));
}

TEST_CASE("f_{i,j} is homogeneous of degree i - j + 1") {
  for (int n = 2; n <= 8; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = j; i <= n; ++i)
        for (bool with_t : {true, false}) {
          SparsePolynomial f = f_ij(i, j, n, with_t);
          CHECK(f.is_homogeneous());
          CHECK(f.degree() == i - j + 1);
        }
}

TEST_CASE("the minimal Hessenberg function yields the g_j themselves") {
  IdealPresentation I = ideal_for(HessenbergFunction::minimal(4), true);
  REQUIRE(I.gens.size() == 4);
  for (int j = 1; j <= 4; ++j) CHECK(I.gens[j - 1] == g_poly(j, 4, true));
}

TEST_CASE("generators restrict to zero at every fixed point (n <= 5 plus n = 6 spot checks)") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      VanishingReport rep = verify_vanishing(h);
      CHECK(rep.pass);
      CHECK(rep.witness.empty());
    }
  CHECK(verify_vanishing(HessenbergFunction::peterson(6)).pass);
  CHECK(verify_vanishing(HessenbergFunction::full(6)).pass);
}

TEST_CASE("restriction substitutes x_i -> w(i) t") {
  Context ctx = VariableContext::x_vars(3, true);
  SparsePolynomial x1 = SparsePolynomial::variable(ctx, 0);
  CHECK(restrict_at(x1, Permutation({2, 3, 1})) == t_pow(2, 1));
  CHECK(restrict_at(g_poly(2, 3, true), Permutation({2, 3, 1})) == t_pow(2, 1));
}

TEST_CASE("restriction tables of the quadratic building blocks for n = 4") {
  // Delta_k := g_k (x_k - x_{k+1} - t), evaluated at the four points that the
  // step from h = (2,3,4,4) to h = (3,3,4,4) adds
  HandBuilt H;
  std::vector<SparsePolynomial> delta;
  for (int k = 1; k <= 3; ++k) delta.push_back(H.g(k) * H.lin(k, k + 1));

  std::vector<Permutation> pts = {Permutation({2, 3, 1, 4}), Permutation({3, 1, 2, 4}),
                                  Permutation({3, 4, 2, 1}), Permutation({4, 1, 3, 2})};
  std::vector<Rational> d1 = {-2, 2, -4, 6};
  for (size_t p = 0; p < pts.size(); ++p) {
    CHECK(restrict_at(delta[0], pts[p]) == t_pow(d1[p], 2));
    CHECK(restrict_at(delta[1], pts[p]) == t_pow(-d1[p], 2));
    CHECK(restrict_at(delta[2], pts[p]).is_zero());
  }
  // the generators of the h = (3,3,4,4) ideal built from the deltas:
  // f_{3,2} = Delta_1 + Delta_2, f_{4,3} = Delta_1 + Delta_2 + Delta_3
  CHECK(f_ij(3, 2, 4, true) == delta[0] + delta[1]);
  CHECK(f_ij(4, 3, 4, true) == delta[0] + delta[1] + delta[2]);
}

TEST_CASE("restriction tables at the points added by h = (3,4,4,4)") {
  HandBuilt H;
  std::vector<Permutation> pts = {Permutation({1, 3, 4, 2}), Permutation({1, 4, 2, 3}),
                                  Permutation({2, 4, 1, 3}), Permutation({3, 2, 4, 1}),
                                  Permutation({4, 2, 3, 1}), Permutation({4, 3, 1, 2})};
  SparsePolynomial f1 = H.g(1) * H.lin(1, 2) * H.lin(1, 3);  // f_{3,1}
  SparsePolynomial f2 = f_ij(3, 2, 4, true);
  SparsePolynomial f3 = H.g(3) * H.lin(3, 4);
  std::vector<Rational> v2 = {-2, 2, 3, -6, -3, 4};
  for (size_t p = 0; p < pts.size(); ++p) {
    CHECK(restrict_at(f1, pts[p]).is_zero());
    CHECK(restrict_at(f2, pts[p]) == t_pow(v2[p], 2));
    CHECK(restrict_at(f3, pts[p]) == t_pow(-v2[p], 2));
  }
}

TEST_CASE("restriction tables at the points added by the full function, n = 4") {
  HandBuilt H;
  std::vector<Permutation> pts = {Permutation({2, 3, 4, 1}), Permutation({2, 4, 3, 1}),
                                  Permutation({3, 1, 4, 2}), Permutation({3, 4, 1, 2}),
                                  Permutation({4, 1, 2, 3}), Permutation({4, 2, 1, 3})};
  SparsePolynomial g1 = f_ij(3, 1, 4, true);
  SparsePolynomial g2 = f_ij(3, 2, 4, true) * H.lin(2, 4);  // f_{4,2}'s second factor form
  SparsePolynomial g3 = f_ij(4, 3, 4, true);
  std::vector<Rational> v1 = {6, 6, -4, -4, 6, 6};
  for (size_t p = 0; p < pts.size(); ++p) {
    CHECK(restrict_at(g1, pts[p]) == t_pow(v1[p], 3));
    CHECK(restrict_at(g2, pts[p]) == t_pow(-v1[p], 3));
    CHECK(restrict_at(g3, pts[p]).is_zero());
  }
}

TEST_CASE("expected Poincare polynomials") {
  // Peterson: (1+q^2)^{n-1}
  CHECK(expected_poincare(HessenbergFunction::peterson(4)).coeffs ==
        std::vector<long>{1, 3, 3, 1});
  // full flag: prod_i (1 + q^2 + ... + q^{2i})
  HilbertSeriesPoly flag = expected_poincare(HessenbergFunction::full(3));
  CHECK(flag.coeffs == std::vector<long>{1, 2, 2, 1});
  CHECK(expected_poincare(HessenbergFunction::minimal(5)).coeffs ==
        std::vector<long>{1});
  CHECK(expected_poincare(HessenbergFunction::parse("3,3,4,4")).coeffs ==
        std::vector<long>{1, 3, 4, 3, 1});
}

TEST_CASE("quotient Hilbert functions match the product formula") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      HilbertReport rep = hilbert_check(h);
      CHECK(rep.pass);
      CHECK(rep.dims == rep.expected);
      // finite-dimensional: the spare top piece is zero
      REQUIRE(!rep.dims.empty());
      CHECK(rep.dims.back() == 0);
    }
}

TEST_CASE("Hilbert certificate is stable under generator order") {
  IdealPresentation I = ideal_for(HessenbergFunction::parse("3,3,4,4"), false);
  std::reverse(I.gens.begin(), I.gens.end());
  HilbertReport rep = is_regular_sequence(I.gens);
  CHECK(rep.pass);
}

TEST_CASE("regular-sequence certificate") {
  {
    IdealPresentation I = flag_ideal(3, false);
    CHECK(is_regular_sequence(I.gens).pass);
  }
  {
    // z1(z1 - 1/2 z2), z2(z2 - 1/2 z1) is a regular sequence
    Context ctx = VariableContext::x_vars(2, false);
    SparsePolynomial z1 = SparsePolynomial::variable(ctx, 0);
    SparsePolynomial z2 = SparsePolynomial::variable(ctx, 1);
    std::vector<SparsePolynomial> gens = {z1 * (z1 - z2.scaled(Rational(1, 2))),
                                          z2 * (z2 - z1.scaled(Rational(1, 2)))};
    CHECK(is_regular_sequence(gens).pass);
    // (x1, x1) is not
    CHECK(!is_regular_sequence({z1, z1}).pass);
  }
}

TEST_CASE("monomial basis {m : m_i <= h(i) - i}") {
  HessenbergFunction h = HessenbergFunction::parse("3,3,4,4");
  std::vector<Exponent> basis = monomial_basis(h);
  CHECK(basis.size() == 12);  // 3 * 2 * 2 * 1
  for (const Exponent& m : basis) {
    CHECK(m.size() == 4);
    CHECK(m[0] <= 2);
    CHECK(m[1] <= 1);
    CHECK(m[2] <= 1);
    CHECK(m[3] == 0);
  }
  CHECK(monomial_basis(HessenbergFunction::minimal(3)).size() == 1);
}

TEST_CASE("the monomial basis spans the ordinary quotient (n <= 4)") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      MonomialBasisReport rep = verify_monomial_basis(h);
      CHECK(rep.pass);
      long want = 1;
      for (int j = 1; j <= n; ++j) want *= h(j) - j + 1;
      CHECK(rep.cardinality == want);
    }
}

TEST_CASE("quadratic ideal generators") {
  // n = 2: single quadratic z1(z1 - t) plus g_2
  IdealPresentation I2 = peterson_quadratic_ideal(2, true);
  REQUIRE(I2.gens.size() == 2);
  SparsePolynomial g1 = g_poly(1, 2, true);
  Context ctx = I2.ctx;
  SparsePolynomial t = SparsePolynomial::variable(ctx, 2);
  CHECK(I2.gens[0] == g1 * (g1 - t));
  CHECK(I2.gens[1] == g_poly(2, 2, true));
}

TEST_CASE("quadratic ideal equals the recursive Hessenberg ideal") {
  for (int n = 3; n <= 4; ++n)
    for (bool with_t : {true, false}) {
      IdealPresentation quad = peterson_quadratic_ideal(n, with_t);
      IdealPresentation rec = ideal_for(HessenbergFunction::peterson(n), with_t);
      IdealEqualityReport rep = ideals_equal(quad.gens, rec.gens);
      CHECK(rep.equal);
    }
}

TEST_CASE("recursive full-flag ideal equals the symmetric-function ideal") {
  for (int n = 2; n <= 4; ++n)
    for (bool with_t : {true, false}) {
      IdealPresentation rec = ideal_for(HessenbergFunction::full(n), with_t);
      IdealPresentation sym = flag_ideal(n, with_t);
      CHECK(ideals_equal(rec.gens, sym.gens).equal);
    }
}

TEST_CASE("type A Peterson presentation report") {
  for (int n = 2; n <= 4; ++n) {
    PresentationReport rep = peterson_presentation_check(n);
    CHECK(rep.pass);
    CHECK(rep.lines.size() == 4);
  }
}

TEST_CASE("general-type Peterson presentation report") {
  for (const char* name : {"A2", "B2", "G2", "B3"}) {
    PresentationReport rep = peterson_presentation_general(parse_cartan(name));
    CHECK(rep.pass);
  }
}

TEST_CASE("continued fraction") {
  // c = 1/4: x_m = (m+2)/(2(m+1)), always positive
  ContinuedFractionResult r = continued_fraction_check(Rational(1, 4), 50);
  CHECK(r.all_positive);
  CHECK(r.failed_at == -1);
  for (int m = 0; m <= 50; ++m) {
    Rational want(m + 2, 2 * (m + 1));
    want.canonicalize();
    CHECK(r.xs[m] == want);
  }
  // c = 0: constant 1
  ContinuedFractionResult r0 = continued_fraction_check(Rational(0), 5);
  for (const Rational& x : r0.xs) CHECK(x == 1);
  // c = 1/2: x_1 = 1/2, x_2 = 0, recursion dies at m = 3
  ContinuedFractionResult rh = continued_fraction_check(Rational(1, 2), 10);
  CHECK(!rh.all_positive);
  CHECK(rh.failed_at == 3);
  CHECK(rh.xs[2] == 0);
}
