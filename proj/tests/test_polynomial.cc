#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hesscoh/polynomial.hh"

using namespace hesscoh;

TEST_CASE("variable contexts") {
  Context ctx = VariableContext::x_vars(3, true);
  CHECK(ctx->size() == 4);
  CHECK(ctx->name(0) == "x1");
  CHECK(ctx->name(3) == "t");
  CHECK(ctx->index_of("x2") == 1);
  CHECK(ctx->index_of("y") == -1);
  CHECK(VariableContext::t_indexed(2)->names() ==
        std::vector<std::string>{"t1", "t2"});
}

TEST_CASE("arithmetic and canonical zero-coefficient stripping") {
  Context ctx = VariableContext::x_vars(2, false);
  SparsePolynomial x1 = SparsePolynomial::variable(ctx, 0);
  SparsePolynomial x2 = SparsePolynomial::variable(ctx, 1);
  SparsePolynomial p = (x1 + x2) * (x1 - x2);
  CHECK(p == x1 * x1 - x2 * x2);
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(!(p + SparsePolynomial::constant(ctx, 1)).is_homogeneous());
  CHECK(p.coeff({2, 0}) == 1);
  CHECK(p.coeff({1, 1}) == 0);
  CHECK(p.scaled(Rational(1, 2)).coeff({0, 2}) == Rational(-1, 2));
  CHECK(SparsePolynomial::zero(ctx).degree() == -1);
}

TEST_CASE("substitution") {
  Context src = VariableContext::x_vars(2, false);
  Context tgt = VariableContext::t_only();
  SparsePolynomial x1 = SparsePolynomial::variable(src, 0);
  SparsePolynomial x2 = SparsePolynomial::variable(src, 1);
  SparsePolynomial t = SparsePolynomial::variable(tgt, 0);
  // x1 -> 2t, x2 -> 3t applied to x1*x2 - x1^2 gives 6t^2 - 4t^2 = 2t^2
  SparsePolynomial img = (x1 * x2 - x1 * x1).substitute({t.scaled(2), t.scaled(3)}, tgt);
  CHECK(img == (t * t).scaled(2));
}

TEST_CASE("pi specialization maps t_i to i*t") {
  Context ctx = VariableContext::t_indexed(3);
  SparsePolynomial t1 = SparsePolynomial::variable(ctx, 0);
  SparsePolynomial t3 = SparsePolynomial::variable(ctx, 2);
  SparsePolynomial spec = (t3 - t1).specialize_pi();
  Context tctx = spec.context();
  REQUIRE(tctx->index_of("t") == 0);
  CHECK(spec == SparsePolynomial::variable(tctx, 0).scaled(2));
  // quadratic: t1*t3 -> 3 t^2
  CHECK((t1 * t3).specialize_pi().coeff({2}) == 3);
}

TEST_CASE("elementary symmetric polynomials") {
  Context ctx = VariableContext::x_vars(3, false);
  SparsePolynomial e2 = elementary_symmetric(ctx, 2, {0, 1, 2});
  SparsePolynomial want(ctx);
  want.add_term({1, 1, 0}, 1);
  want.add_term({1, 0, 1}, 1);
  want.add_term({0, 1, 1}, 1);
  CHECK(e2 == want);
  CHECK(elementary_symmetric(ctx, 1, {0, 1, 2}).num_terms() == 3);
  CHECK(elementary_symmetric(ctx, 3, {0, 1, 2}).num_terms() == 1);
  CHECK_THROWS(elementary_symmetric(ctx, 4, {0, 1, 2}));
}

TEST_CASE("printing is graded-lex and frozen") {
  Context ctx = VariableContext::x_vars(2, true);
  SparsePolynomial x1 = SparsePolynomial::variable(ctx, 0);
  SparsePolynomial x2 = SparsePolynomial::variable(ctx, 1);
  SparsePolynomial t = SparsePolynomial::variable(ctx, 2);
  CHECK((x1 - t).str() == "x1 - t");
  CHECK((x1 * x1 - x1 * x2 + t * t - x1).str() == "x1^2 - x1*x2 + t^2 - x1");
  CHECK((t - x1).str() == "-x1 + t");
  CHECK(x1.scaled(Rational(3, 2)).str() == "3/2*x1");
  CHECK(SparsePolynomial::zero(ctx).str() == "0");
  CHECK(SparsePolynomial::constant(ctx, Rational(-5)).str() == "-5");
}

TEST_CASE("json form lists terms in the printed order") {
  Context ctx = VariableContext::t_only();
  SparsePolynomial t = SparsePolynomial::variable(ctx, 0);
  CHECK((t * t - t.scaled(Rational(1, 2))).json() ==
        "{\"vars\":[\"t\"],\"terms\":[{\"coeff\":\"1\",\"exp\":[2]},"
        "{\"coeff\":\"-1/2\",\"exp\":[1]}]}");
}

TEST_CASE("q-series arithmetic in the cohomological convention") {
  HilbertSeriesPoly one_plus{ {1, 1}, 0 };       // 1 + q^2
  HilbertSeriesPoly sq = one_plus * one_plus;    // 1 + 2q^2 + q^4
  CHECK(sq.coeffs == std::vector<long>{1, 2, 1});
  CHECK(sq.coeff(5) == 0);
  HilbertSeriesPoly eqv = sq;
  eqv.denom_exp = 1;
  CHECK(eqv.expand(4) == std::vector<long>{1, 3, 4, 4, 4});
  CHECK(sq.expand(4) == std::vector<long>{1, 2, 1, 0, 0});
  CHECK(sq.str() == "1 + 2q^2 + q^4");
  CHECK(eqv.str() == "(1 + 2q^2 + q^4)/(1-q^2)");
  HilbertSeriesPoly padded{ {1, 2, 1, 0, 0}, 0 };
  CHECK(padded == sq);
}
