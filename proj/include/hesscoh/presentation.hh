#ifndef HESSCOH_PRESENTATION_HH
#define HESSCOH_PRESENTATION_HH

#include <string>
#include <vector>

#include "hesscoh/hessenberg.hh"
#include "hesscoh/macaulay.hh"
#include "hesscoh/polynomial.hh"
#include "hesscoh/rootsys.hh"

namespace hesscoh {

// --- generators --------------------------------------------------------------

// g_j = sum_{k<=j} (x_k - k t) in Q[x_1..x_n,t]; t dropped when with_t=false
SparsePolynomial g_poly(int j, int n, bool with_t);

// f_{j,j} = g_j; f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j}, f_{*,0} = 0
SparsePolynomial f_ij(int i, int j, int n, bool with_t);

struct IdealPresentation {
  Context ctx;
  std::vector<SparsePolynomial> gens;
  std::string provenance;
};

// (f_{h(j),j} : j in [n]); ordinary version sets t = 0
IdealPresentation ideal_for(const HessenbergFunction& h, bool with_t);

// flag relations e_i(x) - e_i(t) (equivariant) or e_i(x) (ordinary)
IdealPresentation flag_ideal(int n, bool with_t);

// type A Peterson quadratics g_k(g_k - 1/2 g_{k-1} - 1/2 g_{k+1} - t), k in
// [n-1] with g_0 = 0 and the k = n-1 instance using z_n = 0, plus g_n
IdealPresentation peterson_quadratic_ideal(int n, bool with_t);

// --- localization ------------------------------------------------------------

// substitute x_i -> w(i) t (and t -> t) into a polynomial over {x_1..x_n[,t]}
SparsePolynomial restrict_at(const SparsePolynomial& p, const Permutation& w);

struct VanishingReport {
  bool pass = true;
  int checks = 0;
  std::string witness;  // first failing (generator, fixed point)
};
// every generator of ideal_for(h) restricts to 0 at every fixed point of h
VanishingReport verify_vanishing(const HessenbergFunction& h);

// --- Hilbert series -----------------------------------------------------------

// prod_j (1 + q^2 + ... + q^{2(h(j)-j)})
HilbertSeriesPoly expected_poincare(const HessenbergFunction& h);

struct HilbertReport {
  bool pass = true;
  std::vector<long> dims;      // quotient dims per polynomial degree 0..bound
  std::vector<long> expected;  // expected coefficients on the same range
  int bound = 0;
  std::string note;
};

// Hilbert function of Q[x]/(check I_h) against the product formula; this
// certifies the regular-sequence property by the product criterion
HilbertReport hilbert_check(const HessenbergFunction& h);

// generic regular-sequence certificate: quotient Hilbert function equals
// Hilb(free) * prod(1 - q^{2 deg}); when #gens = #vars additionally requires
// a zero graded piece (finite-dimensionality)
HilbertReport is_regular_sequence(const std::vector<SparsePolynomial>& gens,
                                  int extra_degrees = 2);

// --- monomial basis -----------------------------------------------------------

// {m : 0 <= m_i <= h(i)-i}
std::vector<Exponent> monomial_basis(const HessenbergFunction& h);
struct MonomialBasisReport {
  bool pass = true;
  long cardinality = 0;
  std::string witness;
};
MonomialBasisReport verify_monomial_basis(const HessenbergFunction& h);

// --- Peterson presentations ----------------------------------------------------

struct PresentationReport {
  bool pass = true;
  std::vector<std::string> lines;
};

// type A: quadratic ideal equals the recursive-generator ideal; quotient
// Hilbert function matches (1+q^2)^{n-1} (ordinary) and its /(1-q^2)
// expansion (equivariant)
PresentationReport peterson_presentation_check(int n);

// general type: quadratic relations sum_j <alpha_i,alpha_j> w_i w_j - 2 t w_i
// vanish under the localization w_i -> p_{s_i} at every fixed point, and the
// ordinary quotient has Hilbert function (1+q^2)^rank
PresentationReport peterson_presentation_general(const CartanDatum& datum);

// --- continued fraction ---------------------------------------------------------

struct ContinuedFractionResult {
  std::vector<Rational> xs;  // x_0 .. x_m
  bool all_positive = true;
  int failed_at = -1;        // recursion hit x_{m-1} = 0, if >= 0
};
// x_0 = 1, x_m = 1 - c / x_{m-1}
ContinuedFractionResult continued_fraction_check(const Rational& c, int m_max);

}  // namespace hesscoh

#endif
