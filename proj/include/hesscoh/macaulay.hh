#ifndef HESSCOH_MACAULAY_HH
#define HESSCOH_MACAULAY_HH

#include <vector>

#include "hesscoh/polynomial.hh"

namespace hesscoh {

// all exponent vectors of total degree d in m variables, lexicographic order
std::vector<Exponent> monomials_of_degree(int m, int d);

// rank over Q of the degree-d Macaulay matrix of a homogeneous generator
// list: rows are generator x complementary monomial, columns the degree-d
// monomials.  Exact (integer fraction-free sparse elimination).
long macaulay_rank(const std::vector<SparsePolynomial>& gens, int degree);

// dim of the degree-d piece of ring/(gens): #monomials - macaulay_rank
long quotient_dimension(const std::vector<SparsePolynomial>& gens, int degree);

// quotient dimensions for degrees 0..up_to (parallel over degrees)
std::vector<long> hilbert_function(const std::vector<SparsePolynomial>& gens,
                                   int up_to);

// homogeneous p lies in the ideal generated by gens (checked in deg p)
bool ideal_member(const SparsePolynomial& p, const std::vector<SparsePolynomial>& gens);

// mutual membership of all generators; witness names the first failure
struct IdealEqualityReport {
  bool equal = true;
  std::string witness;
};
IdealEqualityReport ideals_equal(const std::vector<SparsePolynomial>& gens1,
                                 const std::vector<SparsePolynomial>& gens2);

// the given monomials are linearly independent modulo the ideal in degree d
bool independent_mod_ideal(const std::vector<SparsePolynomial>& gens,
                           const std::vector<Exponent>& monos, int degree);

}  // namespace hesscoh

#endif
