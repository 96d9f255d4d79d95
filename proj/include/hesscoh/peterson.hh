#ifndef HESSCOH_PETERSON_HH
#define HESSCOH_PETERSON_HH

#include <map>
#include <string>
#include <vector>

#include "hesscoh/billey.hh"
#include "hesscoh/hessenberg.hh"
#include "hesscoh/polynomial.hh"
#include "hesscoh/rootsys.hh"

namespace hesscoh {

// A class restricted to the fixed-point set: one polynomial in Q[t] per fixed
// point, indexed parallel to the owning basis' point order.
struct LocalizationElement {
  std::vector<SparsePolynomial> values;

  bool operator==(const LocalizationElement& o) const { return values == o.values; }
  LocalizationElement operator*(const LocalizationElement& o) const;
  LocalizationElement operator+(const LocalizationElement& o) const;
  LocalizationElement operator-(const LocalizationElement& o) const;
  LocalizationElement scaled(const Rational& c) const;
  bool is_zero() const;
};

// --- type A -----------------------------------------------------------------

// Peterson fixed-point data for S_n: subsets of [n-1] in (cardinality, lex)
// order with their w_A, v_A, and the full restriction matrix
// p_{v_A}(w_B) = pval[B][A] * t^{|A|}.
class PetersonA {
 public:
  explicit PetersonA(int n);

  int n() const { return n_; }
  int count() const { return static_cast<int>(subsets_.size()); }
  const SubsetA& subset(int idx) const { return subsets_[idx]; }
  const Permutation& wA(int idx) const { return wA_[idx]; }
  const Permutation& vA(int idx) const { return vA_[idx]; }
  int index_of(const std::vector<int>& elems) const;
  const Integer& pval(int B_idx, int A_idx) const { return pval_[B_idx][A_idx]; }

  LocalizationElement basis_class(int A_idx) const;            // p_{v_A}
  LocalizationElement simple_class(int i) const;                // p_{s_i}
  LocalizationElement t_class() const;                          // t
  LocalizationElement one() const;

 private:
  int n_;
  std::vector<SubsetA> subsets_;
  std::vector<Permutation> wA_, vA_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<Integer>> pval_;
};

struct MonkExpansion {
  SparsePolynomial diagonal;            // p_{s_i}(w_A), a polynomial in t
  std::map<std::vector<int>, Rational> off;  // B (|B| = |A|+1, B superset of A) -> c
};

// closed forms for the type A Monk rule
MonkExpansion monk_constants_closed(const PetersonA& P, int i, const SubsetA& A);

// independent oracle: pointwise product + triangular solve in the basis
MonkExpansion monk_oracle(const PetersonA& P, int i, const SubsetA& A);

struct GiambelliResult {
  bool ok;
  LocalizationElement lhs;  // p_{v_A} * prod |A_j|!
  LocalizationElement rhs;  // prod_{i in A} p_{s_i}
};
GiambelliResult giambelli_check(const PetersonA& P, const SubsetA& A);

struct BasisExpansion {
  bool ok = true;
  std::string error;
  // subset elems -> coefficient polynomial in t (zero coefficients omitted)
  std::map<std::vector<int>, SparsePolynomial> coeffs;
};
BasisExpansion expand_in_basis(const PetersonA& P, const LocalizationElement& x);

// --- general Lie type -------------------------------------------------------

// fixed points {w_K : K subset of simple roots}, subsets in (|K|, lex) order
class PetersonGeneral {
 public:
  explicit PetersonGeneral(const WeylGroup& W);

  const WeylGroup& weyl() const { return *W_; }
  int count() const { return static_cast<int>(subsets_.size()); }
  const std::vector<int>& subset(int idx) const { return subsets_[idx]; }
  int wK(int idx) const { return wK_[idx]; }
  int vK(int idx) const { return vK_[idx]; }
  int index_of(const std::vector<int>& K) const;
  const Integer& pval(int J_idx, int K_idx) const { return pval_[J_idx][K_idx]; }

  LocalizationElement basis_class(int K_idx) const;  // p_{v_K}
  LocalizationElement simple_class(int i) const;     // p_{s_i}, 1-based i
  LocalizationElement t_class() const;
  LocalizationElement one() const;

 private:
  const WeylGroup* W_;
  std::vector<std::vector<int>> subsets_;
  std::vector<int> wK_, vK_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<Integer>> pval_;
};

struct MonkGeneralExpansion {
  SparsePolynomial diagonal;                   // p_{s_i}(w_K)
  std::map<std::vector<int>, Rational> off;    // J -> c_{i,K}^J
};

// quotient closed form c = (p_{s_i}(w_J) - p_{s_i}(w_K)) * p_{v_K}(w_J) / p_{v_J}(w_J)
MonkGeneralExpansion monk_general_closed(const PetersonGeneral& P, int i,
                                         const std::vector<int>& K);
MonkGeneralExpansion monk_general_oracle(const PetersonGeneral& P, int i,
                                         const std::vector<int>& K);

struct GiambelliGeneralResult {
  bool ok;
  Rational factor;  // prod over components of |Red(v_comp)| / |comp|!
  LocalizationElement lhs;  // p_{v_K}
  LocalizationElement rhs;  // factor * prod p_{s_i}
};
GiambelliGeneralResult giambelli_general(const PetersonGeneral& P,
                                         const std::vector<int>& K);

}  // namespace hesscoh

#endif
