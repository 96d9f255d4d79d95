#ifndef HESSCOH_BILLEY_HH
#define HESSCOH_BILLEY_HH

#include <string>
#include <vector>

#include "hesscoh/permutation.hh"
#include "hesscoh/polynomial.hh"
#include "hesscoh/rootsys.hh"

namespace hesscoh {

// --- type A path: S_n, values in Q[t_1..t_n] -------------------------------

// restriction of the equivariant Schubert class of v at the fixed point w:
// sum over reduced subword occurrences of v in a reduced word b of w of the
// products of positive roots r(i,b) = s_{b_1}...s_{b_{i-1}}(alpha_{b_i}),
// with alpha_k = t_{k+1} - t_k
SparsePolynomial billey_restrict_typeA(const Permutation& v, const Permutation& w);

// same, against an explicitly chosen reduced word of w
SparsePolynomial billey_restrict_typeA_word(const Permutation& v,
                                            const std::vector<int>& b, int n);

// value after the one-parameter specialization t_i -> i*t: the restriction
// becomes (returned integer) * t^{l(v)}
Integer billey_pi_typeA(const Permutation& v, const Permutation& w);

// tau_i | w = t_{w(i)}
SparsePolynomial tau_restrict(int i, const Permutation& w);
// t_i | w = t_i
SparsePolynomial t_class_restrict(int i, int n);

// restriction at w of the closed form sigma_{s_k} = sum_{j<=k}(tau_j - t_j)
SparsePolynomial sigma_simple_closed_restrict(int k, const Permutation& w);

struct FlagRelationReport {
  bool pass = true;
  int checks = 0;
  std::string witness;  // first failing (i, w) if any
};

// e_i(t_{w(1)},...,t_{w(n)}) == e_i(t_1,...,t_n) for all i in [n], w in S_n
FlagRelationReport verify_flag_relations(int n);

// --- general type: values in Q[a_1..a_n] (simple-root coordinates) ---------

std::vector<std::vector<int>> reduced_subword_occurrences(
    const WeylGroup& W, int v, const std::vector<int>& b);

SparsePolynomial billey_restrict_general(const WeylGroup& W, int v, int w);

// value after alpha_i -> t for all i: (returned integer) * t^{l(v)}
Integer billey_pi_general(const WeylGroup& W, int v, int w);

}  // namespace hesscoh

#endif
