#include "hesscoh/billey.hh"

#include <sstream>
#include <stdexcept>

namespace hesscoh {

// roots r(i,b) for all positions i along the word b, as (plus, minus) index
// pairs: r = t_plus - t_minus.  Uses prefix products u_i = s_{b_1}..s_{b_{i-1}}.
static std::vector<std::pair<int, int>> roots_along_word_typeA(
    const std::vector<int>& b, int n) {
  std::vector<std::pair<int, int>> roots;
  roots.reserve(b.size());
  Permutation prefix(n);
  for (size_t i = 0; i < b.size(); ++i) {
    const int k = b[i];
    roots.emplace_back(prefix(k + 1), prefix(k));
    prefix = compose(prefix, Permutation::simple(k, n));
  }
  return roots;
}

SparsePolynomial billey_restrict_typeA_word(const Permutation& v,
                                            const std::vector<int>& b, int n) {
  if (!is_reduced_word(b, n)) throw std::invalid_argument("word is not reduced");
  auto roots = roots_along_word_typeA(b, n);
  Context ctx = VariableContext::t_indexed(n);
  SparsePolynomial total(ctx);
  for (const auto& occ : reduced_subword_occurrences(v, b)) {
    SparsePolynomial prod = SparsePolynomial::constant(ctx, 1);
    for (int idx : occ) {
      auto [p, m] = roots[idx - 1];
      SparsePolynomial root =
          SparsePolynomial::variable(ctx, p - 1) - SparsePolynomial::variable(ctx, m - 1);
      prod = prod * root;
    }
    total += prod;
  }
  return total;
}

SparsePolynomial billey_restrict_typeA(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("billey: size mismatch");
  return billey_restrict_typeA_word(v, w.reduced_word(), w.n());
}

Integer billey_pi_typeA(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("billey: size mismatch");
  std::vector<int> b = w.reduced_word();
  auto roots = roots_along_word_typeA(b, w.n());
  Integer total(0);
  for (const auto& occ : reduced_subword_occurrences(v, b)) {
    Integer prod(1);
    for (int idx : occ) prod *= roots[idx - 1].first - roots[idx - 1].second;
    total += prod;
  }
  return total;
}

SparsePolynomial tau_restrict(int i, const Permutation& w) {
  Context ctx = VariableContext::t_indexed(w.n());
  return SparsePolynomial::variable(ctx, w(i) - 1);
}

SparsePolynomial t_class_restrict(int i, int n) {
  Context ctx = VariableContext::t_indexed(n);
  return SparsePolynomial::variable(ctx, i - 1);
}

SparsePolynomial sigma_simple_closed_restrict(int k, const Permutation& w) {
  Context ctx = VariableContext::t_indexed(w.n());
  SparsePolynomial total(ctx);
  for (int j = 1; j <= k; ++j) total += tau_restrict(j, w) - t_class_restrict(j, w.n());
  return total;
}

FlagRelationReport verify_flag_relations(int n) {
  FlagRelationReport rep;
  Context ctx = VariableContext::t_indexed(n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (const Permutation& w : symmetric_group(n)) {
    std::vector<int> permuted(n);
    for (int i = 1; i <= n; ++i) permuted[i - 1] = w(i) - 1;
    for (int i = 1; i <= n; ++i) {
      SparsePolynomial diff =
          elementary_symmetric(ctx, i, permuted) - elementary_symmetric(ctx, i, all);
      ++rep.checks;
      if (!diff.is_zero() && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "e_" << i << " at w=" << w.str();
        rep.witness = os.str();
      }
    }
  }
  return rep;
}

// ---- general type ----------------------------------------------------------

std::vector<std::vector<int>> reduced_subword_occurrences(
    const WeylGroup& W, int v, const std::vector<int>& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  // rem = (prefix chosen so far)^{-1} * v; take a letter iff it is a left
  // descent of rem
  auto dfs = [&](auto&& self, size_t pos, int rem) -> void {
    if (W.length(rem) == 0) {
      out.push_back(chosen);
      return;
    }
    if (pos >= b.size() || static_cast<int>(b.size() - pos) < W.length(rem)) return;
    const int i = b[pos];
    int next = W.mult(W.simple(i), rem);
    if (W.length(next) == W.length(rem) - 1) {
      chosen.push_back(static_cast<int>(pos) + 1);
      self(self, pos + 1, next);
      chosen.pop_back();
    }
    self(self, pos + 1, rem);
  };
  dfs(dfs, 0, v);
  return out;
}

// roots along the canonical word of w, as coordinate vectors in alpha basis
static std::vector<std::vector<int>> roots_along_word_general(
    const WeylGroup& W, const std::vector<int>& b) {
  std::vector<std::vector<int>> roots;
  roots.reserve(b.size());
  WeylElement prefix = weyl_identity(W.rank());
  for (size_t i = 0; i < b.size(); ++i) {
    std::vector<int> alpha(W.rank(), 0);
    alpha[b[i] - 1] = 1;
    roots.push_back(weyl_apply(prefix, alpha));
    prefix = weyl_mult(prefix, weyl_simple(W.datum(), b[i] - 1));
  }
  return roots;
}

SparsePolynomial billey_restrict_general(const WeylGroup& W, int v, int w) {
  const std::vector<int>& b = W.word(w);
  auto roots = roots_along_word_general(W, b);
  Context ctx = VariableContext::alpha_vars(W.rank());
  SparsePolynomial total(ctx);
  for (const auto& occ : reduced_subword_occurrences(W, v, b)) {
    SparsePolynomial prod = SparsePolynomial::constant(ctx, 1);
    for (int idx : occ) {
      SparsePolynomial root(ctx);
      for (int r = 0; r < W.rank(); ++r) {
        if (roots[idx - 1][r] != 0)
          root += SparsePolynomial::variable(ctx, r).scaled(Rational(roots[idx - 1][r]));
      }
      prod = prod * root;
    }
    total += prod;
  }
  return total;
}

Integer billey_pi_general(const WeylGroup& W, int v, int w) {
  const std::vector<int>& b = W.word(w);
  auto roots = roots_along_word_general(W, b);
  Integer total(0);
  for (const auto& occ : reduced_subword_occurrences(W, v, b)) {
    Integer prod(1);
    for (int idx : occ) {
      long s = 0;
      for (int c : roots[idx - 1]) s += c;
      prod *= s;
    }
    total += prod;
  }
  return total;
}

}  // namespace hesscoh
