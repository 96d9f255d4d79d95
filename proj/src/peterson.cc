#include "hesscoh/peterson.hh"

#include <algorithm>
#include <stdexcept>

namespace hesscoh {

static Context t_ctx() { return VariableContext::t_only(); }

LocalizationElement LocalizationElement::operator*(const LocalizationElement& o) const {
  LocalizationElement r;
  r.values.reserve(values.size());
  for (size_t k = 0; k < values.size(); ++k) r.values.push_back(values[k] * o.values[k]);
  return r;
}

LocalizationElement LocalizationElement::operator+(const LocalizationElement& o) const {
  LocalizationElement r;
  r.values.reserve(values.size());
  for (size_t k = 0; k < values.size(); ++k) r.values.push_back(values[k] + o.values[k]);
  return r;
}

LocalizationElement LocalizationElement::operator-(const LocalizationElement& o) const {
  LocalizationElement r;
  r.values.reserve(values.size());
  for (size_t k = 0; k < values.size(); ++k) r.values.push_back(values[k] - o.values[k]);
  return r;
}

LocalizationElement LocalizationElement::scaled(const Rational& c) const {
  LocalizationElement r;
  r.values.reserve(values.size());
  for (const auto& v : values) r.values.push_back(v.scaled(c));
  return r;
}

bool LocalizationElement::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

static SparsePolynomial t_monomial(const Rational& c, int d) {
  Context ctx = t_ctx();
  return SparsePolynomial::monomial(ctx, Exponent{d}, c);
}

// --- PetersonA ---------------------------------------------------------------

PetersonA::PetersonA(int n) : n_(n) {
  subsets_ = all_subsets(n);
  for (int k = 0; k < count(); ++k) {
    wA_.push_back(subset_to_wA(subsets_[k], n));
    vA_.push_back(subset_to_vA(subsets_[k], n));
    index_.emplace(subsets_[k].elems, k);
  }
  // computed unconditionally: the upper-triangularity p_{v_A}(w_B) = 0 for
  // A not contained in B is a verified property, not an assumption
  pval_.assign(count(), std::vector<Integer>(count()));
  for (int B = 0; B < count(); ++B)
    for (int A = 0; A < count(); ++A)
      pval_[B][A] = billey_pi_typeA(vA_[A], wA_[B]);
}

int PetersonA::index_of(const std::vector<int>& elems) const {
  auto it = index_.find(elems);
  if (it == index_.end()) throw std::invalid_argument("unknown subset");
  return it->second;
}

LocalizationElement PetersonA::basis_class(int A_idx) const {
  LocalizationElement x;
  const int d = static_cast<int>(subsets_[A_idx].elems.size());
  for (int B = 0; B < count(); ++B)
    x.values.push_back(t_monomial(Rational(pval_[B][A_idx]), d));
  return x;
}

LocalizationElement PetersonA::simple_class(int i) const {
  return basis_class(index_of({i}));
}

LocalizationElement PetersonA::t_class() const {
  LocalizationElement x;
  for (int B = 0; B < count(); ++B) x.values.push_back(t_monomial(1, 1));
  return x;
}

LocalizationElement PetersonA::one() const {
  LocalizationElement x;
  for (int B = 0; B < count(); ++B) x.values.push_back(t_monomial(1, 0));
  return x;
}

// --- Monk: closed forms ------------------------------------------------------

static Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

MonkExpansion monk_constants_closed(const PetersonA& P, int i, const SubsetA& A) {
  MonkExpansion out{SparsePolynomial::zero(t_ctx()), {}};
  // diagonal: p_{s_i}(w_A) = (H_A(i)-i+1)(i-T_A(i)+1) t when i in A, else 0
  if (A.contains(i)) {
    long H = A.head(i), T = A.tail(i);
    out.diagonal = t_monomial(Rational((H - i + 1) * (i - T + 1)), 1);
  }
  // off-diagonal: B = A + {j}
  for (int j = 1; j <= P.n() - 1; ++j) {
    if (A.contains(j)) continue;
    SubsetA B = A;
    B.elems.insert(std::upper_bound(B.elems.begin(), B.elems.end(), j), j);
    Rational c(0);
    if (B.contains(i)) {
      const int H = B.head(j), T = B.tail(j);
      if (i >= T && i <= H) {
        if (i >= j && i <= H) {
          c = Rational(H - i + 1) * binom(H - T + 1, j - T);
        } else if (i >= T && i <= j - 1) {
          c = Rational(i - T + 1) * binom(H - T + 1, j - T + 1);
        }
      }
    }
    if (c != 0) out.off.emplace(B.elems, c);
  }
  return out;
}

// --- basis expansion (oracle machinery) --------------------------------------

// exact division by c * t^d; throws if not divisible
static SparsePolynomial divide_by_t_monomial(const SparsePolynomial& p,
                                             const Rational& c, int d) {
  SparsePolynomial out(p.context());
  for (const auto& [e, k] : p.terms()) {
    if (e[0] < d) throw std::runtime_error("division by t-power fails: not in module span");
    out.add_term(Exponent{e[0] - d}, k / c);
  }
  return out;
}

BasisExpansion expand_in_basis(const PetersonA& P, const LocalizationElement& x) {
  BasisExpansion out;
  if (static_cast<int>(x.values.size()) != P.count())
    throw std::invalid_argument("expand_in_basis: wrong number of fixed-point values");
  std::vector<SparsePolynomial> coeff;
  coeff.reserve(P.count());
  // subsets are ordered by (|A|, lex); p_{v_A}(w_B) = 0 unless A subset of B,
  // so the system is triangular in this order
  for (int A = 0; A < P.count(); ++A) {
    SparsePolynomial residual = x.values[A];
    for (int Ap = 0; Ap < A; ++Ap) {
      if (coeff[Ap].is_zero()) continue;
      const Integer& v = P.pval(A, Ap);
      if (v == 0) continue;
      residual -= coeff[Ap] * t_monomial(Rational(v),
                                         static_cast<int>(P.subset(Ap).elems.size()));
    }
    const Integer& diag = P.pval(A, A);
    if (diag == 0) throw std::runtime_error("basis violation: zero diagonal restriction");
    try {
      coeff.push_back(divide_by_t_monomial(residual, Rational(diag),
                                           static_cast<int>(P.subset(A).elems.size())));
    } catch (const std::runtime_error&) {
      out.ok = false;
      out.error = "input not in the module span of the basis classes";
      return out;
    }
  }
  // verify the reconstruction pointwise
  for (int B = 0; B < P.count(); ++B) {
    SparsePolynomial acc = SparsePolynomial::zero(t_ctx());
    for (int A = 0; A < P.count(); ++A) {
      if (coeff[A].is_zero()) continue;
      const Integer& v = P.pval(B, A);
      if (v == 0) continue;
      acc += coeff[A] * t_monomial(Rational(v),
                                   static_cast<int>(P.subset(A).elems.size()));
    }
    if (acc != x.values[B]) {
      out.ok = false;
      out.error = "nonzero residual after triangular solve";
      return out;
    }
  }
  for (int A = 0; A < P.count(); ++A)
    if (!coeff[A].is_zero()) out.coeffs.emplace(P.subset(A).elems, coeff[A]);
  return out;
}

MonkExpansion monk_oracle(const PetersonA& P, int i, const SubsetA& A) {
  LocalizationElement prod =
      P.simple_class(i) * P.basis_class(P.index_of(A.elems));
  BasisExpansion exp = expand_in_basis(P, prod);
  if (!exp.ok) throw std::runtime_error("monk oracle: " + exp.error);
  MonkExpansion out{SparsePolynomial::zero(t_ctx()), {}};
  for (const auto& [elems, c] : exp.coeffs) {
    if (elems == A.elems) {
      out.diagonal = c;
    } else if (elems.size() == A.elems.size() + 1) {
      Rational cc = c.coeff(Exponent{0});
      if (cc != 0) out.off.emplace(elems, cc);
      if (c.degree() > 0)
        throw std::runtime_error("monk oracle: unexpected t-dependence in structure constant");
    } else if (!c.is_zero()) {
      throw std::runtime_error("monk oracle: expansion hits a subset of unexpected size");
    }
  }
  return out;
}

GiambelliResult giambelli_check(const PetersonA& P, const SubsetA& A) {
  Rational fact(1);
  for (auto [a, b] : A.strings())
    for (int k = 2; k <= b - a + 1; ++k) fact *= k;
  GiambelliResult r{false,
                    P.basis_class(P.index_of(A.elems)).scaled(fact),
                    P.one()};
  for (int i : A.elems) r.rhs = r.rhs * P.simple_class(i);
  r.ok = (r.lhs == r.rhs);
  return r;
}

// --- general type -------------------------------------------------------------

PetersonGeneral::PetersonGeneral(const WeylGroup& W) : W_(&W) {
  const int n = W.rank();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> K;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) K.push_back(i);
    subsets_.push_back(std::move(K));
  }
  std::sort(subsets_.begin(), subsets_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (int k = 0; k < count(); ++k) {
    wK_.push_back(W.longest_parabolic(subsets_[k]));
    vK_.push_back(v_K(W, subsets_[k]));
    index_.emplace(subsets_[k], k);
  }
  pval_.assign(count(), std::vector<Integer>(count()));
  for (int J = 0; J < count(); ++J)
    for (int K = 0; K < count(); ++K)
      pval_[J][K] = billey_pi_general(W, vK_[K], wK_[J]);
}

int PetersonGeneral::index_of(const std::vector<int>& K) const {
  auto it = index_.find(K);
  if (it == index_.end()) throw std::invalid_argument("unknown subset of simple roots");
  return it->second;
}

LocalizationElement PetersonGeneral::basis_class(int K_idx) const {
  LocalizationElement x;
  const int d = W_->length(vK_[K_idx]);
  for (int J = 0; J < count(); ++J)
    x.values.push_back(t_monomial(Rational(pval_[J][K_idx]), d));
  return x;
}

LocalizationElement PetersonGeneral::simple_class(int i) const {
  return basis_class(index_of({i}));
}

LocalizationElement PetersonGeneral::t_class() const {
  LocalizationElement x;
  for (int J = 0; J < count(); ++J) x.values.push_back(t_monomial(1, 1));
  return x;
}

LocalizationElement PetersonGeneral::one() const {
  LocalizationElement x;
  for (int J = 0; J < count(); ++J) x.values.push_back(t_monomial(1, 0));
  return x;
}

MonkGeneralExpansion monk_general_closed(const PetersonGeneral& P, int i,
                                         const std::vector<int>& K) {
  const int Kidx = P.index_of(K);
  const int sidx = P.index_of({i});
  MonkGeneralExpansion out{SparsePolynomial::zero(t_ctx()), {}};
  out.diagonal = t_monomial(Rational(P.pval(Kidx, sidx)), 1);
  for (int J = 0; J < P.count(); ++J) {
    const auto& Js = P.subset(J);
    if (Js.size() != K.size() + 1) continue;
    if (!std::includes(Js.begin(), Js.end(), K.begin(), K.end())) continue;
    const Integer& denom = P.pval(J, J);
    if (denom == 0) throw std::logic_error("p_{v_J}(w_J) vanished: basis violation");
    Rational c = Rational(P.pval(J, sidx) - P.pval(Kidx, sidx)) *
                 Rational(P.pval(J, Kidx)) / Rational(denom);
    if (c != 0) out.off.emplace(Js, c);
  }
  return out;
}

MonkGeneralExpansion monk_general_oracle(const PetersonGeneral& P, int i,
                                         const std::vector<int>& K) {
  LocalizationElement prod = P.simple_class(i) * P.basis_class(P.index_of(K));
  // triangular solve in the {p_{v_K}} basis, subsets ordered by (|K|, lex)
  std::vector<SparsePolynomial> coeff;
  coeff.reserve(P.count());
  for (int A = 0; A < P.count(); ++A) {
    SparsePolynomial residual = prod.values[A];
    for (int Ap = 0; Ap < A; ++Ap) {
      const Integer& v = P.pval(A, Ap);
      if (coeff[Ap].is_zero() || v == 0) continue;
      residual -= coeff[Ap] * t_monomial(Rational(v),
                                         P.weyl().length(P.vK(Ap)));
    }
    const Integer& diag = P.pval(A, A);
    if (diag == 0) throw std::logic_error("basis violation: zero diagonal restriction");
    coeff.push_back(divide_by_t_monomial(residual, Rational(diag),
                                         P.weyl().length(P.vK(A))));
  }
  MonkGeneralExpansion out{SparsePolynomial::zero(t_ctx()), {}};
  for (int A = 0; A < P.count(); ++A) {
    if (coeff[A].is_zero()) continue;
    if (P.subset(A) == K) {
      out.diagonal = coeff[A];
    } else if (P.subset(A).size() == K.size() + 1) {
      out.off.emplace(P.subset(A), coeff[A].coeff(Exponent{0}));
    } else {
      throw std::runtime_error("monk general oracle: unexpected expansion support");
    }
  }
  return out;
}

GiambelliGeneralResult giambelli_general(const PetersonGeneral& P,
                                         const std::vector<int>& K) {
  const WeylGroup& W = P.weyl();
  Rational factor(1);
  for (const auto& comp : connected_components(W.datum(), K)) {
    int v_comp = v_K(W, comp);
    Rational kfact(1);
    for (size_t k = 2; k <= comp.size(); ++k) kfact *= static_cast<long>(k);
    factor *= Rational(W.count_reduced_words(v_comp)) / kfact;
  }
  GiambelliGeneralResult r{false, factor, P.basis_class(P.index_of(K)), P.one()};
  for (int i : K) r.rhs = r.rhs * P.simple_class(i);
  r.rhs = r.rhs.scaled(factor);
  r.ok = (r.lhs == r.rhs);
  return r;
}

}  // namespace hesscoh
