#include "hesscoh/presentation.hh"

#include <algorithm>

#include "hesscoh/billey.hh"
#include <sstream>
#include <stdexcept>

namespace hesscoh {

SparsePolynomial g_poly(int j, int n, bool with_t) {
  Context ctx = VariableContext::x_vars(n, with_t);
  SparsePolynomial g(ctx);
  for (int k = 1; k <= j; ++k) {
    g += SparsePolynomial::variable(ctx, k - 1);
    if (with_t) g -= SparsePolynomial::variable(ctx, n).scaled(Rational(k));
  }
  return g;
}

SparsePolynomial f_ij(int i, int j, int n, bool with_t) {
  if (j < 1 || i < j || i > n) throw std::out_of_range("f_ij: need 1 <= j <= i <= n");
  Context ctx = VariableContext::x_vars(n, with_t);
  // table[d][jj]: f_{jj+d, jj}; build along diagonals d = i - j
  std::vector<std::vector<SparsePolynomial>> table;
  table.emplace_back();
  for (int jj = 1; jj <= n; ++jj) table[0].push_back(g_poly(jj, n, with_t));
  for (int d = 1; d <= i - j; ++d) {
    table.emplace_back();
    for (int jj = 1; jj + d <= n; ++jj) {
      const int ii = jj + d;
      SparsePolynomial lin = SparsePolynomial::variable(ctx, jj - 1) -
                             SparsePolynomial::variable(ctx, ii - 1);
      if (with_t) lin -= SparsePolynomial::variable(ctx, n);
      SparsePolynomial f = lin * table[d - 1][jj - 1];  // (x_j - x_i - t) f_{i-1,j}
      if (jj >= 2) f += table[d][jj - 2];               // f_{i-1,j-1}, same diagonal
      table[d].push_back(std::move(f));
    }
  }
  return table[i - j][j - 1];
}

IdealPresentation ideal_for(const HessenbergFunction& h, bool with_t) {
  IdealPresentation I;
  I.ctx = VariableContext::x_vars(h.n(), with_t);
  for (int j = 1; j <= h.n(); ++j) I.gens.push_back(f_ij(h(j), j, h.n(), with_t));
  I.provenance = "recursive generators for h=" + h.str();
  return I;
}

IdealPresentation flag_ideal(int n, bool with_t) {
  IdealPresentation I;
  I.ctx = VariableContext::x_vars(n, with_t);
  std::vector<int> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = i;
  for (int i = 1; i <= n; ++i) {
    SparsePolynomial gen = elementary_symmetric(I.ctx, i, xs);
    if (with_t) {
      // e_i(1t, 2t, ..., nt) = e_i(1..n) t^i
      Rational c(0);
      for (const Exponent& sel : monomials_of_degree(n, i)) {
        bool squarefree = true;
        Rational prod(1);
        for (int k = 0; k < n; ++k) {
          if (sel[k] > 1) { squarefree = false; break; }
          if (sel[k] == 1) prod *= (k + 1);
        }
        if (squarefree) c += prod;
      }
      Exponent e(n + 1, 0);
      e[n] = i;
      gen -= SparsePolynomial::monomial(I.ctx, e, c);
    }
    I.gens.push_back(std::move(gen));
  }
  I.provenance = "flag relations";
  return I;
}

IdealPresentation peterson_quadratic_ideal(int n, bool with_t) {
  IdealPresentation I;
  I.ctx = VariableContext::x_vars(n, with_t);
  std::vector<SparsePolynomial> g;
  g.push_back(SparsePolynomial::zero(I.ctx));  // g_0 = 0
  for (int j = 1; j <= n; ++j) g.push_back(g_poly(j, n, with_t));
  Rational half(1, 2);
  for (int k = 1; k <= n - 1; ++k) {
    SparsePolynomial mid = g[k] - g[k - 1].scaled(half);
    if (k + 1 <= n - 1) mid -= g[k + 1].scaled(half);  // z_n = 0
    if (with_t) mid -= SparsePolynomial::variable(I.ctx, n);
    I.gens.push_back(g[k] * mid);
  }
  I.gens.push_back(g[n]);
  I.provenance = "quadratic relations";
  return I;
}

SparsePolynomial restrict_at(const SparsePolynomial& p, const Permutation& w) {
  const Context& src = p.context();
  Context tgt = VariableContext::t_only();
  std::vector<SparsePolynomial> images;
  for (int v = 0; v < src->size(); ++v) {
    const std::string& nm = src->name(v);
    if (nm == "t") {
      images.push_back(SparsePolynomial::variable(tgt, 0));
    } else if (nm[0] == 'x') {
      int i = std::stoi(nm.substr(1));
      images.push_back(SparsePolynomial::variable(tgt, 0).scaled(Rational(w(i))));
    } else {
      throw std::invalid_argument("restrict_at expects variables x_i and t");
    }
  }
  return p.substitute(images, tgt);
}

VanishingReport verify_vanishing(const HessenbergFunction& h) {
  VanishingReport rep;
  IdealPresentation I = ideal_for(h, /*with_t=*/true);
  std::vector<Permutation> pts = fixed_points(h);
  for (size_t gi = 0; gi < I.gens.size(); ++gi) {
    for (const Permutation& w : pts) {
      ++rep.checks;
      if (!restrict_at(I.gens[gi], w).is_zero() && rep.pass) {
        rep.pass = false;
        std::ostringstream os;
        os << "generator " << gi + 1 << " at w=" << w.str();
        rep.witness = os.str();
      }
    }
  }
  return rep;
}

HilbertSeriesPoly expected_poincare(const HessenbergFunction& h) {
  HilbertSeriesPoly series;
  series.coeffs = {1};
  for (int j = 1; j <= h.n(); ++j) {
    HilbertSeriesPoly factor;
    factor.coeffs.assign(h(j) - j + 1, 1);
    series = series * factor;
  }
  return series;
}

HilbertReport hilbert_check(const HessenbergFunction& h) {
  HilbertReport rep;
  HilbertSeriesPoly want = expected_poincare(h);
  want.trim();
  const int top = static_cast<int>(want.coeffs.size()) - 1;
  rep.bound = top + 1;  // one spare degree: must be 0 there
  IdealPresentation I = ideal_for(h, /*with_t=*/false);
  rep.dims = hilbert_function(I.gens, rep.bound);
  rep.expected = want.expand(rep.bound);
  rep.pass = (rep.dims == rep.expected);
  if (rep.pass) {
    rep.note = "quotient Hilbert function matches the product formula; the "
               "generators form a regular sequence";
  }
  return rep;
}

HilbertReport is_regular_sequence(const std::vector<SparsePolynomial>& gens,
                                  int extra_degrees) {
  HilbertReport rep;
  if (gens.empty()) return rep;
  const int m = gens[0].context()->size();
  HilbertSeriesPoly numer;
  numer.coeffs = {1};
  int degsum = 0;
  for (const auto& g : gens) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1) {
      rep.pass = false;
      rep.note = "generators must be homogeneous of positive degree";
      return rep;
    }
    HilbertSeriesPoly factor;
    factor.coeffs.assign(g.degree(), 1);  // (1 - q^{2d})/(1 - q^2)
    numer = numer * factor;
    degsum += g.degree() - 1;
  }
  numer.denom_exp = m - static_cast<int>(gens.size());
  if (numer.denom_exp < 0) {
    rep.pass = false;
    rep.note = "more generators than variables cannot form a regular sequence";
    return rep;
  }
  rep.bound = degsum + extra_degrees;
  rep.dims = hilbert_function(gens, rep.bound);
  rep.expected = numer.expand(rep.bound);
  rep.pass = (rep.dims == rep.expected);
  if (rep.pass && static_cast<int>(gens.size()) == m) {
    // finite-dimensionality: a zero graded piece kills all higher degrees
    bool has_zero = false;
    for (long d : rep.dims)
      if (d == 0) has_zero = true;
    if (!has_zero) {
      rep.pass = false;
      rep.note = "degree bound too small to certify finite-dimensionality";
    }
  }
  return rep;
}

std::vector<Exponent> monomial_basis(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= h(i) - i; ++e) {
      cur[i - 1] = e;
      self(self, i + 1);
    }
    cur[i - 1] = 0;
  };
  rec(rec, 1);
  return out;
}

MonomialBasisReport verify_monomial_basis(const HessenbergFunction& h) {
  MonomialBasisReport rep;
  std::vector<Exponent> basis = monomial_basis(h);
  rep.cardinality = static_cast<long>(basis.size());
  HilbertReport hil = hilbert_check(h);
  if (!hil.pass) {
    rep.pass = false;
    rep.witness = "Hilbert function mismatch";
    return rep;
  }
  long total = 0;
  for (long d : hil.dims) total += d;
  if (total != rep.cardinality) {
    rep.pass = false;
    rep.witness = "cardinality differs from the quotient's total dimension";
    return rep;
  }
  IdealPresentation I = ideal_for(h, /*with_t=*/false);
  // per-degree: counts must match the quotient dimension and the monomials
  // must stay independent modulo the ideal
  std::map<int, std::vector<Exponent>> by_degree;
  for (const Exponent& e : basis) {
    int d = 0;
    for (int x : e) d += x;
    by_degree[d].push_back(e);
  }
  for (int d = 0; d <= hil.bound; ++d) {
    auto it = by_degree.find(d);
    long count = (it == by_degree.end()) ? 0 : static_cast<long>(it->second.size());
    if (count != hil.dims[d]) {
      rep.pass = false;
      rep.witness = "degree " + std::to_string(2 * d) + " count mismatch";
      return rep;
    }
    if (count > 0 && !independent_mod_ideal(I.gens, it->second, d)) {
      rep.pass = false;
      rep.witness = "monomials dependent modulo the ideal in degree " + std::to_string(2 * d);
      return rep;
    }
  }
  return rep;
}

PresentationReport peterson_presentation_check(int n) {
  PresentationReport rep;
  HessenbergFunction h = HessenbergFunction::peterson(n);
  auto note = [&](bool ok, const std::string& what) {
    rep.pass = rep.pass && ok;
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  };

  // (a) equivariant ideal equality (mutual graded membership)
  IdealPresentation quad = peterson_quadratic_ideal(n, /*with_t=*/true);
  IdealPresentation rec = ideal_for(h, /*with_t=*/true);
  IdealEqualityReport eq = ideals_equal(quad.gens, rec.gens);
  note(eq.equal, "quadratic ideal equals the recursive-generator ideal" +
                     (eq.equal ? "" : " (" + eq.witness + ")"));

  // (b) ordinary Hilbert function: (1+q^2)^{n-1}
  HilbertSeriesPoly pet;
  pet.coeffs = {1};
  HilbertSeriesPoly onepq;
  onepq.coeffs = {1, 1};
  for (int k = 1; k < n; ++k) pet = pet * onepq;
  {
    IdealPresentation ord = ideal_for(h, /*with_t=*/false);
    int bound = n;  // top degree n-1 plus one spare
    std::vector<long> dims = hilbert_function(ord.gens, bound);
    note(dims == pet.expand(bound), "ordinary quotient Hilbert function is (1+q^2)^" +
                                        std::to_string(n - 1));
  }

  // (c) equivariant Hilbert function: (1+q^2)^{n-1} / (1-q^2)
  {
    int bound = n + 1;
    std::vector<long> dims = hilbert_function(rec.gens, bound);
    HilbertSeriesPoly eqv = pet;
    eqv.denom_exp = 1;
    note(dims == eqv.expand(bound),
         "equivariant quotient Hilbert function is (1+q^2)^" + std::to_string(n - 1) +
             "/(1-q^2)");
  }

  // (d) same statements in the z-presentation itself
  {
    Context zctx = VariableContext::z_vars(n - 1, /*with_t=*/true);
    std::vector<SparsePolynomial> zgens;
    Rational half(1, 2);
    for (int k = 1; k <= n - 1; ++k) {
      SparsePolynomial zk = SparsePolynomial::variable(zctx, k - 1);
      SparsePolynomial mid = zk;
      if (k - 1 >= 1) mid -= SparsePolynomial::variable(zctx, k - 2).scaled(half);
      if (k + 1 <= n - 1) mid -= SparsePolynomial::variable(zctx, k).scaled(half);
      mid -= SparsePolynomial::variable(zctx, n - 1);  // t
      zgens.push_back(zk * mid);
    }
    int bound = n + 1;
    std::vector<long> dims = hilbert_function(zgens, bound);
    HilbertSeriesPoly eqv = pet;
    eqv.denom_exp = 1;
    note(dims == eqv.expand(bound),
         "z-variable quadratic presentation has the equivariant Hilbert function");
  }
  return rep;
}

PresentationReport peterson_presentation_general(const CartanDatum& datum) {
  PresentationReport rep;
  auto note = [&](bool ok, const std::string& what) {
    rep.pass = rep.pass && ok;
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  };
  const int n = datum.rank;

  // (a) localization vanishing of the quadratic relations; needs the Weyl
  // group and the Peterson point/class machinery
  {
    WeylGroup W(datum);
    // use the peterson header machinery indirectly to avoid a dependency
    // cycle: evaluate p_{s_i}(w_K) directly via the pi-specialized formula
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> K;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) K.push_back(i);
      subsets.push_back(std::move(K));
    }
    bool ok = true;
    std::string witness;
    for (const auto& K : subsets) {
      int wK = W.longest_parabolic(K);
      std::vector<Integer> p(n + 1);
      for (int i = 1; i <= n; ++i) p[i] = billey_pi_general(W, W.simple(i), wK);
      for (int i = 1; i <= n && ok; ++i) {
        // sum_j <a_i,a_j> p_i p_j - 2 p_i  (in units of t^2, t^1 matched)
        Integer acc(0);
        for (int j = 1; j <= n; ++j) acc += datum.a[i - 1][j - 1] * p[i] * p[j];
        acc -= 2 * p[i];
        if (acc != 0) {
          ok = false;
          std::ostringstream os;
          os << "relation " << i << " at the point of K={";
          for (size_t s = 0; s < K.size(); ++s) os << (s ? "," : "") << K[s];
          os << "}";
          witness = os.str();
        }
      }
      if (!ok) break;
    }
    note(ok, "quadratic relations vanish at every fixed point" +
                 (ok ? "" : " (" + witness + ")"));
  }

  // (b) ordinary quotient Hilbert function equals (1+q^2)^rank
  {
    Context ctx = VariableContext::omega_vars(n, /*with_t=*/false);
    std::vector<SparsePolynomial> gens;
    for (int i = 1; i <= n; ++i) {
      SparsePolynomial rel(ctx);
      for (int j = 1; j <= n; ++j) {
        if (datum.a[i - 1][j - 1] == 0) continue;
        rel += (SparsePolynomial::variable(ctx, i - 1) *
                SparsePolynomial::variable(ctx, j - 1))
                   .scaled(Rational(datum.a[i - 1][j - 1]));
      }
      gens.push_back(std::move(rel));
    }
    HilbertSeriesPoly want;
    want.coeffs = {1};
    HilbertSeriesPoly onepq;
    onepq.coeffs = {1, 1};
    for (int k = 0; k < n; ++k) want = want * onepq;
    int bound = n + 1;
    std::vector<long> dims = hilbert_function(gens, bound);
    note(dims == want.expand(bound),
         "ordinary quotient Hilbert function is (1+q^2)^" + std::to_string(n));
  }
  return rep;
}

ContinuedFractionResult continued_fraction_check(const Rational& c, int m_max) {
  ContinuedFractionResult res;
  res.xs.push_back(Rational(1));
  for (int m = 1; m <= m_max; ++m) {
    const Rational& prev = res.xs.back();
    if (prev == 0) {
      res.failed_at = m;
      res.all_positive = false;
      return res;
    }
    res.xs.push_back(Rational(1) - c / prev);
    if (res.xs.back() <= 0) res.all_positive = false;
  }
  return res;
}

}  // namespace hesscoh
