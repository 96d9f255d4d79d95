#include "hesscoh/macaulay.hh"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "hesscoh/parallel.hh"

namespace hesscoh {

std::vector<Exponent> monomials_of_degree(int m, int d) {
  std::vector<Exponent> out;
  Exponent cur(m, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == m - 1) {
      cur[var] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

namespace {

// sparse integer row, entries sorted by column, gcd-free, positive lead
using Row = std::vector<std::pair<int, Integer>>;

void normalize(Row& r) {
  if (r.empty()) return;
  Integer g(0);
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = r.front().second < 0;
  if (g != 1 || flip) {
    if (flip) g = -g;
    for (auto& [c, v] : r) v /= g;
  }
}

// r <- r * a - pivot * b, where a, b chosen to cancel the common lead column
void eliminate(Row& r, const Row& pivot) {
  Integer a = pivot.front().second;
  Integer b = r.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  Row out;
  out.reserve(r.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < pivot.size()) {
    if (j >= pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
      out.emplace_back(r[i].first, r[i].second * a);
      ++i;
    } else if (i >= r.size() || pivot[j].first < r[i].first) {
      out.emplace_back(pivot[j].first, -pivot[j].second * b);
      ++j;
    } else {
      Integer v = r[i].second * a - pivot[j].second * b;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
  normalize(r);
}

long rank_of_rows(std::vector<Row> rows) {
  std::unordered_map<int, Row> pivots;
  long rank = 0;
  for (auto& row : rows) {
    normalize(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      eliminate(row, it->second);
    }
    if (!row.empty()) {
      ++rank;
      pivots.emplace(row.front().first, std::move(row));
    }
  }
  return rank;
}

Row row_from_poly(const SparsePolynomial& p,
                  const std::map<Exponent, int>& colindex) {
  // clear denominators
  Integer denlcm(1);
  for (const auto& [e, c] : p.terms())
    mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den_mpz_t());
  Row r;
  r.reserve(p.num_terms());
  for (const auto& [e, c] : p.terms()) {
    Rational scaled = c * denlcm;
    r.emplace_back(colindex.at(e), Integer(scaled.get_num()));
  }
  std::sort(r.begin(), r.end());
  return r;
}

// rows of the degree-d piece of the ideal, plus optional extra polynomials
// (must be homogeneous of degree d)
std::vector<Row> degree_rows(const std::vector<SparsePolynomial>& gens, int degree,
                             const std::vector<SparsePolynomial>& extra,
                             const std::map<Exponent, int>& colindex, int m) {
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int dg = g.degree();
    if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
    if (dg > degree || dg < 0) continue;
    for (const Exponent& mono : monomials_of_degree(m, degree - dg)) {
      SparsePolynomial prod = g * SparsePolynomial::monomial(g.context(), mono, 1);
      rows.push_back(row_from_poly(prod, colindex));
    }
  }
  for (const auto& p : extra) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() != degree)
      throw std::invalid_argument("extra rows must be homogeneous of the target degree");
    rows.push_back(row_from_poly(p, colindex));
  }
  return rows;
}

int var_count(const std::vector<SparsePolynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  return gens[0].context()->size();
}

long rank_impl(const std::vector<SparsePolynomial>& gens, int degree,
               const std::vector<SparsePolynomial>& extra) {
  const int m = var_count(gens.empty() ? extra : gens);
  std::map<Exponent, int> colindex;
  int idx = 0;
  for (const Exponent& e : monomials_of_degree(m, degree)) colindex.emplace(e, idx++);
  return rank_of_rows(degree_rows(gens, degree, extra, colindex, m));
}

}  // namespace

long macaulay_rank(const std::vector<SparsePolynomial>& gens, int degree) {
  return rank_impl(gens, degree, {});
}

long quotient_dimension(const std::vector<SparsePolynomial>& gens, int degree) {
  const int m = var_count(gens);
  long total = static_cast<long>(monomials_of_degree(m, degree).size());
  return total - macaulay_rank(gens, degree);
}

std::vector<long> hilbert_function(const std::vector<SparsePolynomial>& gens,
                                   int up_to) {
  std::vector<long> dims(up_to + 1, 0);
  parallel_for(up_to + 1, [&](int d) { dims[d] = quotient_dimension(gens, d); });
  return dims;
}

bool ideal_member(const SparsePolynomial& p, const std::vector<SparsePolynomial>& gens) {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous())
    throw std::invalid_argument("membership requires a homogeneous polynomial");
  const int d = p.degree();
  return rank_impl(gens, d, {p}) == rank_impl(gens, d, {});
}

IdealEqualityReport ideals_equal(const std::vector<SparsePolynomial>& gens1,
                                 const std::vector<SparsePolynomial>& gens2) {
  IdealEqualityReport rep;
  for (size_t k = 0; k < gens1.size(); ++k) {
    if (!ideal_member(gens1[k], gens2)) {
      rep.equal = false;
      rep.witness = "generator " + std::to_string(k + 1) +
                    " of the first ideal is not in the second";
      return rep;
    }
  }
  for (size_t k = 0; k < gens2.size(); ++k) {
    if (!ideal_member(gens2[k], gens1)) {
      rep.equal = false;
      rep.witness = "generator " + std::to_string(k + 1) +
                    " of the second ideal is not in the first";
      return rep;
    }
  }
  return rep;
}

bool independent_mod_ideal(const std::vector<SparsePolynomial>& gens,
                           const std::vector<Exponent>& monos, int degree) {
  if (monos.empty()) return true;
  const Context& ctx = gens[0].context();
  std::vector<SparsePolynomial> extra;
  for (const Exponent& e : monos)
    extra.push_back(SparsePolynomial::monomial(ctx, e, 1));
  long base = rank_impl(gens, degree, {});
  long with = rank_impl(gens, degree, extra);
  return with == base + static_cast<long>(monos.size());
}

}  // namespace hesscoh
