#include "hesscoh/hessenberg.hh"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hesscoh {

HessenbergFunction::HessenbergFunction(std::vector<int> values)
    : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw std::invalid_argument("hessenberg: empty value list");
  for (int i = 1; i <= n; ++i) {
    if (values_[i - 1] < i)
      throw std::invalid_argument("hessenberg: requires h(i) >= i at i=" + std::to_string(i));
    if (values_[i - 1] > n)
      throw std::invalid_argument("hessenberg: requires h(i) <= n at i=" + std::to_string(i));
    if (i > 1 && values_[i - 1] < values_[i - 2])
      throw std::invalid_argument("hessenberg: requires h nondecreasing at i=" + std::to_string(i));
  }
}

bool HessenbergFunction::is_indecomposable() const {
  for (int i = 1; i < n(); ++i)
    if (values_[i - 1] < i + 1) return false;
  return true;
}

std::string HessenbergFunction::str() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << values_[i];
  return os.str();
}

HessenbergFunction HessenbergFunction::parse(const std::string& s) {
  std::vector<int> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::peterson(int n) {
  std::vector<int> v(n);
  for (int i = 1; i < n; ++i) v[i - 1] = i + 1;
  v[n - 1] = n;
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(n, n));
}

HessenbergFunction HessenbergFunction::minimal(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return HessenbergFunction(std::move(v));
}

bool h_leq(const HessenbergFunction& hp, const HessenbergFunction& h) {
  if (hp.n() != h.n()) throw std::invalid_argument("h_leq: size mismatch");
  for (int i = 1; i <= h.n(); ++i)
    if (hp(i) > h(i)) return false;
  return true;
}

std::vector<std::pair<int, int>> corner_boxes(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= h.n(); ++j) {
    const int i = h(j);
    if (i == j) continue;  // removing the diagonal box would violate h(j) >= j
    if (j == 1 || h(j - 1) < i) out.emplace_back(i, j);
  }
  return out;
}

HessenbergFunction remove_box(const HessenbergFunction& h, int i, int j) {
  if (j < 1 || j > h.n() || h(j) != i)
    throw std::invalid_argument("remove_box: (i,j) is not the lowest box of column j");
  if (i == j || (j > 1 && h(j - 1) == i))
    throw std::invalid_argument("remove_box: (i,j) is not a corner box");
  std::vector<int> v = h.values();
  v[j - 1] -= 1;
  return HessenbergFunction(std::move(v));
}

HessenbergFunction add_box(const HessenbergFunction& h, int i, int j) {
  if (j < 1 || j > h.n() || h(j) + 1 != i)
    throw std::invalid_argument("add_box: (i,j) does not extend column j by one");
  std::vector<int> v = h.values();
  v[j - 1] += 1;
  return HessenbergFunction(v);  // constructor validates the result
}

std::vector<Permutation> fixed_points(const HessenbergFunction& h) {
  std::vector<Permutation> out;
  const int n = h.n();
  for (const Permutation& w : symmetric_group(n)) {
    Permutation wi = w.inverse();
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const int val = w(i) - 1;
      const int pos = (val == 0) ? 0 : wi(val);
      if (pos > h(i)) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;  // symmetric_group is already lex ordered
}

HessenbergFunction minimal_hessenberg(const Permutation& w) {
  const int n = w.n();
  Permutation wi = w.inverse();
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) {
    const int val = w(i) - 1;
    const int pos = (val == 0) ? 0 : wi(val);
    v[i - 1] = std::max(i, pos);
  }
  for (int i = 1; i < n; ++i) v[i] = std::max(v[i], v[i - 1]);
  return HessenbergFunction(std::move(v));
}

static void enumerate_h(int n, int i, std::vector<int>& cur,
                        std::vector<HessenbergFunction>& out) {
  if (i > n) {
    out.push_back(HessenbergFunction(cur));
    return;
  }
  const int lo = std::max(i, i > 1 ? cur[i - 2] : 1);
  for (int v = lo; v <= n; ++v) {
    cur[i - 1] = v;
    enumerate_h(n, i + 1, cur, out);
  }
}

std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> cur(n);
  enumerate_h(n, 1, cur, out);
  return out;
}

// --- subsets ----------------------------------------------------------------

std::vector<std::pair<int, int>> SubsetA::strings() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < elems.size();) {
    size_t j = i;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    out.emplace_back(elems[i], elems[j]);
    i = j + 1;
  }
  return out;
}

bool SubsetA::contains(int i) const {
  return std::binary_search(elems.begin(), elems.end(), i);
}

int SubsetA::head(int i) const {
  for (auto [a, b] : strings())
    if (a <= i && i <= b) return b;
  throw std::invalid_argument("head: element not in subset");
}

int SubsetA::tail(int i) const {
  for (auto [a, b] : strings())
    if (a <= i && i <= b) return a;
  throw std::invalid_argument("tail: element not in subset");
}

std::string SubsetA::str() const {
  if (elems.empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < elems.size(); ++i) os << (i ? "," : "") << elems[i];
  return os.str();
}

Permutation subset_to_vA(const SubsetA& A, int n) {
  Permutation p(n);
  for (int i : A.elems) p = compose(p, Permutation::simple(i, n));
  return p;
}

Permutation subset_to_wA(const SubsetA& A, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (auto [a, b] : A.strings())
    std::reverse(w.begin() + (a - 1), w.begin() + (b + 1));
  return Permutation(std::move(w));
}

std::vector<SubsetA> all_subsets(int n) {
  std::vector<SubsetA> out;
  const int m = n - 1;
  for (int mask = 0; mask < (1 << m); ++mask) {
    SubsetA A;
    for (int i = 1; i <= m; ++i)
      if (mask & (1 << (i - 1))) A.elems.push_back(i);
    out.push_back(std::move(A));
  }
  std::sort(out.begin(), out.end(), [](const SubsetA& a, const SubsetA& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

std::vector<std::pair<SubsetA, Permutation>> peterson_fixed_points(int n) {
  std::vector<std::pair<SubsetA, Permutation>> out;
  for (const SubsetA& A : all_subsets(n)) out.emplace_back(A, subset_to_wA(A, n));
  return out;
}

}  // namespace hesscoh
