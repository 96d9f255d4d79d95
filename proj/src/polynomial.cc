#include "hesscoh/polynomial.hh"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hesscoh {

VariableContext::VariableContext(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

int VariableContext::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

static Context make_ctx(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

static std::vector<std::string> numbered(const std::string& stem, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

Context VariableContext::t_only() { return make_ctx({"t"}); }
Context VariableContext::t_indexed(int n) { return make_ctx(numbered("t", n)); }
Context VariableContext::x_vars(int n, bool with_t) {
  auto names = numbered("x", n);
  if (with_t) names.push_back("t");
  return make_ctx(std::move(names));
}
Context VariableContext::alpha_vars(int n) { return make_ctx(numbered("a", n)); }
Context VariableContext::omega_vars(int n, bool with_t) {
  auto names = numbered("w", n);
  if (with_t) names.push_back("t");
  return make_ctx(std::move(names));
}
Context VariableContext::z_vars(int n, bool with_t) {
  auto names = numbered("z", n);
  if (with_t) names.push_back("t");
  return make_ctx(std::move(names));
}

SparsePolynomial::SparsePolynomial(Context ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("null variable context");
}

SparsePolynomial SparsePolynomial::constant(Context ctx, const Rational& c) {
  SparsePolynomial p(std::move(ctx));
  if (c != 0) p.terms_.emplace(Exponent(p.ctx_->size(), 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(Context ctx, int var_index, int power) {
  SparsePolynomial p(std::move(ctx));
  if (var_index < 0 || var_index >= p.ctx_->size())
    throw std::out_of_range("variable index out of range");
  Exponent e(p.ctx_->size(), 0);
  e[var_index] = power;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

SparsePolynomial SparsePolynomial::monomial(Context ctx, Exponent exp, const Rational& c) {
  SparsePolynomial p(std::move(ctx));
  if (static_cast<int>(exp.size()) != p.ctx_->size())
    throw std::invalid_argument("exponent length mismatch");
  if (c != 0) p.terms_.emplace(std::move(exp), c);
  return p;
}

int SparsePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool SparsePolynomial::is_homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d == -2) d = s;
    else if (s != d) return false;
  }
  return true;
}

Rational SparsePolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void check_same_context(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (!(*a.context() == *b.context()))
    throw std::invalid_argument("variable context mismatch");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  check_same_context(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  check_same_context(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  r += o;
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  r -= o;
  return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
  SparsePolynomial r(ctx_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  check_same_context(*this, o);
  SparsePolynomial r(ctx_);
  const int m = ctx_->size();
  Exponent e(m);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < m; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  return *ctx_ == *o.ctx_ && terms_ == o.terms_;
}

SparsePolynomial SparsePolynomial::substitute(
    const std::vector<SparsePolynomial>& images, Context target_ctx) const {
  if (static_cast<int>(images.size()) != ctx_->size())
    throw std::invalid_argument("substitute: need one image per variable");
  for (const auto& im : images)
    if (!(*im.context() == *target_ctx))
      throw std::invalid_argument("substitute: image context mismatch");
  SparsePolynomial result(target_ctx);
  for (const auto& [e, c] : terms_) {
    SparsePolynomial term = SparsePolynomial::constant(target_ctx, c);
    for (int i = 0; i < ctx_->size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    result += term;
  }
  return result;
}

SparsePolynomial SparsePolynomial::specialize_pi() const {
  // classify variables: t<i> specializes to i*t, everything else passes through
  const int m = ctx_->size();
  std::vector<long> t_index(m, 0);       // i for "t<i>", else 0
  std::vector<std::string> pass_names;
  std::vector<int> pass_pos(m, -1);
  for (int v = 0; v < m; ++v) {
    const std::string& nm = ctx_->name(v);
    if (nm.size() > 1 && nm[0] == 't' &&
        nm.find_first_not_of("0123456789", 1) == std::string::npos) {
      t_index[v] = std::stol(nm.substr(1));
    } else {
      pass_pos[v] = static_cast<int>(pass_names.size());
      pass_names.push_back(nm);
    }
  }
  int t_slot;
  auto it = std::find(pass_names.begin(), pass_names.end(), "t");
  if (it == pass_names.end()) {
    t_slot = static_cast<int>(pass_names.size());
    pass_names.push_back("t");
  } else {
    t_slot = static_cast<int>(it - pass_names.begin());
  }
  Context tgt = std::make_shared<const VariableContext>(pass_names);

  SparsePolynomial result(tgt);
  Exponent e2(tgt->size());
  for (const auto& [e, c] : terms_) {
    std::fill(e2.begin(), e2.end(), 0);
    Rational factor = c;
    for (int v = 0; v < m; ++v) {
      if (e[v] == 0) continue;
      if (t_index[v] > 0) {
        e2[t_slot] += e[v];
        Rational base(t_index[v]);
        for (int k = 0; k < e[v]; ++k) factor *= base;
      } else {
        e2[pass_pos[v]] += e[v];
      }
    }
    result.add_term(e2, factor);
  }
  return result;
}

// graded-lex: larger degree first; within a degree, lexicographically larger
// exponent vector first (earlier variables weigh more)
static std::vector<std::pair<Exponent, Rational>> sorted_terms(
    const std::map<Exponent, Rational>& terms) {
  std::vector<std::pair<Exponent, Rational>> v(terms.begin(), terms.end());
  auto deg = [](const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int da = deg(a.first), db = deg(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(terms_)) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ctx_->size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << rational_str(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << rational_str(a) << "*" << mono;
    }
  }
  return os.str();
}

std::string SparsePolynomial::json() const {
  std::ostringstream os;
  os << "{\"vars\":[";
  for (int i = 0; i < ctx_->size(); ++i)
    os << (i ? "," : "") << "\"" << ctx_->name(i) << "\"";
  os << "],\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : sorted_terms(terms_)) {
    if (!first) os << ",";
    first = false;
    os << "{\"coeff\":\"" << rational_str(c) << "\",\"exp\":[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]}";
  }
  os << "]}";
  return os.str();
}

SparsePolynomial elementary_symmetric(Context ctx, int i,
                                      const std::vector<int>& var_indices) {
  const int m = static_cast<int>(var_indices.size());
  if (i < 1 || i > m) throw std::out_of_range("elementary_symmetric: index out of range");
  // dp[k] = e_k of the variables processed so far
  std::vector<SparsePolynomial> dp(i + 1, SparsePolynomial::zero(ctx));
  dp[0] = SparsePolynomial::constant(ctx, 1);
  for (int v : var_indices) {
    SparsePolynomial xv = SparsePolynomial::variable(ctx, v);
    for (int k = std::min(i, m); k >= 1; --k) dp[k] += dp[k - 1] * xv;
  }
  return dp[i];
}

void HilbertSeriesPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

long HilbertSeriesPoly::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
}

bool HilbertSeriesPoly::operator==(const HilbertSeriesPoly& o) const {
  HilbertSeriesPoly a = *this, b = o;
  a.trim();
  b.trim();
  return a.coeffs == b.coeffs && a.denom_exp == b.denom_exp;
}

HilbertSeriesPoly HilbertSeriesPoly::operator*(const HilbertSeriesPoly& o) const {
  HilbertSeriesPoly r;
  r.denom_exp = denom_exp + o.denom_exp;
  if (coeffs.empty() || o.coeffs.empty()) return r;
  r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j)
      r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return r;
}

std::vector<long> HilbertSeriesPoly::expand(int up_to) const {
  std::vector<long> out(up_to + 1, 0);
  for (int k = 0; k <= up_to; ++k) out[k] = coeff(k);
  // repeated division by (1-q^2): cumulative sums
  for (int d = 0; d < denom_exp; ++d)
    for (int k = 1; k <= up_to; ++k) out[k] += out[k - 1];
  return out;
}

std::string HilbertSeriesPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs[k];
    } else {
      if (coeffs[k] != 1) os << coeffs[k];
      os << "q^" << 2 * k;
    }
  }
  if (first) os << "0";
  for (int d = 0; d < denom_exp; ++d) {
    // printed only when a denominator is present
  }
  if (denom_exp > 0) {
    std::string num = os.str();
    std::ostringstream os2;
    os2 << "(" << num << ")/(1-q^2)";
    if (denom_exp > 1) os2 << "^" << denom_exp;
    return os2.str();
  }
  return os.str();
}

}  // namespace hesscoh
