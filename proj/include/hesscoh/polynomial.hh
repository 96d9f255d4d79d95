#ifndef HESSCOH_POLYNOMIAL_HH
#define HESSCOH_POLYNOMIAL_HH

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hesscoh/rational.hh"

namespace hesscoh {

// A fixed, ordered list of variable names.  Every variable carries
// cohomological degree 2; "polynomial degree" below is the plain total
// exponent and cohomological degree is twice that.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent

  bool operator==(const VariableContext& o) const { return names_ == o.names_; }

  // common contexts
  static std::shared_ptr<const VariableContext> t_only();                  // {t}
  static std::shared_ptr<const VariableContext> t_indexed(int n);          // {t1..tn}
  static std::shared_ptr<const VariableContext> x_vars(int n, bool with_t);// {x1..xn[,t]}
  static std::shared_ptr<const VariableContext> alpha_vars(int n);         // {a1..an}
  static std::shared_ptr<const VariableContext> omega_vars(int n, bool with_t); // {w1..wn[,t]}
  static std::shared_ptr<const VariableContext> z_vars(int n, bool with_t); // {z1..zn[,t]}

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using Context = std::shared_ptr<const VariableContext>;

using Exponent = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients; all exponent vectors have the
// context's length.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(Context ctx);
  static SparsePolynomial zero(Context ctx) { return SparsePolynomial(std::move(ctx)); }
  static SparsePolynomial constant(Context ctx, const Rational& c);
  static SparsePolynomial variable(Context ctx, int var_index, int power = 1);
  static SparsePolynomial monomial(Context ctx, Exponent exp, const Rational& c);

  const Context& context() const { return ctx_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  // total polynomial degree; -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  // coefficient of a monomial (0 if absent)
  Rational coeff(const Exponent& e) const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  SparsePolynomial scaled(const Rational& c) const;
  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);

  bool operator==(const SparsePolynomial& o) const;
  bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

  void add_term(const Exponent& e, const Rational& c);  // accumulate, canonical

  // Substitute each variable by a polynomial over target_ctx.  images[i]
  // replaces variable i of this->context().
  SparsePolynomial substitute(const std::vector<SparsePolynomial>& images,
                              Context target_ctx) const;

  // pi specialization: every variable named "t<i>" maps to i*t; any other
  // variable is passed through unchanged.  Result context: passthrough
  // variables (in order) followed by "t" (reused if already present).
  SparsePolynomial specialize_pi() const;

  // graded-lex canonical form: higher total degree first, then
  // lexicographically larger exponent vector first
  std::string str() const;
  std::string json() const;  // {"vars":[...],"terms":[{"coeff":"p/q","exp":[...]}]}

 private:
  Context ctx_;
  std::map<Exponent, Rational> terms_;
};

SparsePolynomial elementary_symmetric(Context ctx, int i,
                                      const std::vector<int>& var_indices);

// Finite q-polynomial in the cohomological convention: coeffs[k] is the
// coefficient of q^{2k}.  denom_exp d represents division by (1-q^2)^d.
struct HilbertSeriesPoly {
  std::vector<long> coeffs;
  int denom_exp = 0;

  void trim();
  long coeff(int k) const;
  bool operator==(const HilbertSeriesPoly& o) const;
  HilbertSeriesPoly operator*(const HilbertSeriesPoly& o) const;
  // expand numerator/(1-q^2)^denom_exp as a truncated series through q^{2*up_to}
  std::vector<long> expand(int up_to) const;
  std::string str() const;  // "1 + 3q^2 + ..."
};

}  // namespace hesscoh

#endif
