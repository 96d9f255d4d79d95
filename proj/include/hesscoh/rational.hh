#ifndef HESSCOH_RATIONAL_HH
#define HESSCOH_RATIONAL_HH

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace hesscoh {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, "p" when the denominator is 1
inline std::string rational_str(const Rational& r) {
  return r.get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("invalid rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace hesscoh

#endif
