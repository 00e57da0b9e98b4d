#pragma once

// Exact arithmetic substrate: big integers, lowest-terms rationals, dense
// rational polynomials and rational multiples of even powers of pi.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powersumkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two routes that must agree do not, or when a value that must
/// be integral is not. Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds num/den in lowest terms with a positive denominator.
inline Rational rational_normalize(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational_normalize: zero denominator");
  // Boost 1.74 rejects negative denominators outright.
  const Integer g = boost::multiprecision::gcd(num, den);
  const Integer sign = den < 0 ? -1 : 1;
  return Rational(sign * num / g, sign * den / g);
}

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Returns q as an Integer; a non-integral q is an internal error.
inline Integer to_integer(const Rational& q, std::string_view context = "value") {
  if (!is_integral(q)) {
    throw InternalError(std::string(context) + ": expected an integer, got " +
                        q.str());
  }
  return numerator(q);
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q" (optional leading '-'); throws DomainError on junk.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw DomainError("parse_rational: malformed number '" + std::string(text) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return rational_normalize(parse_int(text.substr(0, slash)),
                            parse_int(text.substr(slash + 1)));
}

inline Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational rpow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// +1 for even m, -1 for odd m.
inline int sign_pow(long long m) { return (m % 2 == 0) ? 1 : -1; }

/// Dense polynomial with Rational coefficients, coeffs[i] multiplying x^i.
///
/// The zero polynomial is the empty coefficient list; every other polynomial
/// has a nonzero highest stored coefficient. degree() of zero is -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  static RationalPolynomial monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> cs(power + 1);
    cs[power] = c;
    return RationalPolynomial(std::move(cs));
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i, zero past the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  /// Exact Horner evaluation.
  [[nodiscard]] Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator-(const RationalPolynomial& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
  }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
    std::vector<Rational> out(p.coeffs_);
    for (auto& c : out) c *= s;
    return RationalPolynomial(std::move(out));
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const RationalPolynomial& p, const Rational& x) { return p(x); }

/// The exact value coeff * pi^(2 * half_exponent).
///
/// Only like powers add; mixing half_exponents in a sum is a DomainError.
struct PiPowerValue {
  Rational coeff = 0;
  unsigned half_exponent = 0;

  [[nodiscard]] bool is_rational() const { return half_exponent == 0; }

  friend PiPowerValue operator+(const PiPowerValue& a, const PiPowerValue& b) {
    if (a.half_exponent != b.half_exponent) {
      throw DomainError("PiPowerValue: cannot add pi^" + std::to_string(2 * a.half_exponent) +
                        " and pi^" + std::to_string(2 * b.half_exponent) + " terms");
    }
    return {a.coeff + b.coeff, a.half_exponent};
  }

  friend PiPowerValue operator-(const PiPowerValue& a) { return {-a.coeff, a.half_exponent}; }
  friend PiPowerValue operator-(const PiPowerValue& a, const PiPowerValue& b) { return a + (-b); }

  friend PiPowerValue operator*(const PiPowerValue& a, const PiPowerValue& b) {
    return {a.coeff * b.coeff, a.half_exponent + b.half_exponent};
  }

  friend PiPowerValue operator*(const Rational& s, const PiPowerValue& a) {
    return {s * a.coeff, a.half_exponent};
  }

  friend bool operator==(const PiPowerValue&, const PiPowerValue&) = default;
};

/// "1/6 · π^2"; a plain rational when the exponent is zero.
inline std::string to_string(const PiPowerValue& v) {
  if (v.is_rational()) return to_string(v.coeff);
  return to_string(v.coeff) + " · π^" + std::to_string(2 * v.half_exponent);
}

inline std::ostream& operator<<(std::ostream& os, const PiPowerValue& v) {
  return os << to_string(v);
}

inline std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(p.coeffs()[i]) << ")";
    if (i > 0) os << "x^" << i;
    first = false;
  }
  return os;
}

}  // namespace powersumkit
