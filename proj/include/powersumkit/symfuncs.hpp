#pragma once

// Elementary (sigma), complete homogeneous (h) and power-sum (p) symmetric
// functions over finite exact-valued sequences, the Newton-Girard system,
// and the expression of p_k through sigma and h.

#include "powersumkit/exact_core.hpp"

#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace powersumkit {

/// A named generator of the variable multiset {x_1, ..., x_n}.
class SequenceSpec {
 public:
  enum class Tag { NaturalsFrom, Ones, Squares, OddSquares, DoubledTriangulars, InverseSquares, Explicit };

  /// r, r+1, ..., n. Empty when r == n + 1.
  static SequenceSpec naturals_from(long r, long n) {
    if (r < 1 || r > n + 1) {
      throw DomainError("naturals_from: need 1 <= r <= n + 1, got r=" + std::to_string(r) +
                        " n=" + std::to_string(n));
    }
    return SequenceSpec(Tag::NaturalsFrom, r, n);
  }
  static SequenceSpec naturals(long n) { return naturals_from(1, n); }
  static SequenceSpec ones(long n) { return SequenceSpec(Tag::Ones, 1, checked(n)); }
  /// 1^2, 2^2, ..., n^2.
  static SequenceSpec squares(long n) { return SequenceSpec(Tag::Squares, 1, checked(n)); }
  /// 1^2, 3^2, ..., (2n-1)^2.
  static SequenceSpec odd_squares(long n) { return SequenceSpec(Tag::OddSquares, 1, checked(n)); }
  /// 2, 6, ..., n(n+1).
  static SequenceSpec doubled_triangulars(long n) {
    return SequenceSpec(Tag::DoubledTriangulars, 1, checked(n));
  }
  /// 1/1^2, 1/2^2, ..., 1/n^2.
  static SequenceSpec inverse_squares(long n) {
    return SequenceSpec(Tag::InverseSquares, 1, checked(n));
  }
  static SequenceSpec explicit_values(std::vector<Rational> xs) {
    SequenceSpec s(Tag::Explicit, 1, static_cast<long>(xs.size()));
    s.explicit_ = std::move(xs);
    return s;
  }

  [[nodiscard]] Tag tag() const { return tag_; }
  [[nodiscard]] long start() const { return start_; }
  [[nodiscard]] long end() const { return end_; }

  [[nodiscard]] std::size_t size() const {
    if (tag_ == Tag::Explicit) return explicit_.size();
    return static_cast<std::size_t>(end_ - start_ + 1);
  }

  /// The i-th element, 0-based.
  [[nodiscard]] Rational at(std::size_t i) const {
    const long j = start_ + static_cast<long>(i);
    switch (tag_) {
      case Tag::NaturalsFrom: return Rational(j);
      case Tag::Ones: return Rational(1);
      case Tag::Squares: return Rational(Integer(j) * j);
      case Tag::OddSquares: return Rational(Integer(2 * j - 1) * (2 * j - 1));
      case Tag::DoubledTriangulars: return Rational(Integer(j) * (j + 1));
      case Tag::InverseSquares: return Rational(Integer(1), Integer(j) * j);
      case Tag::Explicit: return explicit_.at(i);
    }
    return 0;
  }

  [[nodiscard]] std::vector<Rational> values() const {
    std::vector<Rational> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
    return out;
  }

  [[nodiscard]] std::string describe() const {
    const auto n = std::to_string(end_);
    switch (tag_) {
      case Tag::NaturalsFrom: return "naturals(" + std::to_string(start_) + ".." + n + ")";
      case Tag::Ones: return "ones(" + n + ")";
      case Tag::Squares: return "squares(" + n + ")";
      case Tag::OddSquares: return "odd_squares(" + n + ")";
      case Tag::DoubledTriangulars: return "doubled_triangulars(" + n + ")";
      case Tag::InverseSquares: return "inverse_squares(" + n + ")";
      case Tag::Explicit: return "explicit[" + std::to_string(explicit_.size()) + "]";
    }
    return "?";
  }

  /// Identity for caching; Explicit sequences are not cacheable.
  [[nodiscard]] std::tuple<int, long, long> key() const {
    return {static_cast<int>(tag_), start_, end_};
  }

 private:
  SequenceSpec(Tag tag, long start, long end) : tag_(tag), start_(start), end_(end) {}

  static long checked(long n) {
    if (n < 0) throw DomainError("SequenceSpec: negative length " + std::to_string(n));
    return n;
  }

  Tag tag_;
  long start_;
  long end_;
  std::vector<Rational> explicit_;
};

inline void require_nonnegative(long v, const char* what) {
  if (v < 0) throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(v));
}

/// [sigma_0, ..., sigma_M]. One variable at a time:
/// sigma_m <- sigma_m + x_i * sigma_{m-1}. Entries past the sequence length stay 0.
inline std::vector<Rational> elementary_prefix(const SequenceSpec& xs, long max_degree) {
  require_nonnegative(max_degree, "elementary_prefix: M");
  std::vector<Rational> sigma(static_cast<std::size_t>(max_degree) + 1);
  sigma[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational x = xs.at(i);
    const std::size_t top = std::min<std::size_t>(i + 1, static_cast<std::size_t>(max_degree));
    for (std::size_t m = top; m >= 1; --m) sigma[m] += x * sigma[m - 1];
  }
  return sigma;
}

/// [h_0, ..., h_M]. One variable at a time: h_m <- h_m + x_i * h_{m-1}, with
/// the update running upward so h_{m-1} already includes x_i.
inline std::vector<Rational> complete_prefix(const SequenceSpec& xs, long max_degree) {
  require_nonnegative(max_degree, "complete_prefix: M");
  std::vector<Rational> h(static_cast<std::size_t>(max_degree) + 1);
  h[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational x = xs.at(i);
    for (std::size_t m = 1; m < h.size(); ++m) h[m] += x * h[m - 1];
  }
  return h;
}

/// [p_1, ..., p_M] by raising every element to every power. The brute-force
/// reference for the other routes.
inline std::vector<Rational> power_sums_direct(const SequenceSpec& xs, long max_degree) {
  if (max_degree < 1) throw DomainError("power_sums_direct: M must be >= 1");
  std::vector<Rational> p(static_cast<std::size_t>(max_degree));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational x = xs.at(i);
    Rational power = 1;
    for (auto& pm : p) {
      power *= x;
      pm += power;
    }
  }
  return p;
}

/// p_k = sum_{m=1}^{k} (-1)^{m-1} m sigma_m h_{k-m}.
inline Rational power_sum_via_lang(const SequenceSpec& xs, long k) {
  if (k < 1) throw DomainError("power_sum_via_lang: k must be >= 1");
  const auto sigma = elementary_prefix(xs, k);
  const auto h = complete_prefix(xs, k);
  Rational p = 0;
  for (long m = 1; m <= k; ++m) {
    p += sign_pow(m - 1) * m * sigma[static_cast<std::size_t>(m)] *
         h[static_cast<std::size_t>(k - m)];
  }
  return p;
}

/// Solves the unit lower-triangular Newton-Girard system
///   sum_{j=1}^{m-1} sbar_{m-j} p_j + p_m + m sbar_m = 0,  sbar_j = (-1)^j sigma_j
/// by forward substitution. Entries past the end of `sigma` are taken as 0.
inline std::vector<Rational> newton_girard_power_sums(std::span<const Rational> sigma, long count) {
  if (count < 1) throw DomainError("newton_girard_power_sums: K must be >= 1");
  if (sigma.empty() || sigma[0] != 1) {
    throw DomainError("newton_girard_power_sums: sigma_0 must be 1");
  }
  auto sbar = [&](long j) -> Rational {
    if (static_cast<std::size_t>(j) >= sigma.size()) return 0;
    return sign_pow(j) * sigma[static_cast<std::size_t>(j)];
  };
  std::vector<Rational> p(static_cast<std::size_t>(count));
  for (long m = 1; m <= count; ++m) {
    Rational rhs = -m * sbar(m);
    for (long j = 1; j < m; ++j) rhs -= sbar(m - j) * p[static_cast<std::size_t>(j - 1)];
    p[static_cast<std::size_t>(m - 1)] = rhs;
  }
  return p;
}

/// sum_{i=0}^{k} (-1)^i sigma_i h_{k-i}; equals 1 at k = 0 and 0 otherwise.
inline Rational orthogonality_residual(const SequenceSpec& xs, long k) {
  require_nonnegative(k, "orthogonality_residual: k");
  const auto sigma = elementary_prefix(xs, k);
  const auto h = complete_prefix(xs, k);
  Rational acc = 0;
  for (long i = 0; i <= k; ++i) {
    acc += sign_pow(i) * sigma[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
  }
  return acc;
}

/// P_n(x) = sum_{j=1}^{n} prod_{l != j} (1 - l x), expanded literally.
inline RationalPolynomial pn_polynomial_coeffs(long n) {
  if (n < 1) throw DomainError("pn_polynomial_coeffs: n must be >= 1");
  RationalPolynomial total;
  for (long j = 1; j <= n; ++j) {
    RationalPolynomial product = RationalPolynomial::constant(1);
    for (long l = 1; l <= n; ++l) {
      if (l != j) product = product * RationalPolynomial({Rational(1), Rational(-l)});
    }
    total = total + product;
  }
  return total;
}

/// sigma, h and p over one sequence up to degree M.
struct SymTriple {
  std::vector<Rational> sigma;  // sigma_0..sigma_M
  std::vector<Rational> h;      // h_0..h_M
  std::vector<Rational> p;      // p_1..p_M
  long max_degree = 0;

  /// The three invariants: unit leading terms, sigma_m = 0 past the sequence
  /// length, and sum_i (-1)^i sigma_i h_{k-i} = delta_{k,0}.
  [[nodiscard]] bool consistent(std::size_t variables) const {
    if (sigma.at(0) != 1 || h.at(0) != 1) return false;
    for (std::size_t m = variables + 1; m < sigma.size(); ++m)
      if (sigma[m] != 0) return false;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i <= k; ++i) acc += sign_pow(static_cast<long long>(i)) * sigma[i] * h[k - i];
      if (acc != (k == 0 ? 1 : 0)) return false;
    }
    return true;
  }
};

inline SymTriple sym_triple(const SequenceSpec& xs, long max_degree) {
  SymTriple t;
  t.max_degree = max_degree;
  t.sigma = elementary_prefix(xs, max_degree);
  t.h = complete_prefix(xs, max_degree);
  if (max_degree >= 1) t.p = power_sums_direct(xs, max_degree);
  return t;
}

}  // namespace powersumkit
