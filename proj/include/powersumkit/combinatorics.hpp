#pragma once

// Binomials, Stirling numbers of both kinds, r-Stirling, central factorial
// and Legendre-Stirling numbers, Bernoulli numbers and polynomials.
//
// r-Stirling, central factorial and Legendre-Stirling numbers are defined
// through sigma_m / h_m of the matching sequence, not through their own
// triangle recurrences.

#include "powersumkit/exact_core.hpp"
#include "powersumkit/memo.hpp"
#include "powersumkit/symfuncs.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

namespace powersumkit {

enum class Parity { Even, Odd };

inline Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer c = 1;
  for (long i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

namespace detail {

/// Lower-triangular table grown row by row on demand. `next_row(prev, n)`
/// builds row n from row n-1.
class TriangleCache {
 public:
  using RowBuilder = std::function<std::vector<Integer>(const std::vector<Integer>&, long)>;

  explicit TriangleCache(RowBuilder next_row) : next_row_(std::move(next_row)) {}

  Integer at(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (!memoization_enabled()) return build_uncached(n)[static_cast<std::size_t>(k)];
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size())
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (rows_.size() <= static_cast<std::size_t>(n))
      rows_.push_back(next_row_(rows_.back(), static_cast<long>(rows_.size())));
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<Integer> build_uncached(long n) const {
    std::vector<Integer> row{Integer(1)};
    for (long i = 1; i <= n; ++i) row = next_row_(row, i);
    return row;
  }

  RowBuilder next_row_;
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

inline TriangleCache& stirling_first_table() {
  // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  static TriangleCache table([](const std::vector<Integer>& prev, long n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    for (long k = 1; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      row[ku] = prev[ku - 1] + (k < n ? (n - 1) * prev[ku] : Integer(0));
    }
    return row;
  });
  return table;
}

inline TriangleCache& stirling_second_table() {
  // S(n,k) = k S(n-1,k) + S(n-1,k-1)
  static TriangleCache table([](const std::vector<Integer>& prev, long n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    for (long k = 1; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      row[ku] = prev[ku - 1] + (k < n ? k * prev[ku] : Integer(0));
    }
    return row;
  });
  return table;
}

enum class SymKind { Elementary, Complete };

/// sigma_m or h_m of a sequence, required to be integral. Prefixes are
/// memoized per sequence: the whole sigma list (it ends at the sequence
/// length), and h lists in blocks of 16 degrees.
inline Integer symmetric_integer(const SequenceSpec& xs, SymKind kind, long m) {
  using Key = std::tuple<int, long, long, int, long>;
  static MemoTable<Key, std::vector<Integer>> memo;
  if (m < 0) return 0;
  if (kind == SymKind::Elementary && static_cast<std::size_t>(m) > xs.size()) return 0;
  const long degree = kind == SymKind::Elementary ? static_cast<long>(xs.size()) : (m / 16 + 1) * 16;
  const auto [tag, start, end] = xs.key();
  const auto prefix = memo.get_or_compute(Key{tag, start, end, static_cast<int>(kind), degree}, [&] {
    const auto values = kind == SymKind::Elementary ? elementary_prefix(xs, degree) : complete_prefix(xs, degree);
    std::vector<Integer> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_integer(v, "symmetric function of " + xs.describe()));
    return out;
  });
  return prefix[static_cast<std::size_t>(m)];
}

}  // namespace detail

/// Unsigned Stirling numbers of the first kind [n k]; 0 outside 0 <= k <= n.
inline Integer stirling_first_unsigned(long n, long k) {
  if (n < 0) throw DomainError("stirling_first_unsigned: n must be >= 0");
  return detail::stirling_first_table().at(n, k);
}

/// Stirling numbers of the second kind {n k}; 0 outside 0 <= k <= n.
inline Integer stirling_second(long n, long k) {
  if (n < 0) throw DomainError("stirling_second: n must be >= 0");
  return detail::stirling_second_table().at(n, k);
}

/// r-Stirling numbers of the first kind [n k]_r = sigma_{n-k}(r, ..., n-1).
/// Requires 1 <= r <= n; zero when k < r or k > n.
inline Integer r_stirling_first(long n, long k, long r) {
  if (r < 1 || r > n) {
    throw DomainError("r_stirling_first: need 1 <= r <= n, got r=" + std::to_string(r) +
                      " n=" + std::to_string(n));
  }
  if (k > n) return 0;
  return detail::symmetric_integer(SequenceSpec::naturals_from(r, n - 1), detail::SymKind::Elementary,
                                   n - k);
}

/// r-Stirling numbers of the second kind {n k}_r = h_{n-k}(r, ..., k).
/// Requires 1 <= r <= n; zero when k < r or k > n.
inline Integer r_stirling_second(long n, long k, long r) {
  if (r < 1 || r > n) {
    throw DomainError("r_stirling_second: need 1 <= r <= n, got r=" + std::to_string(r) +
                      " n=" + std::to_string(n));
  }
  if (k < r || k > n) return 0;
  return detail::symmetric_integer(SequenceSpec::naturals_from(r, k), detail::SymKind::Complete, n - k);
}

/// Central factorial numbers of the first kind.
///   Even: u(n, k) = (-1)^{n-k} sigma_{n-k}(1^2, ..., (n-1)^2)
///   Odd:  v(n, k) = (-1)^{n-k} sigma_{n-k}(1^2, 3^2, ..., (2n-1)^2)
/// Defined for n >= 0 and k <= n (zero once n - k exceeds the sequence length).
inline Integer central_factorial_first(long n, long k, Parity parity) {
  if (n < 0 || k > n) {
    throw DomainError("central_factorial_first: need 0 <= n and k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  const long m = n - k;
  const auto xs = parity == Parity::Even ? SequenceSpec::squares(std::max(n - 1, 0L))
                                         : SequenceSpec::odd_squares(n);
  return sign_pow(m) * detail::symmetric_integer(xs, detail::SymKind::Elementary, m);
}

/// Central factorial numbers of the second kind.
///   Even: U(n, k) = h_{n-k}(1^2, ..., k^2)
///   Odd:  V(n, k) = h_{n-k}(1^2, 3^2, ..., (2k+1)^2)
/// Defined for 0 <= k <= n.
inline Integer central_factorial_second(long n, long k, Parity parity) {
  if (k < 0 || k > n) {
    throw DomainError("central_factorial_second: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  const auto xs = parity == Parity::Even ? SequenceSpec::squares(k) : SequenceSpec::odd_squares(k + 1);
  return detail::symmetric_integer(xs, detail::SymKind::Complete, n - k);
}

/// Legendre-Stirling numbers of the first kind Ps_n^{(j)}
///   = (-1)^{n-j} sigma_{n-j}(2, 6, ..., (n-1)n).
inline Integer legendre_stirling_first(long n, long j) {
  if (n < 0 || j < 0 || j > n) {
    throw DomainError("legendre_stirling_first: need 0 <= j <= n, got n=" + std::to_string(n) +
                      " j=" + std::to_string(j));
  }
  if (n == 0) return 1;
  const long m = n - j;
  return sign_pow(m) *
         detail::symmetric_integer(SequenceSpec::doubled_triangulars(n - 1), detail::SymKind::Elementary, m);
}

/// Legendre-Stirling numbers of the second kind PS_n^{(j)}
///   = h_{n-j}(2, 6, ..., j(j+1)).
inline Integer legendre_stirling_second(long n, long j) {
  if (n < 0 || j < 0 || j > n) {
    throw DomainError("legendre_stirling_second: need 0 <= j <= n, got n=" + std::to_string(n) +
                      " j=" + std::to_string(j));
  }
  return detail::symmetric_integer(SequenceSpec::doubled_triangulars(j), detail::SymKind::Complete, n - j);
}

namespace detail {
// B_0..B_k from sum_{j=0}^{k} C(k+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_row(long k) {
  std::vector<Rational> b{Rational(1)};
  for (long m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / (m + 1));
  }
  return b;
}
}  // namespace detail

/// Bernoulli numbers with B_1 = -1/2, so that B_k = B_k(0).
inline Rational bernoulli_number(long k) {
  require_nonnegative(k, "bernoulli_number: k");
  static MemoTable<long, std::vector<Rational>> memo;
  // One shared row, regrown in blocks of 32.
  const long block = (k / 32 + 1) * 32;
  const auto row = memo.get_or_compute(block, [&] { return detail::bernoulli_row(block); });
  return row[static_cast<std::size_t>(k)];
}

/// B_k(x) = sum_{i=0}^{k} C(k, i) B_i x^{k-i}.
inline RationalPolynomial bernoulli_polynomial(long k) {
  require_nonnegative(k, "bernoulli_polynomial: k");
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
  for (long i = 0; i <= k; ++i)
    coeffs[static_cast<std::size_t>(k - i)] = Rational(binomial(k, i)) * bernoulli_number(i);
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace powersumkit
