// Computes S_4(10) along every route and prints zeta(2)..zeta(8).

#include "powersumkit/powersums.hpp"
#include "powersumkit/zeta.hpp"

#include <iostream>

int main() {
  using namespace powersumkit;

  const PowerSumQuery q{4, 10, 1};
  for (auto method : kAllMethods) {
    if (method_mismatch(method, q)) continue;
    std::cout << method_name(method) << ": " << to_string(evaluate_method(method, q)) << '\n';
  }

  for (long k = 1; k <= 4; ++k)
    std::cout << "zeta(" << 2 * k << ") = " << to_string(zeta_even_exact(k).value) << '\n';
}
