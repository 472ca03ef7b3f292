#pragma once

#include <cstdint>
#include <vector>

namespace adq {

struct NumberFieldInvariants {
  int d = 1, r1 = 1, r2 = 0;
  double h = 1, regulator = 1;
  int w = 2;
  double disc = 1;   // |D_K|
  double zeta2 = 0;  // zeta_K(2)
  static NumberFieldInvariants rationals();
  /// Throws Errc::Input on inconsistent invariants.
  void validate() const;
};

/// prod (q-1)^2 / (q^2-1) = prod (q-1)/(q+1) as a reduced fraction.
struct LocalFactor {
  std::uint64_t num = 1, den = 1;
};
LocalFactor local_factor(const std::vector<std::uint64_t> &norms);

double schanuel_constant(const NumberFieldInvariants &inv, const std::vector<std::uint64_t> &norms);

/// Points (a:1) of P^1(Q) written a = x/y with gcd(x,y) = 1, y >= 1, max(|x|, y) <= X and
/// no prime of sigma dividing x or y. The point at infinity is excluded.
std::uint64_t brute_count_Q(const std::vector<std::uint64_t> &sigma, std::int64_t X, int threads = 1);

} // namespace adq
