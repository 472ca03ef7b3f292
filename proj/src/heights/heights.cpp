#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "adq/error.hpp"
#include "adq/heights.hpp"

namespace adq {

NumberFieldInvariants NumberFieldInvariants::rationals() {
  NumberFieldInvariants k;
  k.zeta2 = std::numbers::pi * std::numbers::pi / 6;
  return k;
}

void NumberFieldInvariants::validate() const {
  if (d != r1 + 2 * r2 || d < 1 || r1 < 0 || r2 < 0) throw Error(Errc::Input, "degree does not match signature");
  if (w < 2 || w % 2) throw Error(Errc::Input, "root of unity count must be even and at least 2");
  if (h < 1 || regulator <= 0 || disc < 1 || zeta2 <= 1) throw Error(Errc::Input, "invalid number field invariants");
}

LocalFactor local_factor(const std::vector<std::uint64_t> &norms) {
  LocalFactor f;
  for (std::uint64_t q : norms) {
    if (q < 2) throw Error(Errc::Input, "prime norms must be at least 2");
    f.num *= q - 1;
    f.den *= q + 1;
    std::uint64_t g = std::gcd(f.num, f.den);
    f.num /= g;
    f.den /= g;
  }
  return f;
}

double schanuel_constant(const NumberFieldInvariants &inv, const std::vector<std::uint64_t> &norms) {
  inv.validate();
  const double pi = std::numbers::pi;
  int r = inv.r1 + inv.r2 - 1;
  double gamma = std::pow(std::pow(2.0, inv.r1) * std::pow(2 * pi, inv.r2), 2) * std::pow(2.0, r) / inv.disc;
  LocalFactor f = local_factor(norms);
  return inv.h * inv.regulator / (inv.w * inv.zeta2) * gamma * static_cast<double>(f.num) / static_cast<double>(f.den);
}

std::uint64_t brute_count_Q(const std::vector<std::uint64_t> &sigma, std::int64_t X, int threads) {
  if (X < 1) throw Error(Errc::Input, "X must be at least 1");
  auto ok = [&](std::int64_t v) {
    for (std::uint64_t q : sigma)
      if (v % static_cast<std::int64_t>(q) == 0) return false;
    return true;
  };
  auto count_range = [&](std::int64_t b0, std::int64_t b1) {
    std::uint64_t c = 0;
    for (std::int64_t b = b0; b < b1; ++b) {
      if (!ok(b)) continue;
      for (std::int64_t a = 0; a <= X; ++a) {
        if (std::gcd(a, b) != 1 || !ok(a)) continue;
        c += a == 0 ? 1 : 2;
      }
    }
    return c;
  };
  threads = std::max(1, threads);
  std::vector<std::uint64_t> part(threads, 0);
  std::vector<std::thread> pool;
  std::int64_t step = (X + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::int64_t b0 = 1 + t * step, b1 = std::min<std::int64_t>(X + 1, b0 + step);
    pool.emplace_back([&, t, b0, b1] { part[t] = b0 < b1 ? count_range(b0, b1) : 0; });
  }
  for (auto &th : pool) th.join();
  return std::accumulate(part.begin(), part.end(), std::uint64_t{0});
}

} // namespace adq
