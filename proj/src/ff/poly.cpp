#include <algorithm>
#include <sstream>

#include "adq/ff.hpp"

namespace adq {

Poly Poly::from_ints(const Field &f, const std::vector<std::int64_t> &v) {
  std::vector<Elt> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = f.from_int(v[i]);
  return Poly(f, std::move(c));
}

Elt Poly::eval(Elt a) const {
  Elt r = 0;
  for (int i = deg(); i >= 0; --i) r = F.add(F.mul(r, a), c[i]);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(*this, F.inv(lead()));
}

Poly Poly::derivative() const {
  Poly d(F);
  if (c.size() <= 1) return d;
  d.c.resize(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d.c[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), c[i]);
  d.trim();
  return d;
}

Poly Poly::over(const Field &g) const {
  if (g.p() != F.p()) throw Error(Errc::Input, "characteristic mismatch");
  for (Elt a : c)
    if (a >= static_cast<Elt>(F.p()) && !(g == F))
      throw Error(Errc::Input, "coefficient outside the prime subfield");
  return Poly(g, c);
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string co = F.prime() ? std::to_string(c[i]) : "(" + F.format(c[i]) + ")";
    if (i == 0) os << co;
    else {
      if (c[i] != 1) os << co << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool Poly::operator<(const Poly &o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (c[i] != o.c[i]) return c[i] < o.c[i];
  return false;
}

Poly operator+(const Poly &a, const Poly &b) {
  Poly r(a.F);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.F.add(a.coef(static_cast<int>(i)), b.coef(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly operator-(const Poly &a, const Poly &b) {
  Poly r(a.F);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.F.sub(a.coef(static_cast<int>(i)), b.coef(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly operator*(const Poly &a, const Poly &b) {
  Poly r(a.F);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  const Field &F = a.F;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

Poly scale(const Poly &a, Elt s) {
  Poly r(a.F);
  r.c.resize(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.F.mul(a.c[i], s);
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
  if (b.is_zero()) throw Error(Errc::Input, "polynomial division by zero");
  const Field &F = a.F;
  Poly q(F), r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(a.deg() - b.deg() + 1, 0);
  Elt li = F.inv(b.lead());
  for (int i = r.deg(); i >= b.deg(); --i) {
    Elt t = F.mul(r.c[i], li);
    if (!t) continue;
    q.c[i - b.deg()] = t;
    for (int j = 0; j <= b.deg(); ++j) r.c[i - b.deg() + j] = F.sub(r.c[i - b.deg() + j], F.mul(t, b.c[j]));
  }
  q.trim();
  r.trim();
  return {q, r};
}

Poly operator%(const Poly &a, const Poly &b) { return divmod(a, b).second; }
Poly operator/(const Poly &a, const Poly &b) { return divmod(a, b).first; }

Poly gcd(const Poly &a, const Poly &b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const Poly &a, const Poly &b) {
  const Field &F = a.F;
  Poly r0 = a, r1 = b, s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elt li = F.inv(r0.lead());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Poly powmod(const Poly &a, std::uint64_t e, const Poly &m) {
  Poly r = Poly::constant(a.F, 1) % m, b = a % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

Poly lcm(const Poly &a, const Poly &b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.F);
  return ((a * b) / gcd(a, b)).monic();
}

namespace {
std::vector<int> prime_divisors(int n) {
  std::vector<int> r;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) r.push_back(n);
  return r;
}

// x^(q^j) mod f by repeated q-th powering.
Poly frob_power(const Poly &f, int j) {
  Poly h = Poly::x(f.F) % f;
  for (int i = 0; i < j; ++i) h = powmod(h, f.F.q(), f);
  return h;
}
} // namespace

bool is_irreducible(const Poly &f) {
  // Rabin's test over the coefficient field.
  int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  Poly g = f.monic();
  Poly x = Poly::x(f.F);
  if (frob_power(g, n) != x % g) return false;
  for (int r : prime_divisors(n)) {
    Poly h = frob_power(g, n / r) - x;
    if (gcd(g, h).deg() != 0) return false;
  }
  return true;
}

} // namespace adq
