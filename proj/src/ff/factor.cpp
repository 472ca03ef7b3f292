#include <algorithm>
#include <numeric>

#include "adq/ff.hpp"

namespace adq {

namespace {

Poly pth_root(const Poly &c) {
  const Field &F = c.F;
  const int p = F.p();
  std::uint64_t e = F.q() / static_cast<std::uint64_t>(p);  // a^(q/p) is the p-th root of a
  Poly r(F);
  r.c.resize(c.deg() / p + 1, 0);
  for (int i = 0; i <= c.deg(); i += p) r.c[i / p] = F.pow(c.c[i], e);
  r.trim();
  return r;
}

void squarefree(const Poly &f, int mult, std::vector<std::pair<Poly, int>> &out) {
  Poly one = Poly::constant(f.F, 1);
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly fac = (w / y).monic();
    if (fac.deg() > 0) out.push_back({fac, i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  c = c.monic();
  if (c.deg() > 0) squarefree(pth_root(c).monic(), mult * f.F.p(), out);
}

// Split a squarefree product of irreducibles of common degree d (Cantor-Zassenhaus).
void equal_degree(const Poly &f, int d, Rng &rng, std::vector<Poly> &out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field &F = f.F;
  const std::uint64_t q = F.q();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Poly a(F);
    a.c.resize(f.deg());
    for (auto &v : a.c) v = static_cast<Elt>(below(rng, q));
    a.trim();
    if (a.deg() < 1) continue;
    Poly b(F);
    if (F.p() == 2) {
      // Absolute trace map a + a^2 + ... + a^(2^(k d - 1)).
      Poly t = a % f;
      b = t;
      for (int i = 1; i < F.k() * d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      Poly t = a % f, s = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        s = (s * t) % f;
      }
      b = powmod(s, (q - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, b);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, rng, out);
      equal_degree((f / g).monic(), d, rng, out);
      return;
    }
  }
  throw Error(Errc::RandomnessExhausted, "equal-degree splitting did not terminate");
}

void distinct_degree(const Poly &f, Rng &rng, std::vector<Poly> &out) {
  Poly rest = f.monic();
  Poly x = Poly::x(f.F);
  Poly h = x % rest;
  for (int d = 1; 2 * d <= rest.deg(); ++d) {
    h = powmod(h, f.F.q(), rest);
    Poly g = gcd(rest, h - x);
    if (g.deg() > 0) {
      equal_degree(g, d, rng, out);
      rest = (rest / g).monic();
      h = h % rest;
    }
  }
  if (rest.deg() > 0) out.push_back(rest);
}

} // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Poly &f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(Errc::Input, "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> sqf, res;
  if (f.deg() == 0) return res;
  squarefree(f.monic(), 1, sqf);
  Rng rng(seed);
  for (auto &[g, m] : sqf) {
    std::vector<Poly> irr;
    distinct_degree(g, rng, irr);
    for (auto &h : irr) res.push_back({h, m});
  }
  std::sort(res.begin(), res.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // Merge identical factors (cannot normally happen, kept for safety).
  std::vector<std::pair<Poly, int>> merged;
  for (auto &e : res) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(e);
  }
  return merged;
}

std::vector<Elt> roots_exhaustive(const Poly &f) {
  if (f.is_zero()) throw Error(Errc::Input, "zero polynomial has every element as a root");
  std::vector<Elt> roots;
  for (Elt a = 0; a < f.F.q(); ++a) {
    // Multiplicity by repeated synthetic division.
    Poly g = f;
    while (!g.is_zero() && g.deg() > 0 && g.eval(a) == 0) {
      roots.push_back(a);
      g = g / Poly(f.F, {f.F.neg(a), 1});
    }
  }
  return roots;
}

std::vector<Elt> roots_in_field(const Poly &f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(Errc::Input, "zero polynomial has every element as a root");
  if (f.F.q() <= 10000) return roots_exhaustive(f);
  std::vector<Elt> roots;
  for (auto &[g, m] : poly_factor(f, seed))
    if (g.deg() == 1)
      for (int i = 0; i < m; ++i) roots.push_back(f.F.neg(g.c[0]));
  std::sort(roots.begin(), roots.end());
  return roots;
}

SplittingRoots roots_in_splitting_field(const Poly &f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(Errc::Input, "zero polynomial");
  if (!f.F.prime()) throw Error(Errc::Input, "splitting fields are computed over the prime field");
  auto facs = poly_factor(f, seed);
  int m = 1;
  for (auto &fc : facs) m = std::lcm(m, fc.first.deg());
  Field E = Field::create(f.F.p(), m);
  SplittingRoots out{E, {}};
  for (auto &[g, mult] : facs) {
    auto r = roots_in_field(g.over(E), seed);
    if (static_cast<int>(r.size()) != g.deg()) throw Error(Errc::Invariant, "irreducible factor did not split");
    for (int i = 0; i < mult; ++i) out.roots.insert(out.roots.end(), r.begin(), r.end());
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

} // namespace adq
