#include <doctest.h>

#include <algorithm>
#include <map>

#include "adq/ff.hpp"

using namespace adq;

namespace {

// Oracle: first monic degree-2 polynomial over F_p (lexicographic in (a1, a0)) with no root.
std::vector<int> least_irreducible_quadratic(int p) {
  for (int a1 = 0; a1 < p; ++a1)
    for (int a0 = 0; a0 < p; ++a0) {
      bool root = false;
      for (int x = 0; x < p && !root; ++x) root = ((x * x + a1 * x + a0) % p) == 0;
      if (!root) return {a0, a1, 1};
    }
  return {};
}

Poly random_poly(const Field &F, int deg, Rng &rng) {
  std::vector<Elt> c(deg + 1);
  for (auto &e : c) e = static_cast<Elt>(below(rng, F.q()));
  c[deg] = 1;
  return Poly(F, c);
}

std::map<std::vector<Elt>, int> as_map(const std::vector<std::pair<Poly, int>> &fs) {
  std::map<std::vector<Elt>, int> m;
  for (auto &[f, e] : fs) m[f.c] += e;
  return m;
}

} // namespace

TEST_CASE("field moduli") {
  CHECK(Field::create(3, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field::create(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::create(5, 2).modulus() == least_irreducible_quadratic(5));
  CHECK(Field::create(5, 2).modulus() == std::vector<int>{2, 0, 1});
  CHECK(Field::create(7, 2).modulus() == least_irreducible_quadratic(7));
  CHECK_THROWS_AS(Field::create(9, 1), Error);
  CHECK_THROWS_AS(Field::create(3, 0), Error);
}

TEST_CASE("field create is deterministic") {
  for (int k = 1; k <= 4; ++k) CHECK(Field::create(3, k).modulus() == Field::create(3, k).modulus());
}

TEST_CASE("field axioms in F_81") {
  Field F = Field::create(3, 4);
  CHECK(F.q() == 81);
  Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    Elt a = static_cast<Elt>(below(rng, 81)), b = static_cast<Elt>(below(rng, 81)),
        c = static_cast<Elt>(below(rng, 81));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, 81) == a);
  }
  CHECK(F.parse(F.format(57)) == 57);
}

TEST_CASE("factor small examples") {
  Field F5 = Field::create(5);
  auto f = poly_factor(Poly::from_ints(F5, {-1, 0, 1}));
  REQUIRE(f.size() == 2);
  // Sorted by coefficients: x+1 = x-4 comes before x+4 = x-1.
  CHECK(f[0].first == Poly::from_ints(F5, {-4, 1}));
  CHECK(f[1].first == Poly::from_ints(F5, {-1, 1}));
  Field F3 = Field::create(3);
  auto g = poly_factor(Poly::from_ints(F3, {1, 0, 1}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].second == 1);
  CHECK(g[0].first.deg() == 2);
  CHECK_THROWS_AS(poly_factor(Poly(F3)), Error);
}

TEST_CASE("factor: product reconstructs and factors are irreducible") {
  Rng rng(7);
  for (int p : {3, 5, 7}) {
    Field F = Field::create(p);
    for (int t = 0; t < 40; ++t) {
      Poly f = random_poly(F, 1 + static_cast<int>(below(rng, 9)), rng);
      auto fs = poly_factor(f, t);
      Poly prod = Poly::constant(F, 1);
      for (auto &[h, e] : fs) {
        CHECK(is_irreducible(h));
        for (int i = 0; i < e; ++i) prod = prod * h;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("factor is multiplicative") {
  Rng rng(11);
  Field F = Field::create(3, 2);
  for (int t = 0; t < 30; ++t) {
    Poly f = random_poly(F, 1 + static_cast<int>(below(rng, 5)), rng);
    Poly g = random_poly(F, 1 + static_cast<int>(below(rng, 5)), rng);
    auto a = as_map(poly_factor(f)), b = as_map(poly_factor(g)), ab = as_map(poly_factor(f * g));
    for (auto &[k, e] : b) a[k] += e;
    CHECK(a == ab);
  }
}

TEST_CASE("roots agree with exhaustive search") {
  Rng rng(3);
  Field F = Field::create(3, 4);
  for (int t = 0; t < 30; ++t) {
    Poly f = random_poly(F, 1 + static_cast<int>(below(rng, 6)), rng);
    auto r = roots_in_field(f);
    auto e = roots_exhaustive(f);
    std::sort(e.begin(), e.end());
    CHECK(r == e);
  }
}

TEST_CASE("splitting field roots") {
  Field F3 = Field::create(3);
  auto s = roots_in_splitting_field(Poly::from_ints(F3, {1, -2, 1}));
  CHECK(s.field.q() == 3);
  CHECK(s.roots == std::vector<Elt>{1, 1});

  auto t = roots_in_splitting_field(Poly::from_ints(F3, {1, 0, 1}));
  CHECK(t.field.q() == 9);
  REQUIRE(t.roots.size() == 2);
  CHECK(t.field.pow(t.roots[0], 3) == t.roots[1]);

  // x^4+x^3+x^2+x+1: primitive 5th roots of unity live in F_81.
  auto u = roots_in_splitting_field(Poly::from_ints(F3, {1, 1, 1, 1, 1}));
  CHECK(u.field.q() == 81);
  REQUIRE(u.roots.size() == 4);
  for (Elt r : u.roots) CHECK(u.field.order(r) == 5);
}

TEST_CASE("frobenius permutes roots") {
  Rng rng(5);
  Field F5 = Field::create(5);
  for (int t = 0; t < 20; ++t) {
    Poly f = random_poly(F5, 2 + static_cast<int>(below(rng, 4)), rng);
    auto s = roots_in_splitting_field(f);
    std::vector<Elt> img;
    for (Elt r : s.roots) {
      CHECK(f.over(s.field).eval(r) == 0);
      img.push_back(s.field.pow(r, 5));
    }
    std::sort(img.begin(), img.end());
    CHECK(img == s.roots);
  }
}
