#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adq/error.hpp"

namespace adq {

// Field element: index sum c_i p^i of its coefficient vector over the modulus basis.
// Prime-field elements are their own residues, so F_p sits inside F_{p^k} index-wise.
using Elt = std::uint32_t;

bool is_prime(std::int64_t n);

/// Finite field F_{p^k}, p odd or 2, with the lexicographically least monic
/// irreducible modulus of degree k.
class Field {
public:
  Field() = default;
  /// Throws Errc::Input when p is not prime or k < 1.
  static Field create(int p, int k = 1);

  int p() const { return d_->p; }
  int k() const { return d_->k; }
  std::uint32_t q() const { return d_->q; }
  bool prime() const { return d_->k == 1; }
  /// Coefficients of the monic modulus, lowest degree first (size k+1).
  const std::vector<int> &modulus() const { return d_->modulus; }
  bool valid() const { return static_cast<bool>(d_); }

  Elt add(Elt a, Elt b) const {
    if (d_->k == 1) {
      Elt s = a + b;
      return s >= static_cast<Elt>(d_->p) ? s - d_->p : s;
    }
    return add_ext(a, b);
  }
  Elt sub(Elt a, Elt b) const {
    if (d_->k == 1) return a >= b ? a - b : a + d_->p - b;
    return sub_ext(a, b);
  }
  Elt neg(Elt a) const {
    if (d_->k == 1) return a ? d_->p - a : 0;
    return sub_ext(0, a);
  }
  Elt mul(Elt a, Elt b) const {
    if (d_->k == 1) return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % d_->p);
    return mul_ext(a, b);
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;
  Elt from_int(std::int64_t v) const {
    std::int64_t r = v % d_->p;
    return static_cast<Elt>(r < 0 ? r + d_->p : r);
  }
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elt a) const;

  std::vector<int> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<int> &c) const;
  /// Text encoding: k comma-separated integers in [0,p).
  std::string format(Elt a) const;
  Elt parse(std::string_view s) const;

  bool operator==(const Field &o) const {
    return d_ == o.d_ || (d_ && o.d_ && d_->p == o.d_->p && d_->k == o.d_->k);
  }
  bool operator!=(const Field &o) const { return !(*this == o); }

private:
  struct Data {
    int p = 0, k = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
  };
  std::shared_ptr<const Data> d_;

  Elt add_ext(Elt a, Elt b) const;
  Elt sub_ext(Elt a, Elt b) const;
  Elt mul_ext(Elt a, Elt b) const;
};

/// Univariate polynomial over a finite field, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list.
struct Poly {
  Field F;
  std::vector<Elt> c;

  Poly() = default;
  explicit Poly(Field f) : F(std::move(f)) {}
  Poly(Field f, std::vector<Elt> coeffs) : F(std::move(f)), c(std::move(coeffs)) { trim(); }

  static Poly x(const Field &f) { return Poly(f, {0, 1}); }
  static Poly constant(const Field &f, Elt a) { return Poly(f, {a}); }
  /// Build from integer coefficients (lowest first), reduced into the prime subfield.
  static Poly from_ints(const Field &f, const std::vector<std::int64_t> &v);

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elt lead() const { return c.empty() ? 0 : c.back(); }
  Elt coef(int i) const { return i < static_cast<int>(c.size()) && i >= 0 ? c[i] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  Elt eval(Elt a) const;
  Poly monic() const;
  Poly derivative() const;
  /// Reinterpret prime-subfield coefficients over another field of the same characteristic.
  Poly over(const Field &g) const;
  std::string str() const;

  bool operator==(const Poly &o) const { return c == o.c && F == o.F; }
  bool operator!=(const Poly &o) const { return !(*this == o); }
  bool operator<(const Poly &o) const;
};

Poly operator+(const Poly &a, const Poly &b);
Poly operator-(const Poly &a, const Poly &b);
Poly operator*(const Poly &a, const Poly &b);
Poly scale(const Poly &a, Elt s);
/// Division with remainder; b nonzero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
Poly operator%(const Poly &a, const Poly &b);
Poly operator/(const Poly &a, const Poly &b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly &a, const Poly &b);
/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Poly &a, const Poly &b);
Poly powmod(const Poly &a, std::uint64_t e, const Poly &m);
Poly lcm(const Poly &a, const Poly &b);

bool is_irreducible(const Poly &f);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// Throws Errc::Input on the zero polynomial.
std::vector<std::pair<Poly, int>> poly_factor(const Poly &f, std::uint64_t seed = 0x5eed);

/// All roots of f lying in f's own field (with multiplicity), sorted.
std::vector<Elt> roots_in_field(const Poly &f, std::uint64_t seed = 0x5eed);
/// Roots by exhaustive evaluation; used for small fields and as an oracle.
std::vector<Elt> roots_exhaustive(const Poly &f);

struct SplittingRoots {
  Field field;
  std::vector<Elt> roots;
};
/// Splitting field of f over F_p (degree = lcm of factor degrees) and the root multiset.
SplittingRoots roots_in_splitting_field(const Poly &f, std::uint64_t seed = 0x5eed);

} // namespace adq
