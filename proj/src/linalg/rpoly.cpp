#include <sstream>

#include "adq/linalg.hpp"

namespace adq {

Poly RPoly::residue() const {
  const Field &F = R.residue_field();
  std::vector<Elt> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = R.residue(c[i]);
  return Poly(F, v);
}

RPoly RPoly::lift(const Ring &R, const Poly &f) {
  std::vector<Elt> v(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) v[i] = R.lift(f.c[i]);
  return RPoly(R, v);
}

std::string RPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (!c[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << R.format(c[i]) << (i ? "*" : "");
    if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

RPoly operator+(const RPoly &a, const RPoly &b) {
  std::vector<Elt> v(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.R.add(a.coef(static_cast<int>(i)), b.coef(static_cast<int>(i)));
  return RPoly(a.R, v);
}

RPoly operator-(const RPoly &a, const RPoly &b) {
  std::vector<Elt> v(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.R.sub(a.coef(static_cast<int>(i)), b.coef(static_cast<int>(i)));
  return RPoly(a.R, v);
}

RPoly operator*(const RPoly &a, const RPoly &b) {
  if (a.is_zero() || b.is_zero()) return RPoly(a.R, {});
  std::vector<Elt> v(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] = a.R.add(v[i + j], a.R.mul(a.c[i], b.c[j]));
  return RPoly(a.R, v);
}

std::pair<RPoly, RPoly> divmod_monic(const RPoly &a, const RPoly &b) {
  if (b.is_zero() || b.c.back() != 1) throw Error(Errc::Input, "divisor must be monic");
  const Ring &R = a.R;
  RPoly r = a;
  std::vector<Elt> q(std::max(0, a.deg() - b.deg() + 1), 0);
  for (int i = r.deg(); i >= b.deg(); --i) {
    Elt t = r.coef(i);
    if (!t) continue;
    q[i - b.deg()] = t;
    for (int j = 0; j <= b.deg(); ++j) r.c[i - b.deg() + j] = R.sub(r.c[i - b.deg() + j], R.mul(t, b.c[j]));
  }
  r.trim();
  return {RPoly(R, q), r};
}

Mat eval_at(const RPoly &f, const Mat &x) {
  Mat r(x.R, x.rows, x.cols);
  for (int i = f.deg(); i >= 0; --i) {
    r = r * x;
    for (int d = 0; d < x.rows; ++d) r(d, d) = x.R.add(r(d, d), f.c[i]);
  }
  return r;
}

RPoly charpoly(const Mat &m) {
  if (!m.square()) throw Error(Errc::Input, "charpoly of non-square matrix");
  const Ring &R = m.R;
  int n = m.rows;
  if (n == 0) return RPoly(R, {1});
  // Berkowitz: coefficient vector, highest degree first.
  std::vector<Elt> v = {1, R.neg(m(0, 0))};
  for (int r = 1; r < n; ++r) {
    // t = [1, -a, -R C, -R A C, ..., -R A^{r-1} C]
    std::vector<Elt> t(r + 2);
    t[0] = 1;
    t[1] = R.neg(m(r, r));
    std::vector<Elt> col(r);
    for (int i = 0; i < r; ++i) col[i] = m(i, r);
    for (int k = 0; k < r; ++k) {
      Elt s = 0;
      for (int j = 0; j < r; ++j) s = R.add(s, R.mul(m(r, j), col[j]));
      t[k + 2] = R.neg(s);
      std::vector<Elt> nc(r, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) nc[i] = R.add(nc[i], R.mul(m(i, j), col[j]));
      col = std::move(nc);
    }
    std::vector<Elt> nv(r + 2, 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) nv[i] = R.add(nv[i], R.mul(t[i - j], v[j]));
    v = std::move(nv);
  }
  std::vector<Elt> c(v.rbegin(), v.rend());
  return RPoly(R, c);
}

Poly charpoly_field(const Mat &m) {
  if (!m.R.is_field()) throw Error(Errc::Input, "charpoly_field needs a field");
  RPoly c = charpoly(m);
  return Poly(m.R.residue_field(), c.c);
}

Poly minpoly(const Mat &m) {
  if (!m.square()) throw Error(Errc::Input, "minpoly of non-square matrix");
  if (!m.R.is_field()) throw Error(Errc::Input, "minpoly needs a field");
  const Field &F = m.R.residue_field();
  int n = m.rows;
  std::vector<std::vector<Elt>> powers;
  Echelon ech(F, n * n);
  Mat p = Mat::identity(m.R, n);
  for (int k = 0; k <= n; ++k) {
    std::vector<Elt> v = vec(p);
    if (!ech.insert(v)) {
      // Express M^k in terms of lower powers.
      Mat sys(m.R, n * n, k + 1);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < n * n; ++i) sys(i, j) = powers[j][i];
      for (int i = 0; i < n * n; ++i) sys(i, k) = v[i];
      Mat ker = kernel_basis(sys);
      std::vector<Elt> c = ker.col(0);
      Elt inv = F.inv(c[k]);
      for (auto &e : c) e = F.mul(e, inv);
      return Poly(F, c);
    }
    powers.push_back(std::move(v));
    p = p * m;
  }
  throw Error(Errc::Invariant, "minimal polynomial exceeded degree n");
}

} // namespace adq
