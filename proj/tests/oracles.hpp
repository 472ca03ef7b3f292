#pragma once

#include <algorithm>
#include <vector>

#include "adq/lift.hpp"

namespace adq::oracle {

// All rank-one direct summands of (Z/p^N)^2: lines through (1, a) and (p c, 1).
inline std::vector<std::vector<Elt>> rank_one_lines(const Ring &R) {
  std::vector<std::vector<Elt>> out;
  for (Elt a = 0; a < R.size(); ++a) out.push_back({1, a});
  for (Elt c = 0; c < R.size(); c += R.p()) out.push_back({c, 1});
  return out;
}

inline bool stable_line(const Mat &f, const std::vector<Elt> &v) {
  const Ring &R = f.R;
  std::vector<Elt> w = mat_vec(f, v);
  // v has a unit coordinate; w must be that coordinate's multiple of v
  int u = R.is_unit(v[0]) ? 0 : 1;
  Elt lam = R.mul(w[u], R.inv(v[u]));
  return R.mul(lam, v[0]) == w[0] && R.mul(lam, v[1]) == w[1];
}

// Residue kernel of pbar(fbar) over F_p^2 by exhaustive search.
inline std::vector<std::vector<Elt>> residue_kernel(const Mat &f, const Poly &pbar) {
  Ring Fr = Ring::field(f.R.residue_field());
  Mat P = eval_at(RPoly::lift(Fr, pbar), change_ring(f, Fr));
  std::vector<std::vector<Elt>> out;
  int p = f.R.p();
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      std::vector<Elt> v = {static_cast<Elt>(a), static_cast<Elt>(b)};
      auto w = mat_vec(P, v);
      if (w[0] == 0 && w[1] == 0) out.push_back(v);
    }
  return out;
}

inline Mat random_mat(const Ring &R, Rng &rng, int n) {
  Mat m(R, n, n);
  for (auto &e : m.a) e = static_cast<Elt>(below(rng, R.size()));
  return m;
}

// g in GSp4 over the ring whose residue is semisimple
inline Mat random_semisimple(const Ring &R, Rng &rng) {
  Ring F = Ring::field(R.residue_field());
  for (;;) {
    Mat g = random_gsp4_element(R, rng);
    Poly m = minpoly(change_ring(g, F));
    if (gcd(m, m.derivative()).deg() == 0) return g;
  }
}

inline Summand gl_coords(const LieLift &L, const Summand &S) { return make_summand(L.alg.basis * S.basis); }

// Every bracket of two L0 basis elements lies in L0 (checked in gl_n coordinates).
inline bool bracket_closed(const LieLift &L) {
  Summand L0 = gl_coords(L, L.L0);
  int n = L.g.rows;
  for (int i = 0; i < L0.rank(); ++i)
    for (int j = i + 1; j < L0.rank(); ++j) {
      Mat x = unvec(L.R, n, L0.vector(i)), y = unvec(L.R, n, L0.vector(j));
      if (!L0.contains(vec(x * y - y * x))) return false;
    }
  return true;
}

// (Ad(g) - 1)^(d N) kills L0, and rank L0 is the multiplicity of 1 in the residue
// characteristic polynomial of Ad(g).
inline bool l0_shape(const LieLift &L) {
  int d = L.alg.rank();
  Mat A = L.ad - Mat::identity(L.R, d);
  Mat P = Mat::identity(L.R, d);
  for (int k = 0; k < d * L.R.N(); ++k) P = P * A;
  Mat K = P * L.L0.basis;
  if (std::any_of(K.a.begin(), K.a.end(), [](Elt e) { return e != 0; })) return false;
  Poly cb = charpoly(L.ad).residue();
  const Field &F = cb.F;
  Poly lin = Poly::from_ints(F, {-1, 1});
  int mult = 0;
  while (cb.deg() > 0 && cb.eval(1) == 0) {
    cb = divmod(cb, lin).first;
    ++mult;
  }
  return mult == L.L0.rank();
}

} // namespace adq::oracle
