#include "adq/lift.hpp"

namespace adq {

namespace {

bool squarefree(const Poly &f) { return gcd(f, f.derivative()).deg() == 0; }

} // namespace

Mat ad_matrix(const Mat &g, const Summand &alg) {
  const Ring &R = g.R;
  int n = g.rows;
  auto gi = inverse(g);
  if (!gi) throw Error(Errc::Input, "element is not invertible");
  Mat ad(R, alg.rank(), alg.rank());
  for (int j = 0; j < alg.rank(); ++j) {
    Mat X = unvec(R, n, alg.vector(j));
    auto c = alg.coords(vec(g * X * *gi));
    if (!c) throw Error(Errc::Invariant, "conjugation leaves the Lie algebra");
    ad.set_col(j, *c);
  }
  return ad;
}

Mat symplectic_form(const Ring &R, int n) {
  Mat J(R, n, n);
  for (int i = 0; i < n; ++i) J(i, n - 1 - i) = i < n / 2 ? 1 : R.neg(1);
  return J;
}

std::vector<Mat> gsp4_generators_lifted(const Ring &R) {
  int p = R.p();
  std::vector<Mat> out;
  for (const Mat &g : gsp4_standard(p).gens) {
    Mat m(R, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::int64_t v = g(i, j);
        m(i, j) = R.from_int(2 * v > p ? v - p : v);
      }
    out.push_back(m);
  }
  return out;
}

Mat random_gsp4_element(const Ring &R, Rng &rng, int length) {
  std::vector<Mat> gens = gsp4_generators_lifted(R);
  std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i) gens.push_back(*inverse(gens[i]));
  Mat g = Mat::identity(R, 4);
  for (int i = 0; i < length; ++i) g = g * gens[below(rng, gens.size())];
  return g;
}

Mat LieLift::element(const std::vector<Elt> &c) const { return unvec(R, g.rows, mat_vec(alg.basis, c)); }

LieLift l0_of(const Mat &g, LieType type) {
  if (type != LieType::Sp && type != LieType::GSp) throw Error(Errc::Input, "l0 is implemented for sp and gsp");
  const Ring &R = g.R;
  int n = g.rows;
  Field F = R.residue_field();
  if (!squarefree(minpoly(change_ring(g, Ring::field(F)))))
    throw Error(Errc::ResidueNotSemisimple, "residue of g is not semisimple");
  Mat J = symplectic_form(R, n);
  LieLift L;
  L.R = R;
  L.g = g;
  L.alg = make_summand(lie_basis(type, n, J, R));
  L.ad = ad_matrix(g, L.alg);
  Mat f = L.ad - Mat::identity(R, L.alg.rank());
  Poly pbar = eigen_factor(f, 0);
  Mat e0 = lift_idempotent(f, pbar);
  L.L0 = image(e0);
  L.L1 = image(Mat::identity(R, L.alg.rank()) - e0);
  // [L0, L0] inside L0
  for (int i = 0; i < L.L0.rank(); ++i)
    for (int j = i + 1; j < L.L0.rank(); ++j) {
      Mat b = bracket(L.element(L.L0.vector(i)), L.element(L.L0.vector(j)));
      auto c = L.alg.coords(vec(b));
      if (!c || !L.L0.contains(*c)) throw Error(Errc::Invariant, "L0 is not closed under the bracket");
    }
  return L;
}

Summand center_of_l0(const LieLift &L) {
  const Ring &R = L.R;
  int k = L.L0.rank(), n = L.g.rows, nn = n * n;
  if (k == 0) return zero_summand(R, L.alg.rank());
  std::vector<Mat> basis;
  for (int i = 0; i < k; ++i) basis.push_back(L.element(L.L0.vector(i)));
  // x = sum c_i b_i; rows: [x, b_j] for every j
  Mat sys(R, nn * k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mat br = bracket(basis[i], basis[j]);
      for (int t = 0; t < nn; ++t) sys(j * nn + t, i) = br.a[t];
    }
  Summand ker = kernel(sys);
  if (ker.rank() == 0) return zero_summand(R, L.alg.rank());
  return make_summand(L.L0.basis * ker.basis);
}

} // namespace adq
