#include "adq/liealg.hpp"

namespace adq {

const char *lie_type_name(LieType t) {
  switch (t) {
  case LieType::Sp: return "Sp";
  case LieType::SO: return "SO";
  case LieType::GL: return "GL";
  case LieType::SL: return "SL";
  case LieType::GSp: return "GSp";
  }
  return "?";
}

const char *tri_name(Tri t) {
  switch (t) {
  case Tri::False: return "F";
  case Tri::True: return "T";
  case Tri::Unknown: return "INDETERMINATE";
  }
  return "?";
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

Mat bracket(const Mat &x, const Mat &y) { return x * y - y * x; }

namespace {

// Matrix of A -> A^T J + sign * J A on n^2-vectors.
Mat form_map(int n, const Mat &J, const Ring &R, bool plus) {
  Mat L(R, n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat E(R, n, n);
      E(i, j) = 1;
      Mat t = transpose(E) * J;
      Mat u = J * E;
      Mat v = plus ? t + u : t - u;
      L.set_col(i * n + j, v.a);
    }
  return L;
}

Mat columns_of(const Summand &s) { return s.basis; }

} // namespace

Mat lie_basis(LieType t, int n, const Mat &J, const Ring &R) {
  switch (t) {
  case LieType::Sp:
  case LieType::SO: return columns_of(kernel(form_map(n, J, R, true)));
  case LieType::GSp: {
    Mat L = form_map(n, J, R, true);
    Mat ext(R, n * n, n * n + 1);
    for (int i = 0; i < n * n; ++i) {
      for (int j = 0; j < n * n; ++j) ext(i, j) = L(i, j);
      ext(i, n * n) = R.neg(J.a[i]);
    }
    Summand k = kernel(ext);
    Mat cols(R, n * n, k.rank());
    for (int j = 0; j < k.rank(); ++j)
      for (int i = 0; i < n * n; ++i) cols(i, j) = k.basis(i, j);
    return make_summand(cols).basis;
  }
  case LieType::GL: return Mat::identity(R, n * n);
  case LieType::SL: {
    Mat tr(R, 1, n * n);
    for (int i = 0; i < n; ++i) tr(0, i * n + i) = 1;
    return columns_of(kernel(tr));
  }
  }
  return {};
}

ClassicalLieData make_lie(LieType t, int n, const Mat &J, const Ring &R) {
  ClassicalLieData L;
  L.type = t;
  L.R = R;
  L.n = n;
  L.J = J;
  switch (t) {
  case LieType::Sp:
  case LieType::GSp:
    L.g0 = make_summand(lie_basis(LieType::Sp, n, J, R));
    L.m = kernel(form_map(n, J, R, false));
    L.rank = n / 2;
    break;
  case LieType::SO:
    L.g0 = make_summand(lie_basis(LieType::SO, n, J, R));
    L.m = kernel(form_map(n, J, R, false));
    L.rank = n / 2;
    break;
  case LieType::GL:
  case LieType::SL:
    if (n % R.p() == 0) throw Error(Errc::Input, "sl_n needs p not dividing n");
    L.g0 = make_summand(lie_basis(LieType::SL, n, J, R));
    L.m = make_summand(Mat::column(R, Mat::identity(R, n).a));
    L.rank = n - 1;
    break;
  }
  Mat B = hcat({L.g0.basis, L.m.basis});
  if (B.cols != n * n) throw Error(Errc::Invariant, "g0 and m do not span gl_n");
  auto Bi = inverse(B);
  if (!Bi) throw Error(Errc::Invariant, "g0 and m are not complementary");
  std::vector<Elt> d(n * n, 0);
  for (int j = 0; j < L.g0.rank(); ++j) d[j] = 1;
  L.proj = B * Mat::diag(R, d) * *Bi;
  return L;
}

ClassicalLieData lie_for(const GroupSpec &s) {
  Ring R = s.ring();
  switch (s.ambient) {
  case Ambient::Sp: return make_lie(LieType::Sp, s.n, s.J, R);
  case Ambient::GSp: return make_lie(LieType::GSp, s.n, s.J, R);
  case Ambient::SO:
  case Ambient::O: return make_lie(LieType::SO, s.n, s.J, R);
  case Ambient::GL: return make_lie(LieType::GL, s.n, Mat(), R);
  case Ambient::SL: return make_lie(LieType::SL, s.n, Mat(), R);
  }
  throw Error(Errc::Input, "unsupported ambient");
}

std::vector<Elt> ClassicalLieData::coords(const Mat &A) const {
  auto c = g0.coords(A.a);
  if (!c) throw Error(Errc::AmbientMismatch, "matrix is not in the Lie algebra");
  return *c;
}

Mat ClassicalLieData::from_coords(const std::vector<Elt> &c) const {
  Mat A(R, n, n);
  A.a = mat_vec(g0.basis, c);
  return A;
}

Mat ClassicalLieData::basis_elt(int j) const {
  Mat A(R, n, n);
  A.a = g0.basis.col(j);
  return A;
}

std::vector<Elt> ClassicalLieData::project(const Mat &A) const {
  std::vector<Elt> v = mat_vec(proj, A.a);
  std::vector<Elt> c(dim());
  for (int j = 0; j < dim(); ++j) c[j] = v[g0.pivot_rows[j]];
  return c;
}

Mat ClassicalLieData::ad_group(const Mat &g) const {
  auto gi = inverse(g);
  if (!gi) throw Error(Errc::Input, "singular group element");
  Mat M(R, dim(), dim());
  for (int j = 0; j < dim(); ++j) M.set_col(j, coords(g * basis_elt(j) * *gi));
  return M;
}

Mat ClassicalLieData::ad_lie(const Mat &a) const {
  Mat M(R, dim(), dim());
  for (int j = 0; j < dim(); ++j) M.set_col(j, coords(bracket(a, basis_elt(j))));
  return M;
}

GModule adjoint_module(const GroupPtr &G, const ClassicalLieData &lie) {
  std::vector<Mat> act;
  for (const Mat &g : G->spec().gens) act.push_back(lie.ad_group(g));
  GModule M = custom_module(G, std::move(act), "adjoint");
  M.R = lie.R;
  M.d = lie.dim();
  return M;
}

} // namespace adq
