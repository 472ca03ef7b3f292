#include "adq/liealg.hpp"

namespace adq {

namespace {

bool squarefree(const Poly &f) { return gcd(f, f.derivative()).deg() == 0; }

std::vector<std::vector<Elt>> cols(const Mat &m) {
  std::vector<std::vector<Elt>> v;
  for (int j = 0; j < m.cols; ++j) v.push_back(m.col(j));
  return v;
}

// Projection onto ker(g - e) along im(g - e), for semisimple g.
Mat eigen_projection(const Mat &g, Elt e) {
  const Ring &R = g.R;
  int n = g.rows;
  Mat ge = g - scale(Mat::identity(R, n), e);
  Mat V = kernel_basis(ge);
  Mat img = transpose(rref(transpose(ge)));
  int r = rank(ge);
  Mat Q(R, n, n);
  for (int j = 0; j < V.cols; ++j) Q.set_col(j, V.col(j));
  for (int j = 0; j < r; ++j) Q.set_col(V.cols + j, img.col(j));
  std::vector<Elt> d(n, 0);
  for (int j = 0; j < V.cols; ++j) d[j] = 1;
  return Q * Mat::diag(R, d) * *inverse(Q);
}

} // namespace

Summand z_centralizer_gl(const Mat &g) {
  if (!squarefree(minpoly(g))) throw Error(Errc::NotSemisimple, "element is not semisimple");
  int n = g.rows;
  Echelon E(g.R.residue_field(), n * n);
  Mat p = Mat::identity(g.R, n);
  for (int i = 0; i < n; ++i) {
    E.insert(p.a);
    p = p * g;
  }
  return make_summand(E.basis_cols());
}

LieZ lieZ_of_centralizer(const Mat &g, const ClassicalLieData &lie) {
  if (g.rows != lie.n) throw Error(Errc::AmbientMismatch, "element size does not match the Lie algebra");
  Summand z = z_centralizer_gl(g);
  Echelon E(lie.R.residue_field(), lie.dim());
  for (int j = 0; j < z.rank(); ++j) {
    Mat A(lie.R, lie.n, lie.n);
    A.a = z.vector(j);
    E.insert(lie.project(A));
  }
  LieZ out;
  if (lie.type == LieType::SO) {
    const Ring &R = lie.R;
    int m1 = lie.n - rank(g - Mat::identity(R, lie.n));
    int mm1 = lie.n - rank(g + Mat::identity(R, lie.n));
    if ((m1 == 2 && mm1 == 0) || (m1 == 0 && mm1 == 2)) {
      // Adjoin so(V) for the two-dimensional eigenspace V: elements A = E A E in g0.
      Mat P = eigen_projection(g, m1 == 2 ? 1 : R.neg(1));
      Mat sys(R, lie.n * lie.n, lie.dim());
      for (int j = 0; j < lie.dim(); ++j) {
        Mat B = lie.basis_elt(j);
        sys.set_col(j, (B - P * B * P).a);
      }
      Mat K = kernel_basis(sys);
      for (int j = 0; j < K.cols; ++j) E.insert(K.col(j));
    } else if (m1 == 2 || mm1 == 2) {
      out.lower_bound = true;
    }
  }
  out.basis = E.basis_cols();
  return out;
}

Mat fixed_subalgebra(const Mat &g, const ClassicalLieData &lie) {
  return kernel_basis(lie.ad_group(g) - Mat::identity(lie.R, lie.dim()));
}

bool is_regular_semisimple(const Group &G, std::uint32_t x, const ClassicalLieData &lie) {
  return G.is_semisimple(x) && fixed_subalgebra(G.element(x), lie).cols == lie.rank;
}

namespace {

SpanResult close_span(const GroupPtr &G, const ClassicalLieData &lie, const std::vector<std::vector<Elt>> &vs,
                      bool lower) {
  GModule ad = adjoint_module(G, lie);
  Mat S = spin(ad, vs);
  SpanResult r;
  r.dim = S.cols;
  r.verdict = r.dim == lie.dim() ? Tri::True : (lower ? Tri::Unknown : Tri::False);
  return r;
}

} // namespace

SpanResult spanning_sum_A(const GroupPtr &G, const ClassicalLieData &lie) {
  std::vector<std::vector<Elt>> vs;
  bool lower = false;
  for (const auto &c : G->classes()) {
    if (c.order % lie.R.p() == 0) continue;
    LieZ z = lieZ_of_centralizer(G->element(c.rep), lie);
    lower = lower || z.lower_bound;
    for (auto &v : cols(z.basis)) vs.push_back(std::move(v));
  }
  return close_span(G, lie, vs, lower);
}

SpanResult spanning_sum_B(const GroupPtr &G, const ClassicalLieData &lie) {
  std::vector<std::vector<Elt>> vs;
  for (const auto &c : G->classes()) {
    if (c.order % lie.R.p() == 0) continue;
    Mat fx = fixed_subalgebra(G->element(c.rep), lie);
    if (fx.cols != lie.rank) continue;
    for (auto &v : cols(fx)) vs.push_back(std::move(v));
  }
  return close_span(G, lie, vs, false);
}

bool condB_by_submodules(const GroupPtr &G, const ClassicalLieData &lie, std::uint64_t seed) {
  GModule D = dual_module(adjoint_module(G, lie));
  std::vector<Mat> rss;
  for (const auto &c : G->classes())
    if (c.order % lie.R.p() != 0 && is_regular_semisimple(*G, c.rep, lie))
      rss.push_back(D.element_action(c.rep) - Mat::identity(D.R, D.d));
  for (const Mat &W : simple_submodules(D, seed)) {
    bool hit = false;
    for (const Mat &a : rss)
      if (rank(a * W) < W.cols) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

int nilpotent_rank(const ClassicalLieData &lie, std::uint64_t seed, int samples) {
  Rng rng(seed);
  const Field &F = lie.R.residue_field();
  int best = lie.dim();
  for (int s = 0; s < samples; ++s) {
    std::vector<Elt> c(lie.dim());
    for (auto &e : c) e = static_cast<Elt>(below(rng, F.q()));
    RPoly cp = charpoly(lie.ad_lie(lie.from_coords(c)));
    for (int i = 0; i <= cp.deg(); ++i)
      if (cp.coef(i)) {
        best = std::min(best, i);
        break;
      }
  }
  return best;
}

bool is_ad_regular(const Mat &a, const ClassicalLieData &lie) {
  return charpoly(lie.ad_lie(a)).coef(lie.rank) != 0;
}

} // namespace adq
