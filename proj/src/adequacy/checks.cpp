#include "adq/adequacy.hpp"

namespace adq {

TidyResult tidy_check(const Group &Gp) {
  TidyResult out;
  if (!is_symplectic(Gp.spec().ambient)) return out;
  const Mat &J = Gp.spec().J;
  for (const auto &c : Gp.classes()) {
    Mat g = Gp.element(c.rep);
    Elt nu = *similitude(g, J);
    if (nu == 1) continue;
    SplittingRoots sr = roots_in_splitting_field(charpoly_field(g));
    const Field &K = sr.field;
    bool ok = true;
    for (std::size_t i = 0; i < sr.roots.size() && ok; ++i)
      for (std::size_t j = 0; j < sr.roots.size() && ok; ++j)
        if (sr.roots[i] != sr.roots[j] && K.div(sr.roots[i], sr.roots[j]) == nu) ok = false;
    if (ok) {
      out.tidy = true;
      out.witness = format_mat(g);
      return out;
    }
  }
  return out;
}

InducedResult induced_checks(const Group &G) {
  InducedResult out;
  for (const Subgroup &H : G.index2_subgroups()) {
    GroupPtr Hg = enumerate_subgroup(G, H);
    GModule M = natural_module(Hg);
    if (!abs_irreducible(M)) out.induced = true;
    if (!is_irreducible(M)) out.split_induced = true;
    if (out.induced && out.split_induced) break;
  }
  return out;
}

bool g_irreducible(const GroupPtr &G, std::uint64_t seed) {
  const Mat &J = G->spec().J;
  if (J.rows == 0) throw Error(Errc::AmbientMismatch, "g_irreducible needs a form");
  for (const Mat &W : simple_submodules(natural_module(G), seed))
    if ((transpose(W) * J * W).is_zero()) return false;
  return true;
}

std::uint64_t centralizer_order_in_isometries(const Group &G) {
  const GroupSpec &s = G.spec();
  const Ring R = s.ring();
  int n = s.n, nn = n * n;
  Mat sys(R, nn * static_cast<int>(s.gens.size()), nn);
  for (std::size_t k = 0; k < s.gens.size(); ++k)
    for (int j = 0; j < nn; ++j) {
      Mat E(R, n, n);
      E.a[j] = 1;
      Mat c = E * s.gens[k] - s.gens[k] * E;
      for (int i = 0; i < nn; ++i) sys(static_cast<int>(k) * nn + i, j) = c.a[i];
    }
  Mat K = kernel_basis(sys);
  std::uint64_t q = s.F.q(), total = 1;
  for (int i = 0; i < K.cols; ++i) {
    total *= q;
    if (total > 2000000) throw Error(Errc::SubsetBudgetExceeded, "commutant too large to enumerate");
  }
  std::uint64_t count = 0;
  std::vector<Elt> c(K.cols, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t t = code;
    for (auto &e : c) {
      e = static_cast<Elt>(t % q);
      t /= q;
    }
    Mat X = unvec(R, n, mat_vec(K, c));
    if (s.J.rows ? transpose(X) * s.J * X == s.J : det(X) != 0) ++count;
  }
  return count;
}

ReasonablePrecheck reasonable_precheck(const GroupPtr &Gp, std::uint64_t seed) {
  ReasonablePrecheck r;
  GroupPtr G = symplectic_part(Gp);
  ClassicalLieData lie = lie_for(G->spec());
  r.condA = spanning_sum_A(G, lie).verdict;
  r.h0_adjoint_dual = h0_dim(dual_module(adjoint_module(G, lie)));
  r.h1_trivial = h1_dim(trivial_module(G, G->spec().F), seed);
  r.passes = r.condA == Tri::True && r.h0_adjoint_dual == 0 && r.h1_trivial == 0;
  r.notes = "PRECHECK";
  if (r.condA != Tri::True) r.notes += "; condition (A) fails";
  if (r.h0_adjoint_dual) r.notes += "; adjoint dual has fixed vectors";
  if (r.h1_trivial) r.notes += "; nonzero homomorphisms to F_p";
  return r;
}

namespace {

// Close the span of vs under the given matrices.
int close_under(Echelon &E, std::vector<std::vector<Elt>> todo, const std::vector<Mat> &acts) {
  std::vector<std::vector<Elt>> queue;
  for (auto &v : todo)
    if (E.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    std::vector<Elt> v = std::move(queue.back());
    queue.pop_back();
    for (const Mat &a : acts) {
      std::vector<Elt> w = mat_vec(a, v);
      if (E.insert(w)) queue.push_back(w);
    }
  }
  return E.rank();
}

} // namespace

GeneratorReport assess_generators(const GroupSpec &s, std::uint64_t seed, int samples) {
  GeneratorReport r;
  const Ring R = s.ring();
  int n = s.n;
  Echelon alg(s.F, n * n);
  std::vector<std::vector<Elt>> start = {Mat::identity(R, n).a};
  // left multiplication by generators on vectorised matrices: vec(g X)
  std::vector<Mat> left;
  for (const Mat &g : s.gens) {
    Mat L(R, n * n, n * n);
    for (int j = 0; j < n * n; ++j) {
      Mat E(R, n, n);
      E.a[j] = 1;
      L.set_col(j, (g * E).a);
    }
    left.push_back(L);
  }
  r.abs_irred = close_under(alg, start, left) == n * n;

  ClassicalLieData lie = lie_for(s);
  std::vector<Mat> ad;
  for (const Mat &g : s.gens) ad.push_back(lie.ad_group(g));
  std::vector<Mat> blocks;
  for (const Mat &a : ad) blocks.push_back(a - Mat::identity(R, lie.dim()));
  r.h0_adjoint = kernel_basis(vcat(blocks)).cols;

  Echelon span(s.F, lie.dim());
  ProductReplacement pr(s.gens, seed);
  for (int i = 0; i < samples && span.rank() < lie.dim(); ++i) {
    Mat x = pr.next();
    Poly m = minpoly(x);
    if (gcd(m, m.derivative()).deg() != 0) continue;
    LieZ z = lieZ_of_centralizer(x, lie);
    std::vector<std::vector<Elt>> vs;
    for (int j = 0; j < z.basis.cols; ++j) vs.push_back(z.basis.col(j));
    close_under(span, vs, ad);
  }
  r.spanA_dim = span.rank();
  r.condA = r.spanA_dim == lie.dim() ? Tri::True : Tri::Unknown;
  return r;
}

} // namespace adq
