#include "adq/repmod.hpp"

namespace adq {

Mat GModule::element_action(std::uint32_t x) const {
  std::vector<std::uint32_t> path;
  for (std::uint32_t y = x; y != 0; y = G->parent(y)) path.push_back(G->pgen(y));
  Mat r = Mat::identity(R, d);
  for (auto it = path.rbegin(); it != path.rend(); ++it) r = r * action[*it];
  return r;
}

std::vector<Mat> GModule::all_actions() const {
  std::vector<Mat> out(G->order());
  out[0] = Mat::identity(R, d);
  for (std::uint32_t i = 1; i < G->order(); ++i) out[i] = out[G->parent(i)] * action[G->pgen(i)];
  return out;
}

GModule natural_module(const GroupPtr &G) {
  return GModule{G, G->ring(), G->n(), G->spec().gens, "natural"};
}

GModule trivial_module(const GroupPtr &G, const Field &F) {
  Ring R = Ring::field(F);
  return GModule{G, R, 1, std::vector<Mat>(G->ngens(), Mat::identity(R, 1)), "trivial"};
}

GModule dual_module(const GModule &M) {
  GModule D = M;
  for (auto &a : D.action) a = transpose(*inverse(a));
  D.tag = M.tag + "-dual";
  return D;
}

GModule custom_module(const GroupPtr &G, std::vector<Mat> action, const std::string &tag) {
  if (action.size() != G->ngens()) throw Error(Errc::Input, "module needs one matrix per generator");
  int d = action.empty() ? 0 : action[0].rows;
  Ring R = action.empty() ? G->ring() : action[0].R;
  return GModule{G, R, d, std::move(action), tag};
}

void verify_module(const GModule &M, std::uint64_t seed, int words) {
  Rng rng(seed);
  for (int w = 0; w < words && M.G->ngens(); ++w) {
    std::uint32_t x = 0;
    Mat img = Mat::identity(M.R, M.d);
    int len = 1 + static_cast<int>(below(rng, 8));
    for (int i = 0; i < len; ++i) {
      std::size_t s = below(rng, M.G->ngens());
      x = M.G->rmul_gen(x, s);
      img = img * M.action[s];
    }
    if (img != M.element_action(x)) throw Error(Errc::Invariant, "module action is not multiplicative");
  }
}

Summand h0(const GModule &M) {
  std::vector<Mat> blocks;
  Mat I = Mat::identity(M.R, M.d);
  for (const Mat &a : M.action) blocks.push_back(a - I);
  if (blocks.empty()) return full_summand(M.R, M.d);
  return kernel(vcat(blocks));
}

bool abs_irreducible(const GModule &M) {
  int dd = M.d * M.d;
  Echelon E(M.field(), dd);
  std::vector<Mat> queue = {Mat::identity(M.R, M.d)};
  E.insert(vec(queue[0]));
  for (std::size_t h = 0; h < queue.size() && E.rank() < dd; ++h)
    for (const Mat &a : M.action) {
      Mat b = queue[h] * a;
      if (E.insert(vec(b))) queue.push_back(std::move(b));
    }
  return E.rank() == dd;
}

Mat spin(const GModule &M, const std::vector<std::vector<Elt>> &vs) {
  Echelon E(M.field(), M.d);
  std::vector<std::vector<Elt>> queue;
  for (const auto &v : vs)
    if (E.insert(v)) queue.push_back(v);
  for (std::size_t h = 0; h < queue.size() && E.rank() < M.d; ++h)
    for (const Mat &a : M.action) {
      auto w = mat_vec(a, queue[h]);
      if (E.insert(w)) queue.push_back(std::move(w));
    }
  return E.basis_cols();
}

Split split_module(const GModule &M, const Mat &sub_basis) {
  int k = sub_basis.cols;
  Echelon E(M.field(), M.d);
  Mat Q(M.R, M.d, M.d);
  for (int j = 0; j < k; ++j) {
    E.insert(sub_basis.col(j));
    Q.set_col(j, sub_basis.col(j));
  }
  int c = k;
  for (int i = 0; i < M.d && c < M.d; ++i) {
    std::vector<Elt> e(M.d, 0);
    e[i] = 1;
    if (E.insert(e)) Q.set_col(c++, e);
  }
  Mat Qi = *inverse(Q);
  Split out{M, M};
  out.sub.d = k;
  out.quotient.d = M.d - k;
  out.sub.tag = M.tag + "-sub";
  out.quotient.tag = M.tag + "-quot";
  for (std::size_t s = 0; s < M.action.size(); ++s) {
    Mat t = Qi * M.action[s] * Q;
    Mat a(M.R, k, k), b(M.R, M.d - k, M.d - k);
    for (int i = 0; i < M.d; ++i)
      for (int j = 0; j < M.d; ++j) {
        if (i < k && j < k) a(i, j) = t(i, j);
        else if (i >= k && j >= k) b(i - k, j - k) = t(i, j);
        else if (i >= k && j < k && t(i, j)) throw Error(Errc::Invariant, "subspace is not a submodule");
      }
    out.sub.action[s] = a;
    out.quotient.action[s] = b;
  }
  return out;
}

} // namespace adq
