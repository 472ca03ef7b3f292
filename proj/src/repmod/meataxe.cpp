#include "adq/repmod.hpp"

namespace adq {

namespace {

Mat random_algebra_element(const GModule &M, Rng &rng) {
  const Field &F = M.field();
  Mat theta(M.R, M.d, M.d);
  std::size_t m = M.action.size();
  for (int t = 0; t < 4; ++t) {
    Mat w = Mat::identity(M.R, M.d);
    int len = static_cast<int>(below(rng, 5));
    for (int i = 0; i < len && m; ++i) w = w * M.action[below(rng, m)];
    theta = theta + scale(w, static_cast<Elt>(below(rng, F.q())));
  }
  return theta;
}

GModule transposed(const GModule &M) {
  GModule T = M;
  for (auto &a : T.action) a = transpose(a);
  return T;
}

} // namespace

Mat find_submodule(const GModule &M, Rng &rng, int budget) {
  if (M.d <= 1) return Mat(M.R, M.d, 0);
  GModule T = transposed(M);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Mat theta = random_algebra_element(M, rng);
    for (const auto &[f, mult] : poly_factor(charpoly_field(theta), rng())) {
      (void)mult;
      Mat ft = eval_at(RPoly::lift(M.R, f), theta);
      Mat N = kernel_basis(ft);
      Mat S = spin(M, {N.col(0)});
      if (S.cols < M.d) return S;
      if (N.cols != f.deg()) continue;
      // Norton: v spins to everything; check the transposed side.
      Mat Nt = kernel_basis(transpose(ft));
      Mat St = spin(T, {Nt.col(0)});
      if (St.cols == M.d) return Mat(M.R, M.d, 0);
      Mat ann = kernel_basis(transpose(St));
      return spin(M, [&] {
        std::vector<std::vector<Elt>> v;
        for (int j = 0; j < ann.cols; ++j) v.push_back(ann.col(j));
        return v;
      }());
    }
  }
  throw Error(Errc::RandomnessExhausted, "meataxe retry budget exhausted");
}

bool is_irreducible(const GModule &M, std::uint64_t seed) {
  Rng rng(seed);
  return find_submodule(M, rng).cols == 0;
}

std::vector<Factor> chop(const GModule &M, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Factor> out;
  std::vector<GModule> work = {M};
  while (!work.empty()) {
    GModule X = std::move(work.back());
    work.pop_back();
    if (X.d == 0) continue;
    Mat S = find_submodule(X, rng);
    if (S.cols) {
      Split sp = split_module(X, S);
      work.push_back(std::move(sp.sub));
      work.push_back(std::move(sp.quotient));
      continue;
    }
    bool merged = false;
    for (auto &f : out)
      if (isomorphic_simple(f.module, X)) {
        ++f.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({X, 1});
  }
  return out;
}

} // namespace adq
