#include <set>

#include "adq/repmod.hpp"

namespace adq {

std::vector<Mat> hom_space(const GModule &S, const GModule &M) {
  int ds = S.d, dm = M.d, u = ds * dm;
  const Ring &R = M.R;
  std::vector<Mat> out;
  if (u == 0) return out;
  // Unknown X (dm x ds), index i*ds + j; rows: (rho_M X - X rho_S)(i,j) = 0 per generator.
  Mat sys(R, static_cast<int>(M.action.size()) * u, u);
  for (std::size_t s = 0; s < M.action.size(); ++s) {
    const Mat &a = M.action[s], &b = S.action[s];
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < ds; ++j) {
        int row = static_cast<int>(s) * u + i * ds + j;
        for (int k = 0; k < dm; ++k) sys(row, k * ds + j) = R.add(sys(row, k * ds + j), a(i, k));
        for (int k = 0; k < ds; ++k) sys(row, i * ds + k) = R.sub(sys(row, i * ds + k), b(k, j));
      }
  }
  Mat K = kernel_basis(sys);
  for (int c = 0; c < K.cols; ++c) {
    Mat X(R, dm, ds);
    X.a = K.col(c);
    out.push_back(std::move(X));
  }
  return out;
}

bool isomorphic_simple(const GModule &A, const GModule &B) {
  return A.d == B.d && !hom_space(A, B).empty();
}

std::vector<Mat> simple_submodules(const GModule &M, std::uint64_t seed, std::uint64_t budget) {
  const Field &F = M.field();
  std::vector<Mat> out;
  std::set<std::vector<Elt>> seen;
  std::uint64_t spent = 0;
  for (const auto &fac : chop(M, seed)) {
    auto H = hom_space(fac.module, M);
    int h = static_cast<int>(H.size());
    if (!h) continue;
    // Projective points of F^h: first nonzero coordinate equal to 1.
    std::vector<Elt> c(h, 0);
    for (int lead = 0; lead < h; ++lead) {
      std::uint64_t tail = 1;
      for (int i = lead + 1; i < h; ++i) tail *= F.q();
      spent += tail;
      if (spent > budget) throw Error(Errc::SubsetBudgetExceeded, "too many simple submodules to enumerate");
      for (std::uint64_t t = 0; t < tail; ++t) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        std::uint64_t r = t;
        for (int i = lead + 1; i < h; ++i) {
          c[i] = static_cast<Elt>(r % F.q());
          r /= F.q();
        }
        Mat phi(M.R, M.d, fac.module.d);
        for (int i = 0; i < h; ++i)
          if (c[i]) phi = phi + scale(H[i], c[i]);
        Mat basis = transpose(rref(transpose(phi)));
        Mat img(M.R, M.d, rank(phi));
        for (int j = 0; j < img.cols; ++j) img.set_col(j, basis.col(j));
        if (seen.insert(img.a).second) out.push_back(std::move(img));
      }
    }
  }
  return out;
}

} // namespace adq
