#include "adq/liealg.hpp"

namespace adq {

TwDelta tw_delta(const Field &F, const std::vector<Elt> &diag, std::uint64_t q_v) {
  int p = F.p();
  if (q_v < 2 || (q_v - 1) % p != 0) throw Error(Errc::ResidueCondition, "q_v must be 1 mod p");
  if (diag.size() != 4) throw Error(Errc::Input, "expected four diagonal entries");
  Ring R = Ring::field(F);
  Mat g = Mat::diag(R, diag);
  Mat J = standard_form(Ambient::GSp, 4, F);
  if (!similitude(g, J)) throw Error(Errc::Input, "element is not in GSp4");
  // Centralizer of g in gsp4, then its center.
  Mat basis = lie_basis(LieType::GSp, 4, J, R);
  int dim = basis.cols;
  auto elt = [&](const std::vector<Elt> &c) {
    Mat A(R, 4, 4);
    A.a = mat_vec(basis, c);
    return A;
  };
  auto unit = [&](int j) {
    std::vector<Elt> c(dim, 0);
    c[j] = 1;
    return c;
  };
  Mat gi = *inverse(g);
  Mat fix(R, 16, dim);
  for (int j = 0; j < dim; ++j) {
    Mat B = elt(unit(j));
    fix.set_col(j, (g * B * gi - B).a);
  }
  Mat C = kernel_basis(fix);  // centralizer, in basis coordinates
  Mat sys(R, 16 * C.cols, C.cols);
  for (int k = 0; k < C.cols; ++k) {
    Mat Y = elt(C.col(k));
    for (int j = 0; j < C.cols; ++j) {
      Mat br = bracket(elt(C.col(j)), Y);
      for (int i = 0; i < 16; ++i) sys(16 * k + i, j) = br.a[i];
    }
  }
  int zdim = kernel_basis(sys).cols;
  TwDelta out;
  out.n_v = zdim - 1;
  std::uint64_t m = q_v - 1;
  while (m % p == 0) {
    m /= p;
    out.p_part *= p;
  }
  out.invariants.assign(out.n_v, out.p_part);
  return out;
}

} // namespace adq
