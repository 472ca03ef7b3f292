#include <algorithm>

#include "adq/lift.hpp"

namespace adq {

namespace {

RPoly rmod(const RPoly &a, const RPoly &m) { return divmod_monic(a, m).second; }

RPoly one(const Ring &R) { return RPoly(R, {1}); }

} // namespace

HenselSplit hensel_lift(const RPoly &F, const Poly &pbar, const Poly &qbar) {
  const Ring &R = F.R;
  if (gcd(pbar, qbar).deg() != 0) throw Error(Errc::NotCoprime, "residue factors are not coprime");
  Poly pm = pbar.monic(), qm = qbar.monic();
  XGcd g = xgcd(pm, qm);
  Elt gi = pm.F.inv(g.g.c[0]);
  HenselSplit h{RPoly::lift(R, pm), RPoly::lift(R, qm), RPoly::lift(R, scale(g.s, gi)), RPoly::lift(R, scale(g.t, gi))};
  // Linear lifting: each step gains at least one power of the maximal ideal.
  for (int it = 0; it < R.N(); ++it) {
    RPoly e = F - h.p * h.q;
    if (e.is_zero()) break;
    auto [quo, dp] = divmod_monic(e * h.s, h.p);
    RPoly dq = e * h.r + quo * h.q;
    h.p = h.p + dp;
    h.q = h.q + dq;
  }
  if (!(h.p * h.q == F)) throw Error(Errc::Invariant, "Hensel lifting did not converge");
  // Bezout refresh by the truncated geometric series of E = 1 - (p r + q s).
  for (int it = 0; it < R.N(); ++it) {
    RPoly E = one(R) - (h.p * h.r + h.q * h.s);
    if (E.is_zero()) break;
    RPoly sum = one(R), pw = one(R);
    for (int k = 1; k < R.N(); ++k) {
      pw = pw * E;
      sum = sum + pw;
    }
    h.r = h.r * sum;
    h.s = h.s * sum;
  }
  auto [k, r0] = divmod_monic(h.r, h.q);
  h.r = r0;
  h.s = h.s + k * h.p;
  h.s = rmod(h.s, h.p);
  if (!(h.p * h.r + h.q * h.s == one(R))) throw Error(Errc::Invariant, "Bezout identity failed after lifting");
  return h;
}

HenselSplit hensel_factor(const Mat &f, const Poly &pbar) {
  RPoly F = charpoly(f);
  Poly Fbar = F.residue();
  auto [qbar, rem] = divmod(Fbar, pbar.monic());
  if (!rem.is_zero()) throw Error(Errc::Input, "chosen factor does not divide the residue characteristic polynomial");
  return hensel_lift(F, pbar.monic(), qbar);
}

Poly eigen_factor(const Mat &f, Elt lambda) {
  const Field &F = f.R.residue_field();
  Poly cp = charpoly(f).residue();
  Poly lin(F, {F.neg(lambda), 1});
  Poly out = Poly::constant(F, 1);
  while (cp.deg() > 0) {
    auto [q, r] = divmod(cp, lin);
    if (!r.is_zero()) break;
    out = out * lin;
    cp = q;
  }
  return out;
}

Mat lift_idempotent(const Mat &f, const Poly &pbar) {
  if (pbar.deg() == 0) return Mat(f.R, f.rows, f.cols);
  HenselSplit h = hensel_factor(f, pbar);
  return eval_at(h.q * h.s, f);
}

Summand invariant_summand_lift(const Mat &f, const Poly &pbar) { return image(lift_idempotent(f, pbar)); }

Summand family_lift(const std::vector<Mat> &fs, const std::vector<std::vector<Elt>> &S) {
  if (fs.empty()) throw Error(Errc::Input, "empty family");
  const Ring &R = fs[0].R;
  int n = fs[0].rows;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (fs[i] * fs[j] != fs[j] * fs[i]) throw Error(Errc::NotCommuting, "family members do not commute");
  for (const Mat &f : fs) {
    Poly cp = charpoly(f).residue();
    int cnt = 0;
    std::vector<Elt> roots = roots_exhaustive(cp);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (Elt l : roots) cnt += eigen_factor(f, l).deg();
    if (cnt != n) throw Error(Errc::EigenvaluesNotRational, "residue eigenvalues are not rational");
  }
  Mat total(R, n, n);
  for (const auto &tuple : S) {
    if (tuple.size() != fs.size()) throw Error(Errc::Input, "eigenvalue tuple has the wrong length");
    Mat e = Mat::identity(R, n);
    for (std::size_t i = 0; i < fs.size(); ++i) e = e * lift_idempotent(fs[i], eigen_factor(fs[i], tuple[i]));
    total = total + e;
  }
  return image(total);
}

Summand topnil_part(const Mat &f) { return invariant_summand_lift(f, eigen_factor(f, 0)); }

bool is_topnil_vector(const Mat &f, const std::vector<Elt> &v) {
  std::vector<Elt> w = mat_vec(mpow(f, static_cast<std::uint64_t>(f.rows) * f.R.N()), v);
  for (Elt e : w)
    if (e) return false;
  return true;
}

} // namespace adq
