#pragma once

#include <vector>

#include "adq/liealg.hpp"

namespace adq {

/// charpoly(f) = p q over the ring with p, q monic lifting pbar, qbar, and p r + q s = 1.
struct HenselSplit {
  RPoly p, q, r, s;
};
/// Factor a monic polynomial over Z/p^N or the dual numbers; throws Errc::NotCoprime.
HenselSplit hensel_lift(const RPoly &F, const Poly &pbar, const Poly &qbar);
/// Split charpoly(f) at pbar (qbar is the residue cofactor). Throws Errc::Input when pbar
/// does not divide the residue characteristic polynomial.
HenselSplit hensel_factor(const Mat &f, const Poly &pbar);

/// (x - lambda)^m with m the multiplicity of lambda in the residue characteristic polynomial.
Poly eigen_factor(const Mat &f, Elt lambda);

/// The f-stable direct summand lifting ker pbar(fbar): the image of q(f) s(f).
Summand invariant_summand_lift(const Mat &f, const Poly &pbar);
/// Idempotent q(f) s(f) onto that summand.
Mat lift_idempotent(const Mat &f, const Poly &pbar);

/// Summand lifting the sum of the joint residue eigenspaces indexed by the tuples in S.
/// Throws Errc::NotCommuting or Errc::EigenvaluesNotRational.
Summand family_lift(const std::vector<Mat> &fs, const std::vector<std::vector<Elt>> &S);

/// Summand on which f is topologically nilpotent.
Summand topnil_part(const Mat &f);
/// f^(n N) v = 0.
bool is_topnil_vector(const Mat &f, const std::vector<Elt> &v);

/// Matrix of X -> g X g^-1 on the coordinates of a Lie algebra given as a summand of gl_n.
Mat ad_matrix(const Mat &g, const Summand &alg);

/// antidiag(1,..,1,-1,..,-1) over the ring.
Mat symplectic_form(const Ring &R, int n);

/// Standard GSp4(F_p) generators lifted to the ring with entries in (-p/2, p/2); these are
/// transvections with 0/1 vectors and diag(1,1,nu,nu), so the lifts stay in GSp4.
std::vector<Mat> gsp4_generators_lifted(const Ring &R);
/// Random product of lifted generators and their inverses.
Mat random_gsp4_element(const Ring &R, Rng &rng, int length = 24);

struct LieLift {
  Ring R;
  Mat g;
  Summand alg;  // the Lie algebra in gl_n coordinates
  Summand L0;   // algebra coordinates
  Summand L1;
  Mat ad;       // Ad(g) on algebra coordinates

  Mat element(const std::vector<Elt> &alg_coords) const;
};
/// L0 = topologically nilpotent part of Ad(g) - 1 on sp (type Sp) or gsp (type GSp), with the
/// complementary Ad(g)-stable summand. Throws Errc::ResidueNotSemisimple; Errc::Invariant if
/// the bracket closure check fails.
LieLift l0_of(const Mat &g, LieType type = LieType::Sp);
/// Elements of L0 commuting with all of L0, in algebra coordinates.
Summand center_of_l0(const LieLift &L);

} // namespace adq
