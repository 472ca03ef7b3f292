#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "adq/repmod.hpp"

namespace adq {

enum class LieType { Sp, SO, GL, SL, GSp };
const char *lie_type_name(LieType t);

/// Three-valued verdict; Unknown is reported as INDETERMINATE.
enum class Tri { False, True, Unknown };
const char *tri_name(Tri t);
Tri tri_and(Tri a, Tri b);
inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

/// Basis (as n^2-vectors, columns) of sp/so = {A : A^T J + J A = 0}, gsp (with A^T J + J A in <J>),
/// gl, or sl; over a field or a local ring.
Mat lie_basis(LieType t, int n, const Mat &J, const Ring &R);

/// gl_n = g0 + m with g0 the Lie algebra of the derived group (sp, so or sl) and projection pi.
struct ClassicalLieData {
  LieType type;  // the ambient type; g0 is sp for Sp/GSp, so for SO, sl for GL/SL
  Ring R;
  int n = 0;
  Mat J;
  Summand g0;    // in gl_n coordinates (n^2)
  Summand m;     // complement
  Mat proj;      // n^2 x n^2 projection onto g0 along m
  int rank = 0;  // rank of the derived group

  int dim() const { return g0.rank(); }
  /// Coordinates in the g0 basis of an element of g0.
  std::vector<Elt> coords(const Mat &A) const;
  Mat from_coords(const std::vector<Elt> &c) const;
  Mat basis_elt(int j) const;
  /// pi applied to a matrix, as g0 coordinates.
  std::vector<Elt> project(const Mat &A) const;
  /// Matrix of X -> g X g^-1 on g0 coordinates.
  Mat ad_group(const Mat &g) const;
  /// Matrix of X -> [a, X] on g0 coordinates.
  Mat ad_lie(const Mat &a) const;
};

ClassicalLieData make_lie(LieType t, int n, const Mat &J, const Ring &R);
/// Lie data matching a group spec (sp4 for GSp4, sl_n for GL_n, ...); throws when p | n for GL/SL.
ClassicalLieData lie_for(const GroupSpec &s);

Mat bracket(const Mat &x, const Mat &y);

GModule adjoint_module(const GroupPtr &G, const ClassicalLieData &lie);

/// span{I, g, ..., g^(n-1)} as n^2-vectors; throws Errc::NotSemisimple.
Summand z_centralizer_gl(const Mat &g);

struct LieZ {
  Mat basis;  // g0 coordinates, columns
  bool lower_bound = false;
};
/// Lie Z(Z(g)) intersected with g0, via the projection of the span of powers, with the
/// orthogonal two-dimensional eigenspace correction.
LieZ lieZ_of_centralizer(const Mat &g, const ClassicalLieData &lie);
/// g0^g as g0 coordinates.
Mat fixed_subalgebra(const Mat &g, const ClassicalLieData &lie);
bool is_regular_semisimple(const Group &G, std::uint32_t x, const ClassicalLieData &lie);

struct SpanResult {
  Tri verdict = Tri::False;
  int dim = 0;
};
/// Sum over semisimple class representatives of lieZ, closed under the adjoint action.
SpanResult spanning_sum_A(const GroupPtr &G, const ClassicalLieData &lie);
/// Sum over regular semisimple class representatives of fixed subalgebras, closed likewise.
SpanResult spanning_sum_B(const GroupPtr &G, const ClassicalLieData &lie);
/// Condition (B) quantified directly: every simple submodule of the dual adjoint has a nonzero
/// fixed vector under some regular semisimple element.
bool condB_by_submodules(const GroupPtr &G, const ClassicalLieData &lie, std::uint64_t seed = 1);

/// Smallest r with c_r(ad a) != 0 for some sampled a.
int nilpotent_rank(const ClassicalLieData &lie, std::uint64_t seed = 1, int samples = 20);
bool is_ad_regular(const Mat &a, const ClassicalLieData &lie);

struct RootDatum {
  std::string name;
  int r = 0;
  std::vector<std::vector<std::int64_t>> roots, coroots;
};
RootDatum builtin_root_datum(const std::string &name);
std::vector<std::string> builtin_root_data();
/// Text format: "rank r" then one line per root "root a b .. coroot c d ..", '#' comments.
RootDatum parse_root_datum(const std::string &text);
/// Throws Errc::Input if a pairing is not 2 or a reflection does not permute the roots.
void validate_root_datum(const RootDatum &d);
std::uint64_t weyl_order(const RootDatum &d);
/// Primes l < bound with l-torsion in X/Z Phi' or X^/Z Phi'^ for some subset Phi'.
std::set<std::int64_t> bad_primes(const RootDatum &d, std::int64_t bound);

struct TwDelta {
  int n_v = 0;
  std::uint64_t p_part = 1;               // p-part of q_v - 1
  std::vector<std::uint64_t> invariants;  // cyclic factors of Delta_v
};
/// g = diag(d0,d1,d2,d3) in GSp4(F_q) for the standard J; q_v = 1 mod p.
TwDelta tw_delta(const Field &F, const std::vector<Elt> &diag, std::uint64_t q_v);

} // namespace adq
