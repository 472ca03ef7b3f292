#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adq/cohom.hpp"
#include "adq/liealg.hpp"

namespace adq {

struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t classes = 0;
  std::uint64_t abelianization = 0;  // |G : G'|
  std::uint64_t center = 0;
};
Fingerprint fingerprint(const Group &G);

struct AdequacyReport {
  std::uint64_t order_gamma_prime = 0;
  std::uint64_t order_gamma = 0;
  bool similitude_surjective = false;
  bool abs_irred = false;
  Tri condA = Tri::False;
  Tri condB = Tri::False;
  int spanA_dim = 0, spanB_dim = 0;
  int h0_adjoint_dual = 0;
  int h1_trivial = 0;
  int h1_adjoint = 0;
  int h1_adjoint_dual = 0;
  Tri adequate = Tri::False;
  bool tidy = false;
  std::string tidy_witness;
  bool induced = false;
  bool split_induced = false;
  Fingerprint fp;
  std::uint64_t seed = 0;
  std::string name;
  std::string notes;
};

struct AssessOptions {
  std::uint64_t seed = 1;
  bool structure = true;  // tidy and induced checks
};

/// Full report. For GSp ambients the Lie-theoretic and cohomological data are computed on
/// Gamma = Gamma' ∩ Sp; for other ambients Gamma = Gamma'.
AdequacyReport assess(const GroupPtr &Gp, const AssessOptions &opt = {});
/// Gamma' ∩ Sp as a standalone group (the group itself when not symplectic).
GroupPtr symplectic_part(const GroupPtr &Gp);

struct TidyResult {
  bool tidy = false;
  std::string witness;  // formatted matrix of the witnessing element
};
TidyResult tidy_check(const Group &Gp);

struct InducedResult {
  bool induced = false;
  bool split_induced = false;
};
InducedResult induced_checks(const Group &G);

/// No simple submodule of the natural module is totally isotropic for J.
bool g_irreducible(const GroupPtr &G, std::uint64_t seed = 1);
/// Number of C in the commutant of G with C^T J C = J.
std::uint64_t centralizer_order_in_isometries(const Group &G);

struct ReasonablePrecheck {
  Tri condA = Tri::False;
  int h0_adjoint_dual = 0;
  int h1_trivial = 0;
  bool passes = false;
  std::string notes;
};
ReasonablePrecheck reasonable_precheck(const GroupPtr &Gp, std::uint64_t seed = 1);

/// Checks on a group known only by generators (too large to enumerate): Burnside span,
/// adjoint fixed points, and the spanning sum over sampled semisimple elements (True is
/// certified; a short span gives Unknown).
struct GeneratorReport {
  bool abs_irred = false;
  int h0_adjoint = 0;
  Tri condA = Tri::Unknown;
  int spanA_dim = 0;
};
GeneratorReport assess_generators(const GroupSpec &s, std::uint64_t seed, int samples = 400);

extern const char *const kCsvHeader;
std::string csv_row(const AdequacyReport &r);

} // namespace adq
