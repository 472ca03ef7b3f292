// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "adq/cli.hpp"
#include "adq/cohom.hpp"
#include "adq/fixtures.hpp"
#include "adq/heights.hpp"
#include "oracles.hpp"

using namespace adq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Groups shared by several criteria: the p = 3 search of the symplectic group and the corpus.
struct Shared {
  cli::SearchOutput search3, search5;
  double search_seconds = 0;
  std::vector<GroupPtr> corpus;  // enumerated, distinct names
};

Shared &shared() {
  static Shared s;
  return s;
}

std::vector<GroupPtr> build_corpus(const cli::SearchOutput &search3) {
  std::vector<GroupPtr> out;
  for (const auto &f : fixtures::library()) {
    if (f.experimental) continue;
    try {
      out.push_back(Group::enumerate(f.spec, 20000));
    } catch (const Error &e) {
      if (e.code() != Errc::CapExceeded) throw;
    }
  }
  for (const auto &e : search3.entries)
    if (e.enumerated && e.order <= 20000) out.push_back(Group::enumerate(e.spec));
  // small subgroups of the symplectic and similitude groups, one per conjugacy class
  for (const char *amb : {"sp4_f3", "gsp4_f3"}) {
    auto G = Group::enumerate(fixtures::by_name(amb).spec);
    for (int k : {1, 2}) {
      auto subs = random_subgroup_search(*G, 77 + k, k, 300);
      for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i].order() <= 500)
          out.push_back(enumerate_subgroup(*G, subs[i], std::string(amb) + "_k" + std::to_string(k) + "_" +
                                                           std::to_string(i)));
    }
  }
  return out;
}

std::string tri_str(Tri t) { return tri_name(t); }

Outcome c1() {
  auto t0 = Clock::now();
  AdequacyReport r = assess(Group::enumerate(fixtures::by_name("gsp4_f3").spec));
  double secs = seconds_since(t0);
  bool ok = r.order_gamma_prime == 103680 && r.order_gamma == 51840 && r.condA == Tri::True && r.condB == Tri::True &&
            r.h1_adjoint == 0 && r.h1_trivial == 0 && r.adequate == Tri::True && r.tidy && !r.induced &&
            !r.split_induced && secs <= 300;
  std::ostringstream d;
  d << "GSp4(F3): " << csv_row(r) << " in " << secs << " s";
  return {ok, d.str()};
}

Outcome c2() {
  auto t0 = Clock::now();
  AdequacyReport r = assess(Group::enumerate(fixtures::by_name("imprimitive_1152").spec));
  double secs = seconds_since(t0);
  bool ok = r.order_gamma == 1152 && r.abs_irred && r.h1_adjoint == 0 && r.h1_trivial == 1 &&
            r.adequate == Tri::False && r.condA == Tri::True && secs <= 60;
  std::ostringstream d;
  d << "order " << r.order_gamma << ", abs_irred " << r.abs_irred << ", h1(sp4) " << r.h1_adjoint << ", h1(F3) "
    << r.h1_trivial << ", adequate " << tri_str(r.adequate) << ", spanning " << tri_str(r.condA) << " in " << secs
    << " s";
  return {ok, d.str()};
}

Outcome c3() {
  Shared &s = shared();
  auto t0 = Clock::now();
  cli::JobConfig cfg;
  cfg.seed = 20240601;
  cfg.samples = 200;
  cfg.num_gens = 2;
  cfg.threads = threads();
  s.search3 = cli::run_search(fixtures::by_name("sp4_f3").spec, cfg);
  s.search5 = cli::run_search(fixtures::by_name("sp4_f5").spec, cfg);
  s.search_seconds = seconds_since(t0);
  int bad = 0, irred = 0, unknown = 0;
  std::ostringstream d;
  for (const auto *out : {&s.search3, &s.search5})
    for (const auto &e : out->entries) {
      if (!e.abs_irred) continue;
      ++irred;
      if (e.condA == Tri::Unknown) ++unknown;
      if (e.condA == Tri::False || e.h0_adjoint != 0) {
        ++bad;
        d << " [" << e.spec.name << " order " << e.order << " condA " << tri_str(e.condA) << " h0 " << e.h0_adjoint
          << "]";
      }
    }
  std::ostringstream head;
  head << "200 tuples each; distinct subgroups " << s.search3.entries.size() << " (p=3), " << s.search5.entries.size()
       << " (p=5); abs-irreducible " << irred << ", spanning undecided " << unknown << ", violations " << bad << " in "
       << s.search_seconds << " s" << d.str();
  return {bad == 0 && unknown == 0 && s.search_seconds <= 1800, head.str()};
}

Outcome c4() {
  const std::set<std::uint64_t> allowed = {96, 240, 384, 1440, 1152};
  std::set<std::uint64_t> seen;
  bool ok = true;
  for (const auto &e : shared().search3.entries)
    if (e.abs_irred && e.adequate == Tri::False) {
      seen.insert(e.order);
      ok = ok && allowed.count(e.order);
    }
  std::ostringstream d;
  d << "non-adequate abs-irreducible orders:";
  for (auto o : seen) d << ' ' << o;
  if (seen.empty()) d << " none";
  return {ok, d.str()};
}

std::vector<GModule> modules_of(const GroupPtr &G) {
  std::vector<GModule> out = {trivial_module(G, G->spec().F), natural_module(G), dual_module(natural_module(G))};
  out.push_back(adjoint_module(G, lie_for(G->spec())));
  out.push_back(dual_module(out.back()));
  return out;
}

Outcome c5() {
  int pairs = 0, mismatches = 0;
  std::set<std::string> done;
  for (const auto &G : shared().corpus) {
    if (G->order() > 300) continue;
    for (const auto &M : modules_of(G)) {
      int a = h1_dim(M), b = h1_bruteforce(M, 300);
      ++pairs;
      if (a != b) ++mismatches;
    }
  }
  std::ostringstream d;
  d << pairs << " (group, module) pairs, " << mismatches << " mismatches";
  return {pairs >= 50 && mismatches == 0, d.str()};
}

Outcome c6() {
  int groups = 0, disagree = 0;
  for (const auto &G : shared().corpus) {
    if (G->order() > 500) continue;
    auto lie = lie_for(G->spec());
    bool span = spanning_sum_B(G, lie).verdict == Tri::True;
    bool direct = condB_by_submodules(G, lie);
    ++groups;
    if (span != direct) ++disagree;
  }
  std::ostringstream d;
  d << groups << " corpus groups of order <= 500, " << disagree << " disagreements";
  return {groups > 0 && disagree == 0, d.str()};
}

Outcome c7() {
  using namespace oracle;
  int tested = 0, failures = 0;
  for (auto R : {Ring::zmod(3, 2), Ring::zmod(5, 2)}) {
    Rng rng(R.p() * 7919);
    auto lines = rank_one_lines(R);
    const Field &F = R.residue_field();
    for (int k = 0; k < 100; ++k) {
      Mat f = random_mat(R, rng, 2);
      Poly cb = charpoly(f).residue();
      auto roots = roots_exhaustive(cb);
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      std::vector<Poly> targets = {Poly::constant(F, 1), cb};
      for (Elt r : roots) targets.push_back(eigen_factor(f, r));
      for (const Poly &pb : targets) {
        Summand N = invariant_summand_lift(f, pb);
        auto kbar = residue_kernel(f, pb);
        bool ok = N.rank() == pb.deg();
        if (pb.deg() == 1) {
          // brute force over every rank-one summand: exactly one is f-stable and reduces into kbar
          int matches = 0;
          for (const auto &v : lines) {
            std::vector<Elt> vb = {R.residue(v[0]), R.residue(v[1])};
            if (stable_line(f, v) && std::find(kbar.begin(), kbar.end(), vb) != kbar.end()) {
              ++matches;
              ok = ok && N.contains(v);
            }
          }
          ok = ok && matches == 1;
        }
        // monotone containment: the lift for a divisor sits inside the lift for the full polynomial
        ok = ok && invariant_summand_lift(f, cb).contains(N) && N.contains(invariant_summand_lift(f, targets[0]));
        if (!ok) ++failures;
      }
      ++tested;
    }
  }
  std::ostringstream d;
  d << tested << " matrices over Z/9 and Z/25, " << failures << " failures";
  return {tested >= 200 && failures == 0, d.str()};
}

Outcome c8() {
  using namespace oracle;
  int tested = 0, failures = 0;
  for (int p : {3, 5}) {
    Ring R = Ring::zmod(p, 3), R2 = Ring::zmod(p, 2);
    Rng rng(p * 104729);
    for (int it = 0; it < 60; ++it) {
      Mat g = random_semisimple(R, rng);
      LieLift L = l0_of(g);
      bool ok = bracket_closed(L) && l0_shape(L);
      // conjugation by h = 1 mod p
      std::vector<Elt> w = {static_cast<Elt>(p), static_cast<Elt>(p * below(rng, p)), 0, static_cast<Elt>(p)};
      Mat h = transvection(symplectic_form(R, 4), w);
      LieLift C = l0_of(h * g * *inverse(h));
      ok = ok && bracket_closed(C) && C.L0 == make_summand(ad_matrix(h, L.alg) * L.L0.basis);
      // change of ring
      LieLift D = l0_of(change_ring(g, R2));
      ok = ok && bracket_closed(D) && reduce_summand(gl_coords(L, L.L0), R2) == gl_coords(D, D.L0);
      // similitude version
      LieLift G = l0_of(g, LieType::GSp);
      ok = ok && bracket_closed(G) && l0_shape(G);
      if (!ok) ++failures;
      ++tested;
    }
  }
  std::ostringstream d;
  d << tested << " elements of GSp4(Z/27) and GSp4(Z/125), " << failures << " failures";
  return {tested >= 100 && failures == 0, d.str()};
}

Outcome c9() {
  auto Q = NumberFieldInvariants::rationals();
  bool ok = true;
  std::ostringstream d;
  for (auto sigma : {std::vector<std::uint64_t>{}, {2}, {2, 3}}) {
    double C = schanuel_constant(Q, sigma);
    auto n = brute_count_Q(sigma, 2000, threads());
    double ratio = static_cast<double>(n) / (C * 2000.0 * 2000.0);
    ok = ok && std::abs(ratio - 1) <= 0.03;
    d << "|S|=" << sigma.size() << " count " << n << " ratio " << ratio << "; ";
  }
  std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19};
  for (std::size_t k = 0; k < primes.size(); ++k)
    for (std::size_t j = k + 1; j < primes.size(); ++j) {
      LocalFactor a = local_factor({primes[k]}), b = local_factor({primes[j]}), ab = local_factor({primes[k], primes[j]});
      ok = ok && ab.num * a.den * b.den == a.num * b.num * ab.den;
    }
  d << "local factors multiplicative";
  return {ok, d.str()};
}

Outcome c10() {
  RootDatum c2 = builtin_root_datum("C2");
  validate_root_datum(c2);
  auto bad = bad_primes(c2, 200);
  std::uint64_t w = weyl_order(c2);
  bool coprime_good = true;
  for (std::int64_t l = 2; l < 200; ++l)
    if (is_prime(l) && w % l != 0) coprime_good = coprime_good && !bad.count(l);
  std::ostringstream d;
  d << "bad primes below 200:";
  for (auto l : bad) d << ' ' << l;
  d << "; |W| = " << w;
  return {bad == std::set<std::int64_t>{2} && w == 8 && coprime_good, d.str()};
}

Outcome c11() {
  std::ostringstream d;
  bool ok = true;
  for (int p : {11, 13}) {
    AdequacyReport r = assess(Group::enumerate(fixtures::sl2_in_gl2(p)));
    ok = ok && r.adequate == Tri::True;
    d << "SL2(F" << p << ") adequate " << tri_str(r.adequate) << "; ";
  }
  AdequacyReport r = assess(Group::enumerate(fixtures::dihedral_rotations_f3()));
  bool failed_span_or_coh = r.condA != Tri::True || r.h0_adjoint_dual != 0 || r.h1_trivial != 0 ||
                            r.h1_adjoint_dual != 0;
  ok = ok && r.adequate == Tri::False && failed_span_or_coh;
  d << "C4 rotations in GL2(F3): abs_irred " << r.abs_irred << ", condA " << tri_str(r.condA) << ", h0 "
    << r.h0_adjoint_dual << ", adequate " << tri_str(r.adequate);
  return {ok, d.str()};
}

} // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 GSp4(F3) row", c1},
      {"2 imprimitive 1152 row", c2},
      {"3 random subgroups of Sp4(F3), Sp4(F5)", c3},
      {"4 non-adequate orders", c4},
      {"5 h1 against all-pairs computation", c5},
      {"6 span form of (B) against simple submodules", c6},
      {"7 uniqueness and containment of lifts", c7},
      {"8 L0 under conjugation and change of ring", c8},
      {"9 height counts", c9},
      {"10 bad primes of C2", c10},
      {"11 GL2 spot checks", c11},
  };
  int failures = 0;
  for (auto &[name, fn] : criteria) {
    if (name[0] == '5') shared().corpus = build_corpus(shared().search3);
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  return failures;
}
