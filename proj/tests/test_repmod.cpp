#include <doctest.h>

#include <set>

#include "adq/fixtures.hpp"
#include "adq/repmod.hpp"

using namespace adq;

namespace {

// Oracle: irreducible iff the orbit span of every nonzero vector, under all group element
// matrices, is the whole space. Exhaustive over F_p^d.
bool irreducible_bruteforce(const Group &G) {
  const Field &F = G.spec().F;
  const int d = G.n();
  std::vector<Mat> els;
  for (std::uint32_t i = 0; i < G.order(); ++i) els.push_back(G.element(i));
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= F.q();
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Elt> v(d);
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<Elt>(c % F.q());
      c /= F.q();
    }
    Echelon E(F, d);
    for (const Mat &g : els) E.insert(mat_vec(g, v));
    if (E.rank() < d) return false;
  }
  return true;
}

GModule direct_sum(const GModule &A, const GModule &B) {
  std::vector<Mat> act;
  for (std::size_t s = 0; s < A.action.size(); ++s) {
    Mat m(A.R, A.d + B.d, A.d + B.d);
    for (int i = 0; i < A.d; ++i)
      for (int j = 0; j < A.d; ++j) m(i, j) = A.action[s](i, j);
    for (int i = 0; i < B.d; ++i)
      for (int j = 0; j < B.d; ++j) m(A.d + i, A.d + j) = B.action[s](i, j);
    act.push_back(m);
  }
  return custom_module(A.G, act, "sum");
}

} // namespace

TEST_CASE("natural modules: irreducibility against the orbit oracle") {
  for (auto spec : {fixtures::block_sp2xsp2(), fixtures::imprimitive_1152(), fixtures::torus_order4(),
                    fixtures::quaternion_sl2_f3(), fixtures::dihedral8_f3(), fixtures::dihedral_rotations_f3(),
                    fixtures::isotropic_line_stabilizer()}) {
    auto G = Group::enumerate(spec);
    GModule M = natural_module(G);
    CAPTURE(spec.name);
    CHECK(is_irreducible(M) == irreducible_bruteforce(*G));
  }
}

TEST_CASE("fixture orders") {
  CHECK(Group::enumerate(fixtures::imprimitive_1152())->order() == 1152);
  CHECK(Group::enumerate(fixtures::block_sp2xsp2())->order() == 576);
  CHECK(Group::enumerate(fixtures::torus_order4())->order() == 4);
  CHECK(Group::enumerate(fixtures::isotropic_line_stabilizer())->order() == 1296);
  CHECK(Group::enumerate(fixtures::semilinear_1440())->order() == 1440);
  CHECK(Group::enumerate(fixtures::quaternion_sl2_f3())->order() == 8);
  CHECK(Group::enumerate(fixtures::dihedral8_f3())->order() == 8);
}

TEST_CASE("absolute irreducibility") {
  CHECK(abs_irreducible(natural_module(Group::enumerate(sp4_standard(3)))));
  CHECK(abs_irreducible(natural_module(Group::enumerate(fixtures::imprimitive_1152()))));
  CHECK(abs_irreducible(natural_module(Group::enumerate(fixtures::quaternion_sl2_f3()))));
  CHECK_FALSE(abs_irreducible(natural_module(Group::enumerate(fixtures::block_sp2xsp2()))));
  // Rotation by 90 degrees: irreducible over F_3, splits over F_9.
  auto C4 = Group::enumerate(fixtures::dihedral_rotations_f3());
  CHECK(is_irreducible(natural_module(C4)));
  CHECK_FALSE(abs_irreducible(natural_module(C4)));
}

TEST_CASE("fixed points") {
  auto G = Group::enumerate(fixtures::torus_order4());
  CHECK(h0(natural_module(G)).rank() == 0);
  CHECK(h0(trivial_module(G, Field::create(3))).rank() == 1);
  auto S = Group::enumerate(sl2_standard(Field::create(3)));
  CHECK(h0(natural_module(S)).rank() == 0);
}

TEST_CASE("dual module is a module") {
  auto G = Group::enumerate(fixtures::imprimitive_1152());
  GModule D = dual_module(natural_module(G));
  CHECK_NOTHROW(verify_module(D, 7));
  // transpose-inverse of the transpose-inverse is the original action
  GModule DD = dual_module(D);
  CHECK(DD.action == natural_module(G).action);
}

TEST_CASE("chop") {
  auto B = Group::enumerate(fixtures::block_sp2xsp2());
  auto f = chop(natural_module(B));
  REQUIRE(f.size() == 2);
  for (auto &x : f) {
    CHECK(x.module.d == 2);
    CHECK(x.multiplicity == 1);
  }
  auto T = Group::enumerate(fixtures::torus_order4());
  int total = 0;
  for (auto &x : chop(natural_module(T))) {
    CHECK(x.module.d == 1);
    total += x.multiplicity;
  }
  CHECK(total == 4);
}

TEST_CASE("hom spaces and simple submodules of S + S") {
  auto G = Group::enumerate(sl2_standard(Field::create(3)));
  GModule S = natural_module(G);
  GModule SS = direct_sum(S, S);
  CHECK(hom_space(S, S).size() == 1);
  CHECK(hom_space(S, SS).size() == 2);
  CHECK(hom_space(S, trivial_module(G, Field::create(3))).empty());
  auto subs = simple_submodules(SS);
  CHECK(subs.size() == 4);
  std::set<Mat> distinct(subs.begin(), subs.end());
  CHECK(distinct.size() == 4);
  for (const Mat &b : subs) CHECK(b.cols == 2);
}

TEST_CASE("split module") {
  auto B = Group::enumerate(fixtures::block_sp2xsp2());
  GModule M = natural_module(B);
  Rng rng(3);
  Mat sub = find_submodule(M, rng);
  REQUIRE(sub.cols == 2);
  Split sp = split_module(M, sub);
  CHECK(sp.sub.d == 2);
  CHECK(sp.quotient.d == 2);
  CHECK_NOTHROW(verify_module(sp.sub, 1));
  CHECK_NOTHROW(verify_module(sp.quotient, 1));
}
