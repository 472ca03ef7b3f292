#include <doctest.h>

#include "adq/cohom.hpp"
#include "adq/fixtures.hpp"
#include "adq/liealg.hpp"

using namespace adq;

namespace {

std::vector<GModule> modules_of(const GroupPtr &G) {
  std::vector<GModule> out = {trivial_module(G, G->spec().F), natural_module(G), dual_module(natural_module(G))};
  auto lie = lie_for(G->spec());
  out.push_back(adjoint_module(G, lie));
  out.push_back(dual_module(out.back()));
  return out;
}

} // namespace

TEST_CASE("h1 tree method agrees with the all-pairs oracle") {
  std::vector<GroupPtr> groups;
  for (auto s : {fixtures::quaternion_sl2_f3(), fixtures::dihedral8_f3(), fixtures::dihedral_rotations_f3(),
                 fixtures::torus_order4(), sl2_standard(Field::create(3)), fixtures::sl2_in_gl2(5)})
    groups.push_back(Group::enumerate(s));
  auto sp4 = Group::enumerate(sp4_standard(3));
  for (auto s : {sp4_standard(3), fixtures::block_sp2xsp2(), fixtures::isotropic_line_stabilizer()}) {
    auto A = Group::enumerate(s);
    for (const auto &H : random_subgroup_search(*A, 11, 2, 40))
      if (H.order() > 1 && H.order() <= 300) groups.push_back(enumerate_subgroup(*A, H));
  }
  int pairs = 0;
  for (const auto &G : groups)
    for (const auto &M : modules_of(G)) {
      CAPTURE(G->order());
      CAPTURE(M.tag);
      CHECK(h1_dim(M) == h1_bruteforce(M));
      ++pairs;
    }
  CHECK(pairs >= 50);
}

TEST_CASE("h1 of the trivial module counts homomorphisms to F_p") {
  for (auto s : {sl2_standard(Field::create(3)), fixtures::imprimitive_1152(), fixtures::block_sp2xsp2(),
                 fixtures::isotropic_line_stabilizer(), fixtures::gl2_f5()}) {
    auto G = Group::enumerate(s);
    CAPTURE(s.name);
    CHECK(h1_dim(trivial_module(G, s.F)) == G->hom_to_Fp_dim(s.F.p()));
  }
  CHECK(h1_dim(trivial_module(Group::enumerate(sl2_standard(Field::create(3))), Field::create(3))) == 1);
}

TEST_CASE("known values") {
  // SL2(F_5) on its adjoint module has a one-dimensional H^1; SL2(F_7) has none.
  auto S5 = Group::enumerate(fixtures::sl2_in_gl2(5));
  CHECK(h1_dim(adjoint_module(S5, lie_for(S5->spec()))) == 1);
  auto S7 = Group::enumerate(fixtures::sl2_in_gl2(7));
  CHECK(h1_dim(adjoint_module(S7, lie_for(S7->spec()))) == 0);
  auto imp = Group::enumerate(fixtures::imprimitive_1152());
  auto lie = lie_for(imp->spec());
  CHECK(h1_dim(adjoint_module(imp, lie)) == 0);
  CHECK(h1_dim(trivial_module(imp, imp->spec().F)) == 1);
}

TEST_CASE("h1 for Sp4(F_3)") {
  auto G = Group::enumerate(sp4_standard(3));
  auto lie = lie_for(G->spec());
  CHECK(h1_dim(adjoint_module(G, lie)) == 0);
  CHECK(h1_dim(dual_module(adjoint_module(G, lie))) == 0);
  CHECK(h1_dim(trivial_module(G, G->spec().F)) == 0);
  CHECK(h0_dim(adjoint_module(G, lie)) == 0);
}

TEST_CASE("brute-force oracle refuses large groups") {
  auto G = Group::enumerate(fixtures::imprimitive_1152());
  CHECK_THROWS_AS(h1_bruteforce(natural_module(G)), Error);
}
