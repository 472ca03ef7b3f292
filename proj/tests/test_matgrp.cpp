#include <doctest.h>

#include <map>
#include <set>

#include "adq/matgrp.hpp"
#include "adq/fixtures.hpp"

using namespace adq;

namespace {

// Oracle: conjugacy classes by applying every element as a conjugator to every element.
std::size_t class_count_bruteforce(const Group &G) {
  std::vector<std::vector<Mat>> els;
  std::set<Mat> seen;
  std::size_t count = 0;
  std::vector<Mat> all, invs;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    all.push_back(G.element(i));
    invs.push_back(*inverse(all.back()));
  }
  for (const Mat &x : all) {
    if (seen.count(x)) continue;
    ++count;
    for (std::size_t g = 0; g < all.size(); ++g) seen.insert(invs[g] * x * all[g]);
  }
  return count;
}

GroupSpec cyclic6_f3() {
  // diag(-1, 1) * [[1,1],[0,1]] generates Z/2 x Z/3 = Z/6 over F_3.
  GroupSpec s;
  s.F = Field::create(3);
  s.n = 2;
  s.ambient = Ambient::GL;
  s.gens = {Mat::from_ints(s.ring(), {{-1, -1}, {0, -1}})};
  return s;
}

} // namespace

TEST_CASE("enumerate small and standard groups") {
  auto sl2 = Group::enumerate(sl2_standard(Field::create(3)));
  CHECK(sl2->order() == 24);
  CHECK(Group::enumerate(sl2_standard(Field::create(5)))->order() == 120);
  auto sp4 = Group::enumerate(sp4_standard(3));
  CHECK(sp4->order() == 51840);
  auto gsp4 = Group::enumerate(gsp4_standard(3));
  CHECK(gsp4->order() == 103680);
}

TEST_CASE("cap and invalid generators") {
  try {
    Group::enumerate(sp4_standard(3), 1000);
    FAIL("expected cap");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::CapExceeded);
    CHECK(e.partial() == 1000);
  }
  GroupSpec bad = sp4_standard(3);
  bad.gens.push_back(Mat::diag(bad.ring(), {1, 1, 2, 2}));
  CHECK_THROWS_AS(Group::enumerate(bad), Error);
  GroupSpec sing = sl2_standard(Field::create(3));
  sing.gens.push_back(Mat::from_ints(sing.ring(), {{1, 1}, {1, 1}}));
  try {
    validate(sing);
    FAIL("expected invalid generator");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::InvalidGenerator);
  }
}

TEST_CASE("closure and inverse tables") {
  auto G = Group::enumerate(sl2_standard(Field::create(3)));
  for (std::uint32_t a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == 0);
    for (std::uint32_t b = 0; b < G->order(); ++b) CHECK(G->find(G->element(a) * G->element(b)).has_value());
  }
  for (std::uint32_t i = 1; i < G->order(); ++i)
    CHECK(G->element(i) == G->element(G->parent(i)) * G->spec().gens[G->pgen(i)]);
}

TEST_CASE("conjugacy classes") {
  auto sl2 = Group::enumerate(sl2_standard(Field::create(3)));
  CHECK(sl2->classes().size() == 7);
  CHECK(class_count_bruteforce(*sl2) == 7);
  auto c6 = Group::enumerate(cyclic6_f3());
  CHECK(c6->order() == 6);
  CHECK(c6->classes().size() == 6);
  CHECK(c6->is_abelian());

  auto sp4 = Group::enumerate(sp4_standard(3));
  const auto &cl = sp4->classes();
  CHECK(cl.size() == 34);
  std::uint64_t total = 0;
  for (const auto &c : cl) {
    total += c.size;
    CHECK(sp4->order() % c.size == 0);
    // Orbit-stabilizer against a brute-force centralizer count.
    std::uint64_t cent = 0;
    for (std::uint32_t g = 0; g < sp4->order(); ++g) cent += sp4->mul(g, c.rep) == sp4->mul(c.rep, g);
    CHECK(cent * c.size == sp4->order());
  }
  CHECK(total == sp4->order());
}

TEST_CASE("semisimplicity") {
  auto sp4 = Group::enumerate(sp4_standard(3));
  CHECK(sp4->is_semisimple(0));
  CHECK_FALSE(sp4->is_semisimple(sp4->gen_index(0)));
}

TEST_CASE("derived subgroup, abelianization, index two") {
  auto c6 = Group::enumerate(cyclic6_f3());
  CHECK(c6->hom_to_Fp_dim(3) == 1);
  CHECK(c6->index2_subgroups().size() == 1);

  auto sl2 = Group::enumerate(sl2_standard(Field::create(3)));
  CHECK(sl2->derived().order() == 8);
  CHECK(sl2->hom_to_Fp_dim(3) == 1);
  CHECK(sl2->index2_subgroups().empty());

  auto sp4 = Group::enumerate(sp4_standard(3));
  CHECK(sp4->derived().order() == sp4->order());
  CHECK(sp4->hom_to_Fp_dim(3) == 0);

  auto gsp4 = Group::enumerate(gsp4_standard(3));
  CHECK(gsp4->derived().order() == 51840);
  auto idx2 = gsp4->index2_subgroups();
  REQUIRE(idx2.size() == 1);
  CHECK(idx2[0].order() == 51840);

  auto imp = Group::enumerate(fixtures::imprimitive_1152());
  CHECK(imp->order() == 1152);
  auto k2 = imp->index2_subgroups();
  CHECK(!k2.empty());
  int r = imp->hom_to_Fp_dim(2);
  CHECK(k2.size() == (1u << r) - 1);
  bool has_block = false;
  for (const auto &K : k2) {
    CHECK(K.order() * 2 == imp->order());
    bool block = true;
    for (std::uint32_t x : K.elems) {
      Mat m = imp->element(x);
      block = block && m(0, 1) == 0 && m(0, 2) == 0 && m(1, 0) == 0 && m(1, 3) == 0;
    }
    has_block = has_block || block;
  }
  CHECK(has_block);
}

TEST_CASE("center and similitude") {
  auto gsp4 = Group::enumerate(gsp4_standard(3));
  CHECK(gsp4->center().order() == 2);
  auto nu = gsp4->similitude_image();
  std::set<Elt> img(nu.begin(), nu.end());
  CHECK(img == std::set<Elt>{1, 2});
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    std::uint32_t a = gsp4->random_element(rng), b = gsp4->random_element(rng);
    CHECK(nu[gsp4->mul(a, b)] == gsp4->spec().F.mul(nu[a], nu[b]));
  }
  const auto &D = gsp4->derived();
  for (std::uint32_t x : D.elems) CHECK(nu[x] == 1);
}

TEST_CASE("subgroup conjugacy") {
  auto sp4 = Group::enumerate(sp4_standard(3));
  Subgroup a = sp4->closure({sp4->gen_index(0), sp4->gen_index(1)});
  Subgroup b = sp4->closure({sp4->gen_index(2), sp4->gen_index(3)});
  CHECK(a.order() == 24);
  CHECK(b.order() == 24);
  CHECK(subgroup_conjugacy_test(*sp4, a, a) == std::optional<std::uint32_t>(0));
  auto g = subgroup_conjugacy_test(*sp4, a, b);
  REQUIRE(g.has_value());
  std::set<std::uint32_t> img;
  for (std::uint32_t x : a.elems) img.insert(sp4->conj(x, *g));
  CHECK(std::vector<std::uint32_t>(img.begin(), img.end()) == b.elems);
  Subgroup c = sp4->closure({sp4->gen_index(0)});
  CHECK_FALSE(subgroup_conjugacy_test(*sp4, a, c).has_value());
}

TEST_CASE("random subgroup search") {
  auto sp4 = Group::enumerate(sp4_standard(3));
  auto found = random_subgroup_search(*sp4, 20240601, 2, 50);
  bool full = false;
  for (const auto &H : found) full = full || H.order() == 51840;
  CHECK(full);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j)
      CHECK_FALSE(subgroup_conjugacy_test(*sp4, found[i], found[j]).has_value());
  CHECK(found == random_subgroup_search(*sp4, 20240601, 2, 50));

  auto torus = Group::enumerate(fixtures::torus_order4());
  CHECK(torus->order() == 4);
  for (const auto &H : random_subgroup_search(*torus, 5, 2, 20)) CHECK(4 % H.order() == 0);
}

TEST_CASE("small generating set") {
  auto gsp4 = Group::enumerate(gsp4_standard(3));
  auto gens = gsp4->small_generating_set(1);
  CHECK(gsp4->closure(gens).order() == gsp4->order());
  CHECK(gens.size() <= 3);
}
