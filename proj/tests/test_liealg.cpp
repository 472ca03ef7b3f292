#include <doctest.h>

#include "adq/fixtures.hpp"
#include "adq/liealg.hpp"

using namespace adq;

namespace {

// Oracle: sum over every semisimple element (not just class representatives) of the
// projection of span{1, g, g^2, ...}; the set is conjugation-stable so no closure is needed.
int spanning_A_bruteforce(const Group &G, const ClassicalLieData &lie) {
  const Field &F = lie.R.residue_field();
  Echelon E(F, lie.dim());
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    if (G.element_order(x) % F.p() == 0) continue;
    Mat g = G.element(x), p = Mat::identity(lie.R, lie.n);
    for (std::uint32_t k = 0; k < G.element_order(x); ++k) {
      E.insert(lie.project(p));
      p = p * g;
    }
  }
  return E.rank();
}

// Oracle for n_v: diagonal gsp4 elements constant on the eigenvalue classes of diag(d),
// i.e. x1 + x4 = x2 + x3 and x_i = x_j when d_i = d_j; minus the one-dimensional center.
int nv_oracle(const Field &F, const std::vector<Elt> &d) {
  Ring R = Ring::field(F);
  std::vector<std::vector<std::int64_t>> rows = {{1, -1, -1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (d[i] == d[j]) {
        std::vector<std::int64_t> r(4, 0);
        r[i] = 1;
        r[j] = -1;
        rows.push_back(r);
      }
  return (4 - rank(Mat::from_ints(R, rows))) - 1;
}

} // namespace

TEST_CASE("classical Lie algebra dimensions") {
  Field F3 = Field::create(3), F5 = Field::create(5);
  Ring R3 = Ring::field(F3);
  Mat J = standard_form(Ambient::Sp, 4, F3);
  CHECK(make_lie(LieType::Sp, 4, J, R3).dim() == 10);
  CHECK(make_lie(LieType::Sp, 4, J, R3).rank == 2);
  CHECK(lie_basis(LieType::GSp, 4, J, R3).cols == 11);
  CHECK(lie_basis(LieType::GL, 3, Mat(), Ring::field(F5)).cols == 9);
  CHECK(make_lie(LieType::SL, 2, Mat(), Ring::field(Field::create(11))).dim() == 3);
  Mat Jo = standard_form(Ambient::SO, 3, F5);
  CHECK(make_lie(LieType::SO, 3, Jo, Ring::field(F5)).dim() == 3);
  GroupSpec gl3;
  gl3.F = F3;
  gl3.n = 3;
  gl3.ambient = Ambient::GL;
  gl3.gens = {Mat::identity(R3, 3)};
  CHECK_THROWS_AS(lie_for(gl3), Error);
}

TEST_CASE("brackets stay in the algebra and the adjoint action is a module") {
  auto G = Group::enumerate(fixtures::imprimitive_1152());
  auto lie = lie_for(G->spec());
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = 0; j < lie.dim(); ++j) {
      Mat b = bracket(lie.basis_elt(i), lie.basis_elt(j));
      CHECK(lie.g0.contains(b.a));
      // ad_lie agrees with the bracket in coordinates
      CHECK(mat_vec(lie.ad_lie(lie.basis_elt(i)), lie.coords(lie.basis_elt(j))) == lie.coords(b));
    }
  CHECK_NOTHROW(verify_module(adjoint_module(G, lie), 5));
  // projection is idempotent and fixes g0
  Mat X = lie.basis_elt(3);
  CHECK(lie.project(X) == lie.coords(X));
  Mat I = Mat::identity(lie.R, 4);
  CHECK(lie.project(I) == std::vector<Elt>(lie.dim(), 0));
}

TEST_CASE("spanning sum A against the all-elements oracle") {
  std::vector<GroupSpec> corpus = {fixtures::imprimitive_1152(), fixtures::block_sp2xsp2(), fixtures::torus_order4(),
                                   fixtures::quaternion_sl2_f3(), fixtures::dihedral8_f3(),
                                   fixtures::dihedral_rotations_f3(), fixtures::sl2_in_gl2(5),
                                   fixtures::isotropic_line_stabilizer()};
  for (const auto &spec : corpus) {
    CAPTURE(spec.name);
    auto G = Group::enumerate(spec);
    auto lie = lie_for(spec);
    SpanResult r = spanning_sum_A(G, lie);
    int o = spanning_A_bruteforce(*G, lie);
    CHECK(r.dim == o);
    CHECK((r.verdict == Tri::True) == (o == lie.dim()));
  }
  auto T = Group::enumerate(fixtures::torus_order4());
  CHECK(spanning_sum_A(T, lie_for(T->spec())).dim == 0);
}

TEST_CASE("spanning sum A for Sp4(F_3)") {
  auto G = Group::enumerate(sp4_standard(3));
  SpanResult r = spanning_sum_A(G, lie_for(G->spec()));
  CHECK(r.verdict == Tri::True);
  CHECK(r.dim == 10);
}

TEST_CASE("condition B: span form equals simple-submodule form") {
  for (const auto &spec : {fixtures::imprimitive_1152(), fixtures::block_sp2xsp2(), fixtures::torus_order4(),
                           fixtures::quaternion_sl2_f3(), fixtures::dihedral8_f3(), fixtures::sl2_in_gl2(5)}) {
    CAPTURE(spec.name);
    auto G = Group::enumerate(spec);
    auto lie = lie_for(spec);
    CHECK((spanning_sum_B(G, lie).verdict == Tri::True) == condB_by_submodules(G, lie));
  }
}

TEST_CASE("lie centre of centralizers") {
  Field F7 = Field::create(7);
  Ring R = Ring::field(F7);
  auto lie = make_lie(LieType::Sp, 4, standard_form(Ambient::Sp, 4, F7), R);
  // diag(a, b, 1/b, 1/a) with a = 2, b = 3 has no root equal to 1
  Mat reg = Mat::diag(R, {2, 3, 5, 4});
  CHECK(fixed_subalgebra(reg, lie).cols == 2);
  CHECK(lieZ_of_centralizer(reg, lie).basis.cols == 2);
  CHECK(is_ad_regular(lie.from_coords(lie.project(Mat::diag(R, {1, 2, 3, 4}))), lie));
  // over F_5, diag(a, a^2, a^-2, a^-1) with a = 2 has t2^2 = 1, so the long root 2e2 is fixed
  Field F5 = Field::create(5);
  Ring R5 = Ring::field(F5);
  auto lie5 = make_lie(LieType::Sp, 4, standard_form(Ambient::Sp, 4, F5), R5);
  CHECK(fixed_subalgebra(Mat::diag(R5, {2, 4, 4, 3}), lie5).cols == 4);
  Mat minus = Mat::diag(R, {6, 6, 6, 6});
  CHECK(lieZ_of_centralizer(minus, lie).basis.cols == 0);
  CHECK(fixed_subalgebra(minus, lie).cols == 10);
  Mat unip = Mat::from_ints(R, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(z_centralizer_gl(unip), Error);
}

TEST_CASE("nilpotent rank equals the rank") {
  Field F5 = Field::create(5);
  Ring R = Ring::field(F5);
  CHECK(nilpotent_rank(make_lie(LieType::Sp, 4, standard_form(Ambient::Sp, 4, F5), R)) == 2);
  CHECK(nilpotent_rank(make_lie(LieType::SL, 2, Mat(), Ring::field(Field::create(7)))) == 1);
  CHECK(nilpotent_rank(make_lie(LieType::SL, 3, Mat(), R)) == 2);
}

TEST_CASE("root data") {
  for (const auto &n : builtin_root_data()) CHECK_NOTHROW(validate_root_datum(builtin_root_datum(n)));
  CHECK(weyl_order(builtin_root_datum("C2")) == 8);
  CHECK(weyl_order(builtin_root_datum("B2")) == 8);
  CHECK(weyl_order(builtin_root_datum("A1")) == 2);
  CHECK(weyl_order(builtin_root_datum("A1xA1")) == 4);
  CHECK(weyl_order(builtin_root_datum("GL2")) == 2);
  CHECK(bad_primes(builtin_root_datum("C2"), 100) == std::set<std::int64_t>{2});
  CHECK(bad_primes(builtin_root_datum("B2"), 100) == std::set<std::int64_t>{2});
  CHECK(bad_primes(builtin_root_datum("GL2"), 100).empty());
  CHECK(bad_primes(builtin_root_datum("GSp4"), 100) == std::set<std::int64_t>{2});
  auto d = parse_root_datum("# A1 as SL2\nname sl2\nrank 1\nroot 2 coroot 1\nroot -2 coroot -1\n");
  CHECK(d.name == "sl2");
  CHECK(weyl_order(d) == 2);
  CHECK_THROWS_AS(validate_root_datum(parse_root_datum("rank 1\nroot 2 coroot 2\nroot -2 coroot -2\n")), Error);
}

TEST_CASE("Taylor-Wiles dimension count") {
  Field F5 = Field::create(5);
  // regular: diag(1, 3, 2/3, 2/1) with similitude 2
  auto reg = tw_delta(F5, {1, 3, 4, 2}, 11);
  CHECK(reg.n_v == 2);
  CHECK(reg.p_part == 5);
  CHECK(reg.invariants == std::vector<std::uint64_t>{5, 5});
  auto central = tw_delta(F5, {2, 2, 2, 2}, 26);
  CHECK(central.n_v == 0);
  CHECK(central.invariants.empty());
  CHECK(central.p_part == 25);
  // (a, a, nu/a, nu/a) with a^2 != nu: a = 2, nu = 1
  std::vector<Elt> levi = {2, 2, 3, 3};
  CHECK(tw_delta(F5, levi, 11).n_v == 1);
  CHECK(nv_oracle(F5, levi) == 1);
  for (std::vector<Elt> d : {std::vector<Elt>{1, 3, 4, 2}, {1, 2, 3, 1}, {3, 3, 3, 3}, {1, 4, 4, 1}, {2, 4, 1, 2}})
    CHECK(tw_delta(F5, d, 11).n_v == nv_oracle(F5, d));
  CHECK_THROWS_AS(tw_delta(F5, levi, 7), Error);
}
