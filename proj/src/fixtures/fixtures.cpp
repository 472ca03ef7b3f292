#include "adq/fixtures.hpp"

namespace adq::fixtures {

namespace {

GroupSpec sp4_base(int p, const std::string &name) {
  GroupSpec s;
  s.F = Field::create(p);
  s.n = 4;
  s.ambient = Ambient::Sp;
  s.J = standard_form(Ambient::Sp, 4, s.F);
  s.name = name;
  return s;
}

Mat tv(const GroupSpec &s, std::vector<std::int64_t> v) {
  std::vector<Elt> e;
  for (auto x : v) e.push_back(s.F.from_int(x));
  return transvection(s.J, e);
}

GroupSpec gl2(int p, const std::string &name, std::vector<std::vector<std::vector<std::int64_t>>> gens) {
  GroupSpec s;
  s.F = Field::create(p);
  s.n = 2;
  s.ambient = Ambient::GL;
  s.name = name;
  for (auto &g : gens) s.gens.push_back(Mat::from_ints(s.ring(), g));
  return s;
}

} // namespace

GroupSpec block_sp2xsp2() {
  GroupSpec s = sp4_base(3, "block_sp2xsp2");
  s.gens = {tv(s, {1, 0, 0, 0}), tv(s, {0, 0, 0, 1}), tv(s, {0, 1, 0, 0}), tv(s, {0, 0, 1, 0})};
  return s;
}

GroupSpec imprimitive_1152() {
  GroupSpec s = block_sp2xsp2();
  s.name = "imprimitive_1152";
  s.gens.push_back(Mat::from_ints(s.ring(), {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  return s;
}

GroupSpec torus_order4() {
  GroupSpec s = sp4_base(3, "torus_order4");
  s.gens = {Mat::from_ints(s.ring(), {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}),
            Mat::from_ints(s.ring(), {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}})};
  return s;
}

GroupSpec isotropic_line_stabilizer() {
  GroupSpec s = sp4_base(3, "isotropic_line_stabilizer");
  s.gens = {tv(s, {1, 0, 0, 0}), tv(s, {1, 1, 0, 0}), tv(s, {1, 0, 1, 0}), tv(s, {0, 1, 0, 0}),
            tv(s, {0, 0, 1, 0}), Mat::from_ints(s.ring(), {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}})};
  return s;
}

Mat symplectic_basis(const Mat &gram) {
  const Ring &R = gram.R;
  int n = gram.rows;
  auto form = [&](const std::vector<Elt> &x, const std::vector<Elt> &y) {
    Elt s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s = R.add(s, R.mul(x[i], R.mul(gram(i, j), y[j])));
    return s;
  };
  std::vector<std::vector<Elt>> pool;
  for (int i = 0; i < n; ++i) {
    std::vector<Elt> e(n, 0);
    e[i] = 1;
    pool.push_back(e);
  }
  Mat P(R, n, n);
  for (int k = 0; k < n / 2; ++k) {
    // Find a hyperbolic pair among the remaining vectors.
    std::vector<Elt> f, g;
    for (std::size_t a = 0; a < pool.size() && f.empty(); ++a)
      for (std::size_t b = 0; b < pool.size(); ++b)
        if (form(pool[a], pool[b])) {
          f = pool[a];
          Elt c = R.inv(form(pool[a], pool[b]));
          g = pool[b];
          for (auto &x : g) x = R.mul(x, c);
          break;
        }
    if (f.empty()) throw Error(Errc::Input, "degenerate form");
    P.set_col(k, f);
    P.set_col(n - 1 - k, g);
    std::vector<std::vector<Elt>> next;
    for (auto x : pool) {
      Elt a = form(x, g), b = form(x, f);
      for (int i = 0; i < n; ++i) x[i] = R.add(R.sub(x[i], R.mul(a, f[i])), R.mul(b, g[i]));
      bool zero = true;
      for (Elt e : x) zero = zero && !e;
      if (!zero) next.push_back(x);
    }
    pool = std::move(next);
  }
  return P;
}

GroupSpec semilinear_1440() {
  GroupSpec s = sp4_base(3, "semilinear_1440");
  Field F9 = Field::create(3, 2);
  Ring R = s.ring();
  // F_3-basis u1=(1,0), u2=(i,0), u3=(0,1), u4=(0,i) of F_9^2, with i^2 = -1.
  auto coords = [&](Elt x1, Elt x2) {
    auto a = F9.coeffs(x1), b = F9.coeffs(x2);
    return std::vector<Elt>{static_cast<Elt>(a[0]), static_cast<Elt>(a[1]), static_cast<Elt>(b[0]),
                            static_cast<Elt>(b[1])};
  };
  std::vector<std::pair<Elt, Elt>> basis = {{1, 0}, {3, 0}, {0, 1}, {0, 3}};
  auto linear = [&](Elt a, Elt b, Elt c, Elt d) {
    Mat m(R, 4, 4);
    for (int k = 0; k < 4; ++k) {
      auto [x1, x2] = basis[k];
      m.set_col(k, coords(F9.add(F9.mul(a, x1), F9.mul(b, x2)), F9.add(F9.mul(c, x1), F9.mul(d, x2))));
    }
    return m;
  };
  Mat frob(R, 4, 4);
  for (int k = 0; k < 4; ++k) {
    auto [x1, x2] = basis[k];
    frob.set_col(k, coords(F9.pow(x1, 3), F9.pow(x2, 3)));
  }
  // Trace form Tr(x1 y2 - x2 y1) with Tr(a + b i) = 2a.
  Mat gram(R, 4, 4);
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      Elt d = F9.sub(F9.mul(basis[k].first, basis[l].second), F9.mul(basis[k].second, basis[l].first));
      gram(k, l) = R.mul(2, static_cast<Elt>(F9.coeffs(d)[0]));
    }
  Mat P = symplectic_basis(gram);
  Mat Pi = *inverse(P);
  const Elt i = 3;
  for (const Mat &g : {linear(1, 1, 0, 1), linear(1, i, 0, 1), linear(1, 0, 1, 1), frob}) s.gens.push_back(Pi * g * P);
  return s;
}

GroupSpec gsp4_cyclic_diag() {
  GroupSpec s = sp4_base(3, "gsp4_cyclic_diag");
  s.ambient = Ambient::GSp;
  s.gens = {Mat::diag(s.ring(), {1, 1, 2, 2})};
  return s;
}

GroupSpec quaternion_sl2_f3() {
  GroupSpec s = gl2(3, "quaternion_sl2_f3", {{{0, -1}, {1, 0}}, {{1, 1}, {1, -1}}});
  s.ambient = Ambient::SL;
  return s;
}

GroupSpec dihedral_rotations_f3() { return gl2(3, "dihedral_rotations_f3", {{{0, -1}, {1, 0}}}); }

GroupSpec dihedral8_f3() { return gl2(3, "dihedral8_f3", {{{0, -1}, {1, 0}}, {{1, 0}, {0, -1}}}); }

GroupSpec sl2_in_gl2(int p) {
  GroupSpec s = sl2_standard(Field::create(p));
  s.ambient = Ambient::GL;
  s.name = "sl2_f" + std::to_string(p);
  return s;
}

GroupSpec gl2_f5() { return gl2(5, "gl2_f5", {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}, {{2, 0}, {0, 1}}}); }

std::vector<Fixture> library() {
  auto named = [](GroupSpec s, const std::string &n) {
    s.name = n;
    return s;
  };
  return {
      {"sp4_f3", "Sp4(F_3), transvection generators", named(sp4_standard(3), "sp4_f3")},
      {"gsp4_f3", "GSp4(F_3), transvections plus a similitude torus element", named(gsp4_standard(3), "gsp4_f3")},
      {"sp4_f5", "Sp4(F_5), too large to enumerate at the default cap", named(sp4_standard(5), "sp4_f5")},
      {"gsp4_f5", "GSp4(F_5)", named(gsp4_standard(5), "gsp4_f5")},
      {"imprimitive_1152", "Sp2(F_3)^2 extended by the plane swap", imprimitive_1152()},
      {"block_sp2xsp2", "Sp2(F_3)^2 on <e1,e4> and <e2,e3>", block_sp2xsp2()},
      {"torus_order4", "diag(a,b,b,a), a,b = +-1", torus_order4()},
      {"isotropic_line_stabilizer", "stabilizer of <e1> in Sp4(F_3)", isotropic_line_stabilizer()},
      {"semilinear_1440", "SL2(F_9) with Frobenius on F_3^4", semilinear_1440(), true},
      {"gsp4_cyclic_diag", "<diag(1,1,2,2)> in GSp4(F_3)", gsp4_cyclic_diag()},
      {"quaternion_sl2_f3", "Q8 in SL2(F_3)", quaternion_sl2_f3()},
      {"dihedral_rotations_f3", "rotations of the dihedral group of order 8 in GL2(F_3)", dihedral_rotations_f3()},
      {"dihedral8_f3", "dihedral group of order 8 in GL2(F_3)", dihedral8_f3()},
      {"sl2_f11", "SL2(F_11) in GL2", sl2_in_gl2(11)},
      {"sl2_f13", "SL2(F_13) in GL2", sl2_in_gl2(13)},
      {"gl2_f5", "GL2(F_5)", gl2_f5()},
  };
}

Fixture by_name(const std::string &name) {
  for (auto &f : library())
    if (f.name == name) return f;
  throw Error(Errc::Input, "unknown fixture '" + name + "'");
}

} // namespace adq::fixtures
