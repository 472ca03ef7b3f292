#include "adq/matgrp.hpp"

namespace adq {

const char *ambient_name(Ambient a) {
  switch (a) {
  case Ambient::GL: return "GL";
  case Ambient::SL: return "SL";
  case Ambient::Sp: return "Sp";
  case Ambient::GSp: return "GSp";
  case Ambient::SO: return "SO";
  case Ambient::O: return "O";
  }
  return "?";
}

Ambient parse_ambient(const std::string &s) {
  for (Ambient a : {Ambient::GL, Ambient::SL, Ambient::Sp, Ambient::GSp, Ambient::SO, Ambient::O})
    if (s == ambient_name(a)) return a;
  throw Error(Errc::Input, "unknown ambient '" + s + "'");
}

bool is_symplectic(Ambient a) { return a == Ambient::Sp || a == Ambient::GSp; }
bool is_orthogonal(Ambient a) { return a == Ambient::SO || a == Ambient::O; }

Mat standard_form(Ambient a, int n, const Field &F) {
  Ring R = Ring::field(F);
  Mat J(R, n, n);
  if (is_symplectic(a)) {
    if (n % 2) throw Error(Errc::Input, "symplectic form needs even n");
    for (int i = 0; i < n; ++i) J(i, n - 1 - i) = i < n / 2 ? 1 : R.neg(1);
  } else if (is_orthogonal(a)) {
    for (int i = 0; i < n; ++i) J(i, n - 1 - i) = 1;
  }
  return J;
}

std::optional<Elt> similitude(const Mat &g, const Mat &J) {
  Mat M = transpose(g) * J * g;
  const Ring &R = J.R;
  for (std::size_t t = 0; t < J.a.size(); ++t) {
    if (!J.a[t]) continue;
    Elt nu = R.mul(M.a[t], R.inv(J.a[t]));
    if (M != scale(J, nu) || nu == 0) return std::nullopt;
    return nu;
  }
  return std::nullopt;
}

void validate(const GroupSpec &s) {
  if (!s.F.valid()) throw Error(Errc::Input, "group spec without field");
  if (s.F.p() == 2) throw Error(Errc::Input, "characteristic 2 is not supported");
  if (s.n < 1) throw Error(Errc::Input, "matrix size must be positive");
  Ring R = s.ring();
  bool formed = is_symplectic(s.ambient) || is_orthogonal(s.ambient);
  if (formed) {
    if (s.J.rows != s.n || s.J.cols != s.n) throw Error(Errc::InvalidGenerator, "form matrix J has wrong shape");
    if (!R.is_unit(det(s.J))) throw Error(Errc::InvalidGenerator, "form matrix J is degenerate");
    Mat Jt = transpose(s.J);
    if (is_symplectic(s.ambient) && Jt != scale(s.J, R.neg(1)))
      throw Error(Errc::InvalidGenerator, "form matrix J is not alternating");
    if (is_orthogonal(s.ambient) && Jt != s.J) throw Error(Errc::InvalidGenerator, "form matrix J is not symmetric");
  }
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    const Mat &g = s.gens[i];
    std::string tag = "generator " + std::to_string(i) + ": ";
    if (g.rows != s.n || g.cols != s.n) throw Error(Errc::InvalidGenerator, tag + "wrong shape");
    if (g.R != R) throw Error(Errc::InvalidGenerator, tag + "entries over the wrong ring");
    Elt d = det(g);
    if (!d) throw Error(Errc::InvalidGenerator, tag + "not invertible");
    if ((s.ambient == Ambient::SL || s.ambient == Ambient::SO) && d != 1)
      throw Error(Errc::InvalidGenerator, tag + "determinant is not 1");
    if (formed) {
      auto nu = similitude(g, s.J);
      if (!nu) throw Error(Errc::InvalidGenerator, tag + "does not preserve J up to scalar");
      if (s.ambient != Ambient::GSp && *nu != 1) throw Error(Errc::InvalidGenerator, tag + "similitude is not 1");
    }
  }
}

Mat transvection(const Mat &J, const std::vector<Elt> &v) {
  // x + (x^T J v) v = (I + v (J v)^T) x
  const Ring &R = J.R;
  int n = J.rows;
  std::vector<Elt> Jv = mat_vec(J, v);
  Mat T = Mat::identity(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T(i, j) = R.add(T(i, j), R.mul(v[i], Jv[j]));
  return T;
}

Elt primitive_root(const Field &F) {
  for (Elt a = 1; a < static_cast<Elt>(F.p()); ++a)
    if (F.order(a) == static_cast<std::uint64_t>(F.p() - 1)) return a;
  return 1;
}

GroupSpec sl2_standard(const Field &F) {
  GroupSpec s;
  s.F = F;
  s.n = 2;
  s.ambient = Ambient::SL;
  Ring R = s.ring();
  s.gens = {Mat::from_ints(R, {{1, 1}, {0, 1}}), Mat::from_ints(R, {{1, 0}, {1, 1}})};
  s.name = "SL2(F" + std::to_string(F.q()) + ")";
  return s;
}

GroupSpec sp4_standard(int p) {
  GroupSpec s;
  s.F = Field::create(p);
  s.n = 4;
  s.ambient = Ambient::Sp;
  s.J = standard_form(Ambient::Sp, 4, s.F);
  for (std::vector<Elt> v : {std::vector<Elt>{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}})
    s.gens.push_back(transvection(s.J, v));
  s.name = "Sp4(F" + std::to_string(p) + ")";
  return s;
}

GroupSpec gsp4_standard(int p) {
  GroupSpec s = sp4_standard(p);
  s.ambient = Ambient::GSp;
  Elt nu = primitive_root(s.F);
  s.gens.push_back(Mat::diag(s.ring(), {1, 1, nu, nu}));
  s.name = "GSp4(F" + std::to_string(p) + ")";
  return s;
}

} // namespace adq
