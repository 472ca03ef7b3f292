#pragma once

#include <string>
#include <vector>

#include "adq/matgrp.hpp"

namespace adq::fixtures {

/// Sp2 x Sp2 on the planes <e1,e4>, <e2,e3> extended by the swap e1<->e2, e3<->e4.
GroupSpec imprimitive_1152();
/// Sp2 x Sp2 on the same planes, order 576.
GroupSpec block_sp2xsp2();
/// {diag(a,b,b,a) : a,b = +-1} in Sp4(F_3).
GroupSpec torus_order4();
/// Stabilizer of the isotropic line <e1> in Sp4(F_3), order 1296.
GroupSpec isotropic_line_stabilizer();
/// SL2(F_9) extended by Frobenius, acting on F_9^2 = F_3^4 with the trace form; order 1440.
/// Experimental: the embedding is one of several non-conjugate choices.
GroupSpec semilinear_1440();
/// Cyclic group generated by diag(1,1,2,2) in GSp4(F_3).
GroupSpec gsp4_cyclic_diag();
/// Quaternion group of order 8 in SL2(F_3).
GroupSpec quaternion_sl2_f3();
/// Rotation subgroup <[[0,-1],[1,0]]> of the dihedral group of order 8 in GL2(F_3).
GroupSpec dihedral_rotations_f3();
/// Dihedral group of order 8 in GL2(F_3).
GroupSpec dihedral8_f3();
/// SL2(F_p) with ambient GL.
GroupSpec sl2_in_gl2(int p);
/// GL2(F_5).
GroupSpec gl2_f5();

struct Fixture {
  std::string name;
  std::string description;
  GroupSpec spec;
  bool experimental = false;
};
/// Named fixture library (Sp4/GSp4 over F_3 and F_5 plus the constructions above).
std::vector<Fixture> library();
/// Lookup by name; throws Errc::Input if unknown.
Fixture by_name(const std::string &name);

/// Basis (as columns) taking the given alternating Gram matrix to the standard form.
Mat symplectic_basis(const Mat &gram);

} // namespace adq::fixtures
