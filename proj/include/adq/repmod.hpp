#pragma once

#include <string>
#include <vector>

#include "adq/matgrp.hpp"

namespace adq {

/// Finite group acting linearly on F^d; the action is given on the spec's generators.
struct GModule {
  GroupPtr G;
  Ring R;  // a field
  int d = 0;
  std::vector<Mat> action;
  std::string tag = "custom";

  const Field &field() const { return R.residue_field(); }
  /// Action of an arbitrary element, multiplied out along the BFS tree.
  Mat element_action(std::uint32_t x) const;
  /// Actions of all elements, indexed like the group.
  std::vector<Mat> all_actions() const;
};

GModule natural_module(const GroupPtr &G);
GModule trivial_module(const GroupPtr &G, const Field &F);
GModule dual_module(const GModule &M);
GModule custom_module(const GroupPtr &G, std::vector<Mat> action, const std::string &tag = "custom");
/// Checks ρ(word) against the product on random words; throws Errc::Invariant on mismatch.
void verify_module(const GModule &M, std::uint64_t seed, int words = 20);

/// Fixed points: intersection of the kernels of ρ(s) - 1 over generators.
Summand h0(const GModule &M);
/// Burnside test: the span of the action images has dimension d^2.
bool abs_irreducible(const GModule &M);
/// Smallest submodule containing the given vectors (columns of the result, reduced echelon).
Mat spin(const GModule &M, const std::vector<std::vector<Elt>> &vs);

/// Action on a submodule (given by basis columns) and on the quotient.
struct Split {
  GModule sub, quotient;
};
Split split_module(const GModule &M, const Mat &sub_basis);

/// Proper nonzero submodule basis, or an empty matrix when M is irreducible.
/// Throws Errc::RandomnessExhausted when the retry budget runs out.
Mat find_submodule(const GModule &M, Rng &rng, int budget = 200);
bool is_irreducible(const GModule &M, std::uint64_t seed = 1);

struct Factor {
  GModule module;
  int multiplicity = 1;
};
/// Composition factors up to isomorphism, with multiplicities.
std::vector<Factor> chop(const GModule &M, std::uint64_t seed = 1);

/// Basis of Hom_G(S, M) as d_M x d_S matrices.
std::vector<Mat> hom_space(const GModule &S, const GModule &M);
bool isomorphic_simple(const GModule &A, const GModule &B);
/// All simple submodules, as reduced column-echelon bases.
std::vector<Mat> simple_submodules(const GModule &M, std::uint64_t seed = 1, std::uint64_t budget = 200000);

} // namespace adq
