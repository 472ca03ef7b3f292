#include <algorithm>
#include <cmath>

#include "adq/matgrp.hpp"

namespace adq {

bool Subgroup::contains(std::uint32_t x) const { return std::binary_search(elems.begin(), elems.end(), x); }

namespace {

// Incremental closure: every generator is applied to every element exactly once.
struct Closer {
  const Group &G;
  std::vector<char> mark;
  std::vector<std::uint32_t> list;
  std::vector<std::uint32_t> gens;
  std::vector<std::size_t> done;

  explicit Closer(const Group &g) : G(g), mark(g.order(), 0), list{0} { mark[0] = 1; }

  void add_gen(std::uint32_t g) {
    gens.push_back(g);
    done.push_back(0);
    run();
  }
  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < gens.size(); ++k)
        while (done[k] < list.size()) {
          std::uint32_t y = G.mul(list[done[k]++], gens[k]);
          if (!mark[y]) {
            mark[y] = 1;
            list.push_back(y);
            changed = true;
          }
        }
    }
  }
  Subgroup result() const {
    Subgroup H;
    H.elems = list;
    std::sort(H.elems.begin(), H.elems.end());
    H.gens = gens;
    return H;
  }
};

} // namespace

Subgroup Group::whole() const {
  Subgroup H;
  H.elems.resize(count_);
  for (std::uint32_t i = 0; i < count_; ++i) H.elems[i] = i;
  H.gens = gen_idx_;
  return H;
}

Subgroup Group::closure(const std::vector<std::uint32_t> &gens) const {
  Closer c(*this);
  for (std::uint32_t g : gens)
    if (!c.mark[g]) c.add_gen(g);
  return c.result();
}

Subgroup Group::normal_closure(const std::vector<std::uint32_t> &gens) const {
  Closer c(*this);
  for (std::uint32_t g : gens)
    if (!c.mark[g]) c.add_gen(g);
  for (std::size_t h = 0; h < c.gens.size(); ++h)
    for (std::size_t s = 0; s < ngens(); ++s) {
      std::uint32_t y = conj_gen(c.gens[h], s);
      if (!c.mark[y]) c.add_gen(y);
    }
  return c.result();
}

const Subgroup &Group::derived() const {
  std::call_once(derived_once_, [this] {
    std::vector<std::uint32_t> comms;
    for (std::size_t a = 0; a < ngens(); ++a)
      for (std::size_t b = a + 1; b < ngens(); ++b) {
        std::uint32_t x = gen_idx_[a], y = gen_idx_[b];
        std::uint32_t c = mul(mul(inv_[x], inv_[y]), mul(x, y));
        if (c) comms.push_back(c);
      }
    derived_ = normal_closure(comms);
  });
  return derived_;
}

Subgroup Group::center() const {
  std::vector<std::uint32_t> z;
  for (const auto &c : classes())
    if (c.size == 1) z.push_back(c.rep);
  Subgroup H;
  H.elems = z;
  std::sort(H.elems.begin(), H.elems.end());
  return closure(H.elems);
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < ngens(); ++a)
    for (std::size_t b = a + 1; b < ngens(); ++b)
      if (rmul_[b][gen_idx_[a]] != rmul_[a][gen_idx_[b]]) return false;
  return true;
}

int Group::hom_to_Fp_dim(int p) const {
  const Subgroup &D = derived();
  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> coset(count_, none);
  std::uint64_t torsion = 0;
  for (std::uint32_t x = 0; x < count_; ++x) {
    if (coset[x] != none) continue;
    for (std::uint32_t d : D.elems) coset[mul(x, d)] = x;
    std::uint32_t y = 0;
    for (int i = 0; i < p; ++i) y = mul(y, x);
    if (D.contains(y)) ++torsion;
  }
  int d = 0;
  while (torsion > 1) {
    if (torsion % p) throw Error(Errc::Invariant, "p-torsion count is not a power of p");
    torsion /= p;
    ++d;
  }
  return d;
}

std::vector<Subgroup> Group::index2_subgroups() const {
  std::size_t m = ngens();
  if (m > 20) throw Error(Errc::SubsetBudgetExceeded, "too many generators for index-2 enumeration");
  std::vector<Subgroup> out;
  std::vector<char> phi(count_);
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    phi[0] = 0;
    for (std::uint32_t i = 1; i < count_; ++i) phi[i] = phi[parent_[i]] ^ ((mask >> pgen_[i]) & 1);
    bool ok = true;
    for (std::size_t s = 0; s < m && ok; ++s)
      for (std::uint32_t i = 0; i < count_ && ok; ++i)
        ok = phi[rmul_[s][i]] == static_cast<char>(phi[i] ^ ((mask >> s) & 1));
    if (!ok) continue;
    Subgroup K;
    for (std::uint32_t i = 0; i < count_; ++i)
      if (!phi[i]) K.elems.push_back(i);
    Closer c(*this);
    for (std::uint32_t x : K.elems)
      if (!c.mark[x]) c.add_gen(x);
    K.gens = c.gens;
    out.push_back(std::move(K));
  }
  return out;
}

std::vector<Elt> Group::similitude_image() const {
  if (!is_symplectic(spec_.ambient)) return {};
  const Field &F = spec_.F;
  std::vector<Elt> gnu(ngens());
  for (std::size_t s = 0; s < ngens(); ++s) gnu[s] = *similitude(spec_.gens[s], spec_.J);
  std::vector<Elt> nu(count_);
  nu[0] = 1;
  for (std::uint32_t i = 1; i < count_; ++i) nu[i] = F.mul(nu[parent_[i]], gnu[pgen_[i]]);
  return nu;
}

GroupSpec Group::subgroup_spec(const Subgroup &H, const std::string &name) const {
  GroupSpec s = spec_;
  s.gens.clear();
  for (std::uint32_t g : H.gens) s.gens.push_back(element(g));
  s.name = name;
  return s;
}

std::vector<std::uint32_t> Group::small_generating_set(std::uint64_t seed) const {
  Rng rng(seed);
  Closer c(*this);
  while (c.list.size() < count_) {
    std::uint32_t x = random_element(rng);
    if (!c.mark[x]) c.add_gen(x);
  }
  // Drop generators that are redundant given the others.
  std::vector<std::uint32_t> gens = c.gens;
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<std::uint32_t> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (closure(rest).order() == count_)
      gens = rest;
    else
      ++i;
  }
  return gens;
}

} // namespace adq
