#include <algorithm>
#include <map>

#include "adq/matgrp.hpp"

namespace adq {

namespace {

// Conjugation-invariant fingerprint: sorted class indices of the members.
std::vector<std::uint32_t> class_profile(const Group &G, const Subgroup &H) {
  std::vector<std::uint32_t> v;
  v.reserve(H.order());
  for (std::uint32_t x : H.elems) v.push_back(G.class_of(x));
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

std::optional<std::uint32_t> subgroup_conjugacy_test(const Group &G, const Subgroup &H1, const Subgroup &H2) {
  if (H1.order() != H2.order()) return std::nullopt;
  if (H1.elems == H2.elems) return 0;
  if (class_profile(G, H1) != class_profile(G, H2)) return std::nullopt;
  std::vector<std::uint32_t> gens = H1.gens;
  if (gens.empty()) gens = H1.elems;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (std::uint32_t h : gens)
      if (!H2.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

std::vector<Subgroup> random_subgroup_search(const Group &G, std::uint64_t seed, int num_gens, int samples) {
  Rng rng(seed);
  std::vector<Subgroup> found;
  std::vector<std::vector<std::uint32_t>> profiles;
  for (int t = 0; t < samples; ++t) {
    std::vector<std::uint32_t> gens;
    for (int i = 0; i < num_gens; ++i) gens.push_back(G.random_element(rng));
    Subgroup H = G.closure(gens);
    auto prof = class_profile(G, H);
    bool dup = false;
    for (std::size_t j = 0; j < found.size() && !dup; ++j)
      dup = profiles[j] == prof && subgroup_conjugacy_test(G, H, found[j]).has_value();
    if (!dup) {
      found.push_back(std::move(H));
      profiles.push_back(std::move(prof));
    }
  }
  return found;
}

ProductReplacement::ProductReplacement(const std::vector<Mat> &gens, std::uint64_t seed, int warmup) : rng_(seed) {
  if (gens.empty()) throw Error(Errc::Input, "product replacement needs generators");
  while (slots_.size() < 10)
    for (const Mat &g : gens) slots_.push_back(g);
  acc_ = Mat::identity(gens[0].R, gens[0].rows);
  for (int i = 0; i < warmup; ++i) next();
}

Mat ProductReplacement::next() {
  std::size_t n = slots_.size();
  std::size_t i = below(rng_, n), j = below(rng_, n - 1);
  if (j >= i) ++j;
  slots_[i] = below(rng_, 2) ? slots_[i] * slots_[j] : slots_[j] * slots_[i];
  acc_ = acc_ * slots_[i];
  return acc_;
}

std::vector<SampledSubgroup> random_subgroup_search_pr(const GroupSpec &ambient, std::uint64_t seed, int num_gens,
                                                       int samples, std::uint64_t cap) {
  ProductReplacement pr(ambient.gens, seed);
  std::vector<SampledSubgroup> out;
  std::vector<std::vector<Mat>> seen_gens;
  for (int t = 0; t < samples; ++t) {
    GroupSpec s = ambient;
    s.gens.clear();
    for (int i = 0; i < num_gens; ++i) s.gens.push_back(pr.next());
    std::sort(s.gens.begin(), s.gens.end());
    s.name = ambient.name + "/sample" + std::to_string(t);
    SampledSubgroup r{s, nullptr, 0};
    try {
      r.group = Group::enumerate(s, cap);
    } catch (const Error &e) {
      if (e.code() != Errc::CapExceeded) throw;
      r.partial = e.partial();
    }
    bool dup = false;
    for (const auto &o : out) {
      if (r.group && o.group) {
        if (o.group->order() != r.group->order()) continue;
        bool same = true;
        for (const Mat &g : s.gens) same = same && o.group->find(g).has_value();
        for (const Mat &g : o.spec.gens) same = same && r.group->find(g).has_value();
        if (same) dup = true;
      } else if (!r.group && !o.group && o.spec.gens == s.gens) {
        dup = true;
      }
      if (dup) break;
    }
    if (!dup) out.push_back(std::move(r));
  }
  return out;
}

} // namespace adq
