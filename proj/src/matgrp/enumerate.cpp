#include <cstring>

#include "adq/matgrp.hpp"

namespace adq {

std::string Group::key(const Elt *e) const {
  std::string k;
  if (spec_.F.q() <= 256) {
    k.resize(nn_);
    for (int i = 0; i < nn_; ++i) k[i] = static_cast<char>(e[i]);
  } else {
    k.resize(sizeof(Elt) * nn_);
    std::memcpy(k.data(), e, sizeof(Elt) * nn_);
  }
  return k;
}

void Group::mul_raw(const Elt *x, const Elt *y, Elt *out) const {
  int n = spec_.n;
  const Field &F = spec_.F;
  if (F.prime()) {
    std::uint64_t p = F.p();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < n; ++k) s += static_cast<std::uint64_t>(x[i * n + k]) * y[k * n + j];
        out[i * n + j] = static_cast<Elt>(s % p);
      }
    return;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt s = 0;
      for (int k = 0; k < n; ++k) s = F.add(s, F.mul(x[i * n + k], y[k * n + j]));
      out[i * n + j] = s;
    }
}

std::shared_ptr<const Group> Group::enumerate(const GroupSpec &spec, std::uint64_t cap) {
  validate(spec);
  std::shared_ptr<Group> G(new Group());
  G->spec_ = spec;
  G->R_ = spec.ring();
  G->nn_ = spec.n * spec.n;
  G->build(cap);
  return G;
}

void Group::build(std::uint64_t cap) {
  std::size_t m = spec_.gens.size();
  rmul_.assign(m, {});
  Mat I = Mat::identity(R_, spec_.n);
  data_.assign(I.a.begin(), I.a.end());
  index_.emplace(key(data_.data()), 0);
  parent_ = {0};
  pgen_ = {0};
  std::vector<Elt> prod(nn_);
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    for (std::size_t s = 0; s < m; ++s) {
      mul_raw(data_.data() + i * nn_, spec_.gens[s].a.data(), prod.data());
      auto [it, fresh] = index_.emplace(key(prod.data()), static_cast<std::uint32_t>(parent_.size()));
      if (fresh) {
        if (parent_.size() >= cap)
          throw Error(Errc::CapExceeded, "group order exceeds cap " + std::to_string(cap), parent_.size());
        data_.insert(data_.end(), prod.begin(), prod.end());
        parent_.push_back(static_cast<std::uint32_t>(i));
        pgen_.push_back(static_cast<std::uint32_t>(s));
      }
      rmul_[s].push_back(it->second);
    }
  }
  count_ = parent_.size();
  gen_idx_.resize(m);
  for (std::size_t s = 0; s < m; ++s) gen_idx_[s] = rmul_[s][0];
  inv_.assign(count_, 0);
  std::vector<char> seen(count_, 0);
  for (std::uint32_t i = 0; i < count_; ++i) {
    if (seen[i]) continue;
    auto inv = inverse(element(i));
    if (!inv) throw Error(Errc::Invariant, "singular group element");
    std::uint32_t j = index_of(*inv);
    inv_[i] = j;
    inv_[j] = i;
    seen[i] = seen[j] = 1;
  }
}

Mat Group::element(std::uint32_t i) const {
  Mat m(R_, spec_.n, spec_.n);
  std::copy(raw(i), raw(i) + nn_, m.a.begin());
  return m;
}

std::optional<std::uint32_t> Group::find(const Mat &m) const {
  if (m.rows != spec_.n || m.cols != spec_.n) return std::nullopt;
  auto it = index_.find(key(m.a.data()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Group::index_of(const Mat &m) const {
  auto i = find(m);
  if (!i) throw Error(Errc::Invariant, "matrix is not an element of the group");
  return *i;
}

std::uint32_t Group::mul(std::uint32_t i, std::uint32_t j) const {
  thread_local std::vector<Elt> prod;
  prod.resize(nn_);
  mul_raw(raw(i), raw(j), prod.data());
  auto it = index_.find(key(prod.data()));
  if (it == index_.end()) throw Error(Errc::Invariant, "group not closed under multiplication");
  return it->second;
}

std::uint32_t Group::conj_gen(std::uint32_t x, std::size_t s) const {
  return rmul_[s][inv_[rmul_[s][inv_[x]]]];
}

std::uint32_t Group::element_order(std::uint32_t i) const {
  std::call_once(orders_once_, [this] {
    const auto &cl = classes();
    orders_.resize(count_);
    for (std::uint32_t x = 0; x < count_; ++x) orders_[x] = cl[class_of_[x]].order;
  });
  return orders_[i];
}

bool Group::is_semisimple(std::uint32_t i) const { return element_order(i) % spec_.F.p() != 0; }

const std::vector<ConjClass> &Group::classes() const {
  std::call_once(classes_once_, [this] { compute_classes(); });
  return classes_;
}

std::uint32_t Group::class_of(std::uint32_t i) const {
  classes();
  return class_of_[i];
}

void Group::compute_classes() const {
  const std::uint32_t none = UINT32_MAX;
  class_of_.assign(count_, none);
  std::vector<std::uint32_t> queue;
  std::vector<Elt> acc(nn_), tmp(nn_);
  for (std::uint32_t x = 0; x < count_; ++x) {
    if (class_of_[x] != none) continue;
    auto c = static_cast<std::uint32_t>(classes_.size());
    queue.assign(1, x);
    class_of_[x] = c;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t s = 0; s < rmul_.size(); ++s) {
        std::uint32_t y = conj_gen(queue[h], s);
        if (class_of_[y] == none) {
          class_of_[y] = c;
          queue.push_back(y);
        }
      }
    std::uint32_t ord = 1;
    std::copy(raw(x), raw(x) + nn_, acc.begin());
    while (std::memcmp(acc.data(), raw(0), sizeof(Elt) * nn_) != 0) {
      mul_raw(acc.data(), raw(x), tmp.data());
      acc.swap(tmp);
      ++ord;
    }
    classes_.push_back({x, queue.size(), ord});
  }
}

GroupPtr enumerate_subgroup(const Group &G, const Subgroup &H, const std::string &name) {
  return Group::enumerate(G.subgroup_spec(H, name), H.order() + 1);
}

} // namespace adq
