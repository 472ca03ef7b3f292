#include <algorithm>

#include "adq/cohom.hpp"

namespace adq {

int h0_dim(const GModule &M) { return h0(M).rank(); }

namespace {

template <typename T>
int h1_tree(const GModule &M, const std::vector<std::uint32_t> &gens) {
  const Group &G = *M.G;
  const Field &F = M.field();
  const int d = M.d, m = static_cast<int>(gens.size()), U = d * m;
  const std::size_t N = G.order();
  const int bdim = d - h0_dim(M);
  const int target = U - bdim;
  std::vector<Mat> A;
  for (std::uint32_t g : gens) A.push_back(M.element_action(g));

  // Per element: rho(x) (d x d) and the cocycle value as a linear form L(x) (d x U).
  const std::size_t rs = static_cast<std::size_t>(d) * d, ls = static_cast<std::size_t>(d) * U;
  std::vector<T> rho(N * rs), L(N * ls, 0);
  std::vector<char> seen(N, 0);
  std::vector<std::uint32_t> order = {0};
  seen[0] = 1;
  for (int i = 0; i < d; ++i) rho[i * d + i] = 1;

  Echelon E(F, U);
  std::vector<Elt> row(U), lx(ls), rx(rs);
  for (std::size_t h = 0; h < order.size() && E.rank() < target; ++h) {
    std::uint32_t x = order[h];
    std::copy(rho.begin() + x * rs, rho.begin() + (x + 1) * rs, rx.begin());
    std::copy(L.begin() + x * ls, L.begin() + (x + 1) * ls, lx.begin());
    for (int s = 0; s < m; ++s) {
      std::uint32_t y = G.mul(x, gens[s]);
      // c(x s) = c(x) + rho(x) c(s)
      std::vector<Elt> val = lx;
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
          Elt &e = val[i * U + s * d + k];
          e = F.add(e, rx[i * d + k]);
        }
      if (!seen[y]) {
        seen[y] = 1;
        order.push_back(y);
        for (std::size_t t = 0; t < ls; ++t) L[y * ls + t] = static_cast<T>(val[t]);
        const Mat &a = A[s];
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            Elt acc = 0;
            for (int k = 0; k < d; ++k) acc = F.add(acc, F.mul(rx[i * d + k], a(k, j)));
            rho[y * rs + i * d + j] = static_cast<T>(acc);
          }
        continue;
      }
      for (int i = 0; i < d && E.rank() < target; ++i) {
        for (int c = 0; c < U; ++c) row[c] = F.sub(static_cast<Elt>(L[y * ls + i * U + c]), val[i * U + c]);
        E.insert(row);
      }
    }
  }
  return (U - E.rank()) - bdim;
}

} // namespace

int h1_dim(const GModule &M, std::uint64_t seed) {
  const Group &G = *M.G;
  if (G.order() == 1 || M.d == 0) return 0;
  std::vector<std::uint32_t> gens;
  if (G.ngens() <= 2) {
    for (std::size_t s = 0; s < G.ngens(); ++s) gens.push_back(G.gen_index(s));
  } else {
    gens = G.small_generating_set(seed);
  }
  if (M.field().q() <= 256) return h1_tree<std::uint8_t>(M, gens);
  return h1_tree<Elt>(M, gens);
}

int h1_bruteforce(const GModule &M, std::uint64_t max_order) {
  const Group &G = *M.G;
  const std::size_t N = G.order();
  if (N > max_order) throw Error(Errc::OrderCap, "group too large for the brute-force oracle");
  const Field &F = M.field();
  const int d = M.d;
  if (d == 0) return 0;
  // Column blocks: generator elements last, the rest in reverse index order.
  std::vector<char> is_gen(N, 0);
  for (std::size_t s = 0; s < G.ngens(); ++s) is_gen[G.gen_index(s)] = 1;
  std::vector<std::uint32_t> block(N);
  std::uint32_t next = 0;
  for (std::size_t x = N; x-- > 0;)
    if (!is_gen[x]) block[x] = next++;
  for (std::size_t x = 0; x < N; ++x)
    if (is_gen[x]) block[x] = next++;
  const std::size_t cols = N * d;

  std::vector<Mat> rho(N);
  for (std::uint32_t x = 0; x < N; ++x) rho[x] = M.element_action(x);

  using Row = std::vector<std::pair<std::uint32_t, Elt>>;
  std::vector<int> pivot(cols, -1);
  std::vector<Row> rows;
  auto axpy = [&](const Row &a, Elt c, const Row &b) {
    // a - c*b, both sorted
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back({b[j].first, F.neg(F.mul(c, b[j].second))});
        ++j;
      } else {
        Elt v = F.sub(a[i].second, F.mul(c, b[j].second));
        if (v) out.push_back({a[i].first, v});
        ++i;
        ++j;
      }
    }
    return out;
  };
  auto insert = [&](Row r) {
    std::sort(r.begin(), r.end());
    Row merged;
    for (auto &e : r) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second = F.add(merged.back().second, e.second);
      else
        merged.push_back(e);
    }
    r.clear();
    for (auto &e : merged)
      if (e.second) r.push_back(e);
    for (std::size_t k = 0; k < r.size();) {
      int p = pivot[r[k].first];
      if (p < 0) {
        ++k;
        continue;
      }
      r = axpy(r, r[k].second, rows[p]);
    }
    if (r.empty()) return;
    Elt inv = F.inv(r[0].second);
    for (auto &e : r) e.second = F.mul(e.second, inv);
    pivot[r[0].first] = static_cast<int>(rows.size());
    rows.push_back(std::move(r));
  };
  auto pair_rows = [&](std::uint32_t g, std::uint32_t h) {
    // c(gh) - c(g) - rho(g) c(h) = 0
    std::uint32_t gh = G.mul(g, h);
    for (int i = 0; i < d; ++i) {
      Row r;
      r.push_back({block[gh] * d + i, 1});
      r.push_back({block[g] * d + i, F.neg(1)});
      for (int k = 0; k < d; ++k)
        if (rho[g](i, k)) r.push_back({block[h] * d + k, F.neg(rho[g](i, k))});
      insert(std::move(r));
    }
  };
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::size_t s = 0; s < G.ngens(); ++s) pair_rows(g, G.gen_index(s));
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::uint32_t h = 0; h < N; ++h) pair_rows(g, h);
  int z1 = static_cast<int>(cols - rows.size());
  return z1 - (d - h0_dim(M));
}

} // namespace adq
