#include <cstdlib>
#include <numeric>

#include "adq/linalg.hpp"

namespace adq {

IMat imul(const IMat &a, const IMat &b) {
  std::size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
  IMat r(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

namespace {

IMat ident(std::size_t n) {
  IMat r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

// Row op on A and U: rows (i, j) <- (a*ri + b*rj, c*ri + d*rj).
void row_combine(IMat &A, IMat &U, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b,
                 std::int64_t c, std::int64_t d) {
  for (IMat *M : {&A, &U})
    for (std::size_t t = 0; t < (*M)[i].size(); ++t) {
      std::int64_t x = (*M)[i][t], y = (*M)[j][t];
      (*M)[i][t] = a * x + b * y;
      (*M)[j][t] = c * x + d * y;
    }
}

void col_combine(IMat &A, IMat &V, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b,
                 std::int64_t c, std::int64_t d) {
  for (IMat *M : {&A, &V})
    for (auto &row : *M) {
      std::int64_t x = row[i], y = row[j];
      row[i] = a * x + b * y;
      row[j] = c * x + d * y;
    }
}

// Extended gcd with g = s*a + t*b, g >= 0.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t &s, std::int64_t &t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b) {
    std::int64_t q = a / b, r = a - q * b;
    a = b;
    b = r;
    std::int64_t ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

} // namespace

SmithZ smith_form_Z(const IMat &M) {
  std::size_t m = M.size(), n = m ? M[0].size() : 0;
  IMat A = M, U = ident(m), V = ident(n);
  std::size_t k = 0;
  while (k < m && k < n) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (A[i][j] && (pi == m || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    if (pi != k) row_combine(A, U, k, pi, 0, 1, 1, 0);
    if (pj != k) col_combine(A, V, k, pj, 0, 1, 1, 0);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (!A[i][k]) continue;
        std::int64_t s, t, a = A[k][k], b = A[i][k];
        if (b % a == 0) {
          row_combine(A, U, k, i, 1, 0, -b / a, 1);
          continue;
        }
        std::int64_t g = egcd(a, b, s, t);
        row_combine(A, U, k, i, s, t, -b / g, a / g);
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!A[k][j]) continue;
        std::int64_t s, t, a = A[k][k], b = A[k][j];
        if (b % a == 0) {
          col_combine(A, V, k, j, 1, 0, -b / a, 1);
          continue;
        }
        std::int64_t g = egcd(a, b, s, t);
        col_combine(A, V, k, j, s, t, -b / g, a / g);
        clean = false;
      }
      if (!clean) continue;
      // Divisibility of the rest of the block.
      for (std::size_t i = k + 1; i < m && clean; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (A[i][j] % A[k][k]) {
            row_combine(A, U, k, i, 1, 1, 0, 1);
            clean = false;
            break;
          }
    }
    if (A[k][k] < 0) row_combine(A, U, k, k, -1, 0, -1, 0);
    ++k;
  }
  SmithZ r;
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (A[i][i]) r.diag.push_back(A[i][i]);
  r.D = std::move(A);
  r.U = std::move(U);
  r.V = std::move(V);
  return r;
}

SmithLocal smith_local(const Mat &A0) {
  const Ring &R = A0.R;
  int m = A0.rows, n = A0.cols;
  Mat A = A0, U = Mat::identity(R, m), V = Mat::identity(R, n);
  auto swap_rows = [&](Mat &X, int i, int j) {
    for (int t = 0; t < X.cols; ++t) std::swap(X(i, t), X(j, t));
  };
  auto swap_cols = [&](Mat &X, int i, int j) {
    for (int t = 0; t < X.rows; ++t) std::swap(X(t, i), X(t, j));
  };
  SmithLocal res;
  for (int k = 0; k < std::min(m, n); ++k) {
    int pi = -1, pj = -1, best = R.N();
    for (int i = k; i < m; ++i)
      for (int j = k; j < n; ++j) {
        int v = R.val(A(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(A, k, pi);
    swap_rows(U, k, pi);
    swap_cols(A, k, pj);
    swap_cols(V, k, pj);
    // Normalise the pivot to a uniformizer power.
    Elt u = R.div_exact(A(k, k), R.pi_pow(best));
    Elt ui = R.inv(u);
    for (int t = 0; t < n; ++t) A(k, t) = R.mul(A(k, t), ui);
    for (int t = 0; t < m; ++t) U(k, t) = R.mul(U(k, t), ui);
    Elt piv = A(k, k);
    for (int i = 0; i < m; ++i) {
      if (i == k || !A(i, k)) continue;
      Elt f = R.div_exact(A(i, k), piv);
      for (int t = 0; t < n; ++t) A(i, t) = R.sub(A(i, t), R.mul(f, A(k, t)));
      for (int t = 0; t < m; ++t) U(i, t) = R.sub(U(i, t), R.mul(f, U(k, t)));
    }
    for (int j = 0; j < n; ++j) {
      if (j == k || !A(k, j)) continue;
      Elt f = R.div_exact(A(k, j), piv);
      for (int t = 0; t < m; ++t) A(t, j) = R.sub(A(t, j), R.mul(f, A(t, k)));
      for (int t = 0; t < n; ++t) V(t, j) = R.sub(V(t, j), R.mul(f, V(t, k)));
    }
    res.vals.push_back(best);
  }
  res.U = std::move(U);
  res.V = std::move(V);
  res.D = std::move(A);
  return res;
}

} // namespace adq
