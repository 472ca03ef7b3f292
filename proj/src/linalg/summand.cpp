#include "adq/linalg.hpp"

namespace adq {

std::optional<std::vector<Elt>> Summand::coords(const std::vector<Elt> &v) const {
  if (static_cast<int>(v.size()) != n) throw Error(Errc::Input, "vector length mismatch");
  std::vector<Elt> c(rank());
  for (int j = 0; j < rank(); ++j) c[j] = v[pivot_rows[j]];
  if (mat_vec(basis, c) != v) return std::nullopt;
  return c;
}

bool Summand::contains(const Summand &o) const {
  for (int j = 0; j < o.rank(); ++j)
    if (!contains(o.vector(j))) return false;
  return true;
}

std::string Summand::str() const { return format_mat(transpose(basis)); }

Summand zero_summand(const Ring &R, int n) { return Summand{R, n, Mat(R, n, 0), {}}; }

Summand full_summand(const Ring &R, int n) {
  Summand s{R, n, Mat::identity(R, n), {}};
  for (int i = 0; i < n; ++i) s.pivot_rows.push_back(i);
  return s;
}

std::optional<Summand> summand_saturate(const Ring &R, const Mat &span_cols) {
  int n = span_cols.rows, m = span_cols.cols;
  // Work on rows = spanning vectors; eliminate with unit pivots only.
  std::vector<std::vector<Elt>> rows(m);
  for (int j = 0; j < m; ++j) rows[j] = span_cols.col(j);
  std::vector<int> piv;
  std::size_t done = 0;
  for (int c = 0; c < n && done < rows.size(); ++c) {
    std::size_t r = rows.size();
    for (std::size_t i = done; i < rows.size(); ++i)
      if (R.is_unit(rows[i][c])) {
        r = i;
        break;
      }
    if (r == rows.size()) continue;
    std::swap(rows[done], rows[r]);
    Elt ui = R.inv(rows[done][c]);
    for (auto &e : rows[done]) e = R.mul(e, ui);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == done || !rows[i][c]) continue;
      Elt f = rows[i][c];
      for (int t = 0; t < n; ++t) rows[i][t] = R.sub(rows[i][t], R.mul(f, rows[done][t]));
    }
    piv.push_back(c);
    ++done;
  }
  for (std::size_t i = done; i < rows.size(); ++i)
    for (Elt e : rows[i])
      if (e) return std::nullopt;
  Summand s{R, n, Mat(R, n, static_cast<int>(done)), piv};
  for (std::size_t j = 0; j < done; ++j) s.basis.set_col(static_cast<int>(j), rows[j]);
  return s;
}

Summand make_summand(const Mat &span_cols) {
  auto s = summand_saturate(span_cols.R, span_cols);
  if (!s) throw Error(Errc::Invariant, "NOT_A_SUMMAND");
  return *s;
}

Summand kernel(const Mat &M) {
  SmithLocal S = smith_local(M);
  int nz = S.nonzero();
  Mat cols(M.R, M.cols, M.cols - nz);
  for (int j = nz; j < M.cols; ++j) cols.set_col(j - nz, S.V.col(j));
  return make_summand(cols);
}

Summand image(const Mat &M) { return make_summand(M); }

Summand reduce_summand(const Summand &S, const Ring &target) {
  return make_summand(change_ring(S.basis, target));
}

std::optional<std::vector<Elt>> solve(const Mat &A, const std::vector<Elt> &b) {
  const Ring &R = A.R;
  SmithLocal S = smith_local(A);
  std::vector<Elt> ub = mat_vec(S.U, b);
  std::vector<Elt> y(A.cols, 0);
  for (int i = 0; i < A.rows; ++i) {
    if (i < S.nonzero()) {
      if (R.val(ub[i]) < S.vals[i]) return std::nullopt;
      y[i] = ub[i] ? R.div_exact(ub[i], S.D(i, i)) : 0;
    } else if (ub[i]) {
      return std::nullopt;
    }
  }
  return mat_vec(S.V, y);
}

} // namespace adq
