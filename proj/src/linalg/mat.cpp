#include <algorithm>
#include <sstream>

#include "adq/linalg.hpp"

namespace adq {

Mat Mat::identity(const Ring &r, int n) {
  Mat m(r, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(const Ring &r, const std::vector<std::vector<std::int64_t>> &v) {
  int m = static_cast<int>(v.size());
  int n = m ? static_cast<int>(v[0].size()) : 0;
  Mat x(r, m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(v[i].size()) != n) throw Error(Errc::Input, "ragged matrix");
    for (int j = 0; j < n; ++j) x(i, j) = r.from_int(v[i][j]);
  }
  return x;
}

Mat Mat::column(const Ring &r, const std::vector<Elt> &v) {
  Mat x(r, static_cast<int>(v.size()), 1);
  x.a = v;
  return x;
}

Mat Mat::diag(const Ring &r, const std::vector<Elt> &d) {
  int n = static_cast<int>(d.size());
  Mat x(r, n, n);
  for (int i = 0; i < n; ++i) x(i, i) = d[i];
  return x;
}

std::vector<Elt> Mat::col(int j) const {
  std::vector<Elt> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Elt> Mat::row(int i) const {
  return std::vector<Elt>(a.begin() + static_cast<std::ptrdiff_t>(i) * cols, a.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols);
}

void Mat::set_col(int j, const std::vector<Elt> &v) {
  for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Elt e) { return e == 0; });
}

Mat operator*(const Mat &x, const Mat &y) {
  if (x.cols != y.rows) throw Error(Errc::Input, "dimension mismatch in product");
  Mat r(x.R, x.rows, y.cols);
  const Ring &R = x.R;
  bool fast = (R.kind() == RingKind::Field && R.residue_field().prime()) || R.kind() == RingKind::Zmod;
  if (fast) {
    const std::uint64_t m = R.size();
    const bool small = static_cast<std::uint64_t>(x.cols) * (m - 1) * (m - 1) < (1ull << 63);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < y.cols; ++j) {
        std::uint64_t s = 0;
        if (small) {
          for (int k = 0; k < x.cols; ++k) s += static_cast<std::uint64_t>(x(i, k)) * y(k, j);
          s %= m;
        } else {
          for (int k = 0; k < x.cols; ++k) s = (s + static_cast<std::uint64_t>(x(i, k)) * y(k, j)) % m;
        }
        r(i, j) = static_cast<Elt>(s);
      }
    return r;
  }
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Elt t = x(i, k);
      if (!t) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) = R.add(r(i, j), R.mul(t, y(k, j)));
    }
  return r;
}

Mat operator+(const Mat &x, const Mat &y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::Input, "dimension mismatch in sum");
  Mat r(x.R, x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.R.add(x.a[i], y.a[i]);
  return r;
}

Mat operator-(const Mat &x, const Mat &y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::Input, "dimension mismatch in difference");
  Mat r(x.R, x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.R.sub(x.a[i], y.a[i]);
  return r;
}

Mat scale(const Mat &x, Elt s) {
  Mat r = x;
  for (auto &e : r.a) e = x.R.mul(e, s);
  return r;
}

Mat transpose(const Mat &x) {
  Mat r(x.R, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

Mat mpow(const Mat &x, std::uint64_t e) {
  Mat r = Mat::identity(x.R, x.rows), b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::vector<Elt> mat_vec(const Mat &x, const std::vector<Elt> &v) {
  return (x * Mat::column(x.R, v)).a;
}

Mat hcat(const std::vector<Mat> &blocks) {
  if (blocks.empty()) return Mat();
  int rows = blocks[0].rows, cols = 0;
  for (auto &b : blocks) {
    if (b.rows != rows) throw Error(Errc::Input, "hcat row mismatch");
    cols += b.cols;
  }
  Mat r(blocks[0].R, rows, cols);
  int off = 0;
  for (auto &b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols; ++j) r(i, off + j) = b(i, j);
    off += b.cols;
  }
  return r;
}

Mat vcat(const std::vector<Mat> &blocks) {
  if (blocks.empty()) return Mat();
  int cols = blocks[0].cols, rows = 0;
  for (auto &b : blocks) {
    if (b.cols != cols) throw Error(Errc::Input, "vcat column mismatch");
    rows += b.rows;
  }
  Mat r(blocks[0].R, rows, cols);
  std::size_t off = 0;
  for (auto &b : blocks) {
    std::copy(b.a.begin(), b.a.end(), r.a.begin() + static_cast<std::ptrdiff_t>(off));
    off += b.a.size();
  }
  return r;
}

std::vector<Elt> vec(const Mat &x) { return x.a; }

Mat unvec(const Ring &R, int n, const std::vector<Elt> &v) {
  if (static_cast<int>(v.size()) != n * n) throw Error(Errc::Input, "unvec size mismatch");
  Mat x(R, n, n);
  x.a = v;
  return x;
}

Mat change_ring(const Mat &x, const Ring &target) {
  Mat r(target, x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.R.truncate(x.a[i], target);
  return r;
}

std::string format_mat(const Mat &x, bool with_tag) {
  std::ostringstream os;
  if (with_tag) os << x.R.tag() << ":";
  bool paren = x.R.is_field() && !x.R.residue_field().prime();
  for (int i = 0; i < x.rows; ++i) {
    if (i) os << ';';
    for (int j = 0; j < x.cols; ++j) {
      if (j) os << ',';
      if (paren) os << '(' << x.R.format(x(i, j)) << ')';
      else os << x.R.format(x(i, j));
    }
  }
  return os.str();
}

Mat parse_mat(const std::string &s, const std::optional<Ring> &ring) {
  std::string body = s;
  Ring R;
  std::size_t colon = s.find(':');
  if (colon != std::string::npos) {
    R = Ring::parse_tag(s.substr(0, colon));
    body = s.substr(colon + 1);
    if (ring && *ring != R) throw Error(Errc::Input, "matrix ring tag disagrees with requested ring");
  } else if (ring) {
    R = *ring;
  } else {
    throw Error(Errc::Input, "matrix needs a ring tag");
  }
  std::vector<std::vector<std::string>> cells(1);
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '(') {
      ++depth;
      continue;
    }
    if (c == ')') {
      --depth;
      continue;
    }
    if (depth == 0 && c == ',') {
      cells.back().push_back(cur);
      cur.clear();
    } else if (depth == 0 && c == ';') {
      cells.back().push_back(cur);
      cur.clear();
      cells.emplace_back();
    } else {
      cur += c;
    }
  }
  cells.back().push_back(cur);
  int m = static_cast<int>(cells.size());
  int n = static_cast<int>(cells[0].size());
  Mat x(R, m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(cells[i].size()) != n) throw Error(Errc::Input, "ragged matrix text at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) x(i, j) = R.parse(cells[i][j]);
  }
  return x;
}

// ---------------------------------------------------------------------------

Mat rref(const Mat &x, std::vector<int> *pivots) {
  if (!x.R.is_field()) throw Error(Errc::Input, "rref needs a field");
  const Field &F = x.R.residue_field();
  Mat r = x;
  if (pivots) pivots->clear();
  int row = 0;
  for (int c = 0; c < r.cols && row < r.rows; ++c) {
    int piv = -1;
    for (int i = row; i < r.rows; ++i)
      if (r(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < r.cols; ++j) std::swap(r(piv, j), r(row, j));
    Elt inv = F.inv(r(row, c));
    for (int j = c; j < r.cols; ++j) r(row, j) = F.mul(r(row, j), inv);
    for (int i = 0; i < r.rows; ++i) {
      if (i == row || !r(i, c)) continue;
      Elt t = r(i, c);
      for (int j = c; j < r.cols; ++j) r(i, j) = F.sub(r(i, j), F.mul(t, r(row, j)));
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return r;
}

int rank(const Mat &x) {
  if (x.R.is_field()) {
    std::vector<int> piv;
    rref(x, &piv);
    return static_cast<int>(piv.size());
  }
  return smith_local(x).nonzero();
}

Mat kernel_basis(const Mat &x) {
  std::vector<int> piv;
  Mat r = rref(x, &piv);
  const Field &F = x.R.residue_field();
  std::vector<bool> is_piv(x.cols, false);
  for (int c : piv) is_piv[c] = true;
  int nullity = x.cols - static_cast<int>(piv.size());
  Mat k(x.R, x.cols, nullity);
  int col = 0;
  for (int f = 0; f < x.cols; ++f) {
    if (is_piv[f]) continue;
    k(f, col) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], col) = F.neg(r(static_cast<int>(i), f));
    ++col;
  }
  return k;
}

std::optional<Mat> inverse(const Mat &x) {
  if (!x.square()) throw Error(Errc::Input, "inverse of non-square matrix");
  const Ring &R = x.R;
  int n = x.rows;
  Mat a = x, b = Mat::identity(R, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (R.is_unit(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(b(piv, j), b(c, j));
      }
    Elt inv = R.inv(a(c, c));
    for (int j = 0; j < n; ++j) {
      a(c, j) = R.mul(a(c, j), inv);
      b(c, j) = R.mul(b(c, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || !a(i, c)) continue;
      Elt t = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) = R.sub(a(i, j), R.mul(t, a(c, j)));
        b(i, j) = R.sub(b(i, j), R.mul(t, b(c, j)));
      }
    }
  }
  return b;
}

Elt det(const Mat &x) {
  RPoly cp = charpoly(x);
  Elt c0 = cp.coef(0);
  return x.rows % 2 ? x.R.neg(c0) : c0;
}

// ---------------------------------------------------------------------------

bool Echelon::reduce(std::vector<Elt> &v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Elt t = v[piv_[r]];
    if (!t) continue;
    const auto &row = rows_[r];
    for (int j = piv_[r]; j < n_; ++j)
      if (row[j]) v[j] = F_.sub(v[j], F_.mul(t, row[j]));
  }
  for (Elt e : v)
    if (e) return true;
  return false;
}

bool Echelon::insert(std::vector<Elt> v) {
  if (!reduce(v)) return false;
  int c = 0;
  while (!v[c]) ++c;
  Elt inv = F_.inv(v[c]);
  for (int j = c; j < n_; ++j) v[j] = F_.mul(v[j], inv);
  for (auto &row : rows_) {
    Elt t = row[c];
    if (!t) continue;
    for (int j = c; j < n_; ++j)
      if (v[j]) row[j] = F_.sub(row[j], F_.mul(t, v[j]));
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), c) - piv_.begin();
  piv_.insert(piv_.begin() + pos, c);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Mat Echelon::basis_cols() const {
  Mat m(Ring::field(F_), n_, rank());
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < n_; ++i) m(i, j) = rows_[j][i];
  return m;
}

} // namespace adq
