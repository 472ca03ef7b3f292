#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adq/ff.hpp"

namespace adq {

enum class RingKind { Field, Zmod, Dual };

/// Local ring with residue field: F_q, Z/p^N, or the dual numbers F_p[e]/(e^2).
/// Elements are Elt indices: field index, integer in [0,p^N), or a + b*p for a + b e.
class Ring {
public:
  Ring() = default;
  static Ring field(const Field &F);
  static Ring zmod(int p, int N);
  static Ring dual(int p);
  /// Parse "Fq[p,k]", "Zmod[p,N]" or "Dual[p]".
  static Ring parse_tag(const std::string &tag);

  RingKind kind() const { return kind_; }
  bool is_field() const { return kind_ == RingKind::Field; }
  int p() const { return p_; }
  /// Truncation length: N for Z/p^N, 2 for dual numbers, 1 for fields.
  int N() const { return N_; }
  std::uint32_t size() const { return size_; }
  const Field &residue_field() const { return F_; }
  std::string tag() const;

  Elt add(Elt a, Elt b) const {
    switch (kind_) {
    case RingKind::Field: return F_.add(a, b);
    case RingKind::Zmod: {
      Elt s = a + b;
      return s >= size_ ? s - size_ : s;
    }
    case RingKind::Dual: return dual_add(a, b);
    }
    return 0;
  }
  Elt sub(Elt a, Elt b) const {
    switch (kind_) {
    case RingKind::Field: return F_.sub(a, b);
    case RingKind::Zmod: return a >= b ? a - b : a + size_ - b;
    case RingKind::Dual: return dual_add(a, dual_neg(b));
    }
    return 0;
  }
  Elt neg(Elt a) const { return sub(0, a); }
  Elt mul(Elt a, Elt b) const {
    switch (kind_) {
    case RingKind::Field: return F_.mul(a, b);
    case RingKind::Zmod: return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % size_);
    case RingKind::Dual: return dual_mul(a, b);
    }
    return 0;
  }
  Elt from_int(std::int64_t v) const;
  /// Residue in F_p (or the element itself in the field case).
  Elt residue(Elt a) const;
  /// Canonical lift of a residue-field element (prime field entries only for Z/p^N and Dual).
  Elt lift(Elt r) const;
  bool is_unit(Elt a) const;
  Elt inv(Elt a) const;
  /// Valuation in the chain ring; N() for zero.
  int val(Elt a) const;
  /// Some c with c*x = y; requires val(y) >= val(x) and x nonzero.
  Elt div_exact(Elt y, Elt x) const;
  /// Uniformizer power p^v or e^v (v < N).
  Elt pi_pow(int v) const;
  /// Reduce an element into the truncation of length M <= N (same residue char).
  Elt truncate(Elt a, const Ring &target) const;

  std::string format(Elt a) const;
  Elt parse(const std::string &s) const;

  bool operator==(const Ring &o) const {
    return kind_ == o.kind_ && p_ == o.p_ && N_ == o.N_ && size_ == o.size_;
  }
  bool operator!=(const Ring &o) const { return !(*this == o); }

private:
  RingKind kind_ = RingKind::Field;
  Field F_;
  int p_ = 0, N_ = 1;
  std::uint32_t size_ = 0;

  Elt dual_add(Elt a, Elt b) const {
    Elt a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    Elt c0 = a0 + b0, c1 = a1 + b1;
    if (c0 >= static_cast<Elt>(p_)) c0 -= p_;
    if (c1 >= static_cast<Elt>(p_)) c1 -= p_;
    return c0 + c1 * p_;
  }
  Elt dual_neg(Elt a) const {
    Elt a0 = a % p_, a1 = a / p_;
    return (a0 ? p_ - a0 : 0) + (a1 ? p_ - a1 : 0) * p_;
  }
  Elt dual_mul(Elt a, Elt b) const {
    std::uint64_t a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    return static_cast<Elt>((a0 * b0) % p_ + ((a0 * b1 + a1 * b0) % p_) * p_);
  }
};

/// Dense row-major matrix over a Ring.
struct Mat {
  Ring R;
  int rows = 0, cols = 0;
  std::vector<Elt> a;

  Mat() = default;
  Mat(Ring r, int m, int n) : R(std::move(r)), rows(m), cols(n), a(static_cast<std::size_t>(m) * n, 0) {}
  static Mat identity(const Ring &r, int n);
  static Mat from_ints(const Ring &r, const std::vector<std::vector<std::int64_t>> &v);
  static Mat column(const Ring &r, const std::vector<Elt> &v);
  static Mat diag(const Ring &r, const std::vector<Elt> &d);

  Elt &operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Elt operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool square() const { return rows == cols; }
  std::vector<Elt> col(int j) const;
  std::vector<Elt> row(int i) const;
  void set_col(int j, const std::vector<Elt> &v);
  bool is_zero() const;

  bool operator==(const Mat &o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat &o) const { return !(*this == o); }
  bool operator<(const Mat &o) const { return a < o.a; }
};

Mat operator*(const Mat &x, const Mat &y);
Mat operator+(const Mat &x, const Mat &y);
Mat operator-(const Mat &x, const Mat &y);
Mat scale(const Mat &x, Elt s);
Mat transpose(const Mat &x);
Mat mpow(const Mat &x, std::uint64_t e);
std::vector<Elt> mat_vec(const Mat &x, const std::vector<Elt> &v);
/// Horizontal concatenation of column blocks.
Mat hcat(const std::vector<Mat> &blocks);
/// Vertical concatenation.
Mat vcat(const std::vector<Mat> &blocks);
/// Row-major vectorisation of a square matrix as an n^2 column.
std::vector<Elt> vec(const Mat &x);
Mat unvec(const Ring &R, int n, const std::vector<Elt> &v);
/// Reduce entries into another ring (Z/p^N -> Z/p^M, or -> residue field).
Mat change_ring(const Mat &x, const Ring &target);

/// Matrix text encoding "Tag:r0c0,r0c1;r1c0,..." ; the tag may be omitted when a ring is given.
std::string format_mat(const Mat &x, bool with_tag = true);
Mat parse_mat(const std::string &s, const std::optional<Ring> &ring = std::nullopt);

// ---- field linear algebra -------------------------------------------------

/// Reduced row echelon form over a field; pivots receives pivot columns.
Mat rref(const Mat &x, std::vector<int> *pivots = nullptr);
int rank(const Mat &x);
/// Column basis of the null space (cols x nullity) over a field.
Mat kernel_basis(const Mat &x);
/// Inverse over a field or local ring; nullopt if singular.
std::optional<Mat> inverse(const Mat &x);
Elt det(const Mat &x);

/// Incremental row echelon basis of a subspace of F^n (reduced form maintained).
class Echelon {
public:
  Echelon() = default;
  Echelon(Field F, int n) : F_(std::move(F)), n_(n) {}
  /// Reduce v against the basis in place; returns true if the result is nonzero.
  bool reduce(std::vector<Elt> &v) const;
  /// Insert v; returns true if the span grew.
  bool insert(std::vector<Elt> v);
  bool contains(std::vector<Elt> v) const { return !reduce(v); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return n_; }
  const std::vector<std::vector<Elt>> &rows() const { return rows_; }
  const std::vector<int> &pivots() const { return piv_; }
  const Field &field() const { return F_; }
  /// Basis as columns of an n x rank matrix.
  Mat basis_cols() const;

private:
  Field F_;
  int n_ = 0;
  std::vector<std::vector<Elt>> rows_;
  std::vector<int> piv_;
};

// ---- polynomials over rings -----------------------------------------------

/// Polynomial with coefficients in a Ring, lowest degree first.
struct RPoly {
  Ring R;
  std::vector<Elt> c;
  RPoly() = default;
  RPoly(Ring r, std::vector<Elt> v) : R(std::move(r)), c(std::move(v)) { trim(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elt coef(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  /// Residue polynomial over the residue field.
  Poly residue() const;
  static RPoly lift(const Ring &R, const Poly &f);
  bool operator==(const RPoly &o) const { return c == o.c; }
  std::string str() const;
};
RPoly operator+(const RPoly &a, const RPoly &b);
RPoly operator-(const RPoly &a, const RPoly &b);
RPoly operator*(const RPoly &a, const RPoly &b);
/// Division by a monic polynomial.
std::pair<RPoly, RPoly> divmod_monic(const RPoly &a, const RPoly &b);
Mat eval_at(const RPoly &f, const Mat &x);

/// Characteristic polynomial det(xI - M) by the division-free Berkowitz recurrence.
RPoly charpoly(const Mat &m);
/// Minimal polynomial over a field (Krylov dependency of I, M, M^2, ...).
Poly minpoly(const Mat &m);
Poly charpoly_field(const Mat &m);

// ---- Smith forms ----------------------------------------------------------

using IMat = std::vector<std::vector<std::int64_t>>;
struct SmithZ {
  std::vector<std::int64_t> diag;  // nonzero invariant factors d1 | d2 | ...
  IMat D, U, V;                    // U * M * V = D
};
/// Smith normal form over the integers with unimodular transforms.
SmithZ smith_form_Z(const IMat &M);
IMat imul(const IMat &a, const IMat &b);

/// Smith-type reduction over a chain ring (field, Z/p^N, dual numbers): U * A * V = D with
/// D diagonal, diagonal entries uniformizer powers of nondecreasing valuation.
struct SmithLocal {
  Mat U, V, D;
  std::vector<int> vals;  // valuation of each nonzero diagonal entry
  int nonzero() const { return static_cast<int>(vals.size()); }
};
SmithLocal smith_local(const Mat &A);

// ---- direct summands ------------------------------------------------------

/// Free direct summand of R^n given by a basis in reduced column echelon form:
/// at each pivot row exactly one basis vector has a 1 and the others 0.
struct Summand {
  Ring R;
  int n = 0;
  Mat basis;  // n x rank
  std::vector<int> pivot_rows;

  int rank() const { return basis.cols; }
  std::vector<Elt> vector(int j) const { return basis.col(j); }
  /// Coordinates of v in the basis, or nullopt if v is not in the span.
  std::optional<std::vector<Elt>> coords(const std::vector<Elt> &v) const;
  bool contains(const std::vector<Elt> &v) const { return coords(v).has_value(); }
  bool contains(const Summand &o) const;
  bool operator==(const Summand &o) const { return n == o.n && basis == o.basis; }
  bool operator!=(const Summand &o) const { return !(*this == o); }
  std::string str() const;
};

Summand zero_summand(const Ring &R, int n);
Summand full_summand(const Ring &R, int n);
/// Span of the given columns if it is a direct summand; nullopt means NOT_A_SUMMAND.
std::optional<Summand> summand_saturate(const Ring &R, const Mat &span_cols);
/// Same as summand_saturate but throws Errc::Invariant if the span is not a summand.
Summand make_summand(const Mat &span_cols);
/// Kernel over a field or the free part of the solution module over a local ring.
Summand kernel(const Mat &M);
/// Image of an idempotent or other endomorphism whose column span is a summand.
Summand image(const Mat &M);
Summand reduce_summand(const Summand &S, const Ring &target);
/// Solve A x = b over a field or chain ring; nullopt if inconsistent.
std::optional<std::vector<Elt>> solve(const Mat &A, const std::vector<Elt> &b);

} // namespace adq
