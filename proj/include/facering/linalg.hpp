#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "facering/field.hpp"

namespace facering {

// Hybrid sparse/dense row vector. Rows start sparse (sorted index/value
// pairs, no explicit zeros) and densify once fill exceeds kDensifyNum/kDensifyDen
// of the ambient width. Reduction matrices here start very sparse and fill in;
// the switch keeps both regimes cheap without two code paths upstream.
template <class F>
class RowVec {
 public:
  using Elem = typename F::Elem;

  static constexpr std::size_t kDensifyNum = 3;
  static constexpr std::size_t kDensifyDen = 10;

  RowVec() = default;
  explicit RowVec(std::size_t ncols) : ncols_(ncols) {}

  static RowVec from_dense(const F& field, const std::vector<Elem>& v) {
    RowVec r(v.size());
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!field.is_zero(v[c]))
        r.sp_.emplace_back(static_cast<std::uint32_t>(c), v[c]);
    r.nnz_ = r.sp_.size();
    r.maybe_densify(field);
    return r;
  }

  // Entries must be added in strictly increasing column order.
  void append_entry(const F& field, std::uint32_t c, const Elem& v) {
    if (dense_) throw std::logic_error("RowVec::append_entry on dense row");
    if (!sp_.empty() && sp_.back().first >= c)
      throw std::logic_error("RowVec::append_entry out of order");
    if (field.is_zero(v)) return;
    sp_.emplace_back(c, v);
    ++nnz_;
  }

  std::size_t ncols() const { return ncols_; }
  std::size_t nnz() const { return nnz_; }
  bool is_zero() const { return nnz_ == 0; }

  Elem get(const F& field, std::uint32_t c) const {
    if (dense_) return dn_[c];
    auto it = std::lower_bound(
        sp_.begin(), sp_.end(), c,
        [](const std::pair<std::uint32_t, Elem>& e, std::uint32_t col) {
          return e.first < col;
        });
    if (it != sp_.end() && it->first == c) return it->second;
    return field.zero();
  }

  // First column with a nonzero entry, or nullopt for the zero row.
  std::optional<std::uint32_t> leading() const {
    if (!dense_) {
      if (sp_.empty()) return std::nullopt;
      return sp_.front().first;
    }
    for (std::uint32_t c = 0; c < dn_.size(); ++c)
      if (dense_nonzero_[c]) return c;
    return std::nullopt;
  }

  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (!dense_) {
      for (const auto& [c, v] : sp_) fn(c, v);
    } else {
      for (std::uint32_t c = 0; c < dn_.size(); ++c)
        if (dense_nonzero_[c]) fn(c, dn_[c]);
    }
  }

  void scale_in_place(const F& field, const Elem& coef) {
    if (field.is_zero(coef)) {
      clear();
      return;
    }
    if (!dense_) {
      for (auto& [c, v] : sp_) v = field.mul(v, coef);
    } else {
      for (std::uint32_t c = 0; c < dn_.size(); ++c)
        if (dense_nonzero_[c]) dn_[c] = field.mul(dn_[c], coef);
    }
  }

  // this += coef * other. Ambient widths must agree.
  void axpy(const F& field, const Elem& coef, const RowVec& other) {
    if (field.is_zero(coef) || other.is_zero()) return;
    if (!dense_ && other.dense_) maybe_densify(field, /*force=*/true);
    if (dense_) {
      other.for_each_nonzero([&](std::uint32_t c, const Elem& v) {
        set_dense(field, c, field.add(dn_[c], field.mul(coef, v)));
      });
      return;
    }
    // sparse += coef * sparse: linear merge
    std::vector<std::pair<std::uint32_t, Elem>> merged;
    merged.reserve(sp_.size() + other.sp_.size());
    std::size_t i = 0, j = 0;
    while (i < sp_.size() || j < other.sp_.size()) {
      if (j >= other.sp_.size() ||
          (i < sp_.size() && sp_[i].first < other.sp_[j].first)) {
        merged.push_back(sp_[i++]);
      } else if (i >= sp_.size() || other.sp_[j].first < sp_[i].first) {
        Elem v = field.mul(coef, other.sp_[j].second);
        if (!field.is_zero(v)) merged.emplace_back(other.sp_[j].first, v);
        ++j;
      } else {
        Elem v = field.add(sp_[i].second, field.mul(coef, other.sp_[j].second));
        if (!field.is_zero(v)) merged.emplace_back(sp_[i].first, v);
        ++i;
        ++j;
      }
    }
    sp_ = std::move(merged);
    nnz_ = sp_.size();
    maybe_densify(field);
  }

  std::vector<Elem> to_dense(const F& field) const {
    std::vector<Elem> out(ncols_, field.zero());
    for_each_nonzero([&](std::uint32_t c, const Elem& v) { out[c] = v; });
    return out;
  }

  void clear() {
    sp_.clear();
    dn_.clear();
    dense_nonzero_.clear();
    dense_ = false;
    nnz_ = 0;
  }

 private:
  void set_dense(const F& field, std::uint32_t c, const Elem& v) {
    bool nz = !field.is_zero(v);
    if (dense_nonzero_[c] && !nz) --nnz_;
    if (!dense_nonzero_[c] && nz) ++nnz_;
    dense_nonzero_[c] = nz;
    dn_[c] = nz ? v : field.zero();
  }

  void maybe_densify(const F& field, bool force = false) {
    if (dense_) return;
    if (!force && nnz_ * kDensifyDen <= ncols_ * kDensifyNum) return;
    dn_.assign(ncols_, field.zero());
    dense_nonzero_.assign(ncols_, 0);
    for (const auto& [c, v] : sp_) {
      dn_[c] = v;
      dense_nonzero_[c] = 1;
    }
    sp_.clear();
    dense_ = true;
  }

  std::size_t ncols_ = 0;
  bool dense_ = false;
  std::vector<std::pair<std::uint32_t, Elem>> sp_;
  std::vector<Elem> dn_;
  std::vector<char> dense_nonzero_;
  std::size_t nnz_ = 0;
};

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(std::size_t nrows, std::size_t ncols)
      : ncols_(ncols), rows_(nrows, RowVec<F>(ncols)) {}

  static Matrix from_rows(const F& field,
                          const std::vector<std::vector<Elem>>& rows,
                          std::size_t ncols) {
    Matrix m(0, ncols);
    for (const auto& r : rows) {
      if (r.size() != ncols) throw std::invalid_argument("Matrix::from_rows: width mismatch");
      m.rows_.push_back(RowVec<F>::from_dense(field, r));
    }
    return m;
  }

  static Matrix from_columns(const F& field,
                             const std::vector<std::vector<Elem>>& cols,
                             std::size_t nrows) {
    Matrix m(nrows, cols.size());
    std::vector<std::vector<Elem>> dense(nrows,
                                         std::vector<Elem>(cols.size(), field.zero()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != nrows)
        throw std::invalid_argument("Matrix::from_columns: height mismatch");
      for (std::size_t r = 0; r < nrows; ++r) dense[r][c] = cols[c][r];
    }
    return from_rows(field, dense, cols.size());
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(0, n);
    for (std::size_t i = 0; i < n; ++i) {
      RowVec<F> r(n);
      r.append_entry(field, static_cast<std::uint32_t>(i), field.one());
      m.rows_.push_back(std::move(r));
    }
    return m;
  }

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  RowVec<F>& row(std::size_t i) { return rows_[i]; }
  const RowVec<F>& row(std::size_t i) const { return rows_[i]; }

  void push_row(RowVec<F> r) {
    if (r.ncols() != ncols_) throw std::invalid_argument("Matrix::push_row: width mismatch");
    rows_.push_back(std::move(r));
  }

  Elem get(const F& field, std::size_t r, std::size_t c) const {
    return rows_[r].get(field, static_cast<std::uint32_t>(c));
  }

  Matrix transpose(const F& field) const {
    std::vector<std::vector<Elem>> trows(ncols_,
                                         std::vector<Elem>(rows_.size(), field.zero()));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      rows_[r].for_each_nonzero(
          [&](std::uint32_t c, const Elem& v) { trows[c][r] = v; });
    Matrix t(0, rows_.size());
    for (std::size_t c = 0; c < ncols_; ++c)
      t.rows_.push_back(RowVec<F>::from_dense(field, trows[c]));
    return t;
  }

  // Matrix product this * other.
  Matrix mul(const F& field, const Matrix& other) const {
    if (ncols_ != other.nrows())
      throw std::invalid_argument("Matrix::mul: dimension mismatch");
    Matrix out(0, other.ncols());
    for (const auto& r : rows_) {
      RowVec<F> acc(other.ncols());
      r.for_each_nonzero([&](std::uint32_t c, const Elem& v) {
        acc.axpy(field, v, other.rows_[c]);
      });
      out.rows_.push_back(std::move(acc));
    }
    return out;
  }

  // this * v for a dense column vector v.
  std::vector<Elem> apply(const F& field, const std::vector<Elem>& v) const {
    if (v.size() != ncols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<Elem> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
      Elem s = field.zero();
      r.for_each_nonzero(
          [&](std::uint32_t c, const Elem& e) { s = field.add(s, field.mul(e, v[c])); });
      out.push_back(s);
    }
    return out;
  }

  // Stack blocks vertically; all must share the column count.
  static Matrix vstack(const std::vector<Matrix>& blocks, std::size_t ncols) {
    Matrix out(0, ncols);
    for (const auto& b : blocks) {
      if (b.ncols() != ncols) throw std::invalid_argument("Matrix::vstack: width mismatch");
      for (const auto& r : b.rows_) out.rows_.push_back(r);
    }
    return out;
  }

  bool equals(const F& field, const Matrix& other) const {
    if (nrows() != other.nrows() || ncols() != other.ncols()) return false;
    for (std::size_t r = 0; r < nrows(); ++r)
      for (std::size_t c = 0; c < ncols(); ++c)
        if (!field.eq(get(field, r, c), other.get(field, r, c))) return false;
    return true;
  }

  std::vector<RowVec<F>>& rows() { return rows_; }
  const std::vector<RowVec<F>>& rows() const { return rows_; }

 private:
  std::size_t ncols_ = 0;
  std::vector<RowVec<F>> rows_;
};

// Reduced row echelon form. Invariants: pivot columns strictly increasing,
// each pivot entry is 1, and every pivot column is zero in all other rows
// (fully reduced, not merely echelon). Downstream coset arithmetic depends
// on full reduction: residues of reduce() must vanish on every pivot column.
template <class F>
struct EchelonForm {
  using Elem = typename F::Elem;

  std::size_t ncols = 0;
  std::vector<RowVec<F>> rows;
  std::vector<std::uint32_t> pivots;

  std::size_t rank() const { return rows.size(); }

  bool is_pivot(std::uint32_t c) const {
    return std::binary_search(pivots.begin(), pivots.end(), c);
  }

  std::vector<std::uint32_t> nonpivots() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < ncols; ++c)
      if (!is_pivot(c)) out.push_back(c);
    return out;
  }

  // Residue of v modulo the row space: eliminate every pivot column. The
  // result is supported on non-pivot columns only.
  RowVec<F> reduce(const F& field, RowVec<F> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Elem e = v.get(field, pivots[i]);
      if (!field.is_zero(e)) v.axpy(field, field.neg(e), rows[i]);
    }
    return v;
  }

  bool contains(const F& field, const RowVec<F>& v) const {
    return reduce(field, v).is_zero();
  }
};

// Gauss-Jordan elimination; deterministic given the input row order. Columns
// are processed left to right; among candidate rows the pivot minimizes
// F::weight (over Q: total bit size, which tames fraction growth; over F_p
// all weights tie and the first candidate wins).
template <class F>
EchelonForm<F> rref(const F& field, std::vector<RowVec<F>> work,
                    std::size_t ncols) {
  EchelonForm<F> ech;
  ech.ncols = ncols;
  std::erase_if(work, [](const RowVec<F>& r) { return r.is_zero(); });
  for (std::uint32_t c = 0; c < ncols && !work.empty(); ++c) {
    std::size_t best = work.size();
    std::size_t best_weight = 0;
    for (std::size_t r = 0; r < work.size(); ++r) {
      // all columns < c are already eliminated, so leading() >= c
      auto lead = work[r].leading();
      if (!lead || *lead != c) continue;
      std::size_t w = field.weight(work[r].get(field, c));
      if (best == work.size() || w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == work.size()) continue;
    RowVec<F> piv = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    piv.scale_in_place(field, field.inv(piv.get(field, c)));
    for (auto& r : work) {
      typename F::Elem e = r.get(field, c);
      if (!field.is_zero(e)) r.axpy(field, field.neg(e), piv);
    }
    for (auto& r : ech.rows) {
      typename F::Elem e = r.get(field, c);
      if (!field.is_zero(e)) r.axpy(field, field.neg(e), piv);
    }
    ech.rows.push_back(std::move(piv));
    ech.pivots.push_back(c);
    std::erase_if(work, [](const RowVec<F>& r) { return r.is_zero(); });
  }
  return ech;
}

template <class F>
EchelonForm<F> rref(const F& field, const Matrix<F>& m) {
  return rref(field, m.rows(), m.ncols());
}

template <class F>
std::size_t rank(const F& field, const Matrix<F>& m) {
  return rref(field, m).rank();
}

// Canonical basis of the right kernel {v : M v = 0}, returned in RREF.
template <class F>
EchelonForm<F> kernel_basis(const F& field, const Matrix<F>& m) {
  EchelonForm<F> e = rref(field, m);
  std::vector<RowVec<F>> gens;
  for (std::uint32_t freec : e.nonpivots()) {
    std::vector<typename F::Elem> v(m.ncols(), field.zero());
    v[freec] = field.one();
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      v[e.pivots[i]] = field.neg(e.rows[i].get(field, freec));
    gens.push_back(RowVec<F>::from_dense(field, v));
  }
  return rref(field, std::move(gens), m.ncols());
}

// Canonical basis of the column space, as RREF rows of length nrows.
template <class F>
EchelonForm<F> image_basis(const F& field, const Matrix<F>& m) {
  return rref(field, m.transpose(field));
}

// Solve M x = b; nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(
    const F& field, const Matrix<F>& m,
    const std::vector<typename F::Elem>& b) {
  if (b.size() != m.nrows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<F> aug(0, m.ncols() + 1);
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    std::vector<typename F::Elem> row = m.row(r).to_dense(field);
    row.push_back(b[r]);
    aug.push_row(RowVec<F>::from_dense(field, row));
  }
  EchelonForm<F> e = rref(field, aug);
  std::vector<typename F::Elem> x(m.ncols(), field.zero());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.ncols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i].get(field, static_cast<std::uint32_t>(m.ncols()));
  }
  return x;
}

// Ambient space modulo a subspace, with the canonical monomial-style coset
// basis: coordinates indexed by the non-pivot columns of the subspace RREF.
template <class F>
class QuotientSpace {
 public:
  using Elem = typename F::Elem;

  QuotientSpace() = default;
  QuotientSpace(const F& field, EchelonForm<F> sub) : sub_(std::move(sub)) {
    (void)field;
    coset_cols_ = sub_.nonpivots();
  }

  std::size_t ambient_dim() const { return sub_.ncols; }
  std::size_t dim() const { return coset_cols_.size(); }
  const std::vector<std::uint32_t>& coset_columns() const { return coset_cols_; }
  const EchelonForm<F>& subspace() const { return sub_; }

  // Coset coordinates of an ambient vector.
  std::vector<Elem> reduce(const F& field, const RowVec<F>& v) const {
    RowVec<F> residue = sub_.reduce(field, v);
    std::vector<Elem> out(coset_cols_.size(), field.zero());
    // residue is supported on non-pivot columns; read them off in order
    residue.for_each_nonzero([&](std::uint32_t c, const Elem& val) {
      auto it = std::lower_bound(coset_cols_.begin(), coset_cols_.end(), c);
      out[static_cast<std::size_t>(it - coset_cols_.begin())] = val;
    });
    return out;
  }

  // Ambient representative of the k-th coset basis vector.
  RowVec<F> lift(const F& field, std::size_t k) const {
    RowVec<F> v(sub_.ncols);
    v.append_entry(field, coset_cols_[k], field.one());
    return v;
  }

 private:
  EchelonForm<F> sub_;
  std::vector<std::uint32_t> coset_cols_;
};

template <class F>
Matrix<F> random_matrix(const F& field, Rng& rng, std::size_t nrows,
                        std::size_t ncols) {
  Matrix<F> m(0, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    std::vector<typename F::Elem> row;
    row.reserve(ncols);
    for (std::size_t c = 0; c < ncols; ++c) row.push_back(field.random(rng));
    m.push_row(RowVec<F>::from_dense(field, row));
  }
  return m;
}

template <class F>
std::vector<typename F::Elem> random_vector(const F& field, Rng& rng,
                                            std::size_t n) {
  std::vector<typename F::Elem> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(field.random(rng));
  return v;
}

}  // namespace facering
