#pragma once

// Dense exact matrices. Row-major; module elements are row vectors and act
// on the right, so an operator application is v -> v*M throughout.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "aspec/scalar.hpp"

namespace aspec {

using Vec = std::vector<Scalar>;

class Mat {
 public:
  Mat(int rows, int cols, const FieldTag& f)
      : rows_(rows), cols_(cols), field_(f), e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw SizeMismatch("negative matrix dimension");
  }

  static Mat identity(int n, const FieldTag& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  // E_ij, single 1 entry
  static Mat unit(int n, int i, int j, const FieldTag& f) {
    Mat m(n, n, f);
    m.at(i, j) = Scalar::one(f);
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows, const FieldTag& f) {
    if (rows.empty()) return Mat(0, 0, f);
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), f);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols_) throw SizeMismatch("ragged rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  // Convenience for tests and fixtures: integer entries.
  static Mat of_ints(std::initializer_list<std::initializer_list<long long>> rows, const FieldTag& f) {
    std::vector<Vec> g;
    for (const auto& r : rows) {
      Vec row;
      for (long long v : r) row.push_back(Scalar::of_int(v, f));
      g.push_back(std::move(row));
    }
    return from_rows(g, f);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldTag& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.check_shape(b);
    Mat r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.check_shape(b);
    Mat r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw SizeMismatch("matrix product shape");
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over mixed fields");
    Mat r(a.rows_, b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
      }
    }
    return r;
  }

  Mat scaled(const Scalar& c) const {
    Mat r = *this;
    for (auto& x : r.e_) x = c * x;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Scalar trace() const {
    Scalar t = Scalar::zero(field_);
    for (int i = 0; i < rows_ && i < cols_; ++i) t = t + at(i, i);
    return t;
  }

  Mat conj_entrywise() const {
    Mat r = *this;
    for (auto& x : r.e_) x = x.conj();
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Vec row(int i) const {
    Vec v(cols_, Scalar::zero(field_));
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  Vec col(int j) const {
    Vec v(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  Vec flatten() const { return e_; }

  static Mat unflatten(const Vec& v, int rows, int cols, const FieldTag& f) {
    if (static_cast<int>(v.size()) != rows * cols) throw SizeMismatch("unflatten size");
    Mat m(rows, cols, f);
    m.e_ = v;
    return m;
  }

  static Mat block_diag(std::span<const Mat> blocks, const FieldTag& f) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    Mat m(n, n, f);
    int off = 0;
    for (const auto& b : blocks) {
      if (!b.is_square()) throw SizeMismatch("block_diag needs square blocks");
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
      off += b.rows();
    }
    return m;
  }

  Mat block(int r0, int c0, int nrows, int ncols) const {
    Mat m(nrows, ncols, field_);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      s += "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
      s += "]";
      if (i + 1 < rows_) s += "\n";
    }
    s += "]";
    return s;
  }

 private:
  void check_shape(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw SizeMismatch("matrix shape mismatch");
    if (!(field_ == b.field_)) throw FieldMismatch("matrices over mixed fields");
  }

  int rows_, cols_;
  FieldTag field_;
  std::vector<Scalar> e_;
};

// v * M for a row vector v.
inline Vec apply_row(const Vec& v, const Mat& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw SizeMismatch("row-vector application");
  Vec r(m.cols(), Scalar::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] = r[j] + v[i] * m.at(i, j);
  }
  return r;
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace aspec
