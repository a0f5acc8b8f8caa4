#pragma once

// Exact dense linear algebra: canonical reduced row-echelon forms, kernels,
// solving, subspace arithmetic, multiplicative closure of matrix sets, and
// the invertible-element search used by isomorphism testing.

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "aspec/matrix.hpp"

namespace aspec {

struct RrefResult {
  Mat echelon;
  int rank;
};

// Canonical reduced row-echelon form: pivots are 1 and alone in their column,
// pivot columns strictly increase.
inline RrefResult rref_rank(const Mat& input) {
  Mat m = input;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    Scalar inv = m.at(r, c).inv();
    for (int j = c; j < cols; ++j) m.at(r, j) = inv * m.at(r, j);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    ++r;
  }
  return {std::move(m), r};
}

inline int rank(const Mat& m) { return rref_rank(m).rank; }

// A subspace of k^ambient kept permanently in canonical RREF, so equality of
// subspaces is equality of representations.
class Subspace {
 public:
  Subspace(int ambient, const FieldTag& f) : ambient_(ambient), field_(f) {}

  static Subspace span_of(int ambient, const FieldTag& f, const std::vector<Vec>& vectors) {
    Subspace s(ambient, f);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  int ambient() const { return ambient_; }
  const FieldTag& field() const { return field_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after elimination against the basis.
  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar& c = v[pivots_[k]];
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) v[j] = v[j] - c * rows_[k][j];
    }
    return v;
  }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  // Inserts v, keeping canonical RREF. Returns true when the dimension grew.
  bool insert(Vec v) {
    if (static_cast<int>(v.size()) != ambient_) throw SizeMismatch("subspace insert length");
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) return false;
    Scalar inv = v[lead].inv();
    for (int j = 0; j < ambient_; ++j) v[j] = inv * v[j];
    // back-substitute into existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar& c = rows_[k][lead];
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) rows_[k][j] = rows_[k][j] - c * v[j];
    }
    auto where = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(where - pivots_.begin());
    pivots_.insert(where, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  Subspace intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw SizeMismatch("intersect ambient mismatch");
    // Solve sum_i x_i a_i = sum_j y_j b_j over (x, y).
    const int na = dim(), nb = other.dim();
    std::vector<Vec> eqs;
    for (int c = 0; c < ambient_; ++c) {
      Vec eq(static_cast<std::size_t>(na + nb), Scalar::zero(field_));
      for (int i = 0; i < na; ++i) eq[i] = rows_[i][c];
      for (int j = 0; j < nb; ++j) eq[na + j] = -other.rows_[j][c];
      eqs.push_back(std::move(eq));
    }
    Subspace result(ambient_, field_);
    Mat sys = Mat::from_rows(eqs, field_);
    // null vectors of sys give compatible coefficient pairs
    for (const auto& xy : nullspace_basis(sys)) {
      Vec v(ambient_, Scalar::zero(field_));
      for (int i = 0; i < na; ++i)
        for (int c = 0; c < ambient_; ++c) v[c] = v[c] + xy[i] * rows_[i][c];
      result.insert(std::move(v));
    }
    return result;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.rows_ == b.rows_;
  }

  // Right kernel {v : M v^T = 0}, canonical basis.
  static std::vector<Vec> nullspace_basis(const Mat& m) {
    auto [ech, rk] = rref_rank(m);
    const int cols = m.cols();
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rk; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (!ech.at(i, j).is_zero()) {
          pivot_col.push_back(j);
          is_pivot[j] = true;
          break;
        }
      }
    }
    std::vector<Vec> out;
    for (int j = 0; j < cols; ++j) {
      if (is_pivot[j]) continue;
      Vec v(cols, Scalar::zero(m.field()));
      v[j] = Scalar::one(m.field());
      for (int i = 0; i < rk; ++i) v[pivot_col[i]] = -ech.at(i, j);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  int ambient_;
  FieldTag field_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Right kernel as a canonical Subspace.
inline Subspace nullspace(const Mat& m) {
  Subspace s(m.cols(), m.field());
  for (auto& v : Subspace::nullspace_basis(m)) s.insert(std::move(v));
  return s;
}

// Left kernel {v : v M = 0}; this is the kernel of M as an operator on row
// vectors, the module-theoretic kernel in our convention.
inline Subspace left_nullspace(const Mat& m) { return nullspace(m.transpose()); }

inline Mat inverse(const Mat& m) {
  if (!m.is_square()) throw SizeMismatch("inverse of non-square matrix");
  const int n = m.rows();
  Mat aug(n, 2 * n, m.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  auto [ech, rk] = rref_rank(aug);
  if (rk < n) throw SingularMatrix("matrix is not a unit");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j ? !ech.at(i, j).is_one() : !ech.at(i, j).is_zero())
        throw SingularMatrix("matrix is not a unit");
    }
  return ech.block(0, n, n, n);
}

inline bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

// Full affine solution set of (row_i . x = rhs_i). Inconsistency is a value.
struct LinearSolution {
  bool consistent;
  Vec particular;        // one solution when consistent
  Subspace homogeneous;  // kernel of the coefficient matrix

  int dim() const { return homogeneous.dim(); }
};

inline LinearSolution solve_linear(const std::vector<Vec>& rows, const Vec& rhs, int unknowns,
                                   const FieldTag& f) {
  if (rows.size() != rhs.size()) throw SizeMismatch("solve_linear rhs length");
  Mat aug(static_cast<int>(rows.size()), unknowns + 1, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != unknowns) throw SizeMismatch("solve_linear row length");
    for (int j = 0; j < unknowns; ++j) aug.at(static_cast<int>(i), j) = rows[i][j];
    aug.at(static_cast<int>(i), unknowns) = rhs[i];
  }
  auto [ech, rk] = rref_rank(aug);
  LinearSolution sol{true, Vec(unknowns, Scalar::zero(f)), Subspace(unknowns, f)};
  std::vector<int> pivot_col;
  for (int i = 0; i < rk; ++i) {
    int j = 0;
    while (j <= unknowns && ech.at(i, j).is_zero()) ++j;
    if (j == unknowns) {
      sol.consistent = false;  // 0 = 1 row
      return sol;
    }
    pivot_col.push_back(j);
  }
  for (int i = 0; i < rk; ++i) sol.particular[pivot_col[i]] = ech.at(i, unknowns);
  Mat coeff(static_cast<int>(rows.size()), unknowns, f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) coeff.at(static_cast<int>(i), j) = rows[i][j];
  sol.homogeneous = nullspace(coeff);
  return sol;
}

// Echelonized basis of a matrix subalgebra, as flattened d*d row vectors.
struct SubalgebraBasis {
  int d = 0;
  Subspace basis;
  bool unital = false;

  SubalgebraBasis(int d_, const FieldTag& f, bool unital_)
      : d(d_), basis(d_ * d_, f), unital(unital_) {}

  int dim() const { return basis.dim(); }
  const FieldTag& field() const { return basis.field(); }

  std::vector<Mat> elements() const {
    std::vector<Mat> out;
    for (const auto& v : basis.basis()) out.push_back(Mat::unflatten(v, d, d, basis.field()));
    return out;
  }

  bool contains(const Mat& m) const { return basis.contains(m.flatten()); }
};

// Smallest subalgebra of d x d matrices containing the generators (and the
// identity when include_identity is set): span-then-multiply fixpoint, new
// elements reduced immediately so the working basis never exceeds d^2.
inline SubalgebraBasis product_closure(const std::vector<Mat>& gens, bool include_identity, int d,
                                       const FieldTag& f) {
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != d) throw SizeMismatch("product_closure generator shape");
    if (!(g.field() == f)) throw FieldMismatch("product_closure generator fields");
  }
  SubalgebraBasis alg(d, f, include_identity);
  if (include_identity) alg.basis.insert(Mat::identity(d, f).flatten());
  for (const auto& g : gens) alg.basis.insert(g.flatten());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Vec> snapshot = alg.basis.basis();
    for (const auto& row : snapshot) {
      Mat b = Mat::unflatten(row, d, d, f);
      for (const auto& g : gens) {
        if (alg.basis.insert((b * g).flatten())) changed = true;
        if (alg.basis.insert((g * b).flatten())) changed = true;
      }
    }
  }
  return alg;
}

inline SubalgebraBasis product_closure(const std::vector<Mat>& gens, bool include_identity) {
  if (gens.empty()) throw SizeMismatch("product_closure needs generators or explicit dimension");
  return product_closure(gens, include_identity, gens[0].rows(), gens[0].field());
}

// Search for an invertible matrix inside the span of flattened d x d
// matrices. Over char-0 fields the deterministic coefficient grid
// {0,...,d}^dim is complete: det is a polynomial of degree <= d in each
// coefficient, so it cannot vanish on the whole grid unless it vanishes on
// the span. Over F_p the search is exhaustive while p^dim stays within
// bounds, otherwise randomized with an honest MaybeNone.
struct SpanSearch {
  enum class Status { Found, NoneFound, MaybeNone };
  Status status;
  std::optional<Mat> witness;
};

struct SpanSearchOptions {
  long long grid_cap = 4'000'000;  // max number of deterministic candidates
  int random_trials = 4000;
  unsigned seed = 0x5eed;
};

inline SpanSearch invertible_in_span(const Subspace& span, int d,
                                     const SpanSearchOptions& opt = {}) {
  const FieldTag f = span.field();
  if (span.ambient() != d * d) throw SizeMismatch("invertible_in_span ambient");
  const int k = span.dim();
  if (k == 0) return {SpanSearch::Status::NoneFound, std::nullopt};
  std::vector<Mat> basis;
  for (const auto& v : span.basis()) basis.push_back(Mat::unflatten(v, d, d, f));

  auto combo = [&](const std::vector<long long>& c) {
    Mat m(d, d, f);
    for (int i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      m = m + basis[i].scaled(Scalar::of_int(c[i], f));
    }
    return m;
  };

  const long long radix = f.char_zero() ? d + 1 : f.p;
  // candidate count = radix^k, watching for overflow
  long long total = 1;
  bool exhaustive = true;
  for (int i = 0; i < k; ++i) {
    if (total > opt.grid_cap / radix) {
      exhaustive = false;
      break;
    }
    total *= radix;
  }

  if (exhaustive) {
    std::vector<long long> c(k, 0);
    for (long long n = 1; n < total; ++n) {
      long long t = n;
      for (int i = 0; i < k; ++i) {
        c[i] = t % radix;
        t /= radix;
      }
      Mat m = combo(c);
      if (is_invertible(m)) return {SpanSearch::Status::Found, std::move(m)};
    }
    return {SpanSearch::Status::NoneFound, std::nullopt};
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long long> dist(0, radix - 1);
  std::vector<long long> c(k);
  for (int t = 0; t < opt.random_trials; ++t) {
    bool all_zero = true;
    for (int i = 0; i < k; ++i) {
      c[i] = dist(rng);
      all_zero = all_zero && c[i] == 0;
    }
    if (all_zero) continue;
    Mat m = combo(c);
    if (is_invertible(m)) return {SpanSearch::Status::Found, std::move(m)};
  }
  return {SpanSearch::Status::MaybeNone, std::nullopt};
}

}  // namespace aspec
