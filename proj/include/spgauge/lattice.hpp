#pragma once

// Integer matrices, Smith normal form, and the finitely generated abelian
// groups they present. A matrix A with `rows` rows presents the quotient
// Z^rows / (column span of A).

#include <spgauge/arith.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spgauge {

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  }

  IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows)
      : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      std::size_t j = 0;
      for (const auto& x : r) (*this)(i, j++) = x;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// A single row whose entries are the given generators of a subgroup of Z.
  static IntMatrix row_vector(const std::vector<BigInt>& entries) {
    IntMatrix m(1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m(0, j) = entries[j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length");
    std::vector<BigInt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Elementary operations; the SNF driver mirrors each one onto U or V.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// U * A * V == D, U and V unimodular, D diagonal with d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

struct FinAbGroup {
  std::vector<BigInt> invariant_factors;  // each >= 2, each dividing the next
  std::size_t free_rank = 0;

  bool is_finite() const { return free_rank == 0; }

  /// Order of the torsion part; equal to the group order when finite.
  BigInt torsion_order() const {
    BigInt r = 1;
    for (const auto& d : invariant_factors) r *= d;
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
    for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Smith normal form. The pivot is the entry of smallest nonzero absolute
/// value in the remaining block, ties broken by lowest row then lowest column.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  const std::size_t steps = std::min(r, c);
  std::size_t rank = 0;

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      BigInt best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (d(i, j) == 0) continue;
          BigInt mag = abs_value(d(i, j));
          if (!pivot || mag < best) {
            pivot = {i, j};
            best = std::move(mag);
          }
        }
      if (!pivot) return {std::move(u), std::move(d), std::move(v), rank};

      d.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the offending
      // row into row t and reduce again (the new remainder is a smaller pivot).
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r && !bad_row; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row(t, *bad_row, 1);
      u.add_row(t, *bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++rank;
  }
  return {std::move(u), std::move(d), std::move(v), rank};
}

/// Z^rows modulo the span of A's columns.
inline FinAbGroup cokernel(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  FinAbGroup g;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) != 1) g.invariant_factors.push_back(snf.D(i, i));
  g.free_rank = a.rows() - snf.rank;
  return g;
}

/// Least m >= 1 with m*v in the column span of A, or nullopt if v has
/// infinite order in the cokernel.
inline std::optional<BigInt> element_order_in_coker(const IntMatrix& a, const std::vector<BigInt>& v) {
  if (v.size() != a.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " against " +
                    std::to_string(a.rows()) + " rows");
  const SmithForm snf = smith_normal_form(a);
  const std::vector<BigInt> w = snf.U.apply(v);
  BigInt order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i >= snf.rank) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    const BigInt& di = snf.D(i, i);
    order = lcm_nonneg(order, di / gcd_nonneg(di, w[i]));
  }
  return order;
}

}  // namespace spgauge
