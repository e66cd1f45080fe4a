#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic and dense linear algebra over a prime field F_p.
 *
 * Every hom-space in the library is an F_p-vector space, so everything
 * upstream (composition, fill-ins, factorizations, idempotent searches)
 * bottoms out in the routines here. Arithmetic is exact; there is no
 * rounding anywhere.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idcomp {

using Elem = std::uint32_t;

/// A prime field F_p. Elements are residues 0 <= v < p.
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    }
  }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  std::uint32_t prime() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }

  Elem inv(Elem a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat: a^(p-2)
    Elem result = 1;
    Elem base = a % p_;
    std::uint32_t e = p_ - 2;
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  /// (-1)^k as a field element.
  Elem sign(int k) const noexcept { return (k % 2 == 0) ? 1 : neg(1); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_ = 2;
};

/// Dense row-major matrix over F_p. 0 x k and k x 0 matrices are legal.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FMatrix(PrimeField f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
      : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("FMatrix: entry count does not match shape");
    }
    for (auto& v : data_) v %= field_.prime();
  }

  static FMatrix identity(PrimeField f, std::size_t n) {
    FMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Build from nested rows; convenient in tests.
  static FMatrix from_rows(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    FMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("FMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
  }

  /// Column vector from coordinates.
  static FMatrix column(PrimeField f, const std::vector<Elem>& v) { return FMatrix(f, v.size(), 1, v); }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Elem> column_vector(std::size_t c) const {
    std::vector<Elem> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const noexcept {
    for (auto v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  bool operator==(const FMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  FMatrix operator*(const FMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FMatrix: product shape mismatch");
    FMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        Elem a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
        }
      }
    }
    return out;
  }

  FMatrix operator+(const FMatrix& o) const {
    check_same_shape(o);
    FMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
  }

  FMatrix operator-(const FMatrix& o) const {
    check_same_shape(o);
    FMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
    return out;
  }

  FMatrix scaled(Elem s) const {
    FMatrix out = *this;
    for (auto& v : out.data_) v = field_.mul(v, s);
    return out;
  }

  FMatrix transpose() const {
    FMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  /// Horizontal concatenation [this | o].
  FMatrix hcat(const FMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("FMatrix::hcat: row mismatch");
    FMatrix out(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
    }
    return out;
  }

 private:
  void check_same_shape(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FMatrix: shape mismatch");
  }

  PrimeField field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  FMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by row operations only. Pivots are chosen as the
/// first nonzero entry scanning columns left to right, rows top to bottom.
inline RrefResult rref(FMatrix m) {
  const auto& f = m.field();
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    Elem inv = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Elem factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const FMatrix& m) { return rref(m).rank; }

/// Basis of {x : a x = 0}, one basis vector per column of the result.
inline FMatrix kernel_basis(const FMatrix& a) {
  const auto& f = a.field();
  auto r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::size_t nfree = a.cols() - r.rank;
  FMatrix k(f, a.cols(), nfree);
  std::size_t idx = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, idx) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      k(r.pivots[i], idx) = f.neg(r.reduced(i, free));
    }
    ++idx;
  }
  return k;
}

/// All solutions of a x = b: x = particular + kernel * t.
struct Solution {
  FMatrix particular;  // a.cols() x b.cols()
  FMatrix kernel;      // a.cols() x dim ker a
};

/// Solve a x = b. Returns nullopt (no solution) when some column of b lies
/// outside the column space of a.
inline std::optional<Solution> solve(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: a.rows != b.rows");
  const auto& f = a.field();
  auto r = rref(a.hcat(b));
  // Inconsistent iff some pivot lands in the b block.
  for (auto p : r.pivots) {
    if (p >= a.cols()) return std::nullopt;
  }
  FMatrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return Solution{std::move(x), kernel_basis(a)};
}

/// Two-sided inverse, or nullopt for non-square / singular input.
inline std::optional<FMatrix> inverse(const FMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto id = FMatrix::identity(m.field(), m.rows());
  auto sol = solve(m, id);
  if (!sol || sol->kernel.cols() != 0) return std::nullopt;
  if (!(m * sol->particular == id) || !(sol->particular * m == id)) return std::nullopt;
  return sol->particular;
}

}  // namespace idcomp
