#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdl/rational.hpp"

namespace mdl {

// Dense matrix of exact rationals. Convention throughout the project:
// row = source basis vector, column = target, so a stochastic matrix is
// row-stochastic and the product A*B means "apply A, then B".
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static OperatorMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix scaled(const Rational& c) const;
  OperatorMatrix transposed() const;
  bool operator==(const OperatorMatrix& rhs) const;
  bool operator!=(const OperatorMatrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  bool is_row_stochastic() const;

  /// Largest |entry|; 0 for an empty matrix.
  Rational max_abs() const;

  /// Row-major position of the first nonzero entry, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  /// Dense bracketed grid of rational entries.
  std::string to_pretty_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Kronecker product; the left factor is the most significant tensor leg.
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// 1^{⊗(pos)} ⊗ M ⊗ 1^{⊗(legs - pos - span)} on `legs` factors of local
/// dimension `dim`; M must be dim^span square and pos is 0-based.
OperatorMatrix embed(const OperatorMatrix& local, std::size_t legs,
                     std::size_t pos, std::size_t span, std::size_t dim);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Conjugate a two-leg operator by the swap of its legs:
/// (i,j),(k,l) entry goes to (j,i),(l,k).
OperatorMatrix reflect_two_leg(const OperatorMatrix& m, std::size_t dim);

}  // namespace mdl
