#include "mdl/matrix.hpp"

#include <sstream>

namespace mdl {

OperatorMatrix OperatorMatrix::identity(std::size_t n) {
  OperatorMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("OperatorMatrix: dimension mismatch in product");
  OperatorMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& w = rhs.at(k, j);
        if (w == 0) continue;
        out.at(i, j) += v * w;
      }
    }
  }
  return out;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("OperatorMatrix: dimension mismatch in sum");
  OperatorMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("OperatorMatrix: dimension mismatch in difference");
  OperatorMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

OperatorMatrix OperatorMatrix::scaled(const Rational& c) const {
  OperatorMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

OperatorMatrix OperatorMatrix::transposed() const {
  OperatorMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool OperatorMatrix::operator==(const OperatorMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool OperatorMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool OperatorMatrix::is_row_stochastic() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational sum(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) < 0) return false;
      sum += at(i, j);
    }
    if (sum != 1) return false;
  }
  return true;
}

Rational OperatorMatrix::max_abs() const {
  Rational best(0);
  for (const auto& v : a_) {
    Rational m = abs(v);
    if (m > best) best = m;
  }
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>>
OperatorMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) return std::make_pair(i, j);
  return std::nullopt;
}

std::string OperatorMatrix::to_pretty_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << to_string(at(i, j));
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.at(k, l) == 0) continue;
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return out;
}

OperatorMatrix embed(const OperatorMatrix& local, std::size_t legs,
                     std::size_t pos, std::size_t span, std::size_t dim) {
  if (pos + span > legs)
    throw std::invalid_argument("embed: operator does not fit on the legs");
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < pos; ++i) left *= dim;
  for (std::size_t i = pos + span; i < legs; ++i) right *= dim;
  return kron(kron(OperatorMatrix::identity(left), local),
              OperatorMatrix::identity(right));
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

OperatorMatrix reflect_two_leg(const OperatorMatrix& m, std::size_t dim) {
  OperatorMatrix out(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
          out.at(j * dim + i, l * dim + k) = m.at(i * dim + j, k * dim + l);
  return out;
}

}  // namespace mdl
