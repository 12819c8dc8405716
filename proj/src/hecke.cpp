#include "mdl/hecke.hpp"

namespace mdl {

namespace {

// E_{a,b} ⊗ E_{c,d} contribution on a dim^2 space, 0-based indices.
void add_pair(OperatorMatrix& m, std::size_t dim, std::size_t a, std::size_t b,
              std::size_t c, std::size_t d, const Rational& coeff) {
  m.at(a * dim + c, b * dim + d) += coeff;
}

}  // namespace

OperatorMatrix r_matrix_type_a(int n, const Rational& q) {
  if (n < 1) throw std::invalid_argument("r_matrix_type_a: n must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  OperatorMatrix m(dim * dim, dim * dim);
  const Rational qinv = Rational(1) / q;
  for (std::size_t i = 0; i < dim; ++i) {
    add_pair(m, dim, i, i, i, i, Rational(1));
    for (std::size_t j = i + 1; j < dim; ++j) {
      add_pair(m, dim, j, i, i, j, Rational(1));
      add_pair(m, dim, i, j, j, i, qinv);
      add_pair(m, dim, j, j, i, i, Rational(1) - qinv);
    }
  }
  return m;
}

OperatorMatrix r_matrix_two_param(int n, const Rational& r, const Rational& s) {
  if (n < 1) throw std::invalid_argument("r_matrix_two_param: n must be >= 1");
  if (r == 0 || s == 0)
    throw std::invalid_argument("r_matrix_two_param: r, s must be nonzero");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  OperatorMatrix m(dim * dim, dim * dim);
  const Rational sinv = Rational(1) / s;
  for (std::size_t i = 0; i < dim; ++i) {
    add_pair(m, dim, i, i, i, i, Rational(1));
    for (std::size_t j = i + 1; j < dim; ++j) {
      add_pair(m, dim, j, i, i, j, r);
      add_pair(m, dim, i, j, j, i, sinv);
      add_pair(m, dim, j, j, i, i, Rational(1) - r * sinv);
    }
  }
  return m;
}

OperatorMatrix hecke_type_b_bulk(int r_species, const Rational& q) {
  if (r_species < 1)
    throw std::invalid_argument("hecke_type_b_bulk: r must be >= 1");
  const std::size_t dim = 2 * static_cast<std::size_t>(r_species) + 1;
  OperatorMatrix m(dim * dim, dim * dim);
  const Rational qinv = Rational(1) / q;
  for (std::size_t i = 0; i < dim; ++i) {
    add_pair(m, dim, i, i, i, i, qinv);
    for (std::size_t j = i + 1; j < dim; ++j) {
      add_pair(m, dim, j, i, i, j, Rational(1));
      add_pair(m, dim, j, j, i, i, qinv - q);
      add_pair(m, dim, i, j, j, i, Rational(1));
    }
  }
  return m;
}

OperatorMatrix hecke_type_b_boundary(int r_species, const Rational& Q) {
  if (r_species < 1)
    throw std::invalid_argument("hecke_type_b_boundary: r must be >= 1");
  const int r = r_species;
  const std::size_t dim = 2 * static_cast<std::size_t>(r) + 1;
  auto idx = [r](int label) { return static_cast<std::size_t>(label + r); };
  OperatorMatrix m(dim, dim);
  const Rational Qinv = Rational(1) / Q;
  m.at(idx(0), idx(0)) = Qinv;
  for (int i = 1; i <= r; ++i) {
    m.at(idx(-i), idx(i)) += 1;             // E_{-i,i}, i > 0
    m.at(idx(-i), idx(-i)) += Qinv - Q;     // E_{i,i},  i < 0
    m.at(idx(i), idx(-i)) += 1;             // E_{-i,i}, i < 0
  }
  return m;
}

OperatorMatrix stochastic_bulk_move(int r_species, const Rational& q) {
  OperatorMatrix m = hecke_type_b_bulk(r_species, q).scaled(q);
  const std::size_t dim = 2 * static_cast<std::size_t>(r_species) + 1;
  // conjugate by diag(q^{1{a<b}}) over the pair basis (a,b)
  auto weight = [&](std::size_t pair) {
    std::size_t a = pair / dim, b = pair % dim;
    return a < b ? q : Rational(1);
  };
  OperatorMatrix out(dim * dim, dim * dim);
  for (std::size_t x = 0; x < dim * dim; ++x)
    for (std::size_t y = 0; y < dim * dim; ++y)
      out.at(x, y) = m.at(x, y) * weight(y) / weight(x);
  return out;
}

OperatorMatrix stochastic_boundary_move(int r_species, const Rational& Q) {
  OperatorMatrix m = hecke_type_b_boundary(r_species, Q).scaled(Q);
  const int r = r_species;
  auto weight = [&](std::size_t idx) {
    return static_cast<int>(idx) - r > 0 ? Q : Rational(1);
  };
  OperatorMatrix out(m.rows(), m.cols());
  for (std::size_t x = 0; x < m.rows(); ++x)
    for (std::size_t y = 0; y < m.cols(); ++y)
      out.at(x, y) = m.at(x, y) * weight(y) / weight(x);
  return out;
}

OperatorMatrix s_check(const Rational& q) {
  OperatorMatrix m(4, 4);
  const Rational q2 = q * q;
  m.at(0, 0) = 1;
  m.at(1, 1) = Rational(1) - q2;
  m.at(1, 2) = q2;
  m.at(2, 1) = 1;
  m.at(3, 3) = 1;
  return m;
}

OperatorMatrix s_check_site(const Rational& q) {
  return reflect_two_leg(s_check(q), 2);
}

bool check_braid_relation(const OperatorMatrix& local, std::size_t dim) {
  if (local.rows() != dim * dim || local.cols() != dim * dim)
    throw std::invalid_argument("check_braid_relation: local must be dim^2 square");
  OperatorMatrix a12 = embed(local, 3, 0, 2, dim);
  OperatorMatrix a23 = embed(local, 3, 1, 2, dim);
  return a12 * a23 * a12 == a23 * a12 * a23;
}

bool check_hecke_quadratic(const OperatorMatrix& a_matrix, const Rational& a,
                           const Rational& b) {
  if (a_matrix.rows() != a_matrix.cols())
    throw std::invalid_argument("check_hecke_quadratic: matrix must be square");
  OperatorMatrix lhs = a_matrix * a_matrix;
  OperatorMatrix rhs =
      a_matrix.scaled(a) + OperatorMatrix::identity(a_matrix.rows()).scaled(b);
  return lhs == rhs;
}

bool check_type_b_mixed(const OperatorMatrix& t0, const OperatorMatrix& t1,
                        std::size_t dim) {
  if (t0.rows() != dim || t1.rows() != dim * dim)
    throw std::invalid_argument("check_type_b_mixed: dimension mismatch");
  OperatorMatrix t0e = embed(t0, 2, 0, 1, dim);
  OperatorMatrix lhs = t0e * t1 * t0e * t1;
  OperatorMatrix rhs = t1 * t0e * t1 * t0e;
  return lhs == rhs;
}

}  // namespace mdl
