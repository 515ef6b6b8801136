#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "pmm/pm_monoid.hpp"

namespace pmm {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows);
  static RationalMatrix identity(int n);
  /// n x n matrix with a 1 at each (row, col), 1-based.
  static RationalMatrix from_positions(int n, const std::vector<std::pair<int, int>>& ones);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  bool is_zero() const;
  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& a);

/// a = c b for some nonzero rational c.
bool projectively_equal(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form with zero rows dropped; `pivots` receives the
/// pivot column of each remaining row.
RationalMatrix rref(const RationalMatrix& a, std::vector<int>* pivots = nullptr);
int rank(const RationalMatrix& a);

/// Subspace of Q^ambient held by its reduced echelon basis (one row per vector).
class Subspace {
public:
  Subspace() = default;
  /// Span of the given rows; the basis is re-echelonized.
  Subspace(int ambient, const RationalMatrix& spanning_rows);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  /// ambient x dim matrix whose columns are the basis vectors.
  RationalMatrix inclusion() const { return basis_.transpose(); }
  bool contains(const Subspace& other) const;
  /// Coordinates in this basis of the vectors of `other`, as a dim x other.dim matrix.
  /// Throws std::invalid_argument unless other is contained in this subspace.
  RationalMatrix coordinates_of(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  int ambient_ = 0;
  RationalMatrix basis_;
  std::vector<int> pivots_;
};

Subspace kernel(const RationalMatrix& a);
/// Throws std::invalid_argument on an ambient dimension mismatch.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Element of the tuple monoid: nonzero n x n terms, each nonzero on the
/// common kernel of its predecessors, with trivial total kernel.
class MatrixTuple {
public:
  const std::vector<RationalMatrix>& terms() const { return terms_; }
  int size() const { return terms_.empty() ? 0 : terms_.front().rows(); }

  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;
  friend MatrixTuple mtuple_normalize(const std::vector<RationalMatrix>& raw);

private:
  std::vector<RationalMatrix> terms_;
};

/// Keeps each term that is nonzero on the running kernel intersection and
/// stops once it is zero. Throws std::invalid_argument on an empty or
/// non-square list and std::domain_error when the final intersection is nonzero.
MatrixTuple mtuple_normalize(const std::vector<RationalMatrix>& raw);
/// (A_0B_0, ..., A_mB_0, A_0B_1, ...) with redundant terms removed.
MatrixTuple mtuple_product(const MatrixTuple& a, const MatrixTuple& b);

/// Terms restricted to their running kernel intersections, in echelon
/// coordinates and scaled so that the first nonzero entry is 1. Two tuples
/// with the same view define the same projective point.
std::vector<RationalMatrix> projective_view(const MatrixTuple& t);

/// Tuple of 0/1 matrices realizing an element of R_n.
MatrixTuple realize(const PMElement& a);

/// Polynomial in t with rational coefficients, lowest degree first.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// c t^k
  static Polynomial monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int order() const;
  Rational coeff(int k) const;
  Rational operator()(const Rational& t) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Rational> coeffs_;  ///< trailing zeros trimmed
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  explicit PolyMatrix(std::vector<std::vector<Polynomial>> rows);
  static PolyMatrix constant(const RationalMatrix& m);
  static PolyMatrix diagonal(const std::vector<Polynomial>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Polynomial& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  bool is_zero() const;
  int max_degree() const;
  RationalMatrix coefficient(int k) const;
  RationalMatrix evaluate(const Rational& t) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> data_;
};

PolyMatrix operator*(const PolyMatrix& p, const RationalMatrix& m);

/// Coefficient matrix of the lowest power of t present in P.
/// Throws std::invalid_argument when P is zero.
RationalMatrix projective_limit(const PolyMatrix& p);

/// True when det P is not the zero polynomial (P square).
bool generically_invertible(const PolyMatrix& p);

struct LimitTerm {
  Subspace domain;             ///< running kernel intersection, ambient coordinates
  RationalMatrix restricted;   ///< n x dim(domain), in the echelon basis of domain
  RationalMatrix padded;       ///< n x n, column k placed at the k-th pivot of domain
};

/// Limit of the family P(t) as t -> 0: the projective limit of P, then of P
/// restricted to its kernel, and so on until the kernel is zero.
/// Throws std::domain_error when det P is identically zero.
std::vector<LimitTerm> family_limit(const PolyMatrix& p);
/// Padded terms of family_limit as a tuple.
MatrixTuple limit_tuple(const std::vector<LimitTerm>& terms);

/// Projective limit of P restricted to W. P is a family of maps defined on
/// `domain` (columns in its echelon basis); W must lie in `domain`.
RationalMatrix restriction_limit(const PolyMatrix& p, const Subspace& w, const Subspace& domain);
RationalMatrix restriction_limit(const PolyMatrix& p, const Subspace& w);

}  // namespace pmm
