#include "pmm/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace pmm {

Rational parse_rational(const std::string& text) {
  const auto valid = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.find_first_of("+-") != std::string::npos)
    throw std::invalid_argument("malformed rational '" + text + "'");
  boost::multiprecision::cpp_int p(num[0] == '+' ? num.substr(1) : num);
  boost::multiprecision::cpp_int q(den);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------- matrices

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_positions(int n, const std::vector<std::pair<int, int>>& ones) {
  RationalMatrix m(n, n);
  for (auto [r, c] : ones) m(r - 1, c - 1) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
  RationalMatrix m = a;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= c;
  return m;
}

bool projectively_equal(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.is_zero() || b.is_zero()) return false;
  std::optional<Rational> ratio;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if ((a(r, c) == 0) != (b(r, c) == 0)) return false;
      if (a(r, c) == 0) continue;
      const Rational q = a(r, c) / b(r, c);
      if (ratio && *ratio != q) return false;
      ratio = q;
    }
  return true;
}

RationalMatrix rref(const RationalMatrix& a, std::vector<int>* pivots) {
  RationalMatrix m = a;
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (int j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  RationalMatrix out(row, m.cols());
  for (int r = 0; r < row; ++r)
    for (int j = 0; j < m.cols(); ++j) out(r, j) = m(r, j);
  if (pivots) *pivots = std::move(piv);
  return out;
}

int rank(const RationalMatrix& a) { return rref(a).rows(); }

// ---------------------------------------------------------------- subspaces

Subspace::Subspace(int ambient, const RationalMatrix& spanning_rows) : ambient_(ambient) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient)
    throw std::invalid_argument("spanning vectors do not match the ambient dimension");
  basis_ = spanning_rows.rows() == 0 ? RationalMatrix(0, ambient) : rref(spanning_rows, &pivots_);
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, RationalMatrix(0, ambient)); }
Subspace Subspace::full(int ambient) { return Subspace(ambient, RationalMatrix::identity(ambient)); }

namespace {

RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

}  // namespace

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return rank(stack(basis_, other.basis_)) == dim();
}

RationalMatrix Subspace::coordinates_of(const Subspace& other) const {
  if (!contains(other)) throw std::invalid_argument("subspace is not contained in the domain");
  // In echelon form the coordinate on basis row k is the entry at its pivot.
  RationalMatrix coords(dim(), other.dim());
  for (int v = 0; v < other.dim(); ++v)
    for (int k = 0; k < dim(); ++k) coords(k, v) = other.basis_(v, pivots_[static_cast<std::size_t>(k)]);
  return coords;
}

Subspace kernel(const RationalMatrix& a) {
  std::vector<int> pivots;
  const RationalMatrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> vectors;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<std::size_t>(pivots[k])] = -r(static_cast<int>(k), f);
    vectors.push_back(std::move(v));
  }
  if (vectors.empty()) return Subspace::zero(a.cols());
  return Subspace(a.cols(), RationalMatrix(std::move(vectors)));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  // U ∩ W is cut out by the annihilators of U and W together.
  const int n = u.ambient();
  const auto ann_u = kernel(u.dim() ? u.basis() : RationalMatrix(0, n)).basis();
  const auto ann_w = kernel(w.dim() ? w.basis() : RationalMatrix(0, n)).basis();
  const auto constraints = stack(ann_u, ann_w);
  if (constraints.rows() == 0) return Subspace::full(n);
  return kernel(constraints);
}

// ---------------------------------------------------------------- tuples

MatrixTuple mtuple_normalize(const std::vector<RationalMatrix>& raw) {
  if (raw.empty()) throw std::invalid_argument("matrix tuple: empty term list");
  const int n = raw.front().rows();
  for (const auto& m : raw)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("matrix tuple: terms must be square of equal size");
  MatrixTuple t;
  Subspace running = Subspace::full(n);
  for (const auto& m : raw) {
    if (running.dim() == 0) break;
    if ((m * running.inclusion()).is_zero()) continue;
    t.terms_.push_back(m);
    running = intersect(running, kernel(m));
  }
  if (running.dim() != 0) {
    if (t.terms_.empty()) throw std::domain_error("matrix tuple: all terms are zero");
    throw std::domain_error("matrix tuple: common kernel of the terms is nonzero (dimension " +
                            std::to_string(running.dim()) + ")");
  }
  return t;
}

MatrixTuple mtuple_product(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix tuple product: size mismatch");
  std::vector<RationalMatrix> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const auto& bj : b.terms())
    for (const auto& ai : a.terms()) raw.push_back(ai * bj);
  return mtuple_normalize(raw);
}

std::vector<RationalMatrix> projective_view(const MatrixTuple& t) {
  std::vector<RationalMatrix> view;
  Subspace running = Subspace::full(t.size());
  for (const auto& m : t.terms()) {
    RationalMatrix r = m * running.inclusion();
    for (int i = 0; i < r.rows() * r.cols(); ++i) {
      const Rational& x = r(i / r.cols(), i % r.cols());
      if (x != 0) {
        r = Rational(1 / x) * r;
        break;
      }
    }
    view.push_back(std::move(r));
    running = intersect(running, kernel(m));
  }
  return view;
}

MatrixTuple realize(const PMElement& a) {
  const auto symbolic = to_matrix_tuple(a);
  std::vector<RationalMatrix> terms;
  for (const auto& term : symbolic.terms) terms.push_back(RationalMatrix::from_positions(symbolic.n, term));
  return mtuple_normalize(terms);
}

// ---------------------------------------------------------------- polynomials

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k + 1));
  v.back() = c;
  return Polynomial(std::move(v));
}

int Polynomial::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rational Polynomial::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) v[k] += a.coeffs()[k];
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) v[k] += b.coeffs()[k];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(v));
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<Polynomial>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

PolyMatrix PolyMatrix::constant(const RationalMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) p(r, c) = Polynomial::constant(m(r, c));
  return p;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Polynomial>& d) {
  const int n = static_cast<int>(d.size());
  PolyMatrix p(n, n);
  for (int i = 0; i < n; ++i) p(i, i) = d[static_cast<std::size_t>(i)];
  return p;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& x) { return x.is_zero(); });
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& x : data_) d = std::max(d, x.degree());
  return d;
}

RationalMatrix PolyMatrix::coefficient(int k) const {
  RationalMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).coeff(k);
  return m;
}

RationalMatrix PolyMatrix::evaluate(const Rational& t) const {
  RationalMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c)(t);
  return m;
}

PolyMatrix operator*(const PolyMatrix& p, const RationalMatrix& m) {
  if (p.cols() != m.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  PolyMatrix out(p.rows(), m.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int k = 0; k < p.cols(); ++k) {
      if (p(i, k).is_zero()) continue;
      for (int j = 0; j < m.cols(); ++j)
        if (m(k, j) != 0) out(i, j) = out(i, j) + p(i, k) * Polynomial::constant(m(k, j));
    }
  return out;
}

RationalMatrix projective_limit(const PolyMatrix& p) {
  int d = -1;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) {
      const int o = p(r, c).order();
      if (o >= 0 && (d < 0 || o < d)) d = o;
    }
  if (d < 0) throw std::invalid_argument("projective limit of the zero matrix");
  return p.coefficient(d);
}

bool generically_invertible(const PolyMatrix& p) {
  if (p.rows() != p.cols()) return false;
  const int n = p.rows();
  // det P has degree at most n * max_degree, so that many + 1 sample points decide it.
  const int points = n * std::max(0, p.max_degree()) + 1;
  for (int t = 0; t < points; ++t)
    if (rank(p.evaluate(Rational(t))) == n) return true;
  return false;
}

std::vector<LimitTerm> family_limit(const PolyMatrix& p) {
  if (p.rows() != p.cols()) throw std::invalid_argument("family limit needs a square matrix");
  if (!generically_invertible(p)) throw std::domain_error("determinant is identically zero");
  const int n = p.rows();
  std::vector<LimitTerm> terms;
  Subspace domain = Subspace::full(n);
  while (domain.dim() > 0) {
    LimitTerm term{domain, projective_limit(p * domain.inclusion()), RationalMatrix(n, n)};
    for (int k = 0; k < domain.dim(); ++k)
      for (int r = 0; r < n; ++r) term.padded(r, domain.pivots()[static_cast<std::size_t>(k)]) = term.restricted(r, k);
    const Subspace local = kernel(term.restricted);
    Subspace next = local.dim() == 0 ? Subspace::zero(n) : Subspace(n, local.basis() * domain.basis());
    assert(next.dim() < domain.dim());
    terms.push_back(std::move(term));
    domain = std::move(next);
  }
  return terms;
}

MatrixTuple limit_tuple(const std::vector<LimitTerm>& terms) {
  std::vector<RationalMatrix> padded;
  for (const auto& t : terms) padded.push_back(t.padded);
  return mtuple_normalize(padded);
}

RationalMatrix restriction_limit(const PolyMatrix& p, const Subspace& w, const Subspace& domain) {
  if (w.dim() == 0) throw std::invalid_argument("restriction to the zero subspace");
  if (p.cols() != domain.dim()) throw std::invalid_argument("family does not act on the given domain");
  const PolyMatrix restricted = p * domain.coordinates_of(w);
  if (restricted.is_zero()) throw std::domain_error("restriction of the family is zero");
  return projective_limit(restricted);
}

RationalMatrix restriction_limit(const PolyMatrix& p, const Subspace& w) {
  return restriction_limit(p, w, Subspace::full(w.ambient()));
}

}  // namespace pmm
