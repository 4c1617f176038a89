#include "curvelab/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace curvelab {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  if (k > 20) throw std::overflow_error("factorial: argument exceeds 20");
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::size_t dim_exterior(int n, int p) {
  return static_cast<std::size_t>(binomial(n, p));
}

std::size_t dim_symmetric(int n, int p) {
  if (p < 0) return 0;
  return static_cast<std::size_t>(binomial(n + p - 1, p));
}

std::size_t dim_traceless(int n, int p) {
  return dim_symmetric(n, p) - dim_symmetric(n, p - 2);
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j) {
  if (!(0 <= i && i < j && j < n)) throw std::out_of_range("pair_index: need 0 <= i < j < n");
  // pairs (0,1..n-1) come first: offset of row i is Σ_{r<i} (n-1-r)
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_at(int n, int a) {
  if (a < 0 || a >= pair_count(n)) throw std::out_of_range("pair_at: index out of range");
  int i = 0;
  while (a >= n - 1 - i) {
    a -= n - 1 - i;
    ++i;
  }
  return {i, i + 1 + a};
}

// ---------------------------------------------------------------------------

int MultiIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::int64_t MultiIndex::factorial() const {
  std::int64_t r = 1;
  for (int e : exponents) r *= curvelab::factorial(e);
  return r;
}

std::vector<int> MultiIndex::index_tuple() const {
  std::vector<int> t;
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < exponents[i]; ++k) t.push_back(i);
  return t;
}

MultiIndex MultiIndex::from_index_tuple(int n, std::span<const int> tuple) {
  MultiIndex m{std::vector<int>(n, 0)};
  for (int i : tuple) {
    if (i < 0 || i >= n) throw std::out_of_range("MultiIndex: index out of range");
    ++m.exponents[i];
  }
  return m;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  // Equal degree: lexicographic order of index tuples, which is descending
  // lexicographic order of exponent vectors.
  for (int i = 0; i < size(); ++i) {
    if (exponents[i] != other.exponents[i])
      return exponents[i] > other.exponents[i] ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

void increasing_tuples(int n, int p, int start, std::vector<int>& cur,
                       std::vector<WedgeIndex>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back({cur});
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    increasing_tuples(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

void nondecreasing_tuples(int n, int p, int start, std::vector<int>& cur,
                          std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(MultiIndex::from_index_tuple(n, cur));
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    nondecreasing_tuples(n, p, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WedgeIndex> wedge_basis(int n, int p) {
  if (n < 1 || p < 0 || p > n) throw std::invalid_argument("wedge_basis: need 0 <= p <= n");
  std::vector<WedgeIndex> out;
  std::vector<int> cur;
  increasing_tuples(n, p, 0, cur, out);
  return out;
}

std::vector<MultiIndex> monomial_basis(int n, int p) {
  if (n < 1 || p < 0) throw std::invalid_argument("monomial_basis: need n >= 1, p >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  nondecreasing_tuples(n, p, 0, cur, out);
  return out;
}

int sort_with_sign(std::vector<int>& indices) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t a = 1; a < indices.size(); ++a) {
    for (std::size_t b = a; b > 0 && indices[b - 1] > indices[b]; --b) {
      std::swap(indices[b - 1], indices[b]);
      sign = -sign;
    }
  }
  for (std::size_t a = 1; a < indices.size(); ++a)
    if (indices[a] == indices[a - 1]) return 0;
  return sign;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Polynomial: n must be positive");
}

Polynomial Polynomial::monomial(const MultiIndex& exponent, Real coefficient) {
  Polynomial p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  MultiIndex m{std::vector<int>(n, 0)};
  m.exponents.at(i) = 1;
  return monomial(m);
}

Polynomial Polynomial::constant(int n, Real c) {
  return monomial(MultiIndex{std::vector<int>(n, 0)}, c);
}

Polynomial Polynomial::r_squared(int n) {
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    MultiIndex m{std::vector<int>(n, 0)};
    m.exponents[i] = 2;
    p.add_term(m, 1);
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

int Polynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("Polynomial::degree: zero polynomial");
  if (!is_homogeneous()) throw std::domain_error("Polynomial::degree: not homogeneous");
  return terms_.begin()->first.degree();
}

Real Polynomial::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Real(0) : it->second;
}

Real Polynomial::max_abs_coefficient() const {
  Real best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, std::abs(c));
  return best;
}

void Polynomial::add_term(const MultiIndex& m, Real c) {
  if (m.size() != n_) throw std::invalid_argument("Polynomial: multi-index has wrong length");
  if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("Polynomial: negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::pruned(Real tolerance) const {
  Polynomial out(n_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tolerance) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("Polynomial::derivative: bad variable");
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) {
    if (m.exponents[i] == 0) continue;
    MultiIndex d = m;
    --d.exponents[i];
    out.add_term(d, c * m.exponents[i]);
  }
  return out;
}

Polynomial Polynomial::laplacian() const {
  Polynomial out(n_);
  for (int i = 0; i < n_; ++i) out += derivative(i).derivative(i);
  return out;
}

Real Polynomial::evaluate(std::span<const Real> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("Polynomial::evaluate: size");
  Real total = 0;
  for (const auto& [m, c] : terms_) {
    Real v = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m.exponents[i]; ++k) v *= x[i];
    total += v;
  }
  return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Real s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
  Polynomial out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MultiIndex m = ma;
      for (int i = 0; i < a.n_; ++i) m.exponents[i] += mb.exponents[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::power(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial::power: negative exponent");
  Polynomial out = constant(n_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Real dual_inner_product(const Polynomial& a, const Polynomial& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dual_inner_product: dimension mismatch");
  Real total = 0;
  for (const auto& [m, c] : a.terms()) {
    Real d = b.coefficient(m);
    if (d != 0) total += c * d * static_cast<Real>(m.factorial());
  }
  return total;
}

Polynomial rotation_derivative(const Polynomial& phi, int i, int j) {
  const int n = phi.n();
  return Polynomial::variable(n, i) * phi.derivative(j) -
         Polynomial::variable(n, j) * phi.derivative(i);
}

Polynomial real_power_polynomial(int n, int p) {
  if (n < 2) throw std::invalid_argument("real_power_polynomial: need n >= 2");
  if (p < 0) throw std::invalid_argument("real_power_polynomial: need p >= 0");
  // Re (x1 + i x2)^p = Σ_{k even} C(p,k) (-1)^{k/2} x1^{p-k} x2^k
  Polynomial out(n);
  for (int k = 0; k <= p; k += 2) {
    MultiIndex m{std::vector<int>(n, 0)};
    m.exponents[0] = p - k;
    m.exponents[1] = k;
    out.add_term(m, static_cast<Real>(binomial(p, k)) * ((k / 2) % 2 == 0 ? 1 : -1));
  }
  return out;
}

Polynomial harmonic_projection(const Polynomial& phi) {
  if (phi.is_zero()) return phi;
  if (!phi.is_homogeneous())
    throw std::invalid_argument("harmonic_projection: polynomial is not homogeneous");
  const int p = phi.degree();
  const auto space = cached_space(RepKind::TracelessSymmetric, phi.n(), p);
  return space->polynomial(space->coordinates(phi));
}

// ---------------------------------------------------------------------------
// RepSpace

const char* to_string(RepKind kind) {
  switch (kind) {
    case RepKind::Exterior: return "wedge";
    case RepKind::Symmetric: return "sym";
    case RepKind::TracelessSymmetric: return "sym0";
  }
  return "?";
}

const SparseMatrix& RepSpace::generator(int i, int j) const {
  return action_.at(pair_index(n_, i, j));
}

int RepSpace::index_of(const WedgeIndex& w) const {
  auto it = wedge_lookup_.find(w);
  if (it == wedge_lookup_.end()) throw std::out_of_range("RepSpace: wedge index not in basis");
  return it->second;
}

int RepSpace::index_of(const MultiIndex& m) const {
  auto it = monomial_lookup_.find(m);
  if (it == monomial_lookup_.end()) throw std::out_of_range("RepSpace: multi-index not in basis");
  return it->second;
}

Vector RepSpace::coordinates(const Polynomial& phi) const {
  if (kind_ == RepKind::Exterior)
    throw std::logic_error("RepSpace::coordinates: exterior spaces have no polynomial model");
  if (phi.n() != n_) throw std::invalid_argument("RepSpace::coordinates: dimension mismatch");
  Vector ambient = Vector::Zero(ambient_dim_);
  for (const auto& [m, c] : phi.terms()) {
    if (m.degree() != p_)
      throw std::invalid_argument("RepSpace::coordinates: polynomial degree differs from p");
    ambient(index_of(m)) = c * std::sqrt(static_cast<Real>(m.factorial()));
  }
  if (kind_ == RepKind::TracelessSymmetric) return harmonic_basis_.transpose() * ambient;
  return ambient;
}

Polynomial RepSpace::polynomial(const Vector& coords) const {
  if (kind_ == RepKind::Exterior)
    throw std::logic_error("RepSpace::polynomial: exterior spaces have no polynomial model");
  if (coords.size() != dim_) throw std::invalid_argument("RepSpace::polynomial: size mismatch");
  Vector ambient = kind_ == RepKind::TracelessSymmetric ? Vector(harmonic_basis_ * coords) : coords;
  Polynomial out(n_);
  for (int k = 0; k < ambient_dim_; ++k) {
    const MultiIndex& m = monomial_labels_[k];
    out.add_term(m, ambient(k) / std::sqrt(static_cast<Real>(m.factorial())));
  }
  return out;
}

Vector RepSpace::wedge_coordinates(
    const std::vector<std::pair<std::vector<int>, Real>>& terms) const {
  if (kind_ != RepKind::Exterior)
    throw std::logic_error("RepSpace::wedge_coordinates: not an exterior space");
  Vector v = Vector::Zero(dim_);
  for (const auto& [idx, c] : terms) {
    if (static_cast<int>(idx.size()) != p_)
      throw std::invalid_argument("RepSpace::wedge_coordinates: wrong number of factors");
    std::vector<int> sorted = idx;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) continue;
    v(index_of(WedgeIndex{sorted})) += sign * c;
  }
  return v;
}

RepSpacePtr build_exterior(int n, int p) {
  if (n < 1 || p < 0 || p > n) throw std::invalid_argument("build_exterior: need 0 <= p <= n");
  auto space = std::shared_ptr<RepSpace>(new RepSpace());
  space->kind_ = RepKind::Exterior;
  space->n_ = n;
  space->p_ = p;
  space->wedge_labels_ = wedge_basis(n, p);
  space->dim_ = space->ambient_dim_ = static_cast<int>(space->wedge_labels_.size());
  for (int k = 0; k < space->dim_; ++k) space->wedge_lookup_.emplace(space->wedge_labels_[k], k);
  space->harmonic_basis_ = Matrix::Identity(space->dim_, space->dim_);

  for (int a = 0; a < pair_count(n); ++a) {
    const auto [i, j] = pair_at(n, a);
    std::vector<Eigen::Triplet<Real>> trips;
    for (int col = 0; col < space->dim_; ++col) {
      const auto& idx = space->wedge_labels_[col].indices;
      for (int s = 0; s < p; ++s) {
        // Leibniz rule with E_ij e_j = e_i, E_ij e_i = -e_j
        int replacement;
        int coeff;
        if (idx[s] == j) {
          replacement = i;
          coeff = 1;
        } else if (idx[s] == i) {
          replacement = j;
          coeff = -1;
        } else {
          continue;
        }
        std::vector<int> img = idx;
        img[s] = replacement;
        const int sign = sort_with_sign(img);
        if (sign == 0) continue;
        trips.emplace_back(space->index_of(WedgeIndex{img}), col, Real(coeff * sign));
      }
    }
    SparseMatrix d(space->dim_, space->dim_);
    d.setFromTriplets(trips.begin(), trips.end());
    space->action_.push_back(std::move(d));
  }
  return space;
}

Eigen::SparseMatrix<std::int64_t> monomial_generator(int n, int p, int i, int j) {
  if (!(0 <= i && i < j && j < n)) throw std::out_of_range("monomial_generator: need i < j < n");
  const auto basis = monomial_basis(n, p);
  std::map<MultiIndex, int> lookup;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) lookup.emplace(basis[k], k);
  std::vector<Eigen::Triplet<std::int64_t>> trips;
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    const MultiIndex& l = basis[col];
    // (x_i ∂_j - x_j ∂_i) x^l = l_j x^{l+e_i-e_j} - l_i x^{l-e_i+e_j}
    if (l.exponents[j] > 0) {
      MultiIndex m = l;
      ++m.exponents[i];
      --m.exponents[j];
      trips.emplace_back(lookup.at(m), col, l.exponents[j]);
    }
    if (l.exponents[i] > 0) {
      MultiIndex m = l;
      --m.exponents[i];
      ++m.exponents[j];
      trips.emplace_back(lookup.at(m), col, -static_cast<std::int64_t>(l.exponents[i]));
    }
  }
  Eigen::SparseMatrix<std::int64_t> d(basis.size(), basis.size());
  d.setFromTriplets(trips.begin(), trips.end());
  return d;
}

namespace {

void fill_monomial_labels(RepSpace& s, int n, int p, std::vector<MultiIndex>& labels,
                          std::map<MultiIndex, int>& lookup) {
  labels = monomial_basis(n, p);
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) lookup.emplace(labels[k], k);
  (void)s;
}

// D in the orthonormal basis u_l = x^l / sqrt(l!): entry (m, l) = c sqrt(m!/l!),
// evaluated as sign(c) sqrt(c² m!/l!) with the radicand an exact integer so
// that D is exactly skew.
std::vector<SparseMatrix> orthonormal_symmetric_action(int n, int p,
                                                       const std::vector<MultiIndex>& labels) {
  std::vector<SparseMatrix> out;
  for (int a = 0; a < pair_count(n); ++a) {
    const auto [i, j] = pair_at(n, a);
    const auto integer = monomial_generator(n, p, i, j);
    std::vector<Eigen::Triplet<Real>> trips;
    for (int col = 0; col < integer.outerSize(); ++col) {
      for (Eigen::SparseMatrix<std::int64_t>::InnerIterator it(integer, col); it; ++it) {
        const std::int64_t c = it.value();
        const std::int64_t num = c * c * labels[it.row()].factorial();
        const std::int64_t den = labels[col].factorial();
        if (num % den != 0) throw std::logic_error("symmetric action: non-integral radicand");
        const Real mag = std::sqrt(static_cast<Real>(num / den));
        trips.emplace_back(static_cast<int>(it.row()), col, c > 0 ? mag : -mag);
      }
    }
    SparseMatrix d(static_cast<int>(labels.size()), static_cast<int>(labels.size()));
    d.setFromTriplets(trips.begin(), trips.end());
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

RepSpacePtr build_symmetric(int n, int p) {
  if (n < 1 || p < 0) throw std::invalid_argument("build_symmetric: need n >= 1, p >= 0");
  auto space = std::shared_ptr<RepSpace>(new RepSpace());
  space->kind_ = RepKind::Symmetric;
  space->n_ = n;
  space->p_ = p;
  fill_monomial_labels(*space, n, p, space->monomial_labels_, space->monomial_lookup_);
  space->dim_ = space->ambient_dim_ = static_cast<int>(space->monomial_labels_.size());
  space->harmonic_basis_ = Matrix::Identity(space->dim_, space->dim_);
  space->action_ = orthonormal_symmetric_action(n, p, space->monomial_labels_);
  return space;
}

Matrix r_power_multiplication(int n, int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("r_power_multiplication: negative degree");
  const auto src = monomial_basis(n, k);
  const auto dst = monomial_basis(n, k + 2 * m);
  std::map<MultiIndex, int> lookup;
  for (int r = 0; r < static_cast<int>(dst.size()); ++r) lookup.emplace(dst[r], r);
  const Polynomial rpow = Polynomial::r_squared(n).power(m);
  Matrix out = Matrix::Zero(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (int col = 0; col < static_cast<int>(src.size()); ++col) {
    const Real scale = 1 / std::sqrt(static_cast<Real>(src[col].factorial()));
    const Polynomial product = rpow * Polynomial::monomial(src[col]);
    for (const auto& [mono, c] : product.terms())
      out(lookup.at(mono), col) = c * scale * std::sqrt(static_cast<Real>(mono.factorial()));
  }
  return out;
}

RepSpacePtr build_traceless(int n, int p) {
  if (n < 2) throw std::invalid_argument("build_traceless: need n >= 2");
  if (p < 0) throw std::invalid_argument("build_traceless: need p >= 0");
  auto space = std::shared_ptr<RepSpace>(new RepSpace());
  space->kind_ = RepKind::TracelessSymmetric;
  space->n_ = n;
  space->p_ = p;
  fill_monomial_labels(*space, n, p, space->monomial_labels_, space->monomial_lookup_);
  space->ambient_dim_ = static_cast<int>(space->monomial_labels_.size());
  space->dim_ = static_cast<int>(dim_traceless(n, p));

  const auto full = orthonormal_symmetric_action(n, p, space->monomial_labels_);
  if (p < 2) {
    space->harmonic_basis_ = Matrix::Identity(space->dim_, space->dim_);
    space->action_ = full;
    return space;
  }

  // The harmonic subspace is the orthogonal complement of r²·Sym^{p-2}; the
  // trailing columns of a full QR factorization of the multiplication map
  // span it.
  const Matrix mult = r_power_multiplication(n, p - 2, 1);
  Eigen::HouseholderQR<Matrix> qr(mult);
  const Matrix q = qr.householderQ();
  space->harmonic_basis_ = q.rightCols(space->dim_);

  const Matrix& h = space->harmonic_basis_;
  for (const auto& d : full) {
    Matrix restricted = h.transpose() * (d * h);
    restricted = (restricted - restricted.transpose()) / Real(2);
    space->action_.push_back(restricted.sparseView(Real(1), Real(1e-16)));
  }
  return space;
}

RepSpacePtr build_space(RepKind kind, int n, int p) {
  switch (kind) {
    case RepKind::Exterior: return build_exterior(n, p);
    case RepKind::Symmetric: return build_symmetric(n, p);
    case RepKind::TracelessSymmetric: return build_traceless(n, p);
  }
  throw std::invalid_argument("build_space: unknown kind");
}

RepSpacePtr cached_space(RepKind kind, int n, int p) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, RepSpacePtr> cache;
  const auto key = std::make_tuple(static_cast<int>(kind), n, p);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto space = build_space(kind, n, p);
  cache.emplace(key, space);
  return space;
}

Matrix exterior_power_matrix(const Matrix& q, int p) {
  if (q.rows() != q.cols()) throw std::invalid_argument("exterior_power_matrix: Q not square");
  const int n = static_cast<int>(q.rows());
  const auto basis = wedge_basis(n, p);
  const int dim = static_cast<int>(basis.size());
  Matrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (p == 0) {
        out(r, c) = 1;
        continue;
      }
      Matrix minor(p, p);
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) minor(a, b) = q(basis[r].indices[a], basis[c].indices[b]);
      out(r, c) = minor.determinant();
    }
  }
  return out;
}

Matrix symmetric_power_matrix(const Matrix& q, int p) {
  if (q.rows() != q.cols()) throw std::invalid_argument("symmetric_power_matrix: Q not square");
  const int n = static_cast<int>(q.rows());
  const Matrix inv = q.inverse();
  // linear forms L_i(x) = (Q^{-1} x)_i
  std::vector<Polynomial> forms;
  for (int i = 0; i < n; ++i) {
    Polynomial l(n);
    for (int k = 0; k < n; ++k) l += Polynomial::variable(n, k) * inv(i, k);
    forms.push_back(std::move(l));
  }
  const auto basis = monomial_basis(n, p);
  std::map<MultiIndex, int> lookup;
  for (int r = 0; r < static_cast<int>(basis.size()); ++r) lookup.emplace(basis[r], r);
  const int dim = static_cast<int>(basis.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    Polynomial img = Polynomial::constant(n, 1);
    for (int i = 0; i < n; ++i) img = img * forms[i].power(basis[c].exponents[i]);
    const Real scale = 1 / std::sqrt(static_cast<Real>(basis[c].factorial()));
    for (const auto& [m, coeff] : img.terms())
      out(lookup.at(m), c) = coeff * scale * std::sqrt(static_cast<Real>(m.factorial()));
  }
  return out;
}

}  // namespace curvelab
