#pragma once

// Orthonormal bases for exterior powers, symmetric powers and traceless
// symmetric powers of R^n, together with the matrices of the infinitesimal
// O(n)-action on each.
//
// Index conventions (frozen, see docs/bases.md):
//  * coordinates are 0-based internally; JSON output labels are 1-based;
//  * the pair basis of Λ²R^n is (0,1), (0,2), ..., (0,n-1), (1,2), ...;
//  * Λ^p basis: strictly increasing index tuples in lexicographic order;
//  * Sym^p basis: nondecreasing index tuples in lexicographic order, i.e.
//    x_0^p first. The orthonormal basis vector for exponent ℓ is
//    u_ℓ = x^ℓ / sqrt(ℓ!), since ||x^ℓ||² = ℓ! under <φ,ψ> = φ̂(ψ).
//  * E_ij has +1 at (i,j) and -1 at (j,i), so E_ij e_j = e_i and
//    E_ij e_i = -e_j. On polynomials, dρ(E_ij) = x_i ∂_j - x_j ∂_i.

#include "curvelab/linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace curvelab {

std::int64_t binomial(int n, int k);
std::int64_t factorial(int k);

std::size_t dim_exterior(int n, int p);
std::size_t dim_symmetric(int n, int p);
std::size_t dim_traceless(int n, int p);

// ---------------------------------------------------------------------------
// Pair basis of Λ²R^n ≅ so(n)

int pair_count(int n);
/// Position of e_i∧e_j (i < j) in the lexicographic pair basis.
int pair_index(int n, int i, int j);
std::pair<int, int> pair_at(int n, int a);

// ---------------------------------------------------------------------------

/// Strictly increasing index tuple labelling e_{i_1}∧...∧e_{i_p}.
struct WedgeIndex {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  auto operator<=>(const WedgeIndex&) const = default;
};

/// Exponent vector ℓ of the monomial x^ℓ.
struct MultiIndex {
  std::vector<int> exponents;

  int size() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  /// ℓ! = ℓ_1! ... ℓ_n!
  std::int64_t factorial() const;
  /// Nondecreasing index tuple (i_1 <= ... <= i_p) of the monomial.
  std::vector<int> index_tuple() const;
  static MultiIndex from_index_tuple(int n, std::span<const int> tuple);

  /// Basis order: lexicographic in the index tuple.
  std::strong_ordering operator<=>(const MultiIndex& other) const;
  bool operator==(const MultiIndex&) const = default;
};

std::vector<WedgeIndex> wedge_basis(int n, int p);
std::vector<MultiIndex> monomial_basis(int n, int p);

/// Sorts `indices` in place; returns the permutation sign, or 0 when an index
/// repeats (the wedge product vanishes).
int sort_with_sign(std::vector<int>& indices);

// ---------------------------------------------------------------------------

/// Homogeneous or inhomogeneous real polynomial on R^n, stored sparsely.
/// Exact zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Real>;

  explicit Polynomial(int n);
  static Polynomial monomial(const MultiIndex& exponent, Real coefficient = 1);
  static Polynomial variable(int n, int i);
  static Polynomial constant(int n, Real c);
  /// r² = x_1² + ... + x_n², the metric g viewed as a polynomial.
  static Polynomial r_squared(int n);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous polynomial; throws otherwise.
  int degree() const;
  Real coefficient(const MultiIndex& m) const;
  Real max_abs_coefficient() const;

  void add_term(const MultiIndex& m, Real c);
  Polynomial pruned(Real tolerance) const;

  Polynomial derivative(int i) const;
  Polynomial laplacian() const;
  Real evaluate(std::span<const Real> x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Real s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Real s) { return a *= s; }
  friend Polynomial operator*(Real s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial power(int k) const;

 private:
  int n_;
  Terms terms_;
};

/// <φ,ψ> = φ̂(ψ): monomials are orthogonal with ||x^ℓ||² = ℓ!.
Real dual_inner_product(const Polynomial& a, const Polynomial& b);

/// (x_i ∂_j - x_j ∂_i) φ, the action of E_ij.
Polynomial rotation_derivative(const Polynomial& phi, int i, int j);

/// φ_p = Re (x_1 + sqrt(-1) x_2)^p.
Polynomial real_power_polynomial(int n, int p);

/// Orthogonal projection onto the harmonic polynomials of the same degree.
Polynomial harmonic_projection(const Polynomial& phi);

// ---------------------------------------------------------------------------

enum class RepKind { Exterior, Symmetric, TracelessSymmetric };

const char* to_string(RepKind kind);

/// Concrete orthonormal realization of Λ^p, Sym^p or Sym^p_0 of R^n, with the
/// matrices D_ij = dρ(E_ij) indexed by the pair basis. Immutable once built.
class RepSpace {
 public:
  RepKind kind() const { return kind_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int dim() const { return dim_; }
  /// Dimension of the ambient monomial space (Sym^p) for symmetric kinds,
  /// equal to dim() for exterior powers.
  int ambient_dim() const { return ambient_dim_; }

  const std::vector<WedgeIndex>& wedge_labels() const { return wedge_labels_; }
  const std::vector<MultiIndex>& monomial_labels() const { return monomial_labels_; }
  /// Orthonormal harmonic basis as columns in the u_ℓ coordinates of Sym^p
  /// (ambient_dim × dim). Identity for non-traceless kinds.
  const Matrix& harmonic_basis() const { return harmonic_basis_; }

  const std::vector<SparseMatrix>& generators() const { return action_; }
  const SparseMatrix& generator(int i, int j) const;

  /// Coordinates of a degree-p polynomial (symmetric kinds). For the traceless
  /// kind the polynomial is projected onto the harmonic subspace first.
  Vector coordinates(const Polynomial& phi) const;
  /// Polynomial with the given coordinates (symmetric kinds).
  Polynomial polynomial(const Vector& coords) const;
  /// Coordinates of Σ c_k e_{I_k} for arbitrary (unsorted) index tuples
  /// (exterior kind).
  Vector wedge_coordinates(const std::vector<std::pair<std::vector<int>, Real>>& terms) const;

  int index_of(const WedgeIndex& w) const;
  int index_of(const MultiIndex& m) const;

 private:
  friend std::shared_ptr<const RepSpace> build_exterior(int n, int p);
  friend std::shared_ptr<const RepSpace> build_symmetric(int n, int p);
  friend std::shared_ptr<const RepSpace> build_traceless(int n, int p);
  RepSpace() = default;

  RepKind kind_{RepKind::Exterior};
  int n_{0};
  int p_{0};
  int dim_{0};
  int ambient_dim_{0};
  std::vector<WedgeIndex> wedge_labels_;
  std::vector<MultiIndex> monomial_labels_;
  std::map<WedgeIndex, int> wedge_lookup_;
  std::map<MultiIndex, int> monomial_lookup_;
  Matrix harmonic_basis_;
  std::vector<SparseMatrix> action_;
};

using RepSpacePtr = std::shared_ptr<const RepSpace>;

RepSpacePtr build_exterior(int n, int p);
RepSpacePtr build_symmetric(int n, int p);
RepSpacePtr build_traceless(int n, int p);
RepSpacePtr build_space(RepKind kind, int n, int p);
/// Process-wide memoized construction; thread-safe.
RepSpacePtr cached_space(RepKind kind, int n, int p);

/// Matrix of x_i ∂_j - x_j ∂_i on Sym^p in the unnormalized monomial basis
/// x^ℓ, in exact integer arithmetic (columns are inputs).
Eigen::SparseMatrix<std::int64_t> monomial_generator(int n, int p, int i, int j);

/// Matrix of multiplication by r^(2m): Sym^k -> Sym^(k+2m) in the orthonormal
/// monomial bases.
Matrix r_power_multiplication(int n, int k, int m);

/// ρ(Q) on Λ^p: entry (K, I) is the minor det Q[K, I].
Matrix exterior_power_matrix(const Matrix& q, int p);

/// ρ(Q)φ = φ∘Q^{-1} on Sym^p in the orthonormal monomial basis, for
/// orthogonal Q.
Matrix symmetric_power_matrix(const Matrix& q, int p);

}  // namespace curvelab
