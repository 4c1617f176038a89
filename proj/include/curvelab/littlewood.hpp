#pragma once

// Partition combinatorics in exact integer arithmetic: Littlewood–Richardson
// coefficients, Littlewood's restriction from GL(n) to O(n), and the
// multiplicities of the O(n)-modules U = [∅], L = [2], W = [2,2] and
// Λ^4 = [1,1,1,1] inside Sym²(Sym^p_0) and Sym²(Λ^p).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace curvelab {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument unless the
  /// parts are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Row length, 0 past the last row.
  int part(int i) const { return i < rows() ? parts_[i] : 0; }
  bool contains(const Partition& other) const;
  bool all_even() const;
  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of m, lexicographically decreasing; optionally at most
/// `max_rows` rows and parts at most `max_part`.
std::vector<Partition> partitions_of(int m, int max_rows = -1, int max_part = -1);

/// N_{λμ}^ν: number of LR tableaux of shape ν/λ and content μ. Memoized and
/// thread-safe.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// S_λ ⊗ S_μ = ⊕ N_{λμ}^ν S_ν.
std::map<Partition, std::int64_t> tensor_product(const Partition& lambda, const Partition& mu);

/// Multiplicity of the O(n)-module [λ̄] in the GL(n)-module S_ν,
/// Σ_{δ even} N_{δ λ̄}^ν (stable range).
std::int64_t restriction_multiplicity(const Partition& nu, const Partition& lambda_bar);

/// dim S_ν(C^n) by the hook-content formula.
std::int64_t gl_dimension(const Partition& nu, int n);

/// Signed multiset of GL(n)-modules.
using VirtualModule = std::map<Partition, std::int64_t>;

/// Sym²(Sym^p) = ⊕_{0<=j<=p, j even} S_(2p−j, j).
VirtualModule sym2_of_sym(int p);
/// Sym²(Λ^p) = ⊕_{0<=a<=p, a even} S_{ν_a}, ν_a = (2^{p−a}, 1^{2a}).
VirtualModule sym2_of_wedge(int p);

struct LemmaTable {
  std::string module;  // "sym2(sym0^p)" or "sym2(wedge^p)"
  int p{0};
  std::int64_t u{0};
  std::int64_t l{0};
  std::int64_t w{0};
  std::int64_t w4{0};
  /// Smallest n for which every partition involved has at most n/2 rows.
  int min_n{0};
  /// Dimension the counts are claimed for.
  int n{0};
};

/// Multiplicities of U, L, W, Λ^4 in Sym²(Sym^p_0). `n` = 0 selects min_n;
/// smaller n than min_n is refused with std::domain_error. A negative net
/// multiplicity throws std::logic_error.
LemmaTable verify_lemma_sym(int p, int n = 0);
/// Multiplicities of U, L, W, Λ^4 in Sym²(Λ^p), same conventions.
LemmaTable verify_lemma_wedge(int p, int n = 0);

}  // namespace curvelab
