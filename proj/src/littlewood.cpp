#include "curvelab/littlewood.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace curvelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.rows() > rows()) return false;
  for (int i = 0; i < other.rows(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::all_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 0; });
}

Partition Partition::conjugate() const {
  std::vector<int> out(rows() ? parts_[0] : 0, 0);
  for (int x : parts_)
    for (int j = 0; j < x; ++j) ++out[j];
  return Partition(out);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int m, int max_rows, int max_part) {
  if (m < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows) return;
    for (int x = std::min(remaining, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(remaining - x, x);
      cur.pop_back();
    }
  };
  rec(m, max_part >= 0 ? max_part : m);
  return out;
}

namespace {

std::int64_t count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < nu.rows(); ++i)
    for (int j = nu.part(i) - 1; j >= lambda.part(i); --j) cells.push_back({i, j});

  std::vector<std::vector<int>> tab(nu.rows());
  for (int i = 0; i < nu.rows(); ++i) tab[i].assign(nu.part(i), -1);
  std::vector<int> used(mu.rows(), 0);
  std::int64_t count = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[idx];
    int hi = mu.rows() - 1;
    if (j + 1 < nu.part(i)) hi = std::min(hi, tab[i][j + 1]);  // rows weakly increase
    int lo = 0;
    if (i > 0 && j >= lambda.part(i - 1)) lo = tab[i - 1][j] + 1;  // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu.part(v)) continue;
      if (v > 0 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      tab[i][j] = v;
      rec(idx + 1);
      tab[i][j] = -1;
      --used[v];
    }
  };
  rec(0);
  return count;
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  static std::mutex mutex;
  static std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> memo;
  const auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const std::int64_t value = count_lr_tableaux(lambda, mu, nu);
  std::lock_guard lock(mutex);
  memo.emplace(key, value);
  return value;
}

std::map<Partition, std::int64_t> tensor_product(const Partition& lambda, const Partition& mu) {
  std::map<Partition, std::int64_t> out;
  for (const auto& nu : partitions_of(lambda.size() + mu.size(), lambda.rows() + mu.rows())) {
    const auto c = lr_coefficient(lambda, mu, nu);
    if (c) out[nu] += c;
  }
  return out;
}

std::int64_t restriction_multiplicity(const Partition& nu, const Partition& lambda_bar) {
  const int rest = nu.size() - lambda_bar.size();
  if (rest < 0 || rest % 2 != 0) return 0;
  std::int64_t total = 0;
  for (const auto& half : partitions_of(rest / 2, nu.rows())) {
    std::vector<int> doubled = half.parts();
    for (int& x : doubled) x *= 2;
    const Partition delta(doubled);
    if (!nu.contains(delta)) continue;
    total += lr_coefficient(delta, lambda_bar, nu);
  }
  return total;
}

std::int64_t gl_dimension(const Partition& nu, int n) {
  if (n < 0) throw std::invalid_argument("gl_dimension: negative n");
  if (nu.rows() > n) return 0;
  const Partition conj = nu.conjugate();
  __int128 num = 1;
  __int128 den = 1;
  for (int i = 0; i < nu.rows(); ++i) {
    for (int j = 0; j < nu.part(i); ++j) {
      num *= n + j - i;
      den *= (nu.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
    }
  }
  if (num % den != 0) throw std::logic_error("gl_dimension: non-integral hook-content quotient");
  return static_cast<std::int64_t>(num / den);
}

VirtualModule sym2_of_sym(int p) {
  if (p < 0) throw std::invalid_argument("sym2_of_sym: negative degree");
  VirtualModule out;
  for (int j = 0; j <= p; j += 2) out[Partition{2 * p - j, j}] += 1;
  return out;
}

VirtualModule sym2_of_wedge(int p) {
  if (p < 0) throw std::invalid_argument("sym2_of_wedge: negative degree");
  VirtualModule out;
  for (int a = 0; a <= p; a += 2) {
    std::vector<int> parts(p - a, 2);
    parts.insert(parts.end(), 2 * a, 1);
    out[Partition(parts)] += 1;
  }
  return out;
}

namespace {

void add(VirtualModule& into, const std::map<Partition, std::int64_t>& from, std::int64_t sign) {
  for (const auto& [nu, c] : from) into[nu] += sign * c;
}

LemmaTable count_targets(const VirtualModule& module, std::string name, int p, int n) {
  LemmaTable t;
  t.module = std::move(name);
  t.p = p;
  int rows = 0;
  for (const auto& [nu, c] : module)
    if (c != 0) rows = std::max(rows, nu.rows());
  t.min_n = std::max(4, 2 * rows);
  if (n == 0) n = t.min_n;
  if (n < t.min_n)
    throw std::domain_error("restriction counts for " + t.module + " with p = " + std::to_string(p) +
                            " are only claimed for n >= " + std::to_string(t.min_n));
  t.n = n;
  const auto count = [&](const Partition& target) {
    std::int64_t total = 0;
    for (const auto& [nu, c] : module)
      if (c != 0) total += c * restriction_multiplicity(nu, target);
    if (total < 0)
      throw std::logic_error("negative net multiplicity of " + target.to_string() + " in " + t.module);
    return total;
  };
  t.u = count(Partition{});
  t.l = count(Partition{2});
  t.w = count(Partition{2, 2});
  t.w4 = count(Partition{1, 1, 1, 1});
  return t;
}

}  // namespace

LemmaTable verify_lemma_sym(int p, int n) {
  if (p < 2) throw std::invalid_argument("verify_lemma_sym: need p >= 2");
  // Sym^p = Sym^p_0 ⊕ Sym^{p-2} as O(n)-modules, hence
  // Sym²(Sym^p_0) = Sym²(Sym^p) ⊖ Sym²(Sym^{p-2}) ⊖ Sym^p⊗Sym^{p-2} ⊕ Sym^{p-2}⊗Sym^{p-2}
  const Partition a{p};
  const Partition b = p > 2 ? Partition{p - 2} : Partition{};
  VirtualModule module;
  add(module, sym2_of_sym(p), +1);
  add(module, sym2_of_sym(p - 2), -1);
  add(module, tensor_product(a, b), -1);
  add(module, tensor_product(b, b), +1);
  return count_targets(module, "sym2(sym0^p)", p, n);
}

LemmaTable verify_lemma_wedge(int p, int n) {
  if (p < 2) throw std::invalid_argument("verify_lemma_wedge: need p >= 2");
  return count_targets(sym2_of_wedge(p), "sym2(wedge^p)", p, n);
}

}  // namespace curvelab
