#pragma once

// Ground truth for tiny permutation groups. Character tables come from
// class-algebra eigenvectors split modulo a prime; the lifted cyclotomic
// values are re-verified by orthogonality before use.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "mckay/numtheory.hpp"

namespace mckay {

/// Images of 0..degree-1.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm out(static_cast<std::size_t>(degree));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

/// (a * b)(x) = a(b(x)).
inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

inline Perm perm_inv(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

inline Perm perm_pow(const Perm& a, std::int64_t k) {
  const Perm base = k < 0 ? perm_inv(a) : a;
  const std::int64_t steps = k < 0 ? -k : k;
  Perm out = perm_identity(static_cast<int>(a.size()));
  for (std::int64_t i = 0; i < steps; ++i) out = perm_mul(base, out);
  return out;
}

inline int perm_order(const Perm& a) {
  int order = 1;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(a[y])) {
      seen[y] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline bool perm_is_even(const Perm& a) {
  int transpositions = 0;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(a[y])) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

/// Permutation from disjoint cycles written 1-based.
inline Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm out = perm_identity(degree);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      detail::require(from >= 0 && from < degree && to >= 0 && to < degree, "cycle point out of range");
      out[static_cast<std::size_t>(from)] = to;
    }
  }
  return out;
}

inline constexpr std::int64_t kDefaultOrderBound = 20000;

/// A permutation group with its elements and conjugacy classes.
class PermGroup {
 public:
  /// Closes the generators under multiplication.
  PermGroup(int degree, std::vector<Perm> generators, std::int64_t bound = kDefaultOrderBound)
      : degree_(degree), generators_(std::move(generators)) {
    detail::require(degree >= 1 && degree <= 16, "PermGroup: degree must lie in 1..16");
    for (const Perm& g : generators_) detail::require(static_cast<int>(g.size()) == degree, "generator degree mismatch");
    add_element(perm_identity(degree));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const Perm& g : generators_) {
        Perm h = perm_mul(g, elements_[i]);
        if (index_.count(key(h))) continue;
        if (static_cast<std::int64_t>(elements_.size()) >= bound) {
          throw BudgetError("group order exceeds the bound " + std::to_string(bound));
        }
        add_element(std::move(h));
      }
    }
    build_classes();
  }

  /// A group given by its full element list (must be closed).
  static PermGroup from_elements(int degree, const std::vector<Perm>& elements, std::int64_t bound = kDefaultOrderBound) {
    if (static_cast<std::int64_t>(elements.size()) > bound) {
      throw BudgetError("group order exceeds the bound " + std::to_string(bound));
    }
    return PermGroup(degree, elements, bound);
  }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  [[nodiscard]] const std::vector<Perm>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<Perm>& elements() const { return elements_; }
  [[nodiscard]] int class_count() const { return static_cast<int>(classes_.size()); }
  [[nodiscard]] const std::vector<std::vector<int>>& classes() const { return classes_; }
  [[nodiscard]] std::int64_t class_size(int c) const { return static_cast<std::int64_t>(classes_[static_cast<std::size_t>(c)].size()); }
  [[nodiscard]] const Perm& class_rep(int c) const { return elements_[static_cast<std::size_t>(classes_[static_cast<std::size_t>(c)][0])]; }

  [[nodiscard]] bool contains(const Perm& g) const { return index_.count(key(g)) > 0; }

  [[nodiscard]] int index_of(const Perm& g) const {
    auto it = index_.find(key(g));
    if (it == index_.end()) throw DomainError("permutation is not in the group");
    return it->second;
  }

  [[nodiscard]] int class_of(const Perm& g) const { return class_of_[static_cast<std::size_t>(index_of(g))]; }

  /// Least common multiple of element orders.
  [[nodiscard]] int exponent() const {
    int e = 1;
    for (int c = 0; c < class_count(); ++c) e = std::lcm(e, perm_order(class_rep(c)));
    return e;
  }

 private:
  static std::uint64_t key(const Perm& g) {
    std::uint64_t k = 0;
    for (int x : g) k = (k << 4U) | static_cast<std::uint64_t>(x);
    return k;
  }

  void add_element(Perm g) {
    index_.emplace(key(g), static_cast<int>(elements_.size()));
    elements_.push_back(std::move(g));
  }

  void build_classes() {
    class_of_.assign(elements_.size(), -1);
    // Conjugating by generators suffices to sweep out a class.
    for (std::size_t start = 0; start < elements_.size(); ++start) {
      if (class_of_[start] >= 0) continue;
      const int c = static_cast<int>(classes_.size());
      classes_.push_back({static_cast<int>(start)});
      class_of_[start] = c;
      for (std::size_t i = 0; i < classes_.back().size(); ++i) {
        const Perm& x = elements_[static_cast<std::size_t>(classes_.back()[i])];
        for (const Perm& g : generators_) {
          const int y = index_.at(key(perm_mul(perm_mul(g, x), perm_inv(g))));
          if (class_of_[static_cast<std::size_t>(y)] >= 0) continue;
          class_of_[static_cast<std::size_t>(y)] = c;
          classes_.back().push_back(y);
        }
      }
    }
  }

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

inline PermGroup symmetric_group(int n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(perm_from_cycles(n, {{1, 2}}));
  if (n >= 3) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 1);
    gens.push_back(perm_from_cycles(n, {cycle}));
  }
  return PermGroup(n, gens);
}

inline PermGroup alternating_group(int n) {
  std::vector<Perm> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(perm_from_cycles(n, {{1, 2, k}}));
  return PermGroup(n, gens);
}

/// Generators of a Sylow p-subgroup of S_n: on each block of p^k points, the
/// iterated wreath product of cyclic groups of order p.
inline std::vector<Perm> sylow_generators(int n, int p) {
  detail::require_odd_prime(p);
  std::vector<Perm> gens;
  const std::vector<int> digits = padic_digits(n, p);
  int offset = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const int block = static_cast<int>(ipow(p, static_cast<int>(k)));
    for (int copy = 0; copy < digits[k]; ++copy) {
      // Shift of the sub-blocks of size p^(j-1) inside the first sub-block of size p^j.
      for (int j = 1; j <= static_cast<int>(k); ++j) {
        const int sub = static_cast<int>(ipow(p, j - 1));
        const int span = sub * p;
        Perm g = perm_identity(n);
        for (int x = 0; x < span; ++x) g[static_cast<std::size_t>(offset + x)] = offset + (x + sub) % span;
        gens.push_back(g);
      }
      offset += block;
    }
  }
  return gens;
}

/// N_{S_n}(P), or its intersection with A_n, found by testing every
/// permutation of n points.
inline PermGroup build_normalizer(int n, int p, bool even, std::int64_t bound = kDefaultOrderBound) {
  detail::require_odd_prime(p);
  detail::require(n >= 1 && n <= 9, "build_normalizer: n must lie in 1..9");
  const std::vector<Perm> pgens = sylow_generators(n, p);
  const PermGroup sylow(n, pgens.empty() ? std::vector<Perm>{perm_identity(n)} : pgens, bound);
  std::vector<Perm> members;
  Perm g = perm_identity(n);
  do {
    if (even && !perm_is_even(g)) continue;
    const Perm ginv = perm_inv(g);
    bool normalizes = true;
    for (const Perm& x : pgens) {
      if (!sylow.contains(perm_mul(perm_mul(g, x), ginv))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return PermGroup::from_elements(n, members, bound);
}

// ---------------------------------------------------------------------------
// Character tables.

struct ExactTable {
  std::int64_t order = 0;
  int conductor = 1;                               ///< group exponent
  std::vector<std::int64_t> class_sizes;
  std::vector<Perm> class_reps;
  std::vector<std::int64_t> degrees;               ///< one per character
  std::vector<std::vector<CycloElt>> values;       ///< values[character][class]
};

namespace detail {

inline std::int64_t inv_mod(std::int64_t a, std::int64_t q) { return powmod(a, q - 2, q); }

/// Nullspace basis of an r x c matrix over F_q.
inline std::vector<std::vector<std::int64_t>> nullspace_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t q) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t inv = inv_mod(a[r][c], q);
    for (auto& v : a[r]) v = v * inv % q;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - factor * a[r][j], q);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = mod(-a[i][free], q);
    basis.push_back(v);
  }
  return basis;
}

/// Characteristic polynomial det(xI - A) over F_q (Faddeev-LeVerrier),
/// coefficients constant term first. Needs q > dimension.
inline std::vector<std::int64_t> charpoly_mod(const std::vector<std::vector<std::int64_t>>& a, std::int64_t q) {
  const std::size_t k = a.size();
  std::vector<std::int64_t> coeff(k + 1, 0);
  coeff[k] = 1;
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 1; i <= k; ++i) {
    // m <- a * m + coeff[k - i + 1] * I
    std::vector<std::vector<std::int64_t>> next(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t t = 0; t < k; ++t) {
        if (a[r][t] == 0) continue;
        for (std::size_t c = 0; c < k; ++c) next[r][c] = (next[r][c] + a[r][t] * m[t][c]) % q;
      }
      next[r][r] = (next[r][r] + coeff[k - i + 1]) % q;
    }
    m = std::move(next);
    std::int64_t trace = 0;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t t = 0; t < k; ++t) trace = (trace + a[r][t] * m[t][r]) % q;
    }
    coeff[k - i] = mod(-trace * inv_mod(static_cast<std::int64_t>(i), q), q);
  }
  return coeff;
}

inline std::int64_t poly_eval_mod(const std::vector<std::int64_t>& coeff, std::int64_t x, std::int64_t q) {
  std::int64_t acc = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = (acc * x + coeff[i]) % q;
  return acc;
}

/// Smallest prime q > lower with q = 1 mod e.
inline std::int64_t splitting_prime(std::int64_t lower, std::int64_t e) {
  std::int64_t q = (lower / e + 1) * e + 1;
  while (!is_prime(q)) q += e;
  return q;
}

/// A primitive e-th root of unity modulo the prime q (e | q - 1).
inline std::int64_t primitive_root_of_unity(std::int64_t e, std::int64_t q) {
  const auto factors = factorize(q - 1);
  for (std::int64_t g = 2; g < q; ++g) {
    bool generator = true;
    for (auto [r, m] : factors) {
      (void)m;
      if (powmod(g, (q - 1) / r, q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return powmod(g, (q - 1) / e, q);
  }
  throw InternalError("no primitive root found");
}

}  // namespace detail

/// Exact character table of G by simultaneous diagonalisation of the class
/// matrices over F_q, followed by a lift of every value to Z[w_e] through
/// eigenvalue multiplicities. The result is checked against both
/// orthogonality relations before it is returned.
inline ExactTable character_table(const PermGroup& g) {
  const int k = g.class_count();
  const auto uk = static_cast<std::size_t>(k);
  const std::int64_t order = g.order();
  const int e = g.exponent();
  const std::int64_t q = detail::splitting_prime(std::max<std::int64_t>(2 * order, k + 1), e);

  // a[r][j][s] = #{x in C_r : x^-1 z_s in C_j}, z_s the representative of C_s.
  std::vector<std::vector<std::vector<std::int64_t>>> a(uk, std::vector<std::vector<std::int64_t>>(uk, std::vector<std::int64_t>(uk, 0)));
  for (int s = 0; s < k; ++s) {
    const Perm& z = g.class_rep(s);
    for (const Perm& x : g.elements()) {
      const int r = g.class_of(x);
      const int j = g.class_of(perm_mul(perm_inv(x), z));
      ++a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
    }
  }
  const int identity_class = g.class_of(perm_identity(g.degree()));

  // Central characters are common right eigenvectors of M_r[j][s] = a[r][j][s];
  // a random combination of the M_r separates them with high probability.
  std::mt19937_64 rng(0x5eedULL);
  std::vector<std::vector<std::int64_t>> centrals;
  for (int attempt = 0; attempt < 50 && static_cast<int>(centrals.size()) != k; ++attempt) {
    centrals.clear();
    std::vector<std::vector<std::int64_t>> m(uk, std::vector<std::int64_t>(uk, 0));
    for (std::size_t r = 0; r < uk; ++r) {
      const std::int64_t c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
      for (std::size_t j = 0; j < uk; ++j) {
        for (std::size_t s = 0; s < uk; ++s) m[j][s] = (m[j][s] + c * a[r][j][s]) % q;
      }
    }
    const std::vector<std::int64_t> poly = detail::charpoly_mod(m, q);
    bool separated = true;
    for (std::int64_t lambda = 0; lambda < q && separated; ++lambda) {
      if (detail::poly_eval_mod(poly, lambda, q) != 0) continue;
      auto shifted = m;
      for (std::size_t j = 0; j < uk; ++j) shifted[j][j] = mod(shifted[j][j] - lambda, q);
      auto basis = detail::nullspace_mod(shifted, q);
      if (basis.size() != 1) {
        separated = false;
        break;
      }
      std::vector<std::int64_t> v = basis[0];
      const std::int64_t lead = v[static_cast<std::size_t>(identity_class)];
      if (lead == 0) throw InternalError("central character vanishes at the identity");
      const std::int64_t inv = detail::inv_mod(lead, q);
      for (auto& x : v) x = x * inv % q;
      centrals.push_back(v);
    }
    if (!separated) centrals.clear();
  }
  if (static_cast<int>(centrals.size()) != k) throw InternalError("class matrices did not split");

  std::vector<int> inverse_class(uk);
  for (int r = 0; r < k; ++r) inverse_class[static_cast<std::size_t>(r)] = g.class_of(perm_inv(g.class_rep(r)));

  ExactTable out;
  out.order = order;
  out.conductor = e;
  for (int r = 0; r < k; ++r) {
    out.class_sizes.push_back(g.class_size(r));
    out.class_reps.push_back(g.class_rep(r));
  }
  // power_class[r][j] = class of rep_r^j.
  std::vector<std::vector<int>> power_class(uk, std::vector<int>(static_cast<std::size_t>(e)));
  for (int r = 0; r < k; ++r) {
    Perm x = perm_identity(g.degree());
    for (int j = 0; j < e; ++j) {
      power_class[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = g.class_of(x);
      x = perm_mul(g.class_rep(r), x);
    }
  }
  const std::int64_t zeta = detail::primitive_root_of_unity(e, q);
  const std::int64_t inv_e = detail::inv_mod(e, q);

  for (const auto& omega : centrals) {
    std::int64_t sum = 0;
    for (int r = 0; r < k; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      const std::int64_t term = omega[ur] * omega[static_cast<std::size_t>(inverse_class[ur])] % q;
      sum = (sum + term * detail::inv_mod(g.class_size(r) % q, q)) % q;
    }
    const std::int64_t deg_sq = order % q * detail::inv_mod(sum, q) % q;
    auto deg = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(deg_sq))));
    while (deg * deg > deg_sq) --deg;
    while ((deg + 1) * (deg + 1) <= deg_sq) ++deg;
    if (deg * deg != deg_sq || order % deg != 0) throw InternalError("degree recovery failed");
    std::vector<std::int64_t> residues(uk);
    for (int r = 0; r < k; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      residues[ur] = omega[ur] * deg % q * detail::inv_mod(g.class_size(r) % q, q) % q;
    }
    std::vector<CycloElt> row;
    for (int r = 0; r < k; ++r) {
      std::vector<BigInt> dense(static_cast<std::size_t>(e), 0);
      for (int l = 0; l < e; ++l) {
        std::int64_t acc = 0;
        for (int j = 0; j < e; ++j) {
          const std::int64_t val = residues[static_cast<std::size_t>(power_class[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)])];
          acc = (acc + val * powmod(zeta, mod(-static_cast<std::int64_t>(l) * j, e), q)) % q;
        }
        const std::int64_t mult = acc * inv_e % q;
        if (mult > deg) throw InternalError("eigenvalue multiplicity out of range");
        dense[static_cast<std::size_t>(l)] = mult;
      }
      row.push_back(CycloElt::from_powers(e, dense));
    }
    out.degrees.push_back(deg);
    out.values.push_back(std::move(row));
  }

  // Sort by degree for stable output, then verify orthogonality exactly.
  std::vector<std::size_t> perm(out.degrees.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return out.degrees[x] < out.degrees[y]; });
  ExactTable sorted = out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sorted.degrees[i] = out.degrees[perm[i]];
    sorted.values[i] = out.values[perm[i]];
  }
  for (std::size_t x = 0; x < uk; ++x) {
    for (std::size_t y = 0; y < uk; ++y) {
      CycloElt rows(e);
      CycloElt cols(e);
      for (std::size_t r = 0; r < uk; ++r) {
        rows = rows + BigInt(sorted.class_sizes[r]) * (sorted.values[x][r] * sorted.values[y][r].galois(-1));
        cols = cols + sorted.values[r][x] * sorted.values[r][y].galois(-1);
      }
      const CycloElt row_target = CycloElt::integer(x == y ? order : 0, e);
      const CycloElt col_target = CycloElt::integer(x == y ? order / sorted.class_sizes[x] : 0, e);
      if (!(rows == row_target) || !(cols == col_target)) throw InternalError("character table failed orthogonality");
    }
  }
  return sorted;
}

struct FixedCount {
  std::int64_t total = 0;
  std::int64_t fixed = 0;
  friend bool operator==(const FixedCount&, const FixedCount&) = default;
};

/// Counts characters of degree prime to p, and those among them whose
/// values are all fixed by f.
inline FixedCount galois_fixed_count(const ExactTable& table, const NavarroAut& f, int p) {
  FixedCount out;
  for (std::size_t x = 0; x < table.degrees.size(); ++x) {
    if (table.degrees[x] % p == 0) continue;
    ++out.total;
    bool fixed = true;
    for (const CycloElt& v : table.values[x]) {
      if (!(apply_aut(v, f) == v)) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++out.fixed;
  }
  return out;
}

/// Induces a class function of H (values per H-class) to G, returning
/// values per G-class: Ind(phi)(g) = sum over a left transversal t of
/// phi(t^-1 g t), with phi taken as zero outside H.
inline std::vector<CycloElt> induce_class_function(const PermGroup& g, const PermGroup& h, const std::vector<CycloElt>& phi) {
  detail::require(g.degree() == h.degree(), "induce: groups act on different point sets");
  detail::require(static_cast<int>(phi.size()) == h.class_count(), "induce: one value per class of H expected");
  for (const Perm& x : h.generators()) {
    if (!g.contains(x)) throw DomainError("induce: H is not a subgroup of G");
  }
  detail::require(g.order() % h.order() == 0, "induce: |H| must divide |G|");
  // Left transversal: pick one element per coset tH.
  std::vector<Perm> transversal;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    if (covered[i]) continue;
    const Perm& t = g.elements()[i];
    transversal.push_back(t);
    for (const Perm& x : h.elements()) covered[static_cast<std::size_t>(g.index_of(perm_mul(t, x)))] = true;
  }
  int conductor = 1;
  for (const CycloElt& v : phi) conductor = std::lcm(conductor, v.conductor());
  std::vector<CycloElt> out;
  for (int c = 0; c < g.class_count(); ++c) {
    CycloElt acc(conductor);
    for (const Perm& t : transversal) {
      const Perm y = perm_mul(perm_mul(perm_inv(t), g.class_rep(c)), t);
      if (h.contains(y)) acc = acc + phi[static_cast<std::size_t>(h.class_of(y))];
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace mckay
