#pragma once

// p'-degree characters of the Sylow normaliser, labelled by core towers read
// level by level as multipartitions. The Galois sign eps(psi, f) comes from
// closed-form level statements, with split-difference values as the
// oracle-checked alternative.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mckay/abacus.hpp"
#include "mckay/chars_global.hpp"
#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/partitions.hpp"

namespace mckay {

/// Partitions indexed by 0..p^k-1 (the base-p reading of tuples in I^k).
/// Only nonempty entries are stored.
struct MultiPartition {
  int p = 3;
  int k = 1;
  std::map<std::int64_t, Partition> entries;

  [[nodiscard]] int positions() const { return static_cast<int>(ipow(p, k)); }

  [[nodiscard]] Partition at(std::int64_t index) const {
    auto it = entries.find(index);
    return it == entries.end() ? Partition() : it->second;
  }

  [[nodiscard]] int weight() const {
    int w = 0;
    for (const auto& [index, part] : entries) w += part.size();
    return w;
  }

  /// Entry j of the result is the conjugate of entry j* of this one.
  [[nodiscard]] MultiPartition star() const {
    MultiPartition out{p, k, {}};
    for (const auto& [index, part] : entries) out.entries.emplace(positions() - 1 - index, conjugate(part));
    return out;
  }

  [[nodiscard]] bool is_symmetric() const { return star() == *this; }

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition& a, const MultiPartition& b) {
    return std::tie(a.p, a.k, a.entries) <=> std::tie(b.p, b.k, b.entries);
  }
};

/// A p'-degree character of N_{S_n}(P): the level-0 partition of n_0 and
/// one multipartition of n_k per level k >= 1, stored as a core tower.
struct LocalLabel {
  CoreTower tower;

  [[nodiscard]] int p() const { return tower.p; }
  [[nodiscard]] Partition core() const { return tower.at(0, 0); }

  [[nodiscard]] MultiPartition level(int k) const {
    MultiPartition out{tower.p, k, {}};
    for (const auto& [key, part] : tower.entries) {
      if (key.first == k) out.entries.emplace(key.second, part);
    }
    return out;
  }

  [[nodiscard]] int depth() const { return tower.depth(); }

  friend bool operator==(const LocalLabel&, const LocalLabel&) = default;
};

inline LocalLabel label_from_levels(int p, const Partition& core, const std::vector<MultiPartition>& levels) {
  LocalLabel out{CoreTower{p, {}}};
  if (!core.empty()) out.tower.entries.emplace(std::make_pair(0, std::int64_t{0}), core);
  for (const MultiPartition& mp : levels) {
    for (const auto& [index, part] : mp.entries) {
      if (!part.empty()) out.tower.entries.emplace(std::make_pair(mp.k, index), part);
    }
  }
  return out;
}

inline LocalLabel local_label(const Partition& lambda, int p) {
  if (!is_p_prime_degree(lambda, p)) {
    throw DomainError(lambda.to_string() + " does not have p'-degree for p = " + std::to_string(p));
  }
  return LocalLabel{core_tower(lambda, p)};
}

inline bool is_local_symmetric(const LocalLabel& label) { return is_tower_symmetric(label.tower); }

/// Degree of the irreducible character of Y, indexed 0..p-1: the one at
/// (p-1)/2 has degree p-1, the others are linear.
inline std::int64_t y_degree(int j, int p) { return j == (p - 1) / 2 ? p - 1 : 1; }

/// Degree of psi_lambda for N_{S_n}(P): per level, the index of the
/// inertia group times the extension degrees times the symmetric-group
/// degrees of the entries.
inline BigInt local_degree(const LocalLabel& label) {
  const int p = label.p();
  BigInt out = degree(label.core());
  for (int k = 1; k < label.depth(); ++k) {
    const MultiPartition mp = label.level(k);
    BigInt level = factorial(mp.weight());
    for (const auto& [index, part] : mp.entries) {
      level /= factorial(part.size());
      std::int64_t xi = 1;
      for (int j : index_to_tuple(index, k, p)) xi *= y_degree(j, p);
      level *= pow(BigInt(xi), static_cast<unsigned>(part.size())) * degree(part);
    }
    out *= level;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration and counting.

/// Number of partitions of each m <= n.
inline std::vector<BigInt> partition_counts(int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int m = part; m <= n; ++m) out[static_cast<std::size_t>(m)] += out[static_cast<std::size_t>(m - part)];
  }
  return out;
}

/// Number of self-conjugate partitions of each m <= n (partitions into
/// distinct odd parts).
inline std::vector<BigInt> self_conjugate_counts(int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int part = 1; part <= n; part += 2) {
    for (int m = n; m >= part; --m) out[static_cast<std::size_t>(m)] += out[static_cast<std::size_t>(m - part)];
  }
  return out;
}

namespace detail {

/// Truncated power series product.
inline std::vector<BigInt> series_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline std::vector<BigInt> series_pow(const std::vector<BigInt>& a, std::int64_t e) {
  std::vector<BigInt> out(a.size(), 0);
  out[0] = 1;
  std::vector<BigInt> base = a;
  while (e > 0) {
    if (e & 1) out = series_mul(out, base);
    base = series_mul(base, base);
    e >>= 1;
  }
  return out;
}

}  // namespace detail

/// |MP(m, w)|: multipartitions of w with m components.
inline BigInt multipartition_count(std::int64_t m, int w) {
  return detail::series_pow(partition_counts(w), m)[static_cast<std::size_t>(w)];
}

/// Star-symmetric multipartitions of w with m = p^k components: one free
/// partition per pair of swapped positions (contributing twice its size)
/// and a self-conjugate partition at the fixed position.
inline BigInt symmetric_multipartition_count(std::int64_t m, int w) {
  const std::vector<BigInt> parts = partition_counts(w);
  std::vector<BigInt> doubled(static_cast<std::size_t>(w) + 1, 0);
  for (int j = 0; 2 * j <= w; ++j) doubled[static_cast<std::size_t>(2 * j)] = parts[static_cast<std::size_t>(j)];
  const std::vector<BigInt> series = detail::series_mul(detail::series_pow(doubled, (m - 1) / 2), self_conjugate_counts(w));
  return series[static_cast<std::size_t>(w)];
}

/// All multipartitions of w with p^k components.
inline std::vector<MultiPartition> multipartitions(int p, int k, int w) {
  std::vector<MultiPartition> out;
  const std::int64_t m = ipow(p, k);
  MultiPartition cur{p, k, {}};
  auto rec = [&](auto&& self, std::int64_t index, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (index == m) return;
    self(self, index + 1, remaining);
    for (int size = 1; size <= remaining; ++size) {
      for (const Partition& part : partitions_of(size)) {
        cur.entries[index] = part;
        self(self, index + 1, remaining - size);
      }
    }
    cur.entries.erase(index);
  };
  rec(rec, 0, w);
  return out;
}

/// Star-symmetric multipartitions of w with p^k components.
inline std::vector<MultiPartition> symmetric_multipartitions(int p, int k, int w) {
  std::vector<MultiPartition> out;
  const std::int64_t m = ipow(p, k);
  const std::int64_t mid = (m - 1) / 2;
  MultiPartition cur{p, k, {}};
  auto rec = [&](auto&& self, std::int64_t index, int remaining) -> void {
    if (index == mid) {
      if (remaining == 0) {
        out.push_back(cur);
        return;
      }
      for (const Partition& part : symmetric_partitions_of(remaining)) {
        cur.entries[mid] = part;
        out.push_back(cur);
      }
      cur.entries.erase(mid);
      return;
    }
    self(self, index + 1, remaining);
    for (int size = 1; 2 * size <= remaining; ++size) {
      for (const Partition& part : partitions_of(size)) {
        cur.entries[index] = part;
        cur.entries[m - 1 - index] = conjugate(part);
        self(self, index + 1, remaining - 2 * size);
      }
    }
    cur.entries.erase(index);
    cur.entries.erase(m - 1 - index);
  };
  rec(rec, 0, w);
  return out;
}

namespace detail {

/// Cartesian product over levels of per-level choices.
template <class LevelFn>
std::vector<LocalLabel> labels_by_level(int n, int p, const std::vector<Partition>& cores, LevelFn per_level) {
  const std::vector<int> digits = padic_digits(n, p);
  std::vector<std::vector<MultiPartition>> choices;
  for (std::size_t k = 1; k < digits.size(); ++k) choices.push_back(per_level(static_cast<int>(k), digits[k]));
  std::vector<LocalLabel> out;
  std::vector<MultiPartition> pick;
  auto rec = [&](auto&& self, std::size_t level, const Partition& core) -> void {
    if (level == choices.size()) {
      out.push_back(label_from_levels(p, core, pick));
      return;
    }
    for (const MultiPartition& mp : choices[level]) {
      pick.push_back(mp);
      self(self, level + 1, core);
      pick.pop_back();
    }
  };
  for (const Partition& core : cores) rec(rec, 0, core);
  return out;
}

}  // namespace detail

/// Every local label for (n, p), built level by level from multipartitions.
inline std::vector<LocalLabel> all_local_labels(int n, int p) {
  detail::require_odd_prime(p);
  const std::vector<int> digits = padic_digits(n, p);
  const int n0 = digits.empty() ? 0 : digits[0];
  return detail::labels_by_level(n, p, partitions_of(n0),
                                 [p](int k, int w) { return multipartitions(p, k, w); });
}

/// The star-symmetric local labels for (n, p).
inline std::vector<LocalLabel> symmetric_local_labels(int n, int p) {
  detail::require_odd_prime(p);
  const std::vector<int> digits = padic_digits(n, p);
  const int n0 = digits.empty() ? 0 : digits[0];
  return detail::labels_by_level(n, p, symmetric_partitions_of(n0),
                                 [p](int k, int w) { return symmetric_multipartitions(p, k, w); });
}

// ---------------------------------------------------------------------------
// Galois signs.

/// Closed-form sign: the level-0 core by the global closed form, and per
/// level k the regular factor (-1)^((p-1)w'/4) on sigma together with the
/// singular factor at the self-paired index. Multiplied across levels.
inline int eps_local(const LocalLabel& label, const NavarroAut& f) {
  if (!is_local_symmetric(label)) throw DomainError("eps_local needs a symmetric label");
  detail::require(f.p == label.p(), "automorphism prime differs from the label prime");
  const int p = label.p();
  int sign = eps_global_direct(label.core(), f);
  for (int k = 1; k < label.depth(); ++k) {
    const MultiPartition mp = label.level(k);
    const std::int64_t mid = self_paired_index(k, p);
    const Partition nu = mp.at(mid);
    sign *= regular_sign(mp.weight() - nu.size(), f);
    sign *= singular_level_sign(nu, k, f);
  }
  return sign;
}

/// Irrational data per level of psi^+ - psi^- on its split class.
struct LevelDifference {
  int k = 0;
  int regular_weight = 0;                ///< weight away from the self-paired index
  std::optional<QuadValue> singular;     ///< present when the self-paired entry is nonempty
};

struct LocalSplitDifference {
  QuadValue core_value;
  std::vector<LevelDifference> levels;
};

/// At a singular level with entry nu (d diagonal hooks) the difference is
/// i^(d k (p-1)/2) sqrt(p^(d k)) times the split value of chi_nu. Square
/// factors of the radicand are dropped since they do not affect signs.
inline LocalSplitDifference split_difference(const LocalLabel& label) {
  if (!is_local_symmetric(label)) throw DomainError("split_difference needs a symmetric label");
  const int p = label.p();
  LocalSplitDifference out;
  out.core_value = split_values(label.core()).value_core;
  for (int k = 1; k < label.depth(); ++k) {
    const MultiPartition mp = label.level(k);
    const Partition nu = mp.at(self_paired_index(k, p));
    LevelDifference level;
    level.k = k;
    level.regular_weight = mp.weight() - nu.size();
    if (!nu.empty()) {
      const GlobalSplitChar g = split_values(nu);
      const std::int64_t dk = static_cast<std::int64_t>(g.d) * k;
      const QuadValue extension(dk * ((p - 1) / 2), dk % 2 == 1 ? p : 1);
      level.singular = extension * g.value_core;
    }
    out.levels.push_back(level);
  }
  return out;
}

/// Sign of f on w_{2(p-1)}^s, where the extension exponent s is even for
/// p = 1 mod 4 and odd for p = 3 mod 4; only its parity matters.
inline std::optional<int> regular_extension_sign(int p, const NavarroAut& f) {
  const int conductor = 2 * (p - 1);
  const int s = p % 4 == 1 ? 0 : 1;
  const CycloElt x = root_of_unity(conductor, s);
  const CycloElt image = apply_aut(x, f);
  if (image == x) return 1;
  if (image == -x) return -1;
  return std::nullopt;
}

/// Sign computed from the split-difference values by the cyclotomic
/// oracle. A regular level of weight 2 mod 4 contributes the sign of the
/// extension root of unity; weight 0 mod 4 contributes nothing. Returns
/// nullopt if some factor cannot be pinned.
inline std::optional<int> eps_local_oracle(const LocalLabel& label, const NavarroAut& f) {
  const LocalSplitDifference diff = split_difference(label);
  int sign = quad_sign_oracle(diff.core_value, f);
  for (const LevelDifference& level : diff.levels) {
    if (level.regular_weight % 4 == 2) {
      const std::optional<int> ext = regular_extension_sign(label.p(), f);
      if (!ext) return std::nullopt;
      sign *= *ext;
    }
    if (level.singular) sign *= quad_sign_oracle(*level.singular, f);
  }
  return sign;
}

/// Checks the binomial expansion of (alpha - beta)^k and its closed value
/// i^(k(p-1)/2) sqrt(p^k), where alpha and beta are the sums of w_p^j over
/// the quadratic residues and non-residues.
inline bool diffcar_identity_check(int p, int k) {
  detail::require_odd_prime(p);
  detail::require(k >= 1, "diffcar_identity_check needs k >= 1");
  CycloElt alpha(p);
  CycloElt beta(p);
  for (int j = 1; j < p; ++j) {
    if (jacobi(j, p) == 1) alpha = alpha + root_of_unity(p, j);
    else beta = beta + root_of_unity(p, j);
  }
  // Sum over sign patterns: a pattern with m minus signs contributes
  // (-1)^m alpha^(k-m) beta^m, grouped by m with binomial multiplicity.
  CycloElt expanded(p);
  BigInt binom = 1;
  for (int m = 0; m <= k; ++m) {
    CycloElt term = BigInt(binom) * (alpha.pow(static_cast<unsigned>(k - m)) * beta.pow(static_cast<unsigned>(m)));
    expanded = m % 2 == 0 ? expanded + term : expanded - term;
    binom = binom * (k - m) / (m + 1);
  }
  const CycloElt power = (alpha - beta).pow(static_cast<unsigned>(k));
  const CycloElt closed = root_of_unity(4, static_cast<std::int64_t>(k) * (p - 1) / 2) * sqrt_embed(ipow(p, k));
  return expanded == power && power == closed;
}

}  // namespace mckay
