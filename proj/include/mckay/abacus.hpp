#pragma once

// The p-abacus view of a partition. Cores, quotients and core towers are
// read off the runners; symmetric partitions also get their runner shifts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/partitions.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// Partition sequences.

/// Doubly infinite 0/1 sequence: entry u is window[u - offset] inside the
/// window, 0 to its left and 1 to its right. A 0 at u is a bead at u.
struct PartitionSequence {
  std::vector<int> window;
  int offset = 0;

  [[nodiscard]] int at(int u) const {
    if (u < offset) return 0;
    if (u >= offset + static_cast<int>(window.size())) return 1;
    return window[static_cast<std::size_t>(u - offset)];
  }

  [[nodiscard]] std::string window_string() const {
    std::string out;
    for (int bit : window) out += static_cast<char>('0' + bit);
    return out;
  }

  friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

/// The window spans [-length, lambda_1 - 1]; beads sit at lambda_i - i.
inline PartitionSequence to_sequence(const Partition& lambda) {
  PartitionSequence out;
  out.offset = -lambda.length();
  out.window.assign(static_cast<std::size_t>(lambda.length() + lambda.part(1)), 1);
  for (int i = 1; i <= lambda.length(); ++i) {
    out.window[static_cast<std::size_t>(lambda.part(i) - i - out.offset)] = 0;
  }
  return out;
}

inline Partition from_sequence(const PartitionSequence& seq) {
  for (int bit : seq.window) detail::require(bit == 0 || bit == 1, "sequence entries must be 0 or 1");
  const int lo = seq.offset;
  const int hi = seq.offset + static_cast<int>(seq.window.size());
  int beads_right = 0;
  int gaps_left = 0;
  for (int u = lo; u < hi; ++u) {
    if (u >= 0 && seq.at(u) == 0) ++beads_right;
    if (u < 0 && seq.at(u) == 1) ++gaps_left;
  }
  // Entries outside the window may still straddle 0.
  if (hi <= 0) gaps_left += -hi;
  if (lo > 0) beads_right += lo;
  if (beads_right != gaps_left) {
    throw DomainError("partition sequence violates the anchoring: " + std::to_string(beads_right) +
                      " beads at u >= 0 but " + std::to_string(gaps_left) + " gaps at u < 0");
  }
  std::vector<int> beads;
  for (int u = std::max(hi, 0) - 1; u >= std::min(lo, 0); --u) {
    if (seq.at(u) == 0) beads.push_back(u);
  }
  std::vector<int> parts;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int part = beads[i] + static_cast<int>(i) + 1;
    if (part <= 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

/// Entry u of the result is 1 - l_{-u-1}.
inline PartitionSequence conjugate_sequence(const PartitionSequence& seq) {
  PartitionSequence flipped;
  const int len = static_cast<int>(seq.window.size());
  flipped.offset = -seq.offset - len;
  flipped.window.resize(seq.window.size());
  for (int u = flipped.offset; u < flipped.offset + len; ++u) {
    flipped.window[static_cast<std::size_t>(u - flipped.offset)] = 1 - seq.at(-u - 1);
  }
  return to_sequence(from_sequence(flipped));
}

// ---------------------------------------------------------------------------
// The abacus.

/// One runner: beads at rows mu_i - i + charge (i >= 1), plus every row
/// below those.
struct Runner {
  int charge = 0;
  Partition part;
  [[nodiscard]] bool bead_at(int row) const {
    if (row < charge - part.length()) return true;
    for (int i = 1; i <= part.length(); ++i) {
      if (part.part(i) - i + charge == row) return true;
    }
    return false;
  }
  friend bool operator==(const Runner&, const Runner&) = default;
};

/// Runner g holds positions j*p + g, drawn with j increasing upwards.
struct Abacus {
  int p = 3;
  std::vector<Runner> runners;

  [[nodiscard]] bool bead_at(int position) const {
    const int g = static_cast<int>(mod(position, p));
    const int row = (position - g) / p;
    return runners[static_cast<std::size_t>(g)].bead_at(row);
  }
};

namespace detail {

inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Partition whose beads are the given positions (all >= floor) together
/// with every position below floor.
inline Partition partition_from_beads(std::vector<int> beads, int floor) {
  std::sort(beads.rbegin(), beads.rend());
  const int m = static_cast<int>(beads.size());
  if (floor + m != 0) {
    throw InternalError("bead configuration has non-zero total charge");
  }
  std::vector<int> parts;
  for (int i = 0; i < m; ++i) {
    const int part = beads[static_cast<std::size_t>(i)] + i + 1;
    if (part <= 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace detail

inline Abacus abacus(const Partition& lambda, int p) {
  detail::require_odd_prime(p);
  Abacus out;
  out.p = p;
  const int floor = -lambda.length() - p;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(p));
  for (int i = 1; lambda.part(i) - i >= floor; ++i) {
    const int u = lambda.part(i) - i;
    const int g = static_cast<int>(mod(u, p));
    rows[static_cast<std::size_t>(g)].push_back((u - g) / p);
  }
  for (int g = 0; g < p; ++g) {
    // Lowest row whose position is >= floor.
    const int row_min = detail::floor_div(floor - g + p - 1, p);
    const auto& js = rows[static_cast<std::size_t>(g)];  // already decreasing
    const int charge = static_cast<int>(js.size()) + row_min;
    std::vector<int> parts;
    for (std::size_t i = 0; i < js.size(); ++i) {
      const int part = js[i] + static_cast<int>(i) + 1 - charge;
      if (part <= 0) break;
      parts.push_back(part);
    }
    out.runners.push_back(Runner{charge, Partition(std::move(parts))});
  }
  return out;
}

inline Partition from_abacus(const Abacus& ab) {
  detail::require_odd_prime(ab.p);
  detail::require(static_cast<int>(ab.runners.size()) == ab.p, "abacus must have p runners");
  int total_charge = 0;
  int row_floor = 0;
  for (const Runner& r : ab.runners) {
    total_charge += r.charge;
    row_floor = std::min(row_floor, r.charge - r.part.length() - 1);
  }
  detail::require(total_charge == 0, "runner charges must sum to zero");
  std::vector<int> beads;
  for (int g = 0; g < ab.p; ++g) {
    const Runner& r = ab.runners[static_cast<std::size_t>(g)];
    for (int i = 1;; ++i) {
      const int row = r.part.part(i) - i + r.charge;
      if (row < row_floor) break;
      beads.push_back(row * ab.p + g);
    }
  }
  return detail::partition_from_beads(std::move(beads), row_floor * ab.p);
}

inline Partition p_core(const Partition& lambda, int p) {
  Abacus ab = abacus(lambda, p);
  for (Runner& r : ab.runners) r.part = Partition();
  return from_abacus(ab);
}

inline std::vector<Partition> p_quotient(const Partition& lambda, int p) {
  std::vector<Partition> out;
  for (const Runner& r : abacus(lambda, p).runners) out.push_back(r.part);
  return out;
}

/// Runner charges of the p-core (equivalently of lambda).
inline std::vector<int> runner_charges(const Partition& lambda, int p) {
  std::vector<int> out;
  for (const Runner& r : abacus(lambda, p).runners) out.push_back(r.charge);
  return out;
}

inline bool is_p_core(const Partition& lambda, int p) {
  for (const Runner& r : abacus(lambda, p).runners) {
    if (!r.part.empty()) return false;
  }
  return true;
}

inline Partition reconstruct(const Partition& core, const std::vector<Partition>& quotient, int p) {
  detail::require_odd_prime(p);
  detail::require(static_cast<int>(quotient.size()) == p, "quotient must have p components");
  Abacus ab = abacus(core, p);
  for (const Runner& r : ab.runners) {
    if (!r.part.empty()) throw DomainError("reconstruct: " + core.to_string() + " is not a p-core");
  }
  for (int g = 0; g < p; ++g) ab.runners[static_cast<std::size_t>(g)].part = quotient[static_cast<std::size_t>(g)];
  return from_abacus(ab);
}

/// The partition with empty p-core and the same p-quotient as lambda.
inline Partition coreless_part(const Partition& lambda, int p) {
  std::vector<Partition> quo = p_quotient(lambda, p);
  return reconstruct(Partition(), quo, p);
}

// ---------------------------------------------------------------------------
// Core towers.

inline std::vector<int> index_to_tuple(std::int64_t index, int k, int p) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
    index /= p;
  }
  return out;
}

inline std::int64_t tuple_to_index(const std::vector<int>& tuple, int p) {
  std::int64_t out = 0;
  for (int j : tuple) {
    detail::require(j >= 0 && j < p, "tuple entries must lie in 0..p-1");
    out = out * p + j;
  }
  return out;
}

/// Componentwise j -> p-1-j.
inline std::vector<int> star_index(const std::vector<int>& tuple, int p) {
  std::vector<int> out;
  for (int j : tuple) {
    detail::require(j >= 0 && j < p, "tuple entries must lie in 0..p-1");
    out.push_back(p - 1 - j);
  }
  return out;
}

/// Index of the all-(p-1)/2 tuple at level k.
inline std::int64_t self_paired_index(int k, int p) { return (ipow(p, k) - 1) / 2; }

/// Sparse tower: only nonempty cores are stored, keyed by (level, index).
struct CoreTower {
  int p = 3;
  std::map<std::pair<int, std::int64_t>, Partition> entries;

  [[nodiscard]] Partition at(int k, std::int64_t index) const {
    auto it = entries.find({k, index});
    return it == entries.end() ? Partition() : it->second;
  }

  [[nodiscard]] int depth() const {
    return entries.empty() ? 0 : entries.rbegin()->first.first + 1;
  }

  /// c_k, indexed by level, trailing zero levels dropped.
  [[nodiscard]] std::vector<int> weights() const {
    std::vector<int> out(static_cast<std::size_t>(depth()), 0);
    for (const auto& [key, part] : entries) out[static_cast<std::size_t>(key.first)] += part.size();
    return out;
  }

  [[nodiscard]] std::int64_t size() const {
    std::int64_t n = 0;
    std::int64_t scale = 1;
    for (int c : weights()) {
      n += c * scale;
      scale *= p;
    }
    return n;
  }

  friend bool operator==(const CoreTower&, const CoreTower&) = default;
};

inline CoreTower core_tower(const Partition& lambda, int p) {
  detail::require_odd_prime(p);
  CoreTower out;
  out.p = p;
  auto walk = [&](auto&& self, const Partition& node, int k, std::int64_t index) -> void {
    if (node.empty()) return;
    const Abacus ab = abacus(node, p);
    Abacus bare = ab;
    for (Runner& r : bare.runners) r.part = Partition();
    Partition core = from_abacus(bare);
    if (!core.empty()) out.entries.emplace(std::make_pair(k, index), std::move(core));
    for (int g = 0; g < p; ++g) {
      self(self, ab.runners[static_cast<std::size_t>(g)].part, k + 1, index * p + g);
    }
  };
  walk(walk, lambda, 0, 0);
  return out;
}

inline Partition tower_to_partition(const CoreTower& tower) {
  detail::require_odd_prime(tower.p);
  for (const auto& [key, part] : tower.entries) {
    if (!is_p_core(part, tower.p)) {
      throw DomainError("tower entry " + part.to_string() + " at level " + std::to_string(key.first) +
                        " is not a p-core");
    }
  }
  const int depth = tower.depth();
  auto build = [&](auto&& self, int k, std::int64_t index) -> Partition {
    if (k >= depth) return Partition();
    std::vector<Partition> quotient;
    bool any = false;
    for (int g = 0; g < tower.p; ++g) {
      quotient.push_back(self(self, k + 1, index * tower.p + g));
      any = any || !quotient.back().empty();
    }
    const Partition core = tower.at(k, index);
    if (!any) return core;
    return reconstruct(core, quotient, tower.p);
  };
  return build(build, 0, 0);
}

/// True iff the tower weights equal the base-p digits of n, which is the
/// criterion for p not dividing the degree.
inline bool is_p_prime_degree(const Partition& lambda, int p) {
  detail::require_odd_prime(p);
  const std::vector<int> digits = padic_digits(lambda.size(), p);
  return core_tower(lambda, p).weights() == digits;
}

inline bool is_tower_symmetric(const CoreTower& tower) {
  for (const auto& [key, part] : tower.entries) {
    const auto [k, index] = key;
    if (tower.at(k, ipow(tower.p, k) - 1 - index) != conjugate(part)) return false;
  }
  return true;
}

/// Splits a core-free tower into its part away from the self-paired
/// positions and its part on them.
inline std::pair<CoreTower, CoreTower> regular_singular_split(const CoreTower& tower) {
  if (!tower.at(0, 0).empty()) {
    throw DomainError("regular_singular_split needs an empty p-core");
  }
  CoreTower regular{tower.p, {}};
  CoreTower singular{tower.p, {}};
  for (const auto& [key, part] : tower.entries) {
    if (key.second == self_paired_index(key.first, tower.p)) singular.entries.emplace(key, part);
    else regular.entries.emplace(key, part);
  }
  return {regular, singular};
}

// ---------------------------------------------------------------------------
// Runner data of symmetric partitions.

/// Per runner: the shift of the p-core relative to the empty core and the
/// index sets read on the abacus of the coreless part.
struct ShiftData {
  int p = 3;
  std::vector<int> delta;                   ///< core charge per runner
  std::vector<int> representatives;         ///< one runner per pair {g, p-1-g}, delta >= 0
  std::vector<std::set<int>> setsX;         ///< rows j >= 0 holding beads
  std::vector<std::set<int>> setsY;         ///< rows j <= -1 holding gaps
  std::vector<std::set<int>> setsA;         ///< x in [-delta, -1] holding beads (representatives only)
  std::vector<std::set<int>> setsB;         ///< x in [-delta, -1] holding gaps (representatives only)

  /// Diagonal hook lengths of the p-core contributed by runner g.
  [[nodiscard]] std::vector<int> core_hooks(int g) const {
    std::vector<int> out;
    const int d = delta[static_cast<std::size_t>(g)];
    for (int x = -d; x <= -1; ++x) out.push_back(2 * ((d + x) * p + g) + 1);
    std::sort(out.rbegin(), out.rend());
    return out;
  }
};

inline ShiftData shift_data(const Partition& lambda, int p) {
  detail::require_odd_prime(p);
  if (!is_symmetric(lambda)) throw DomainError("shift_data needs a symmetric partition");
  ShiftData out;
  out.p = p;
  const Abacus ab = abacus(lambda, p);
  Abacus coreless = ab;
  for (Runner& r : coreless.runners) r.charge = 0;
  const auto up = static_cast<std::size_t>(p);
  out.setsX.resize(up);
  out.setsY.resize(up);
  out.setsA.resize(up);
  out.setsB.resize(up);
  for (int g = 0; g < p; ++g) {
    const Runner& r = coreless.runners[static_cast<std::size_t>(g)];
    out.delta.push_back(ab.runners[static_cast<std::size_t>(g)].charge);
    for (int i = 1; r.part.part(i) - i >= 0; ++i) out.setsX[static_cast<std::size_t>(g)].insert(r.part.part(i) - i);
    const Partition conj = conjugate(r.part);
    // Gaps below row 0 mirror the beads of the conjugate at rows >= 0.
    for (int i = 1; conj.part(i) - i >= 0; ++i) out.setsY[static_cast<std::size_t>(g)].insert(-(conj.part(i) - i) - 1);
  }
  for (int g = 0; g <= (p - 1) / 2; ++g) {
    const int partner = p - 1 - g;
    if (g == partner) {
      out.representatives.push_back(g);
      continue;
    }
    out.representatives.push_back(out.delta[static_cast<std::size_t>(g)] >= 0 ? g : partner);
  }
  std::sort(out.representatives.begin(), out.representatives.end());
  for (int g : out.representatives) {
    const int d = out.delta[static_cast<std::size_t>(g)];
    for (int x = -d; x <= -1; ++x) {
      if (coreless.runners[static_cast<std::size_t>(g)].bead_at(x)) out.setsA[static_cast<std::size_t>(g)].insert(x);
      else out.setsB[static_cast<std::size_t>(g)].insert(x);
    }
  }
  return out;
}

/// The pairing of a bead x >= 0 on runner g of a symmetric abacus with the
/// mirrored gap on runner p-1-g.
inline int mirror_row(int x) { return -x - 1; }

/// A pair of diagonal hooks of a regular partition: first = p^level * u,
/// second = p^level * (w*p - u), u odd and prime to p, w even.
struct HookPair {
  int level = 0;
  std::int64_t u = 0;
  std::int64_t w = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend bool operator==(const HookPair&, const HookPair&) = default;
};

/// Symmetric with empty p-core and empty tower entries at every
/// self-paired index. The p'-degree condition is not required: the hook
/// pairing only depends on the tower shape.
inline bool is_regular(const Partition& lambda, int p) {
  if (!is_symmetric(lambda)) return false;
  const CoreTower tower = core_tower(lambda, p);
  if (!tower.at(0, 0).empty()) return false;
  for (int k = 1; k < tower.depth(); ++k) {
    if (!tower.at(k, self_paired_index(k, p)).empty()) return false;
  }
  return true;
}

namespace detail {

inline void collect_hook_pairs(const Partition& lambda, int p, int level, std::int64_t scale,
                               std::vector<HookPair>& out) {
  if (lambda.empty()) return;
  const ShiftData sd = shift_data(lambda, p);
  const int mid = (p - 1) / 2;
  for (int g = 0; g < mid; ++g) {
    const auto& xs = sd.setsX[static_cast<std::size_t>(g)];
    const auto& ys = sd.setsY[static_cast<std::size_t>(g)];
    if (xs.size() != ys.size()) throw InternalError("runner pair with unequal diagonal counts");
    // The j-th largest bead row pairs with the j-th smallest gap row.
    auto xi = xs.rbegin();
    auto yi = ys.begin();
    for (; xi != xs.rend(); ++xi, ++yi) {
      const std::int64_t d_x = 2 * (static_cast<std::int64_t>(*xi) * p + g) + 1;
      const std::int64_t d_y = 2 * (static_cast<std::int64_t>(-*yi - 1) * p + (p - 1 - g)) + 1;
      HookPair hp;
      hp.level = level;
      hp.u = d_x;
      hp.w = (d_x + d_y) / p;
      hp.first = scale * d_x;
      hp.second = scale * d_y;
      out.push_back(hp);
    }
  }
  collect_hook_pairs(p_quotient(lambda, p)[static_cast<std::size_t>(mid)], p, level + 1, scale * p, out);
}

}  // namespace detail

inline std::vector<HookPair> diagonal_hook_structure(const Partition& lambda, int p) {
  detail::require_odd_prime(p);
  if (!is_regular(lambda, p)) {
    throw DomainError("diagonal_hook_structure needs a regular partition, got " + lambda.to_string());
  }
  std::vector<HookPair> out;
  detail::collect_hook_pairs(lambda, p, 0, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering of an abacus.

/// Columns are runners, rows are labelled by the position of runner 0.
/// Rows run from the highest bead (at least row 0) down to one row below
/// the lowest gap (at least row -1).
inline std::string render_abacus(const Partition& lambda, int p) {
  const Abacus ab = abacus(lambda, p);
  int top = 0;
  int bottom = -1;
  for (int i = 1; i <= lambda.length(); ++i) {
    top = std::max(top, detail::floor_div(lambda.part(i) - i, p));
  }
  for (int u = -lambda.length(); u < lambda.part(1); ++u) {
    if (!ab.bead_at(u)) bottom = std::min(bottom, detail::floor_div(u, p) - 1);
  }
  std::ostringstream os;
  const int width = 5;
  auto pad = [&](const std::string& s) { return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), ' ') + s; };
  os << pad("");
  for (int g = 0; g < p; ++g) os << ' ' << g;
  os << '\n';
  for (int row = top; row >= bottom; --row) {
    os << pad(std::to_string(row * p));
    for (int g = 0; g < p; ++g) os << ' ' << (ab.bead_at(row * p + g) ? 'o' : '-');
    os << '\n';
  }
  return os.str();
}

}  // namespace mckay
