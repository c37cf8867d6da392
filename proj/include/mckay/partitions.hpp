#pragma once

// Integer partitions with their hooks, plus symmetric-group character
// degrees and values.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mckay/error.hpp"

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;

/// A weakly decreasing sequence of positive parts. The empty partition is
/// the unique partition of 0. Immutable once built.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      detail::require(parts_[i] >= 1, "partition parts must be positive");
      detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                      "partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses the comma format `7,7,5,4,3,2,2`. Empty text is the empty
  /// partition; `a^m` repeats a part m times (`2^8`).
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (item.empty()) {
        detail::require(text.find_first_not_of(" \t,") == std::string_view::npos,
                        "empty item in partition text");
        continue;
      }
      int mult = 1;
      if (auto caret = item.find('^'); caret != std::string::npos) {
        mult = parse_int(item.substr(caret + 1));
        item = item.substr(0, caret);
        detail::require(mult >= 0, "negative multiplicity in partition text");
      }
      const int part = parse_int(item);
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    }
    return Partition(std::move(parts));
  }

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }

  /// 1-based part access; zero beyond the last part.
  [[nodiscard]] int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  static int parse_int(const std::string& s) {
    detail::require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
                    "bad integer '" + s + "' in partition text");
    return std::stoi(s);
  }

  std::vector<int> parts_;
  int size_ = 0;
};

/// Cell (row, col) of a Young diagram, 1-based, with its hook data.
struct Hook {
  int row = 0;
  int col = 0;
  int length = 0;
  int arm = 0;
  int leg = 0;
  friend bool operator==(const Hook&, const Hook&) = default;
};

/// Hook lengths at the diagonal cells (i,i), in row order (strictly
/// decreasing).
struct DiagonalHooks {
  std::vector<int> lengths;
  [[nodiscard]] int count() const noexcept { return static_cast<int>(lengths.size()); }
  friend bool operator==(const DiagonalHooks&, const DiagonalHooks&) = default;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int j = 1; j <= lambda.part(1); ++j) {
    int column = 0;
    while (lambda.part(column + 1) >= j) ++column;
    out.push_back(column);
  }
  return Partition(std::move(out));
}

inline bool is_symmetric(const Partition& lambda) { return conjugate(lambda) == lambda; }

inline std::vector<Hook> hooks(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<Hook> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int arm = lambda.part(i) - j;
      const int leg = conj.part(j) - i;
      out.push_back(Hook{i, j, arm + leg + 1, arm, leg});
    }
  }
  return out;
}

/// Multiset of all hook lengths, sorted decreasingly.
inline std::vector<int> hook_lengths(const Partition& lambda) {
  std::vector<int> out;
  for (const Hook& h : hooks(lambda)) out.push_back(h.length);
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline DiagonalHooks diagonal_hooks(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  DiagonalHooks out;
  for (int i = 1; lambda.part(i) >= i; ++i) {
    out.lengths.push_back((lambda.part(i) - i) + (conj.part(i) - i) + 1);
  }
  return out;
}

/// Side of the largest square fitting in the Young diagram.
inline int durfee(const Partition& lambda) {
  int i = 0;
  while (lambda.part(i + 1) >= i + 1) ++i;
  return i;
}

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

/// Degree of the irreducible character of S_n labelled by lambda
/// (hook-length formula).
inline BigInt degree(const Partition& lambda) {
  BigInt prod = 1;
  for (const Hook& h : hooks(lambda)) prod *= h.length;
  return factorial(lambda.size()) / prod;
}

/// Symmetric partition with the given diagonal hook lengths (distinct odd
/// numbers, any order).
inline Partition from_diagonal_hooks(std::vector<int> lengths) {
  std::sort(lengths.rbegin(), lengths.rend());
  std::vector<int> rows;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    detail::require(lengths[k] % 2 == 1 && lengths[k] > 0,
                    "diagonal hook lengths of a symmetric partition are odd");
    detail::require(k == 0 || lengths[k] < lengths[k - 1], "diagonal hooks must be distinct");
  }
  const int d = static_cast<int>(lengths.size());
  // Frobenius coordinates (a_1 > ... > a_d | a_1 > ... > a_d).
  std::vector<int> arm(lengths.size());
  for (int k = 0; k < d; ++k) arm[static_cast<std::size_t>(k)] = (lengths[static_cast<std::size_t>(k)] - 1) / 2;
  for (int k = 1; k < d; ++k) {
    detail::require(arm[static_cast<std::size_t>(k)] < arm[static_cast<std::size_t>(k - 1)],
                    "not a valid set of diagonal hooks");
  }
  const int height = d == 0 ? 0 : arm[0] + 1;
  for (int i = 1; i <= height; ++i) {
    int len = 0;
    if (i <= d) {
      len = arm[static_cast<std::size_t>(i - 1)] + i;
    } else {
      for (int k = 1; k <= d; ++k) {
        if (arm[static_cast<std::size_t>(k - 1)] + k >= i) len = k;
      }
    }
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
  detail::require(n >= 0, "partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Self-conjugate partitions of n, generated from sets of distinct odd
/// diagonal hook lengths.
inline std::vector<Partition> symmetric_partitions_of(int n) {
  detail::require(n >= 0, "symmetric_partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_odd) -> void {
    if (remaining == 0) {
      out.push_back(from_diagonal_hooks(cur));
      return;
    }
    for (int h = std::min(max_odd, remaining); h >= 1; --h) {
      if (h % 2 == 0) continue;
      cur.push_back(h);
      self(self, remaining - h, h - 2);
      cur.pop_back();
    }
  };
  rec(rec, n, n % 2 == 1 ? n : n - 1);
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace detail {

struct MnMemo {
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> table;
};

inline BigInt mn_recurse(const Partition& lambda, const std::vector<int>& cycles,
                         std::size_t idx, MnMemo& memo) {
  if (idx == cycles.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda.parts(), idx);
  if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

  const int len = lambda.length();
  const int r = cycles[idx];
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) beta[static_cast<std::size_t>(i - 1)] = lambda.part(i) + len - i;

  BigInt total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const int target = beta[k] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[k]) ++between;
    }
    std::vector<int> moved = beta;
    moved[k] = target;
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) {
      const int part = moved[static_cast<std::size_t>(i - 1)] - (len - i);
      if (part > 0) parts.push_back(part);
    }
    const BigInt sub = mn_recurse(Partition(std::move(parts)), cycles, idx + 1, memo);
    if (between % 2) total -= sub;
    else total += sub;
  }
  memo.table.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi_lambda evaluated on the class of cycle type mu (rim-hook recursion).
inline BigInt mn_value(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size()) {
    throw DomainError("mn_value: |lambda| = " + std::to_string(lambda.size()) +
                      " but |mu| = " + std::to_string(cycle_type.size()));
  }
  detail::MnMemo memo;
  return detail::mn_recurse(lambda, cycle_type.parts(), 0, memo);
}

}  // namespace mckay
