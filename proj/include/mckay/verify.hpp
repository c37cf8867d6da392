#pragma once

// Compares the p'-degree characters of A_n with those of its Sylow
// normaliser. Counts and Galois fixed points are computed on both sides, and
// any disagreement between routes becomes a defect record.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mckay/abacus.hpp"
#include "mckay/chars_global.hpp"
#include "mckay/chars_local.hpp"
#include "mckay/error.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/partitions.hpp"

namespace mckay {

/// The bijection on labels: a p'-degree partition goes to its core tower.
inline LocalLabel phi(const Partition& lambda, int p) { return local_label(lambda, p); }

struct PrimeCount {
  std::int64_t nonsym_pairs = 0;
  std::int64_t symmetric = 0;
  std::int64_t total = 0;
  friend bool operator==(const PrimeCount&, const PrimeCount&) = default;
};

enum class Side { Global, Local };

/// |Irr_p'(A_n)| (global) or |Irr_p'(N_{A_n}(P))| (local). The global side
/// enumerates partitions; the local side multiplies multipartition counts.
inline PrimeCount count_p_prime(int n, int p, Side side) {
  detail::require_odd_prime(p);
  detail::require(p <= n, "count_p_prime needs p <= n");
  PrimeCount out;
  if (side == Side::Global) {
    std::int64_t nonsym = 0;
    for (const Partition& lambda : partitions_of(n)) {
      if (!is_p_prime_degree(lambda, p)) continue;
      if (is_symmetric(lambda)) ++out.symmetric;
      else ++nonsym;
    }
    out.nonsym_pairs = nonsym / 2;
  } else {
    const std::vector<int> digits = padic_digits(n, p);
    const int n0 = digits[0];
    BigInt labels = partition_counts(n0)[static_cast<std::size_t>(n0)];
    BigInt sym = self_conjugate_counts(n0)[static_cast<std::size_t>(n0)];
    for (std::size_t k = 1; k < digits.size(); ++k) {
      const std::int64_t m = ipow(p, static_cast<int>(k));
      labels *= multipartition_count(m, digits[k]);
      sym *= symmetric_multipartition_count(m, digits[k]);
    }
    out.symmetric = static_cast<std::int64_t>(sym);
    out.nonsym_pairs = static_cast<std::int64_t>((labels - sym) / 2);
  }
  out.total = out.nonsym_pairs + 2 * out.symmetric;
  return out;
}

/// A disagreement between two routes for the same sign.
struct Defect {
  std::string lambda;  ///< global partition, or a rendering of the local label
  std::string path;
  int expected = 0;
  int got = 0;
  bool fatal = false;
};

/// Paths whose disagreement fails a run: closed form against the oracle on
/// the global side, and sign transport through the bijection.
inline const char* const kPathGlobalDirect = "global-direct";
inline const char* const kPathPhiTransport = "phi-transport";
/// Paths that are only reported: the level-by-level closed forms, which
/// assume the Frobenius fixes sqrt(p).
inline const char* const kPathGlobalStructural = "global-structural:sqrt-p-convention";
inline const char* const kPathLocalStructural = "local-structural:sqrt-p-convention";

struct SideCount {
  std::int64_t total = 0;
  std::int64_t fixed = 0;
};

struct VerificationReport {
  int n = 0;
  int p = 0;
  SignClass sign_class = SignClass::Id;
  SideCount global;
  SideCount local;
  bool equal = false;
  std::vector<Defect> defects;
  double ms = 0;

  [[nodiscard]] bool has_fatal_defect() const {
    for (const Defect& d : defects) {
      if (d.fatal) return true;
    }
    return false;
  }
  [[nodiscard]] bool ok() const { return equal && !has_fatal_defect(); }
};

inline std::string describe(const LocalLabel& label) {
  std::string out;
  for (const auto& [key, part] : label.tower.entries) {
    if (!out.empty()) out += ' ';
    out += "L" + std::to_string(key.first) + "[" + std::to_string(key.second) + "]=" + part.to_string();
  }
  return out.empty() ? "empty" : out;
}

namespace detail {

/// Runs fn with f, widening the precision of f on PrecisionError.
template <class Fn>
auto with_precision(NavarroAut f, Fn fn) {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn(f);
    } catch (const PrecisionError&) {
      if (attempt > 8) throw;
      f.precision *= 2;
    }
  }
}

}  // namespace detail

/// Fixed-point counts for one automorphism. Nonsymmetric labels count as
/// fixed on both sides; each symmetric label counts twice when its sign is +1.
inline VerificationReport fixed_counts(int n, int p, const NavarroAut& f) {
  detail::require_odd_prime(p);
  detail::require(p <= n, "fixed_counts needs p <= n");
  detail::require(f.p == p, "automorphism prime differs from p");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.n = n;
  rep.p = p;
  rep.sign_class = f.sign_class();

  const PrimeCount global = count_p_prime(n, p, Side::Global);
  rep.global.total = global.total;
  rep.global.fixed = global.nonsym_pairs;
  for (const Partition& lambda : p_prime_symmetric_labels(n, p)) {
    const int direct = detail::with_precision(f, [&](const NavarroAut& g) { return eps_global_direct(lambda, g); });
    const int oracle = detail::with_precision(f, [&](const NavarroAut& g) { return eps_global_oracle(lambda, g); });
    const int structural =
        detail::with_precision(f, [&](const NavarroAut& g) { return eps_global_structural(lambda, p, g); });
    if (direct != oracle) rep.defects.push_back({lambda.to_string(), kPathGlobalDirect, oracle, direct, true});
    if (structural != direct) {
      rep.defects.push_back({lambda.to_string(), kPathGlobalStructural, direct, structural, false});
    }
    const std::optional<int> transported =
        detail::with_precision(f, [&](const NavarroAut& g) { return eps_local_oracle(phi(lambda, p), g); });
    if (transported && *transported != oracle) {
      rep.defects.push_back({lambda.to_string(), kPathPhiTransport, oracle, *transported, true});
    }
    if (direct == 1) rep.global.fixed += 2;
  }

  const PrimeCount local = count_p_prime(n, p, Side::Local);
  rep.local.total = local.total;
  rep.local.fixed = local.nonsym_pairs;
  for (const LocalLabel& label : symmetric_local_labels(n, p)) {
    const int closed = detail::with_precision(f, [&](const NavarroAut& g) { return eps_local(label, g); });
    const std::optional<int> oracle =
        detail::with_precision(f, [&](const NavarroAut& g) { return eps_local_oracle(label, g); });
    if (oracle && *oracle != closed) {
      rep.defects.push_back({describe(label), kPathLocalStructural, *oracle, closed, false});
    }
    if (oracle.value_or(closed) == 1) rep.local.fixed += 2;
  }

  rep.equal = rep.global.fixed == rep.local.fixed && rep.global.total == rep.local.total;
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline VerificationReport fixed_counts(int n, int p, SignClass c) {
  return fixed_counts(n, p, NavarroAut::of_class(p, c, std::max(1, factorial_valuation(n, p))));
}

struct ScanOptions {
  int n_min = 3;
  int n_max = 10;
  std::vector<int> primes{3};
  double budget_ms = 600000;  ///< wall-clock limit for the whole scan
};

/// One report per (p, n, sign class), p in the given order, n increasing,
/// classes in the fixed order id, sigma, kappa, kappa-sigma. Each report is
/// passed to sink as soon as it is ready. Throws BudgetError once the
/// budget is exhausted (reports already delivered stay valid).
inline std::vector<VerificationReport> scan(const ScanOptions& opts,
                                            const std::function<void(const VerificationReport&)>& sink = {}) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> out;
  for (int p : opts.primes) {
    detail::require_odd_prime(p);
    for (int n = std::max(opts.n_min, p); n <= opts.n_max; ++n) {
      for (SignClass c : kAllSignClasses) {
        const double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > opts.budget_ms) {
          throw BudgetError("scan budget of " + std::to_string(opts.budget_ms) + " ms exhausted at n = " +
                            std::to_string(n) + ", p = " + std::to_string(p));
        }
        out.push_back(fixed_counts(n, p, c));
        if (sink) sink(out.back());
      }
    }
  }
  return out;
}

inline bool scan_ok(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) {
    if (!r.ok()) return false;
  }
  return true;
}

}  // namespace mckay
