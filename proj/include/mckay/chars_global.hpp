#pragma once

// Split characters of the alternating group: the irrational part of their
// values on the split class and the Galois sign eps(chi_lambda, f). The
// closed form is checked against a cyclotomic oracle; a separate
// level-by-level route is kept for comparison.

#include <cstdint>
#include <vector>

#include "mckay/abacus.hpp"
#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/partitions.hpp"

namespace mckay {

/// Data of chi_lambda^+ and chi_lambda^- on the split class whose cycle
/// type is the diagonal hooks of lambda: the two values are
/// (constant_sign + eta * value)/2 with value = i^((n-d)/2) sqrt(hook_product).
struct GlobalSplitChar {
  Partition lambda;
  int d = 0;
  std::int64_t hook_product = 1;
  int constant_sign = 1;  ///< (-1)^((n-d)/2), the value of chi_lambda there
  QuadValue value_core;
};

inline GlobalSplitChar split_values(const Partition& lambda) {
  if (!is_symmetric(lambda)) {
    throw DomainError("split_values needs a symmetric partition, got " + lambda.to_string());
  }
  GlobalSplitChar out;
  out.lambda = lambda;
  const DiagonalHooks diag = diagonal_hooks(lambda);
  out.d = diag.count();
  for (int h : diag.lengths) out.hook_product *= h;
  const int half = (lambda.size() - out.d) / 2;
  out.constant_sign = half % 2 == 0 ? 1 : -1;
  out.value_core = QuadValue(half, out.hook_product);
  return out;
}

/// Sign of f on the split pair, from the closed-form sign calculus.
inline int eps_global_direct(const Partition& lambda, const NavarroAut& f) {
  return eps_quad(split_values(lambda).value_core, f);
}

/// Same sign, computed by explicit cyclotomic arithmetic.
inline int eps_global_oracle(const Partition& lambda, const NavarroAut& f) {
  return quad_sign_oracle(split_values(lambda).value_core, f);
}

/// Splits f into its p-power part kappa (e = 0) and a power of the
/// Frobenius sigma. Every sign below is a homomorphism in f, so it is
/// evaluated on the two pieces and multiplied.
struct AutSplit {
  NavarroAut kappa;
  bool odd_frobenius = false;
};

inline AutSplit split_aut(const NavarroAut& f) {
  return {NavarroAut(f.p, 0, f.s, f.precision), f.e % 2 == 1};
}

/// Level factor for a tower whose only entry at level k sits at the
/// self-paired index, taken verbatim from the closed-form statement:
/// kappa contributes eps_kappa(sqrt p)^(k d) eps(chi_nu, kappa), and sigma
/// contributes (-1)^(d k (p-1)/2) eps(chi_nu, sigma).
inline int singular_level_sign(const Partition& nu, int k, const NavarroAut& f) {
  if (nu.empty()) return 1;
  const AutSplit parts = split_aut(f);
  const std::int64_t p = f.p;
  const int d = durfee(nu);
  int sign = 1;
  if ((static_cast<std::int64_t>(k) * d) % 2 == 1) sign *= galois_sqrt_sign(p, parts.kappa);
  sign *= eps_global_direct(nu, parts.kappa);
  if (parts.odd_frobenius) {
    const NavarroAut sigma = NavarroAut(p, 1, 1, f.precision);
    if ((static_cast<std::int64_t>(d) * k * ((p - 1) / 2)) % 2 == 1) sign = -sign;
    sign *= eps_global_direct(nu, sigma);
  }
  return sign;
}

/// Sign contributed by a regular part of total weight w: trivial on kappa,
/// (-1)^((p-1) w / 4) on sigma.
inline int regular_sign(std::int64_t w, const NavarroAut& f) {
  if (f.e % 2 == 0) return 1;
  if (((f.p - 1) * w) % 4 != 0) throw DomainError("regular_sign: (p-1)w must be divisible by 4");
  return ((f.p - 1) * w / 4) % 2 == 0 ? 1 : -1;
}

/// Sign from the decomposition lambda -> (core, regular part, singular
/// part): core factor by the closed form on the p-core, regular factor from
/// the size of the regular part, singular factor level by level. Meaningful
/// for symmetric lambda of p'-degree.
inline int eps_global_structural(const Partition& lambda, int p, const NavarroAut& f) {
  if (!is_symmetric(lambda)) throw DomainError("eps_global_structural needs a symmetric partition");
  detail::require(f.p == p, "automorphism prime differs from p");
  const Partition core = p_core(lambda, p);
  int sign = eps_global_direct(core, f);
  const CoreTower tower = core_tower(coreless_part(lambda, p), p);
  const auto [regular, singular] = regular_singular_split(tower);
  sign *= regular_sign(regular.size(), f);
  for (const auto& [key, nu] : singular.entries) sign *= singular_level_sign(nu, key.first, f);
  return sign;
}

/// Symmetric partitions of n whose character has degree prime to p, in
/// reverse lexicographic order.
inline std::vector<Partition> p_prime_symmetric_labels(int n, int p) {
  detail::require_odd_prime(p);
  detail::require(p <= n, "p_prime_symmetric_labels needs p <= n");
  std::vector<Partition> out;
  for (Partition& lambda : symmetric_partitions_of(n)) {
    if (is_p_prime_degree(lambda, p)) out.push_back(std::move(lambda));
  }
  return out;
}

}  // namespace mckay
