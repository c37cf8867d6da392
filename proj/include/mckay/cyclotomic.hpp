#pragma once

// Exact arithmetic in Z[w_M] modulo the M-th cyclotomic polynomial. The sign
// oracle built on it arbitrates every closed-form sign in the library.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mckay/error.hpp"
#include "mckay/numtheory.hpp"

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of the M-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^M - 1 by the smaller cyclotomic factors
/// and cached for the life of the process.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  detail::require(m >= 1, "cyclotomic_polynomial: M must be positive");
  static std::mutex lock;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    const std::vector<std::int64_t>& den = cyclotomic_polynomial(d);
    // Exact long division by a monic polynomial.
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
      const std::int64_t c = num[k];
      quot[k - dn] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
      if (k == dn) break;
    }
    for (std::size_t j = 0; j < dn; ++j) {
      if (num[j] != 0) throw InternalError("cyclotomic division left a remainder");
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(m, std::move(num)).first->second;
}

inline int euler_phi(int m) {
  int out = m;
  for (auto [q, e] : factorize(m)) out = out / static_cast<int>(q) * static_cast<int>(q - 1);
  return out;
}

/// An element of Z[w_M] in canonical reduced form.
class CycloElt {
 public:
  CycloElt() : CycloElt(1) {}
  explicit CycloElt(int conductor)
      : conductor_(conductor), coeffs_(static_cast<std::size_t>(euler_phi(conductor)), 0) {}

  /// Reduces sum coeffs[k] * w_M^k for any k >= 0.
  static CycloElt from_powers(int conductor, const std::vector<BigInt>& dense) {
    detail::require(conductor >= 1, "conductor must be positive");
    const std::vector<std::int64_t>& phi = cyclotomic_polynomial(conductor);
    const std::size_t deg = phi.size() - 1;
    std::vector<BigInt> work;
    // Fold exponents mod M first since w_M^M = 1.
    std::vector<BigInt> folded(static_cast<std::size_t>(conductor), 0);
    for (std::size_t k = 0; k < dense.size(); ++k) folded[k % static_cast<std::size_t>(conductor)] += dense[k];
    work.assign(folded.begin(), folded.end());
    if (work.size() < deg) work.resize(deg, 0);
    for (std::size_t k = work.size(); k-- > deg;) {
      const BigInt c = work[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) work[k - deg + j] -= c * phi[j];
    }
    CycloElt out(conductor);
    for (std::size_t j = 0; j < deg; ++j) out.coeffs_[j] = work[j];
    return out;
  }

  static CycloElt integer(const BigInt& value, int conductor = 1) {
    CycloElt out(conductor);
    out.coeffs_[0] = value;
    return out;
  }

  [[nodiscard]] int conductor() const noexcept { return conductor_; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] bool is_zero() const {
    for (const BigInt& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// The same element viewed in Z[w_L] for a multiple L of the conductor.
  [[nodiscard]] CycloElt lift(int target) const {
    detail::require(target % conductor_ == 0, "lift: target conductor must be a multiple");
    if (target == conductor_) return *this;
    const std::size_t step = static_cast<std::size_t>(target / conductor_);
    std::vector<BigInt> dense(coeffs_.size() * step, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) dense[k * step] = coeffs_[k];
    return from_powers(target, dense);
  }

  /// Image under w_M -> w_M^t, gcd(t, M) = 1.
  [[nodiscard]] CycloElt galois(std::int64_t t) const {
    detail::require(std::gcd(t, static_cast<std::int64_t>(conductor_)) == 1,
                    "galois: exponent must be prime to the conductor");
    std::vector<BigInt> dense(static_cast<std::size_t>(conductor_), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      dense[static_cast<std::size_t>(mod(static_cast<std::int64_t>(k) * t, conductor_))] += coeffs_[k];
    }
    return from_powers(conductor_, dense);
  }

  [[nodiscard]] CycloElt pow(unsigned exp) const {
    CycloElt out = integer(1, conductor_);
    CycloElt base = *this;
    while (exp) {
      if (exp & 1U) out = out * base;
      base = base * base;
      exp >>= 1U;
    }
    return out;
  }

  friend CycloElt operator+(const CycloElt& a, const CycloElt& b) {
    const int m = std::lcm(a.conductor_, b.conductor_);
    CycloElt x = a.lift(m);
    const CycloElt y = b.lift(m);
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
    return x;
  }

  friend CycloElt operator-(const CycloElt& a) {
    CycloElt x = a;
    for (BigInt& c : x.coeffs_) c = -c;
    return x;
  }

  friend CycloElt operator-(const CycloElt& a, const CycloElt& b) { return a + (-b); }

  friend CycloElt operator*(const CycloElt& a, const CycloElt& b) {
    const int m = std::lcm(a.conductor_, b.conductor_);
    const CycloElt x = a.lift(m);
    const CycloElt y = b.lift(m);
    std::vector<BigInt> dense(x.coeffs_.size() + y.coeffs_.size(), 0);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) dense[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return from_powers(m, dense);
  }

  friend CycloElt operator*(const BigInt& k, const CycloElt& a) {
    CycloElt x = a;
    for (BigInt& c : x.coeffs_) c *= k;
    return x;
  }

  /// Equality across conductors (compared in the common lift).
  friend bool operator==(const CycloElt& a, const CycloElt& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    return (a - b).is_zero();
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += coeffs_[k] > 0 ? " + " : " - ";
      else if (coeffs_[k] < 0) out += "-";
      const BigInt mag = abs(coeffs_[k]);
      if (k == 0 || mag != 1) out += mag.str();
      if (k > 0) out += (mag != 1 ? "*" : "") + std::string("w") + std::to_string(conductor_) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out.empty() ? "0" : out;
  }

 private:
  int conductor_;
  std::vector<BigInt> coeffs_;
};

inline CycloElt root_of_unity(int m, std::int64_t k) {
  detail::require(m >= 1, "root_of_unity: M must be positive");
  std::vector<BigInt> dense(static_cast<std::size_t>(m), 0);
  dense[static_cast<std::size_t>(mod(k, m))] = 1;
  return CycloElt::from_powers(m, dense);
}

/// sum_j (j/q) w_q^j, computed in the given multiple of q.
inline CycloElt gauss_sum_in(std::int64_t q, int conductor) {
  detail::require_odd_prime(q);
  detail::require(conductor % q == 0, "gauss_sum: conductor must be a multiple of q");
  const std::int64_t step = conductor / q;
  std::vector<BigInt> dense(static_cast<std::size_t>(conductor), 0);
  for (std::int64_t j = 1; j < q; ++j) dense[static_cast<std::size_t>(j * step)] = jacobi(j, q);
  return CycloElt::from_powers(conductor, dense);
}

/// Quadratic Gauss sum for q, in conductor lcm(4, q).
inline CycloElt gauss_sum(std::int64_t q) { return gauss_sum_in(q, static_cast<int>(4 * q)); }

/// Minimal conductor holding i and sqrt(m) for odd m.
inline int sqrt_conductor(std::int64_t m) {
  std::int64_t out = 4;
  for (auto [q, e] : factorize(m)) {
    if (e % 2) out *= q;
  }
  return static_cast<int>(out);
}

/// The positive square root of the odd integer m, as a product of
/// i^{-(q-1)/2} * (Gauss sum of q) over the primes q in the squarefree
/// kernel, times the square part.
inline CycloElt sqrt_embed(std::int64_t m) {
  detail::require(m >= 1 && m % 2 == 1, "sqrt_embed: m must be odd and positive");
  const int conductor = sqrt_conductor(m);
  CycloElt out = CycloElt::integer(1, conductor);
  std::int64_t square_root_of_square = 1;
  for (auto [q, e] : factorize(m)) {
    square_root_of_square *= ipow(q, e / 2);
    if (e % 2 == 0) continue;
    out = out * root_of_unity(4, -(q - 1) / 2) * gauss_sum_in(q, static_cast<int>(q));
  }
  return (BigInt(square_root_of_square) * out).lift(conductor);
}

inline CycloElt apply_aut(const CycloElt& x, const NavarroAut& f) {
  return x.galois(f.exponent_for(x.conductor()));
}

/// +1 if f fixes x, -1 if f negates it; anything else is an embedding bug.
inline int fixed_sign(const CycloElt& x, const CycloElt& image) {
  if (image == x) return 1;
  if (image == -x) return -1;
  throw InternalError("Galois image is neither +x nor -x for x = " + x.to_string());
}

/// Embeds i^a * sqrt(M) in a single conductor and reads off the sign.
/// Intended for small radicands; quad_sign_oracle splits the work by prime.
inline int quad_sign_oracle_full(const QuadValue& v, const NavarroAut& f) {
  const CycloElt x = root_of_unity(4, v.ipow) * sqrt_embed(v.radicand);
  return fixed_sign(x, apply_aut(x, f));
}

/// Galois sign of i^a * sqrt(M) computed by explicit cyclotomic arithmetic.
///
/// Q(w_N) is the tensor product of the fields Q(w_{q^k}) over the prime
/// powers exactly dividing N, and the embedding of i^a * sqrt(M) is a pure
/// tensor: a power of i in Q(w_4) times one Gauss sum per prime of the
/// squarefree kernel of M. The automorphism acts factorwise, so the sign is
/// read off one small conductor at a time.
inline int quad_sign_oracle(const QuadValue& v, const NavarroAut& f) {
  const std::int64_t kernel = squarefree_kernel(v.radicand);
  std::int64_t ipow_total = v.ipow;
  int sign = 1;
  for (auto [q, e] : factorize(kernel)) {
    (void)e;
    ipow_total -= (q - 1) / 2;
    const CycloElt g = gauss_sum_in(q, static_cast<int>(q));
    sign *= fixed_sign(g, apply_aut(g, f));
  }
  const CycloElt ipart = root_of_unity(4, ipow_total);
  sign *= fixed_sign(ipart, apply_aut(ipart, f));
  return sign;
}

}  // namespace mckay
