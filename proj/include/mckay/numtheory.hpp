#pragma once

// Small number theory plus the automorphism model. The sign calculus here
// says how an automorphism acts on values i^a * sqrt(M).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mckay/error.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// Plain integer helpers.

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool is_odd_prime(std::int64_t p) { return p > 2 && is_prime(p); }

namespace detail {
inline void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}
}  // namespace detail

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

inline std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

/// Digits of n in base p, least significant first; empty for n = 0.
inline std::vector<int> padic_digits(std::int64_t n, int p) {
  detail::require(n >= 0 && p >= 2, "padic_digits: bad arguments");
  std::vector<int> out;
  while (n > 0) {
    out.push_back(static_cast<int>(n % p));
    n /= p;
  }
  return out;
}

/// Exponent of p in n (n != 0).
inline int valuation(std::int64_t n, std::int64_t p) {
  detail::require(n != 0, "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Exponent of p in n! (Legendre's formula).
inline int factorial_valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  for (std::int64_t q = p; q <= n; q *= p) v += static_cast<int>(n / q);
  return v;
}

/// Prime factorisation as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  detail::require(n >= 1, "factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Product of the primes dividing n to an odd power.
inline std::int64_t squarefree_kernel(std::int64_t n) {
  std::int64_t out = 1;
  for (auto [q, e] : factorize(n)) {
    if (e % 2) out *= q;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi symbol.

inline int jacobi(std::int64_t r, std::int64_t m) {
  if (m <= 0 || m % 2 == 0) {
    throw DomainError("jacobi: modulus must be odd and positive, got " + std::to_string(m));
  }
  std::int64_t a = mod(r, m);
  std::int64_t n = m;
  int sign = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

/// Legendre symbol via Euler's criterion. Used only as an independent check.
inline int legendre_euler(std::int64_t r, std::int64_t q) {
  const std::int64_t v = powmod(r, (q - 1) / 2, q);
  if (v == 0) return 0;
  return v == 1 ? 1 : -1;
}

/// Smallest positive quadratic non-residue modulo the odd prime p.
inline std::int64_t least_nonresidue(std::int64_t p) {
  detail::require_odd_prime(p);
  for (std::int64_t g = 2;; ++g) {
    if (jacobi(g, p) == -1) return g;
  }
}

// ---------------------------------------------------------------------------
// Navarro automorphisms.

/// The four classes through which every sign computed here factors:
/// parity of the Frobenius power and quadratic character of s mod p.
enum class SignClass { Id, Sigma, Kappa, KappaSigma };

inline constexpr SignClass kAllSignClasses[] = {SignClass::Id, SignClass::Sigma,
                                                 SignClass::Kappa, SignClass::KappaSigma};

inline std::string to_string(SignClass c) {
  switch (c) {
    case SignClass::Id: return "id";
    case SignClass::Sigma: return "sigma";
    case SignClass::Kappa: return "kappa";
    case SignClass::KappaSigma: return "kappa-sigma";
  }
  throw InternalError("unknown sign class");
}

inline std::optional<SignClass> parse_sign_class(std::string_view name) {
  for (SignClass c : kAllSignClasses) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

/// A Galois automorphism acting on p'-roots of unity by x -> x^(p^e) and on
/// p-power roots of unity by w -> w^s, with s known modulo p^precision.
struct NavarroAut {
  std::int64_t p = 3;
  std::int64_t e = 0;
  std::int64_t s = 1;
  int precision = 32;

  NavarroAut() = default;
  NavarroAut(std::int64_t p_, std::int64_t e_, std::int64_t s_, int precision_ = 32)
      : p(p_), e(e_), s(s_), precision(precision_) {
    detail::require_odd_prime(p);
    detail::require(e >= 0, "NavarroAut: e must be non-negative");
    detail::require(s % p != 0, "NavarroAut: s must be prime to p");
    detail::require(precision >= 1, "NavarroAut: precision must be positive");
  }

  static NavarroAut identity(std::int64_t p) { return {p, 0, 1}; }
  static NavarroAut sigma(std::int64_t p) { return {p, 1, 1}; }

  /// Canonical representative of a sign class.
  static NavarroAut of_class(std::int64_t p, SignClass c, int precision = 32) {
    const bool frob = c == SignClass::Sigma || c == SignClass::KappaSigma;
    const bool twist = c == SignClass::Kappa || c == SignClass::KappaSigma;
    return {p, frob ? 1 : 0, twist ? least_nonresidue(p) : 1, precision};
  }

  /// Accepts `e=<int>,s=<int>` (either key optional) or a class name.
  static NavarroAut parse(std::string_view text, std::int64_t p, int precision = 32) {
    if (auto c = parse_sign_class(text)) return of_class(p, *c, precision);
    std::int64_t e = 0;
    std::int64_t s = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      const std::string_view item = text.substr(pos, comma - pos);
      const std::size_t eq = item.find('=');
      detail::require(eq != std::string_view::npos, "bad automorphism item '" + std::string(item) + "'");
      const std::string key(item.substr(0, eq));
      const std::string value(item.substr(eq + 1));
      std::size_t used = 0;
      std::int64_t parsed = 0;
      try {
        parsed = std::stoll(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      detail::require(!value.empty() && used == value.size(), "bad integer in automorphism '" + value + "'");
      if (key == "e") e = parsed;
      else if (key == "s") s = parsed;
      else throw DomainError("unknown automorphism key '" + key + "'");
      pos = comma + 1;
    }
    return {p, e, s, precision};
  }

  [[nodiscard]] SignClass sign_class() const {
    const bool frob = e % 2 == 1;
    const bool twist = jacobi(s, p) == -1;
    if (frob) return twist ? SignClass::KappaSigma : SignClass::Sigma;
    return twist ? SignClass::Kappa : SignClass::Id;
  }

  /// Exponent t with f(w_M) = w_M^t, for a conductor M.
  [[nodiscard]] std::int64_t exponent_for(std::int64_t conductor) const {
    detail::require(conductor >= 1, "conductor must be positive");
    std::int64_t ppart = 1;
    std::int64_t rest = conductor;
    int a = 0;
    while (rest % p == 0) {
      rest /= p;
      ppart *= p;
      ++a;
    }
    if (a > precision) {
      throw PrecisionError("automorphism known modulo p^" + std::to_string(precision) +
                           " but conductor needs p^" + std::to_string(a));
    }
    const std::int64_t on_rest = powmod(p, e, rest);
    const std::int64_t on_ppart = mod(s, ppart);
    // CRT by stepping through the residue class of on_ppart.
    std::int64_t t = on_ppart;
    while (mod(t, rest) != mod(on_rest, rest)) t += ppart;
    return mod(t, conductor);
  }

  friend bool operator==(const NavarroAut&, const NavarroAut&) = default;
};

/// f followed by g (both act by exponentiation, so order is irrelevant).
inline NavarroAut compose(const NavarroAut& f, const NavarroAut& g) {
  detail::require(f.p == g.p, "compose: automorphisms for different primes");
  // Residues are multiplied modulo the largest power of p that both factors
  // know and that keeps the product inside 128-bit arithmetic.
  int prec = 0;
  std::int64_t modulus = 1;
  while (prec < std::min(f.precision, g.precision) && modulus <= (std::int64_t{1} << 40) / f.p) {
    modulus *= f.p;
    ++prec;
  }
  const auto s = static_cast<std::int64_t>((static_cast<__int128>(mod(f.s, modulus)) * mod(g.s, modulus)) % modulus);
  return {f.p, f.e + g.e, s, prec};
}

// ---------------------------------------------------------------------------
// Quadratic values i^a * sqrt(M) and their Galois signs.

/// Represents i^ipow * sqrt(radicand) up to a positive rational factor.
struct QuadValue {
  int ipow = 0;
  std::int64_t radicand = 1;

  QuadValue() = default;
  QuadValue(std::int64_t a, std::int64_t m) : ipow(static_cast<int>(mod(a, 4))), radicand(m) {
    detail::require(m >= 1 && m % 2 == 1, "QuadValue radicand must be odd and positive");
  }

  /// Product, with the radicand reduced to its squarefree kernel.
  friend QuadValue operator*(const QuadValue& a, const QuadValue& b) {
    const std::int64_t ka = squarefree_kernel(a.radicand);
    const std::int64_t kb = squarefree_kernel(b.radicand);
    const std::int64_t g = std::gcd(ka, kb);
    return {a.ipow + b.ipow, (ka / g) * (kb / g)};
  }

  friend bool operator==(const QuadValue&, const QuadValue&) = default;
};

/// Sign by which f multiplies i.
inline int eps_i(const NavarroAut& f) {
  return powmod(f.p, f.e, 4) == 1 ? 1 : -1;
}

/// f(sqrt m) = sign * sqrt m for odd positive m.
inline int galois_sqrt_sign(std::int64_t m, const NavarroAut& f) {
  detail::require(m >= 1 && m % 2 == 1, "galois_sqrt_sign: m must be odd and positive");
  if (m == 1) return 1;
  const std::int64_t r = f.exponent_for(m);
  const int symbol = jacobi(r, m);
  if (symbol == 0) throw InternalError("galois_sqrt_sign: exponent not prime to m");
  const int ipart = ((m - 1) / 2) % 2 == 0 ? 1 : eps_i(f);
  return ipart * symbol;
}

inline int eps_quad(const QuadValue& v, const NavarroAut& f) {
  const int ipart = v.ipow % 2 == 0 ? 1 : eps_i(f);
  return ipart * galois_sqrt_sign(squarefree_kernel(v.radicand), f);
}

}  // namespace mckay
