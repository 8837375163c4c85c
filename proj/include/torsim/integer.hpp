#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision integers and the number theory the engine needs.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "torsim/errors.hpp"

namespace torsim {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

/// Remainder in [0, m) for m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Floor division for b > 0.
inline Integer div_floor(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && (a < 0)) q -= 1;
  return q;
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  auto start = s.begin();
  if (start != s.end() && (*start == '-' || *start == '+')) ++start;
  if (start == s.end() || !std::all_of(start, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("not a decimal integer: '" + s + "'");
  }
  if (s.front() == '+') s.erase(s.begin());
  return Integer(s);
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline bool fits_int64(const Integer& a) {
  return a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) throw PreconditionError("integer " + a.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(a);
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 37 * 37) return true;
  // Fixed seed: primality answers must not depend on global state.
  std::mt19937 gen(0x7051u);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

namespace detail {

inline Integer pollard_brent(const Integer& n, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 gen(seed);
  for (;;) {
    Integer y = Integer(gen()) % n, c = Integer(gen()) % (n - 1) + 1, m = 128;
    Integer g = 1, r = 1, q = 1, x, ys;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = f(y);
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (Integer i = 0, lim = std::min<Integer>(m, r - k); i < lim; ++i) {
          y = f(y);
          q = q * abs_value(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs_value(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(const Integer& n, std::vector<Integer>& out, std::uint64_t seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n, seed);
  factor_into(d, out, seed + 1);
  factor_into(n / d, out, seed + 1);
}

}  // namespace detail

/// Distinct prime divisors of |n|, ascending. n = 0 and n = ±1 give {}.
inline std::vector<Integer> prime_divisors(const Integer& value) {
  Integer n = abs_value(value);
  std::vector<Integer> primes;
  if (n <= 1) return primes;
  for (std::uint32_t p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes.emplace_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) detail::factor_into(n, primes, 1);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

/// Multiplicity of the prime p in n != 0.
inline unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  n = abs_value(n);
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// True iff every prime dividing `base` also divides `d`, i.e. base | d^k for some k.
/// Works without factoring by repeatedly stripping common factors.
inline bool divides_some_power(Integer base, const Integer& d) {
  base = abs_value(base);
  if (base == 0) return d == 0;
  for (;;) {
    if (base == 1) return true;
    Integer g = gcd(base, d);
    if (g == 1) return false;
    while (base % g == 0) base /= g;
  }
}

}  // namespace torsim
