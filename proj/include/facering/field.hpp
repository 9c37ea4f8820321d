#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace facering {

// Deterministic random source. All randomness in the library flows through
// this class so that a (seed, call sequence) pair reproduces bit-identically
// on every platform. std::mt19937_64 has a standard-mandated output sequence;
// the distribution helpers below avoid std::uniform_int_distribution, whose
// mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform value in [0, n). Modulo bias is < n / 2^64, irrelevant for the
  // tiny n used here, and more importantly deterministic.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    return eng_() % n;
  }

  // Derive an independent child seed (for per-trial streams).
  std::uint64_t fork() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Field of rational numbers, exact arithmetic via GMP.
class Rationals {
 public:
  using Elem = mpq_class;

  static constexpr bool kIsPrimeField = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { Elem r = a + b; return r; }
  Elem sub(const Elem& a, const Elem& b) const { Elem r = a - b; return r; }
  Elem mul(const Elem& a, const Elem& b) const { Elem r = a * b; return r; }
  Elem neg(const Elem& a) const { Elem r = -a; return r; }

  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("Rationals::inv: division by zero");
    Elem r = 1 / a;
    return r;
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  // Coefficients for genericity sampling: small integers keep pivot growth
  // under control while leaving plenty of room for generic behavior.
  Elem random(Rng& rng) const {
    return Elem(static_cast<long>(rng.below(21)) - 10);
  }

  // Pivot preference weight: total bit size. Smaller entries make better
  // pivots for fraction-growth control.
  std::size_t weight(const Elem& a) const {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) +
           mpz_sizeinbase(a.get_den_mpz_t(), 2);
  }

  std::string str(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

// Prime field F_p with runtime modulus. Elements are canonical residues in
// [0, p). The modulus is capped below 2^31 so that sums and products of two
// residues fit in uint64_t without overflow.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  static constexpr bool kIsPrimeField = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (1ull << 31) || !probably_prime(p))
      throw std::invalid_argument("PrimeField: modulus must be a prime < 2^31");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }

  Elem from_int(long v) const {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return static_cast<Elem>(m);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField::inv: division by zero");
    return pow(a, p_ - 2);
  }

  bool is_zero(Elem a) const { return a % p_ == 0; }
  bool eq(Elem a, Elem b) const { return a % p_ == b % p_; }

  Elem random(Rng& rng) const { return rng.below(p_); }

  std::size_t weight(Elem) const { return 1; }

  std::string str(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }

  static bool probably_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
      if (n == q) return true;
      if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin for n < 3.2e18 with the bases above.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
      std::uint64_t r = 1;
      a %= n;
      while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
      }
      return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
      std::uint64_t x = powmod(a, d);
      if (x == 1 || x == n - 1) continue;
      bool witness = true;
      for (int i = 1; i < s; ++i) {
        x = mulmod(x, x);
        if (x == n - 1) { witness = false; break; }
      }
      if (witness) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
};

}  // namespace facering
