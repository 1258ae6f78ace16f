#ifndef XBRAID_FIELD_HPP_
#define XBRAID_FIELD_HPP_

// Exact ground fields: the rationals (arbitrary precision, via GMP) and prime
// fields F_p with p up to 2^63. No floating point appears anywhere.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace xbraid {

  using BigInt   = mpz_class;
  using Rational = mpq_class;

  inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
      if (n % small == 0) {
        return n == small;
      }
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
      std::uint64_t r = 1;
      while (e != 0) {
        if (e & 1u) {
          r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1u;
      }
      return r;
    };
    std::uint64_t d = n - 1;
    int           s = 0;
    while ((d & 1u) == 0) {
      d >>= 1u;
      ++s;
    }
    // Deterministic Miller-Rabin witness set for 64-bit integers.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
      std::uint64_t x = powmod(a % n, d);
      if (x == 1 || x == n - 1) {
        continue;
      }
      bool composite = true;
      for (int r = 1; r < s; ++r) {
        x = mulmod(x, x);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite) {
        return false;
      }
    }
    return true;
  }

  //! Element of F_p. Carries its modulus so that mixing fields is detected.
  class Residue {
   public:
    Residue() = default;
    Residue(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    std::uint64_t value() const noexcept {
      return v_;
    }
    std::uint64_t modulus() const noexcept {
      return p_;
    }

    friend Residue operator+(Residue a, Residue b) {
      check(a, b);
      std::uint64_t s = a.v_ + b.v_;
      if (s >= a.p_ || s < a.v_) {
        s -= a.p_;
      }
      return raw(s, a.p_);
    }
    friend Residue operator-(Residue a, Residue b) {
      check(a, b);
      return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.p_ - (b.v_ - a.v_), a.p_);
    }
    friend Residue operator*(Residue a, Residue b) {
      check(a, b);
      auto prod = static_cast<unsigned __int128>(a.v_) * b.v_;
      return raw(static_cast<std::uint64_t>(prod % a.p_), a.p_);
    }
    friend Residue operator/(Residue a, Residue b) {
      return a * b.inverse();
    }
    Residue operator-() const {
      return raw(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Residue& operator+=(Residue b) {
      return *this = *this + b;
    }
    Residue& operator-=(Residue b) {
      return *this = *this - b;
    }
    Residue& operator*=(Residue b) {
      return *this = *this * b;
    }
    friend bool operator==(Residue const&, Residue const&) = default;

    Residue inverse() const {
      if (v_ == 0) {
        throw Error(Errc::division_by_zero, "inverse of 0 in F_" + std::to_string(p_));
      }
      // Extended Euclid over signed 128-bit to avoid overflow for large p.
      __int128 t = 0, new_t = 1;
      __int128 r = p_, new_r = v_;
      while (new_r != 0) {
        __int128 q   = r / new_r;
        __int128 tmp = t - q * new_t;
        t            = new_t;
        new_t        = tmp;
        tmp          = r - q * new_r;
        r            = new_r;
        new_r        = tmp;
      }
      if (t < 0) {
        t += p_;
      }
      return raw(static_cast<std::uint64_t>(t), p_);
    }

   private:
    static Residue raw(std::uint64_t v, std::uint64_t p) {
      Residue r;
      r.v_ = v;
      r.p_ = p;
      return r;
    }
    static void check(Residue const& a, Residue const& b) {
      if (a.p_ != b.p_) {
        throw Error(Errc::field_mismatch,
                    "F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
      }
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
  };

  inline bool is_zero(Rational const& x) {
    return sgn(x) == 0;
  }
  inline bool is_zero(Residue const& x) {
    return x.value() == 0;
  }

  //! The field Q.
  struct Rationals {
    using value_type = Rational;

    value_type zero() const {
      return value_type(0);
    }
    value_type one() const {
      return value_type(1);
    }
    value_type from_int(long long n) const {
      return value_type(BigInt(std::to_string(n)));
    }
    value_type from_ratio(BigInt const& num, BigInt const& den) const {
      if (den == 0) {
        throw Error(Errc::division_by_zero, "zero denominator in rational literal");
      }
      value_type q(num, den);
      q.canonicalize();
      return q;
    }
    std::uint64_t characteristic() const noexcept {
      return 0;
    }
    std::string name() const {
      return "Q";
    }
    std::string to_string(value_type const& x) const {
      return x.get_str();
    }
    friend bool operator==(Rationals, Rationals) noexcept {
      return true;
    }
  };

  //! The field F_p for a prime p.
  class PrimeField {
   public:
    using value_type = Residue;

    explicit PrimeField(std::uint64_t p) : p_(p) {
      if (!is_prime(p)) {
        throw Error(Errc::field_mismatch, std::to_string(p) + " is not a prime");
      }
      if (p >= (std::uint64_t(1) << 63)) {
        throw Error(Errc::field_mismatch, "modulus exceeds 63 bits");
      }
    }

    value_type zero() const {
      return {0, p_};
    }
    value_type one() const {
      return {1, p_};
    }
    value_type from_int(long long n) const {
      if (n >= 0) {
        return {static_cast<std::uint64_t>(n), p_};
      }
      return -value_type(static_cast<std::uint64_t>(-(n + 1)) + 1, p_);
    }
    value_type from_big(BigInt const& n) const {
      BigInt r = n % BigInt(std::to_string(p_));
      if (r < 0) {
        r += BigInt(std::to_string(p_));
      }
      return {std::stoull(r.get_str()), p_};
    }
    value_type from_ratio(BigInt const& num, BigInt const& den) const {
      value_type d = from_big(den);
      if (is_zero(d)) {
        throw Error(Errc::field_mismatch,
                    "denominator " + den.get_str() + " vanishes in F_" + std::to_string(p_));
      }
      return from_big(num) / d;
    }
    std::uint64_t characteristic() const noexcept {
      return p_;
    }
    std::string name() const {
      return "Fp " + std::to_string(p_);
    }
    std::string to_string(value_type const& x) const {
      return std::to_string(x.value());
    }
    friend bool operator==(PrimeField const&, PrimeField const&) = default;

   private:
    std::uint64_t p_;
  };

  template <class F>
  concept ExactField = std::equality_comparable<F> && requires(F const& f, typename F::value_type const& a, BigInt const& n) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.from_int(1) } -> std::convertible_to<typename F::value_type>;
    { f.from_ratio(n, n) } -> std::convertible_to<typename F::value_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { is_zero(a) } -> std::convertible_to<bool>;
  };

  template <ExactField F>
  using Scalar = typename F::value_type;

}  // namespace xbraid

#endif  // XBRAID_FIELD_HPP_
