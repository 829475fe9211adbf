#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dsmooth {

class Scalar;

/// Coefficient field: the rationals, or a prime field F_p with p >= 5.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws BadCharacteristic for p = 2, 3 and for non-primes.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Moves a scalar of any field into this one (rationals reduce mod p).
  Scalar coerce(const Scalar& s) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element: a canonical rational, or a residue modulo a prime.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  Scalar(long num, long den);

  /// Residue r mod p (p must be an odd prime >= 5; not re-validated here).
  static Scalar residue(std::uint64_t r, std::uint64_t p);
  /// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return mod_ == 0; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t residue_value() const { return res_; }
  const mpq_class& rational() const { return q_; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" (or "p" when q = 1) for rationals, the reduced residue otherwise.
  std::string to_string() const;

 private:
  friend class Field;
  // Brings a and b into a common field.
  static void unify(Scalar& a, Scalar& b);
  void to_mod(std::uint64_t p);

  mpq_class q_;
  std::uint64_t mod_ = 0;
  std::uint64_t res_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Binomial coefficient as an exact integer scalar.
Scalar binomial(unsigned long n, unsigned long k);

}  // namespace dsmooth
