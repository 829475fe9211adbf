#include "dsmooth/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "dsmooth/error.hpp"

namespace dsmooth {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p == 3) throw BadCharacteristic("characteristic 2 and 3 are not supported");
  mpz_class z(std::to_string(p));
  if (p < 5 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw BadCharacteristic("Fp modulus must be a prime >= 5, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 62)) throw BadCharacteristic("Fp modulus too large");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field modulus '" + digits + "'");
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

Scalar Field::from_int(long v) const { return coerce(Scalar(v)); }

Scalar Field::from_rational(const mpq_class& q) const { return coerce(Scalar(q)); }

Scalar Field::coerce(const Scalar& s) const {
  if (p_ == 0) {
    if (!s.is_rational()) throw Error("cannot lift a residue to the rationals");
    return s;
  }
  if (!s.is_rational()) {
    if (s.modulus() != p_) throw Error("scalars from different prime fields");
    return s;
  }
  Scalar r = s;
  r.to_mod(p_);
  return r;
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  q_.canonicalize();
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.mod_ = p;
  s.res_ = r % p;
  s.q_ = 0;
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  std::string t(text);
  auto check_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start >= s.size()) return false;
    return s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!check_int(t, true)) throw std::invalid_argument("malformed scalar '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    return Scalar(mpq_class(mpz_class(t)));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw std::invalid_argument("malformed scalar '" + t + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  return Scalar(mpq_class(mpz_class(num), d));
}

bool Scalar::is_zero() const { return mod_ ? res_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return mod_ ? res_ == 1 : q_ == 1; }

void Scalar::to_mod(std::uint64_t p) {
  if (mod_ == p) return;
  if (mod_) throw Error("scalars from different prime fields");
  std::uint64_t d = reduce_mpz(q_.get_den(), p);
  if (d == 0) throw DivisionByZero("denominator vanishes modulo " + std::to_string(p));
  std::uint64_t n = reduce_mpz(q_.get_num(), p);
  *this = residue(mulmod(n, powmod(d, p - 2, p), p), p);
}

void Scalar::unify(Scalar& a, Scalar& b) {
  if (a.mod_ == b.mod_) return;
  if (a.mod_ && b.mod_) throw Error("scalars from different prime fields");
  if (a.mod_) b.to_mod(a.mod_);
  else a.to_mod(b.mod_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (mod_) return residue(powmod(res_, mod_ - 2, mod_), mod_);
  Scalar r;
  r.q_ = 1 / q_;
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar r = mod_ ? residue(1, mod_) : Scalar(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar b = o;
  unify(*this, b);
  if (mod_) {
    res_ = (res_ + b.res_) % mod_;
  } else {
    q_ += b.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar b = o;
  unify(*this, b);
  if (mod_) {
    res_ = mulmod(res_, b.res_, mod_);
  } else {
    q_ *= b.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mod_) {
    r.res_ = res_ == 0 ? 0 : mod_ - res_;
  } else {
    r.q_ = -q_;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ == b.mod_) return a.mod_ ? a.res_ == b.res_ : a.q_ == b.q_;
  Scalar x = a, y = b;
  Scalar::unify(x, y);
  return x == y;
}

std::string Scalar::to_string() const {
  if (mod_) return std::to_string(res_);
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar binomial(unsigned long n, unsigned long k) {
  if (k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(mpq_class(r));
}

}  // namespace dsmooth
