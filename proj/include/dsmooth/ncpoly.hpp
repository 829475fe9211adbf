#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dsmooth/scalar.hpp"

namespace dsmooth {

/// Exponent vector (l_1, ..., l_n) of a PBW-ordered monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  unsigned operator[](std::size_t g) const { return exps_[g]; }
  unsigned& operator[](std::size_t g) { return exps_[g]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  NcPoly() = default;

  static NcPoly constant(std::size_t n, const Scalar& c);
  static NcPoly generator(std::size_t n, std::size_t g, const Scalar& c = Scalar(1));
  static NcPoly term(const Monomial& m, const Scalar& c);
  /// c_0 + sum_g coeffs[g] x_g.
  static NcPoly linear(const std::vector<Scalar>& coeffs, const Scalar& c0);

  void add_term(const Monomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  /// Total degree, -1 for the zero polynomial.
  int degree() const;
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;
  /// Coefficient of the empty monomial (needs the arity when nonzero).
  Scalar constant_term() const;
  /// Arity of the stored monomials, or 0 for the zero polynomial.
  std::size_t arity() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);
  NcPoly operator-() const;

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

/// Generator order of printed monomials.
enum class Ordering { ascending, descending };

/// Default generator names x1..xn.
std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x");

std::string to_string(const Monomial& m, const std::vector<std::string>& names, Ordering ord);
/// Terms are listed by decreasing degree, then by monomial order.
std::string to_string(const NcPoly& p, const std::vector<std::string>& names, Ordering ord);

/// Sub-sum of the terms of total degree <= D.
NcPoly degree_truncation(const NcPoly& p, int D);

}  // namespace dsmooth
