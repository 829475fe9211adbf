#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsmooth/ncpoly.hpp"
#include "dsmooth/scalar.hpp"

namespace dsmooth {

/// One pair relation x_i x_j - quad * x_j x_i = tail, for i < j.
struct Relation {
  Scalar quad{1};
  NcPoly tail;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Generators x_1..x_n subject to one quasi-commutation relation per pair.
///
/// Indices are 0-based in the API; names are what reports print.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Field field, std::size_t n, Ordering ordering = Ordering::ascending,
               std::vector<std::string> names = {});

  /// Sets the relation of the pair (i, j), i < j. The tail must be in normal form.
  void set_relation(std::size_t i, std::size_t j, const Scalar& quad, const NcPoly& tail);
  /// Linear tail convenience: coefficient vector over generators plus constant.
  void set_linear_relation(std::size_t i, std::size_t j, const Scalar& quad,
                           const std::vector<Scalar>& linear, const Scalar& constant);
  /// Declares g central; its relations must be plain commutation.
  void set_central(std::size_t g);

  const Field& field() const { return field_; }
  std::size_t size() const { return n_; }
  Ordering ordering() const { return ordering_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_central(std::size_t g) const { return central_.at(g); }

  const Relation& relation(std::size_t i, std::size_t j) const;
  const Scalar& quad(std::size_t i, std::size_t j) const { return relation(i, j).quad; }
  const NcPoly& tail(std::size_t i, std::size_t j) const { return relation(i, j).tail; }
  /// Coefficient of x_g in the tail of (i, j).
  Scalar linear(std::size_t i, std::size_t j, std::size_t g) const;
  Scalar b(std::size_t i, std::size_t j) const { return linear(i, j, i); }
  Scalar c(std::size_t i, std::size_t j) const { return linear(i, j, j); }
  Scalar e(std::size_t i, std::size_t j) const { return tail(i, j).constant_term(); }

  /// Every tail has degree <= 1.
  bool tails_linear() const;
  /// Every tail of (i, j) is supported on {1, x_i, x_j}.
  bool diagonal_tails() const;

  /// Position of g in the normal-monomial order.
  std::size_t position(std::size_t g) const {
    return ordering_ == Ordering::ascending ? g : n_ - 1 - g;
  }
  /// Generator at position p.
  std::size_t at_position(std::size_t p) const { return position(p); }

  NcPoly one() const { return NcPoly::constant(n_, Scalar(1)); }
  NcPoly gen(std::size_t g, const Scalar& c = Scalar(1)) const { return NcPoly::generator(n_, g, c); }

  std::string format(const NcPoly& p) const { return to_string(p, names_, ordering_); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  Field field_;
  std::size_t n_ = 0;
  Ordering ordering_ = Ordering::ascending;
  std::vector<std::string> names_;
  std::vector<bool> central_;
  std::vector<Relation> pairs_;
};

/// Moves every coefficient into the field.
NcPoly coerce(const NcPoly& p, const Field& f);

/// Change of generators x_g = scale[g] * y_{perm[g]}, relations rewritten for the new
/// variables (pairs whose order flips are solved for the other product).
/// Requires linear tails; the result uses `ordering`.
Presentation relabel(const Presentation& pres, const std::vector<std::size_t>& perm,
                     const std::vector<Scalar>& scale, Ordering ordering,
                     std::vector<std::string> names = {});

/// Reverses generator order and switches to the ASCENDING convention.
Presentation to_ascending(const Presentation& pres);

}  // namespace dsmooth
