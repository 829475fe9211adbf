#pragma once

#include <cstddef>
#include <vector>

#include "dsmooth/ncpoly.hpp"
#include "dsmooth/presentation.hpp"
#include "dsmooth/rewriting.hpp"

namespace dsmooth {

/// Diagonal-affine map x_j -> slope_j x_j + shift_j, extended as an algebra map.
class AffineEndo {
 public:
  AffineEndo() = default;
  /// Throws ZeroSlope if some slope vanishes.
  AffineEndo(std::vector<Scalar> slopes, std::vector<Scalar> shifts);
  static AffineEndo identity(std::size_t n);

  std::size_t size() const { return slope_.size(); }
  const Scalar& slope(std::size_t j) const { return slope_.at(j); }
  const Scalar& shift(std::size_t j) const { return shift_.at(j); }
  /// Inverse map: slope 1/s, shift -t/s.
  AffineEndo inverse() const;

  friend bool operator==(const AffineEndo&, const AffineEndo&) = default;

 private:
  std::vector<Scalar> slope_, shift_;
};

/// Image of p: each monomial is expanded factor by factor in normal order.
NcPoly apply(const AffineEndo& e, const NcPoly& p, const Presentation& pres);
NcPoly apply(const AffineEndo& e, const NcPoly& p, Rewriter& rw);

/// Algebra-map composition e1 o e2 (e2 is applied first):
/// x -> a2 (a1 x + b1) + b2, i.e. slope a1 a2 and shift a2 b1 + b2.
AffineEndo compose(const AffineEndo& e1, const AffineEndo& e2);
bool commute(const AffineEndo& e1, const AffineEndo& e2);

struct RelationResidue {
  std::size_t i = 0, j = 0;
  NcPoly residue;  // e(x_i)e(x_j) - a e(x_j)e(x_i) - e(tail)
};

struct RelationReport {
  bool pass = true;
  std::vector<RelationResidue> failures;
};

RelationReport respects_relations(const AffineEndo& e, const Presentation& pres);

/// Human-readable "x -> 2*x + 1" for generator j.
std::string describe(const AffineEndo& e, std::size_t j, const Presentation& pres);

}  // namespace dsmooth
