#pragma once

#include <vector>

#include "dsmooth/endomorphism.hpp"
#include "dsmooth/presentation.hpp"

namespace dsmooth {

inline Presentation two_gen(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& e) {
  Presentation p(Field::rationals(), 2);
  p.set_linear_relation(0, 1, a, {b, c}, e);
  return p;
}

// yz - alpha zy = a z, zx - beta xz = b, xy - gamma yx = d x with x, y, z = x1, x2, x3.
inline Presentation theorem1(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                      const Scalar& a, const Scalar& b, const Scalar& d) {
  Presentation p(Field::rationals(), 3, Ordering::ascending, {"x", "y", "z"});
  p.set_linear_relation(0, 1, gamma, {d, 0, 0}, 0);
  p.set_linear_relation(0, 2, beta.inverse(), {0, 0, 0}, -b / beta);
  p.set_linear_relation(1, 2, alpha, {0, 0, a}, 0);
  return p;
}

inline AffineEndo endo(std::vector<Scalar> s, std::vector<Scalar> t) { return AffineEndo(s, t); }

// nu_x, nu_y, nu_z for the family above.
inline std::vector<AffineEndo> theorem1_table(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                              const Scalar& a, const Scalar& d) {
  return {endo({beta.inverse(), gamma.inverse(), beta}, {0, -d, 0}),
          endo({gamma, 1, alpha.inverse()}, {0, 0, 0}),
          endo({beta.inverse(), alpha, beta}, {0, a, 0})};
}

inline Monomial mono(std::vector<unsigned> e) { return Monomial(std::move(e)); }

}  // namespace dsmooth
