#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsmooth/presentation.hpp"

namespace dsmooth {

/// Coefficients of a linear form c_x x + c_y y + c_z z + c_0.
using Linear3 = std::array<Scalar, 4>;

/// yz - alpha zy = lambda, zx - beta xz = mu, xy - gamma yx = nu over generators x, y, z.
Presentation three_dim(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                       const Linear3& lambda, const Linear3& mu, const Linear3& nu,
                       const Field& field = Field::rationals());

/// yz - z(alpha y + a) = 0, zx - beta xz = b, xy - (gamma y + d)x = 0.
Presentation theorem1_presentation(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                   const Scalar& a, const Scalar& b, const Scalar& d,
                                   const Field& field = Field::rationals());

/// The (lambda, mu, nu, alpha, beta, gamma) reading of a three-generator presentation.
struct ThreeDimData {
  Scalar alpha, beta, gamma;
  Linear3 lambda, mu, nu;
};
/// Requires three generators, ascending order, linear tails.
ThreeDimData read_three_dim(const Presentation& pres);

/// Named values a class shape depends on: alpha, beta, gamma and any of a, b, a1..a3, b1..b3.
using ClassParams = std::map<std::string, Scalar>;

/// Labels in catalog order: 1, 2a..2f, 3a, 3b, 4, 5a..5e.
const std::vector<std::string>& class_labels();

/// Presentation of a class with the given parameters; missing entries default to 0
/// (slopes default to 1). Throws std::invalid_argument on an unknown label.
Presentation make_three_dim(const std::string& label, const ClassParams& params,
                            const Field& field = Field::rationals());

struct Classification {
  std::string label = "NONE";
  ClassParams params;
  /// The slope condition attached to the class holds.
  bool regime_holds = false;
};

/// Literal shape match on the tails; slope conditions decide between shapes that fit.
Classification classify_3d(const Presentation& pres);

}  // namespace dsmooth
