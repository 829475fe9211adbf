#pragma once

#include <cstdint>
#include <random>

#include "dsmooth/ncpoly.hpp"
#include "dsmooth/presentation.hpp"
#include "dsmooth/scalar.hpp"

namespace dsmooth {

/// Seeded source of exact random scalars and polynomials.
///
/// Uses only the raw mt19937_64 stream so output is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// p/q with |p| <= height, 1 <= q <= height.
  Scalar rational(std::int64_t height);
  Scalar nonzero_rational(std::int64_t height);
  /// Rational moved into `field`; nonzero when requested.
  Scalar scalar(const Field& field, std::int64_t height, bool nonzero = false);
  /// Random combination of normal monomials of degree <= max_degree with `terms` draws.
  NcPoly poly(const Presentation& pres, unsigned max_degree, unsigned terms, std::int64_t height);

 private:
  std::mt19937_64 eng_;
};

/// Height used for sample index s: grows slowly with s.
inline std::int64_t sample_height(std::size_t s) { return 3 + 2 * static_cast<std::int64_t>(s); }

}  // namespace dsmooth
