#include "dsmooth/sampling.hpp"

namespace dsmooth {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(eng_());
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Scalar Sampler::rational(std::int64_t height) {
  std::int64_t p = integer(-height, height);
  std::int64_t q = integer(1, height);
  return Scalar(p, q);
}

Scalar Sampler::nonzero_rational(std::int64_t height) {
  for (;;) {
    Scalar s = rational(height);
    if (!s.is_zero()) return s;
  }
}

Scalar Sampler::scalar(const Field& field, std::int64_t height, bool nonzero) {
  for (;;) {
    Scalar r = rational(height);
    if (!field.is_rational() && mpz_class(r.rational().get_den() % field.characteristic()) == 0) continue;
    Scalar s = field.coerce(r);
    if (!nonzero || !s.is_zero()) return s;
  }
}

NcPoly Sampler::poly(const Presentation& pres, unsigned max_degree, unsigned terms,
                     std::int64_t height) {
  std::size_t n = pres.size();
  NcPoly p;
  for (unsigned t = 0; t < terms; ++t) {
    auto deg = static_cast<unsigned>(integer(0, max_degree));
    Monomial m(n);
    for (unsigned d = 0; d < deg; ++d) m[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1))] += 1;
    p.add_term(m, scalar(pres.field(), height));
  }
  return p;
}

}  // namespace dsmooth
