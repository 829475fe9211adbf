#include "dsmooth/endomorphism.hpp"

#include "dsmooth/error.hpp"

namespace dsmooth {

AffineEndo::AffineEndo(std::vector<Scalar> slopes, std::vector<Scalar> shifts)
    : slope_(std::move(slopes)), shift_(std::move(shifts)) {
  if (slope_.size() != shift_.size()) throw MismatchedArity("slope and shift counts differ");
  for (std::size_t j = 0; j < slope_.size(); ++j)
    if (slope_[j].is_zero()) throw ZeroSlope("slope of generator " + std::to_string(j + 1) + " is zero");
}

AffineEndo AffineEndo::identity(std::size_t n) {
  return AffineEndo(std::vector<Scalar>(n, Scalar(1)), std::vector<Scalar>(n, Scalar(0)));
}

AffineEndo AffineEndo::inverse() const {
  std::vector<Scalar> s, t;
  for (std::size_t j = 0; j < size(); ++j) {
    Scalar inv = slope_[j].inverse();
    s.push_back(inv);
    t.push_back(-inv * shift_[j]);
  }
  return AffineEndo(s, t);
}

NcPoly apply(const AffineEndo& e, const NcPoly& p, Rewriter& rw) {
  const Presentation& pres = rw.presentation();
  std::size_t n = pres.size();
  if (e.size() != n) throw MismatchedArity("endomorphism arity differs from presentation");
  NcPoly out;
  for (const auto& [m, c] : p.terms()) {
    NcPoly acc = NcPoly::constant(n, pres.field().coerce(c));
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::size_t g = pres.at_position(pos);
      if (m[g] == 0) continue;
      NcPoly image = pres.gen(g, e.slope(g)) + pres.one() * e.shift(g);
      for (unsigned k = 0; k < m[g]; ++k) acc = rw.multiply(acc, image);
    }
    out += acc;
  }
  return out;
}

NcPoly apply(const AffineEndo& e, const NcPoly& p, const Presentation& pres) {
  Rewriter rw(pres);
  return apply(e, p, rw);
}

AffineEndo compose(const AffineEndo& e1, const AffineEndo& e2) {
  if (e1.size() != e2.size()) throw MismatchedArity("composing endomorphisms of different arity");
  std::vector<Scalar> s, t;
  for (std::size_t j = 0; j < e1.size(); ++j) {
    s.push_back(e1.slope(j) * e2.slope(j));
    t.push_back(e2.slope(j) * e1.shift(j) + e2.shift(j));
  }
  return AffineEndo(s, t);
}

bool commute(const AffineEndo& e1, const AffineEndo& e2) {
  return compose(e1, e2) == compose(e2, e1);
}

RelationReport respects_relations(const AffineEndo& e, const Presentation& pres) {
  RelationReport rep;
  Rewriter rw(pres);
  std::size_t n = pres.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      NcPoly xi = apply(e, pres.gen(i), rw), xj = apply(e, pres.gen(j), rw);
      NcPoly r = rw.multiply(xi, xj) - rw.multiply(xj, xi) * pres.quad(i, j) -
                 apply(e, pres.tail(i, j), rw);
      if (!r.is_zero()) {
        rep.pass = false;
        rep.failures.push_back({i, j, r});
      }
    }
  }
  return rep;
}

std::string describe(const AffineEndo& e, std::size_t j, const Presentation& pres) {
  NcPoly img = pres.gen(j, e.slope(j)) + pres.one() * e.shift(j);
  return pres.names()[j] + " -> " + pres.format(img);
}

}  // namespace dsmooth
