#include "dsmooth/presentation.hpp"

#include <stdexcept>

#include "dsmooth/error.hpp"

namespace dsmooth {

Presentation::Presentation(Field field, std::size_t n, Ordering ordering,
                           std::vector<std::string> names)
    : field_(field), n_(n), ordering_(ordering), names_(std::move(names)), central_(n, false) {
  if (names_.empty()) names_ = default_names(n);
  if (names_.size() != n) throw MismatchedArity("generator name count differs from n");
  pairs_.resize(n * (n > 0 ? n - 1 : 0) / 2);
  for (auto& r : pairs_) r.quad = field_.from_int(1);
}

std::size_t Presentation::index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_) throw IndexOutOfRange("pair index must satisfy i < j < n");
  // Row-major upper triangle.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void Presentation::set_relation(std::size_t i, std::size_t j, const Scalar& quad,
                                const NcPoly& tail) {
  std::size_t k = index(i, j);
  if (quad.is_zero() && ordering_ == Ordering::ascending)
    throw ZeroQuadCoeff("quadratic coefficient of pair (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") is zero");
  if (!tail.is_zero() && tail.arity() != n_) throw MismatchedArity("tail arity differs from n");
  Scalar q = field_.coerce(quad);
  NcPoly t = coerce(tail, field_);
  if ((central_[i] || central_[j]) && (!q.is_one() || !t.is_zero()))
    throw Error("relation of a central generator must be plain commutation");
  pairs_[k] = Relation{q, t};
}

void Presentation::set_linear_relation(std::size_t i, std::size_t j, const Scalar& quad,
                                       const std::vector<Scalar>& linear,
                                       const Scalar& constant) {
  if (linear.size() != n_) throw MismatchedArity("linear tail length differs from n");
  set_relation(i, j, quad, NcPoly::linear(linear, constant));
}

void Presentation::set_central(std::size_t g) {
  if (g >= n_) throw IndexOutOfRange("central generator out of range");
  for (std::size_t h = 0; h < n_; ++h) {
    if (h == g) continue;
    const Relation& r = relation(std::min(g, h), std::max(g, h));
    if (!r.quad.is_one() || !r.tail.is_zero())
      throw Error("generator " + names_[g] + " does not commute with " + names_[h]);
  }
  central_[g] = true;
}

const Relation& Presentation::relation(std::size_t i, std::size_t j) const {
  return pairs_[index(i, j)];
}

Scalar Presentation::linear(std::size_t i, std::size_t j, std::size_t g) const {
  Monomial m(n_);
  m[g] = 1;
  return tail(i, j).coefficient(m);
}

bool Presentation::tails_linear() const {
  for (const auto& r : pairs_)
    if (r.tail.degree() > 1) return false;
  return true;
}

bool Presentation::diagonal_tails() const {
  if (!tails_linear()) return false;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t g = 0; g < n_; ++g)
        if (g != i && g != j && !linear(i, j, g).is_zero()) return false;
  return true;
}

NcPoly coerce(const NcPoly& p, const Field& f) {
  if (f.is_rational()) return p;
  NcPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, f.coerce(c));
  return r;
}

Presentation relabel(const Presentation& pres, const std::vector<std::size_t>& perm,
                     const std::vector<Scalar>& scale, Ordering ordering,
                     std::vector<std::string> names) {
  std::size_t n = pres.size();
  if (perm.size() != n || scale.size() != n) throw MismatchedArity("relabel needs n entries");
  if (!pres.tails_linear()) throw Error("relabel requires linear tails");
  std::vector<bool> seen(n, false);
  for (std::size_t g : perm) {
    if (g >= n || seen[g]) throw Error("relabel needs a permutation");
    seen[g] = true;
  }
  for (const auto& s : scale)
    if (s.is_zero()) throw ZeroSlope("relabel scale must be nonzero");
  if (names.empty()) {
    names.resize(n);
    for (std::size_t g = 0; g < n; ++g) names[perm[g]] = pres.names()[g];
  }
  Presentation out(pres.field(), n, ordering, names);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // s_i s_j (y_pi y_pj - a y_pj y_pi) = tail(x = s y)
      std::vector<Scalar> lin(n, Scalar(0));
      for (std::size_t g = 0; g < n; ++g) lin[perm[g]] = pres.linear(i, j, g) * scale[g];
      Scalar c0 = pres.e(i, j);
      Scalar inv = (scale[i] * scale[j]).inverse();
      Scalar a = pres.quad(i, j);
      std::size_t pi = perm[i], pj = perm[j];
      if (pi < pj) {
        for (auto& v : lin) v *= inv;
        out.set_linear_relation(pi, pj, a, lin, c0 * inv);
      } else {
        if (a.is_zero()) throw ZeroQuadCoeff("relabel cannot flip a pair with zero coefficient");
        Scalar f = -(a.inverse()) * inv;
        for (auto& v : lin) v *= f;
        out.set_linear_relation(pj, pi, a.inverse(), lin, c0 * f);
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (pres.is_central(g)) out.set_central(perm[g]);
  return out;
}

Presentation to_ascending(const Presentation& pres) {
  std::size_t n = pres.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t g = 0; g < n; ++g) perm[g] = n - 1 - g;
  return relabel(pres, perm, std::vector<Scalar>(n, Scalar(1)), Ordering::ascending);
}

}  // namespace dsmooth
