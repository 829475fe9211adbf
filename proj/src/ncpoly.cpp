#include "dsmooth/ncpoly.hpp"

#include <algorithm>
#include <numeric>

#include "dsmooth/error.hpp"

namespace dsmooth {

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

NcPoly NcPoly::constant(std::size_t n, const Scalar& c) { return term(Monomial(n), c); }

NcPoly NcPoly::generator(std::size_t n, std::size_t g, const Scalar& c) {
  if (g >= n) throw MismatchedArity("generator index out of range");
  Monomial m(n);
  m[g] = 1;
  return term(m, c);
}

NcPoly NcPoly::term(const Monomial& m, const Scalar& c) {
  NcPoly p;
  p.add_term(m, c);
  return p;
}

NcPoly NcPoly::linear(const std::vector<Scalar>& coeffs, const Scalar& c0) {
  std::size_t n = coeffs.size();
  NcPoly p = constant(n, c0);
  for (std::size_t g = 0; g < n; ++g) p += generator(n, g, coeffs[g]);
  return p;
}

void NcPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.arity() != m.arity())
    throw MismatchedArity("monomials of different arity");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int NcPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Scalar NcPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar NcPoly::constant_term() const {
  if (terms_.empty()) return Scalar(0);
  return coefficient(Monomial(arity()));
}

std::size_t NcPoly::arity() const { return terms_.empty() ? 0 : terms_.begin()->first.arity(); }

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  return r *= Scalar(-1);
}

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t g = 0; g < n; ++g) names.push_back(stem + std::to_string(g + 1));
  return names;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names, Ordering ord) {
  std::string out;
  std::size_t n = m.arity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t g = ord == Ordering::ascending ? k : n - 1 - k;
    if (m[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += g < names.size() ? names[g] : "x" + std::to_string(g + 1);
    if (m[g] > 1) out += "^" + std::to_string(m[g]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const NcPoly& p, const std::vector<std::string>& names, Ordering ord) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.degree() > b.first.degree();
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += to_string(m, names, ord);
    }
  }
  return out;
}

NcPoly degree_truncation(const NcPoly& p, int D) {
  NcPoly r;
  for (const auto& [m, c] : p.terms())
    if (static_cast<int>(m.degree()) <= D) r.add_term(m, c);
  return r;
}

}  // namespace dsmooth
