#include "dsmooth/rewriting.hpp"

#include "dsmooth/error.hpp"

namespace dsmooth {

Rewriter::Rewriter(const Presentation& pres, std::size_t step_budget)
    : pres_(pres), budget_(step_budget) {}

std::pair<Scalar, NcPoly> Rewriter::swap_rule(std::size_t u, std::size_t v) const {
  if (u < v) {
    // x_u x_v - a x_v x_u = tail
    const Relation& r = pres_.relation(u, v);
    return {r.quad, r.tail};
  }
  const Relation& r = pres_.relation(v, u);
  if (r.quad.is_zero())
    throw ZeroQuadCoeff("pair (" + std::to_string(v + 1) + "," + std::to_string(u + 1) +
                        ") cannot be solved for the reversed product");
  Scalar inv = r.quad.inverse();
  return {inv, r.tail * (-inv)};
}

NcPoly Rewriter::times_generator(const Monomial& m, std::size_t g) {
  std::size_t n = pres_.size();
  if (m.arity() != n || g >= n) throw MismatchedArity("generator index outside the presentation");
  // last letter of m in the normal order
  std::size_t h = n;
  for (std::size_t p = n; p-- > 0;) {
    std::size_t cand = pres_.at_position(p);
    if (m[cand] > 0) {
      h = cand;
      break;
    }
  }
  if (h == n || pres_.position(g) >= pres_.position(h)) {
    Monomial r = m;
    r[g] += 1;
    return NcPoly::term(r, pres_.field().from_int(1));
  }
  auto key = std::make_pair(m, g);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (++steps_ > budget_) throw RewriteError("rewriting exceeded its step budget");

  Monomial rest = m;
  rest[h] -= 1;
  auto [kappa, tau] = swap_rule(h, g);
  NcPoly out;
  if (!kappa.is_zero()) out = right_multiply(times_generator(rest, g), h) * kappa;
  for (const auto& [u, c] : tau.terms()) out += times_monomial(rest, u) * c;
  cache_.emplace(std::move(key), out);
  return out;
}

NcPoly Rewriter::right_multiply(const NcPoly& p, std::size_t g) {
  NcPoly out;
  for (const auto& [m, c] : p.terms()) out += times_generator(m, g) * c;
  return out;
}

NcPoly Rewriter::times_monomial(const Monomial& m, const Monomial& u) {
  NcPoly acc = NcPoly::term(m, pres_.field().from_int(1));
  std::size_t n = pres_.size();
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t g = pres_.at_position(p);
    for (unsigned e = 0; e < u[g]; ++e) acc = right_multiply(acc, g);
  }
  return acc;
}

NcPoly Rewriter::multiply(const NcPoly& p, const NcPoly& q) {
  NcPoly out;
  for (const auto& [m, a] : p.terms())
    for (const auto& [u, b] : q.terms()) out += times_monomial(m, u) * (a * b);
  return out;
}

NcPoly Rewriter::word(const Word& w) {
  NcPoly acc = NcPoly::constant(pres_.size(), pres_.field().coerce(w.coeff));
  for (std::size_t g : w.letters) {
    if (g >= pres_.size()) throw MismatchedArity("word references generator " + std::to_string(g));
    acc = right_multiply(acc, g);
  }
  return acc;
}

NcPoly Rewriter::power(const NcPoly& p, unsigned e) {
  NcPoly acc = pres_.one();
  for (unsigned k = 0; k < e; ++k) acc = multiply(acc, p);
  return acc;
}

NcPoly normal_form(const Word& w, const Presentation& pres) {
  Rewriter rw(pres);
  return rw.word(w);
}

NcPoly normal_form(const std::vector<Word>& words, const Presentation& pres) {
  Rewriter rw(pres);
  NcPoly out;
  for (const auto& w : words) out += rw.word(w);
  return out;
}

NcPoly multiply(const NcPoly& p, const NcPoly& q, const Presentation& pres) {
  Rewriter rw(pres);
  return rw.multiply(p, q);
}

OverlapReport check_pbw_overlaps(const Presentation& pres) {
  OverlapReport report;
  std::size_t n = pres.size();
  Rewriter rw(pres);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // u v w with pos(u) > pos(v) > pos(w)
        std::size_t u = k, v = j, w = i;
        if (pres.ordering() == Ordering::descending) std::swap(u, w);
        auto [k_uv, t_uv] = rw.swap_rule(u, v);
        auto [k_vw, t_vw] = rw.swap_rule(v, w);
        NcPoly left = rw.word(Word{k_uv, {v, u, w}});
        for (const auto& [m, c] : t_uv.terms())
          left += rw.times_generator(m, w) * c;
        NcPoly right = rw.word(Word{k_vw, {u, w, v}});
        Monomial mu(n);
        mu[u] = 1;
        for (const auto& [m, c] : t_vw.terms()) right += rw.times_monomial(mu, m) * c;
        OverlapTriple t{i, j, k, true, left - right};
        t.pass = t.discrepancy.is_zero();
        report.pass = report.pass && t.pass;
        report.triples.push_back(std::move(t));
      }
    }
  }
  return report;
}

}  // namespace dsmooth
