#include "dsmooth/calculus.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "dsmooth/error.hpp"
#include "dsmooth/linalg.hpp"
#include "dsmooth/sampling.hpp"

namespace dsmooth {

std::vector<std::size_t> members(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; s; ++g, s >>= 1)
    if (s & 1U) out.push_back(g);
  return out;
}

Subset subset_of(const std::vector<std::size_t>& idx) {
  Subset s = 0;
  for (std::size_t g : idx) s |= Subset{1} << g;
  return s;
}

int popcount(Subset s) { return std::popcount(s); }

DiffForm DiffForm::function(const NcPoly& f) {
  DiffForm d(0);
  d.add(0, f);
  return d;
}

DiffForm DiffForm::basis(Subset s, const NcPoly& f) {
  DiffForm d(popcount(s));
  d.add(s, f);
  return d;
}

NcPoly DiffForm::component(Subset s) const {
  auto it = comp_.find(s);
  return it == comp_.end() ? NcPoly() : it->second;
}

void DiffForm::add(Subset s, const NcPoly& f) {
  if (popcount(s) != degree_) throw MismatchedArity("component degree differs from form degree");
  if (f.is_zero()) return;
  auto [it, fresh] = comp_.try_emplace(s, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [s, f] : o.comp_) add(s, f);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [s, f] : o.comp_) add(s, -f);
  return *this;
}

DiffForm& DiffForm::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    comp_.clear();
    return *this;
  }
  for (auto& [s, f] : comp_) f *= c;
  return *this;
}

Calculus::Calculus(Presentation pres, std::vector<AffineEndo> nus)
    : pres_(std::make_shared<const Presentation>(std::move(pres))), nus_(std::move(nus)) {
  std::size_t n = pres_->size();
  if (n > 20) throw MismatchedArity("at most 20 generators are supported");
  if (nus_.size() != n) throw MismatchedArity("one endomorphism per generator is required");
  for (auto& e : nus_)
    if (e.size() != n) throw MismatchedArity("endomorphism arity differs from presentation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!commute(nus_[i], nus_[j])) throw std::invalid_argument("the endomorphism family does not commute");
      if (!(nus_[i].slope(j) * nus_[j].slope(i)).is_one())
        throw std::invalid_argument("slopes of nu_i at x_j and nu_j at x_i are not inverse");
    }
  rw_ = std::make_unique<Rewriter>(*pres_);
}

const AffineEndo& Calculus::nu(Subset s) const {
  auto it = nu_cache_.find(s);
  if (it != nu_cache_.end()) return it->second;
  AffineEndo e = AffineEndo::identity(size());
  for (std::size_t g : members(s)) e = compose(e, nus_[g]);
  return nu_cache_.emplace(s, std::move(e)).first->second;
}

std::string Calculus::format(const DiffForm& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [s, p] : f.components()) {
    if (!out.empty()) out += " + ";
    std::string basis;
    for (std::size_t g : members(s)) basis += (basis.empty() ? "d" : "^d") + pres_->names()[g];
    out += basis.empty() ? "(" + pres_->format(p) + ")" : basis + "*(" + pres_->format(p) + ")";
  }
  return out;
}

DiffForm left_act(const Calculus& c, const NcPoly& a, const DiffForm& f) {
  DiffForm out(f.degree());
  for (const auto& [s, g] : f.components())
    out.add(s, c.rewriter().multiply(apply(c.nu(s), a, c.rewriter()), g));
  return out;
}

Scalar sort_sign(const Calculus& c, Subset s, Subset t) {
  if (s & t) return Scalar(0);
  std::vector<std::size_t> seq = members(s);
  for (std::size_t g : members(t)) seq.push_back(g);
  Scalar coef(1);
  // bubble sort: dx_u ^ dx_v = -slope(nu_v at x_u) dx_v ^ dx_u for u > v
  for (std::size_t pass = 0; pass < seq.size(); ++pass)
    for (std::size_t p = 0; p + 1 < seq.size(); ++p)
      if (seq[p] > seq[p + 1]) {
        std::size_t u = seq[p], v = seq[p + 1];
        coef *= -c.nus()[v].slope(u);
        std::swap(seq[p], seq[p + 1]);
      }
  return c.presentation().field().coerce(coef);
}

DiffForm wedge(const Calculus& c, const DiffForm& f, const DiffForm& g) {
  int deg = f.degree() + g.degree();
  DiffForm out(deg);
  if (f.is_zero() || g.is_zero() || deg > static_cast<int>(c.size())) return out;
  for (const auto& [s, fs] : f.components())
    for (const auto& [t, gt] : g.components()) {
      Scalar sign = sort_sign(c, s, t);
      if (sign.is_zero()) continue;
      NcPoly moved = apply(c.nu(t), fs, c.rewriter());
      out.add(s | t, c.rewriter().multiply(moved, gt) * sign);
    }
  return out;
}

namespace {

// sum_{j=1}^{l} (A x - B)^{j-1} x^{l-j} as a polynomial in x_g
NcPoly block_sum(std::size_t n, std::size_t g, unsigned l, const Scalar& A, const Scalar& B) {
  NcPoly out;
  for (unsigned j = 1; j <= l; ++j)
    for (unsigned t = 0; t < j; ++t) {
      Scalar coef = binomial(j - 1, t) * A.pow(t) * (-B).pow(j - 1 - t);
      if (coef.is_zero()) continue;
      std::vector<unsigned> e(n, 0);
      e[g] = l + t - j;
      out += NcPoly::term(Monomial(e), coef);
    }
  return out;
}

}  // namespace

NcPoly partial_bar(const Calculus& c, std::size_t i, const NcPoly& a) {
  const Presentation& pres = c.presentation();
  std::size_t n = pres.size();
  if (i >= n) throw IndexOutOfRange("generator index out of range");
  const AffineEndo& nu = c.nus()[i];
  Scalar A = nu.slope(i), B = -nu.shift(i);
  NcPoly out;
  for (const auto& [m, coef] : a.terms()) {
    unsigned l = m[i];
    if (l == 0) continue;
    std::vector<unsigned> pre(n, 0), post(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
      if (pres.position(g) < pres.position(i)) pre[g] = m[g];
      if (pres.position(g) > pres.position(i)) post[g] = m[g];
    }
    NcPoly head = apply(nu, NcPoly::term(Monomial(pre), coef), c.rewriter());
    NcPoly body = c.rewriter().multiply(head, block_sum(n, i, l, A, B));
    out += c.rewriter().multiply(body, NcPoly::term(Monomial(post), 1));
  }
  return out;
}

DiffForm differential(const Calculus& c, const DiffForm& f) {
  int k = f.degree();
  DiffForm out(k + 1);
  if (k >= static_cast<int>(c.size())) return out;
  Scalar parity = k % 2 == 0 ? Scalar(1) : Scalar(-1);
  for (const auto& [s, g] : f.components())
    for (std::size_t i = 0; i < c.size(); ++i) {
      Subset e = Subset{1} << i;
      Scalar sign = sort_sign(c, s, e);
      if (sign.is_zero()) continue;
      NcPoly p = partial_bar(c, i, g);
      if (!p.is_zero()) out.add(s | e, p * (sign * parity));
    }
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned D) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  for (unsigned deg = 0; deg <= D; ++deg) {
    std::vector<Monomial> level;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t g, unsigned left) {
      if (g + 1 == n || n == 0) {
        if (n) e[g] = left;
        if (n || left == 0) level.emplace_back(e);
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        e[g] = v;
        rec(g + 1, left - v);
      }
    };
    rec(0, deg);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<NcPoly> kernel_of_d_bounded(const Calculus& c, unsigned D) {
  std::size_t n = c.size();
  auto basis = monomials_up_to(n, D);
  std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  for (const auto& m : basis) {
    std::vector<std::pair<std::size_t, Scalar>> col;
    NcPoly mono = NcPoly::term(m, 1);
    for (std::size_t i = 0; i < n; ++i) {
      NcPoly di = partial_bar(c, i, mono);
      for (const auto& [t, v] : di.terms()) {
        auto key = std::make_pair(i, t);
        auto it = rows.try_emplace(key, rows.size()).first;
        col.emplace_back(it->second, v);
      }
    }
    cols.push_back(std::move(col));
  }
  Matrix mat(rows.size(), basis.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [r, v] : cols[j]) mat(r, j) = v;
  std::vector<NcPoly> out;
  for (auto& v : nullspace(mat)) {
    NcPoly p;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) p += NcPoly::term(basis[j], v[j]);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void subsets_of_size(std::size_t n, int k, std::size_t from, std::vector<std::size_t>& cur,
                     std::vector<Subset>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(subset_of(cur));
    return;
  }
  for (std::size_t g = from; g < n; ++g) {
    cur.push_back(g);
    subsets_of_size(n, k, g + 1, cur, out);
    cur.pop_back();
  }
}

// Literal evaluation of the two product branches (1-based indices inside).
std::pair<Scalar, Scalar> closed_form(const Presentation& p, const std::vector<std::size_t>& phi,
                                      const std::vector<std::size_t>& phibar) {
  auto a = [&](std::size_t i, std::size_t j) { return p.quad(i - 1, j - 1); };
  std::size_t k = phi.size(), m = phibar.size();
  auto f = [&](std::size_t s) { return phi[s - 1] + 1; };
  auto fb = [&](std::size_t s) { return phibar[s - 1] + 1; };
  Scalar A(1), Abar(1);
  if (!phi.empty() && phi[0] == 0) {
    for (std::size_t s = 1; s <= m; ++s)
      for (std::size_t t = 1; t + 1 <= fb(s); ++t) A *= -a(t, fb(s));
    for (std::size_t s = 1; s + 1 <= m; ++s)
      for (std::size_t t = s + 1; t <= m; ++t) Abar *= -a(fb(s), fb(t)).inverse();
  } else {
    for (std::size_t s = 1; s + 1 <= k; ++s)
      for (std::size_t t = s + 1; t <= k; ++t) A *= -a(f(s), f(t)).inverse();
    for (std::size_t s = 1; s <= k; ++s)
      for (std::size_t t = f(s) + 1; t <= fb(m); ++t) Abar *= -a(f(s), t);
  }
  return {A, Abar};
}

}  // namespace

std::vector<IntegralFormEntry> integral_form_coefficients(const Calculus& c) {
  std::size_t n = c.size();
  if (n < 2) throw MismatchedArity("integral forms need at least two generators");
  const Field& field = c.presentation().field();
  std::vector<IntegralFormEntry> out;
  for (int k = 1; k < static_cast<int>(n); ++k) {
    std::vector<Subset> subs;
    std::vector<std::size_t> cur;
    subsets_of_size(n, k, 0, cur, subs);
    for (Subset s : subs) {
      IntegralFormEntry e;
      e.k = k;
      e.s = s;
      e.t = c.full() & ~s;
      e.sigma = sort_sign(c, e.t, e.s);
      Scalar inv = e.sigma.inverse(), one = field.from_int(1);
      if (k <= static_cast<int>(n) - k) {
        e.A = one;
        e.Abar = inv;
      } else {
        e.A = inv;
        e.Abar = one;
      }
      auto [ca, cb] = closed_form(c.presentation(), members(s), members(e.t));
      e.closed_A = field.coerce(ca);
      e.closed_Abar = field.coerce(cb);
      e.closed_normalized = (e.closed_A * e.closed_Abar * e.sigma).is_one();
      e.closed_equal = e.closed_A == e.A && e.closed_Abar == e.Abar;
      out.push_back(e);
    }
  }
  return out;
}

namespace {

NcPoly pi_omega(const Calculus& c, const DiffForm& f) { return f.component(c.full()); }

DiffForm first_side(const Calculus& c, const std::vector<IntegralFormEntry>& entries, const DiffForm& w) {
  DiffForm out(w.degree());
  NcPoly one = c.presentation().one();
  for (auto& e : entries) {
    if (e.k != w.degree()) continue;
    DiffForm wbar = DiffForm::basis(e.t, one * e.Abar);
    NcPoly p = pi_omega(c, wedge(c, wbar, w));
    out += DiffForm::basis(e.s, p * e.A);
  }
  return out;
}

DiffForm second_side(const Calculus& c, const std::vector<IntegralFormEntry>& entries, const DiffForm& w) {
  std::size_t n = c.size();
  DiffForm out(w.degree());
  NcPoly one = c.presentation().one();
  AffineEndo inv = c.nu_omega().inverse();
  for (auto& e : entries) {
    if (e.k != static_cast<int>(n) - w.degree()) continue;
    DiffForm om = DiffForm::basis(e.s, one * e.A);
    NcPoly p = apply(inv, pi_omega(c, wedge(c, w, om)), c.rewriter());
    out += left_act(c, p, DiffForm::basis(e.t, one * e.Abar));
  }
  return out;
}

}  // namespace

bool integrability_holds(const Calculus& c, const std::vector<IntegralFormEntry>& entries,
                         const DiffForm& w, bool second) {
  return (second ? second_side(c, entries, w) : first_side(c, entries, w)) == w;
}

IntegrabilityReport verify_integrability(const Calculus& c, unsigned D, std::size_t samples,
                                         std::uint64_t seed) {
  IntegrabilityReport rep;
  auto entries = integral_form_coefficients(c);
  std::size_t n = c.size();
  Sampler sampler(seed);
  for (int k = 1; k < static_cast<int>(n); ++k) {
    IntegrabilityCheck chk;
    chk.k = k;
    std::vector<DiffForm> forms;
    for (auto& e : entries)
      if (e.k == k) forms.push_back(DiffForm::basis(e.s, c.presentation().one()));
    for (std::size_t r = 0; r < samples; ++r) {
      DiffForm w(k);
      for (auto& e : entries)
        if (e.k == k) w.add(e.s, sampler.poly(c.presentation(), D, 3, sample_height(0)));
      forms.push_back(std::move(w));
    }
    for (auto& w : forms) {
      ++chk.samples;
      bool a = integrability_holds(c, entries, w, false), b = integrability_holds(c, entries, w, true);
      chk.first_pass = chk.first_pass && a;
      chk.second_pass = chk.second_pass && b;
      if ((!a || !b) && !chk.counterexample) chk.counterexample = c.format(w);
    }
    rep.pass = rep.pass && chk.first_pass && chk.second_pass;
    rep.levels.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace dsmooth
