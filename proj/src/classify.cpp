#include "dsmooth/classify.hpp"

#include <functional>
#include <stdexcept>
#include <variant>

#include "dsmooth/error.hpp"

namespace dsmooth {
namespace {

using Entry = std::variant<Scalar, std::string>;
using Pattern = std::array<Entry, 4>;

struct Shape {
  std::string label;
  Pattern lambda, mu, nu;
};

Pattern zero() { return {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}; }
Pattern constant(const std::string& name) { return {Scalar(0), Scalar(0), Scalar(0), name}; }
Pattern linear(Scalar x, Scalar y, Scalar z) { return {x, y, z, Scalar(0)}; }

const std::vector<Shape>& shapes() {
  static const std::vector<Shape> s{
      {"1", zero(), zero(), zero()},
      {"2a", linear(0, 0, 1), linear(0, 1, 0), linear(1, 0, 0)},
      {"2b", linear(0, 0, 1), constant("b"), linear(1, 0, 0)},
      {"2c", zero(), linear(0, 1, 0), zero()},
      {"2d", zero(), constant("b"), zero()},
      {"2e", {Scalar(0), Scalar(0), std::string("a"), Scalar(0)}, zero(), linear(1, 0, 0)},
      {"2f", linear(0, 0, 1), zero(), zero()},
      {"3a", zero(), {Scalar(0), Scalar(1), Scalar(0), std::string("b")}, zero()},
      {"3b", zero(), constant("b"), zero()},
      {"4", {std::string("a1"), Scalar(0), Scalar(0), std::string("b1")},
       {Scalar(0), std::string("a2"), Scalar(0), std::string("b2")},
       {Scalar(0), Scalar(0), std::string("a3"), std::string("b3")}},
      {"5a", linear(1, 0, 0), linear(0, 1, 0), linear(0, 0, 1)},
      {"5b", zero(), zero(), linear(0, 0, 1)},
      {"5c", zero(), zero(), constant("b")},
      {"5d", linear(0, -1, 0), linear(1, 1, 0), zero()},
      {"5e", {Scalar(0), Scalar(0), std::string("a"), Scalar(0)}, linear(1, 0, 0), zero()},
  };
  return s;
}

bool regime(char cls, const Scalar& al, const Scalar& be, const Scalar& ga) {
  Scalar one(1);
  switch (cls) {
    case '1': return al != be && be != ga && al != ga;
    case '2': return al == one && ga == one && be != one;
    case '3': return al == ga && al != one;
    case '4': return al == be && be == ga && al != one;
    case '5': return al == one && be == one && ga == one;
  }
  return false;
}

bool match(const Pattern& pat, const Linear3& form, ClassParams& out) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (const auto* s = std::get_if<Scalar>(&pat[i])) {
      if (*s != form[i]) return false;
    } else {
      out[std::get<std::string>(pat[i])] = form[i];
    }
  }
  return true;
}

Linear3 instantiate(const Pattern& pat, const ClassParams& params, const Field& f) {
  Linear3 out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (const auto* s = std::get_if<Scalar>(&pat[i])) {
      out[i] = f.coerce(*s);
    } else {
      auto it = params.find(std::get<std::string>(pat[i]));
      out[i] = it == params.end() ? f.from_int(0) : f.coerce(it->second);
    }
  }
  return out;
}

std::vector<Scalar> lin(const Linear3& l) { return {l[0], l[1], l[2]}; }

}  // namespace

Presentation three_dim(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                       const Linear3& lambda, const Linear3& mu, const Linear3& nu,
                       const Field& field) {
  Presentation p(field, 3, Ordering::ascending, {"x", "y", "z"});
  Scalar be = field.coerce(beta);
  if (be.is_zero()) throw ZeroQuadCoeff("beta must be nonzero");
  Scalar binv = be.inverse();
  p.set_linear_relation(0, 1, gamma, lin(nu), nu[3]);
  // zx - beta xz = mu  <=>  xz - beta^{-1} zx = -beta^{-1} mu
  std::vector<Scalar> m = lin(mu);
  for (auto& s : m) s = -binv * s;
  p.set_linear_relation(0, 2, binv, m, -binv * mu[3]);
  p.set_linear_relation(1, 2, alpha, lin(lambda), lambda[3]);
  return p;
}

Presentation theorem1_presentation(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                   const Scalar& a, const Scalar& b, const Scalar& d,
                                   const Field& field) {
  Scalar z(0);
  return three_dim(alpha, beta, gamma, {z, z, a, z}, {z, z, z, b}, {d, z, z, z}, field);
}

ThreeDimData read_three_dim(const Presentation& pres) {
  if (pres.size() != 3) throw MismatchedArity("three generators expected");
  if (pres.ordering() != Ordering::ascending) throw std::invalid_argument("ascending convention expected");
  if (!pres.tails_linear()) throw std::invalid_argument("linear tails expected");
  auto form = [&](std::size_t i, std::size_t j, const Scalar& s) {
    Linear3 l;
    for (std::size_t g = 0; g < 3; ++g) l[g] = s * pres.linear(i, j, g);
    l[3] = s * pres.e(i, j);
    return l;
  };
  ThreeDimData d;
  d.alpha = pres.quad(1, 2);
  d.gamma = pres.quad(0, 1);
  d.beta = pres.quad(0, 2).inverse();
  d.lambda = form(1, 2, Scalar(1));
  d.nu = form(0, 1, Scalar(1));
  d.mu = form(0, 2, -d.beta);
  return d;
}

const std::vector<std::string>& class_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (auto& s : shapes()) v.push_back(s.label);
    return v;
  }();
  return labels;
}

Presentation make_three_dim(const std::string& label, const ClassParams& params, const Field& field) {
  for (auto& s : shapes()) {
    if (s.label != label) continue;
    auto get = [&](const char* k) {
      auto it = params.find(k);
      return it == params.end() ? field.from_int(1) : field.coerce(it->second);
    };
    Scalar al = get("alpha"), be = get("beta"), ga = get("gamma");
    switch (label[0]) {
      case '2': al = ga = field.from_int(1); break;
      case '3': ga = al; break;
      case '4': be = ga = al; break;
      case '5': al = be = ga = field.from_int(1); break;
    }
    return three_dim(al, be, ga, instantiate(s.lambda, params, field), instantiate(s.mu, params, field),
                     instantiate(s.nu, params, field), field);
  }
  throw std::invalid_argument("unknown class label " + label);
}

Classification classify_3d(const Presentation& pres) {
  ThreeDimData d = read_three_dim(pres);
  std::optional<Classification> first;
  for (auto& s : shapes()) {
    Classification c;
    c.label = s.label;
    if (!match(s.lambda, d.lambda, c.params) || !match(s.mu, d.mu, c.params) || !match(s.nu, d.nu, c.params))
      continue;
    c.params["alpha"] = d.alpha;
    c.params["beta"] = d.beta;
    c.params["gamma"] = d.gamma;
    c.regime_holds = regime(s.label[0], d.alpha, d.beta, d.gamma);
    if (c.regime_holds) return c;
    if (!first) first = c;
  }
  if (first) return *first;
  Classification none;
  none.params = {{"alpha", d.alpha}, {"beta", d.beta}, {"gamma", d.gamma}};
  return none;
}

}  // namespace dsmooth
