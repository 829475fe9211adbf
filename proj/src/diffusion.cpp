#include "dsmooth/diffusion.hpp"

#include <stdexcept>

#include "dsmooth/error.hpp"
#include "dsmooth/rewriting.hpp"

namespace dsmooth {

std::string to_string(DiffusionType t) { return t == DiffusionType::type1 ? "TYPE1" : "TYPE2"; }
std::string to_string(CommutationSide s) { return s == CommutationSide::right ? "right" : "left"; }
std::string to_string(IdentityStatus s) { return s == IdentityStatus::pass ? "PASS" : "DISCREPANT"; }

std::string to_string(DerivationStatus s) {
  switch (s) {
    case DerivationStatus::zero_constants: return "ZERO_CONSTANTS";
    case DerivationStatus::hypothesis_not_met: return "HYPOTHESIS_NOT_MET";
    case DerivationStatus::nonzero_constants: return "NONZERO_CONSTANTS";
  }
  return "?";
}

DiffusionPresentation::DiffusionPresentation(Field field, std::size_t n, DiffusionType type)
    : field_(field), n_(n), type_(type), lambda_(n * n, field.from_int(1)), x_(n, field.from_int(0)) {}

void DiffusionPresentation::set_lambda(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= n_ || j >= n_ || i == j) throw IndexOutOfRange("lambda index out of range");
  Scalar c = field_.coerce(v);
  if (i < j && c.is_zero())
    throw ZeroLambda("lambda_" + std::to_string(i + 1) + std::to_string(j + 1) + " must be nonzero");
  lambda_[i * n_ + j] = c;
}

void DiffusionPresentation::set_x(std::size_t i, const Scalar& v) {
  if (type_ != DiffusionType::type1) throw std::invalid_argument("type 2 x's are generators");
  if (i >= n_) throw IndexOutOfRange("x index out of range");
  x_[i] = field_.coerce(v);
}

const Scalar& DiffusionPresentation::lambda(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || i == j) throw IndexOutOfRange("lambda index out of range");
  return lambda_[i * n_ + j];
}

const Scalar& DiffusionPresentation::x(std::size_t i) const {
  if (i >= n_) throw IndexOutOfRange("x index out of range");
  return x_[i];
}

Presentation encode_presentation(const DiffusionPresentation& dp) {
  std::size_t n = dp.size();
  bool two = dp.type() == DiffusionType::type2;
  std::size_t m = two ? 2 * n : n;
  std::vector<std::string> names = default_names(n, "D");
  if (two)
    for (auto& s : default_names(n, "x")) names.push_back(s);
  const Field& f = dp.field();
  Presentation p(f, m, Ordering::descending, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar& lij = dp.lambda(i, j);
      if (lij.is_zero()) throw ZeroLambda("lambda_ij must be nonzero");
      Scalar inv = lij.inverse();
      NcPoly tail;
      if (two) {
        Monomial a(m), b(m);
        a[n + j] = 1, a[i] = 1;
        b[n + i] = 1, b[j] = 1;
        tail.add_term(a, inv);
        tail.add_term(b, -inv);
      } else {
        std::vector<Scalar> lin(m, f.from_int(0));
        lin[i] = dp.x(j) * inv;
        lin[j] = -dp.x(i) * inv;
        tail = NcPoly::linear(lin, f.from_int(0));
      }
      p.set_relation(i, j, dp.lambda(j, i) * inv, coerce(tail, f));
    }
  if (two)
    for (std::size_t g = 0; g < n; ++g) p.set_central(n + g);
  return p;
}

Scalar P(unsigned k, unsigned n, const Scalar& lij, const Scalar& lji) {
  if (k < 1 || k > n) throw IndexOutOfRange("P needs 1 <= k <= n");
  Scalar out(0);
  for (unsigned t = 1; t <= k; ++t) out += binomial(n - k + t - 1, n - k) * lji.pow(t - 1) * lij.pow(k - t);
  return out;
}

Scalar Q(unsigned k, unsigned n, const Scalar& lji) {
  if (k < 1 || k > n) throw IndexOutOfRange("Q needs 1 <= k <= n");
  return binomial(n, k - 1) * lji.pow(k - 1);
}

namespace {

void record(IdentityCheck& c, bool ok, const std::string& where) {
  ++c.instances;
  if (ok) return;
  ++c.failures;
  if (!c.first_failure) c.first_failure = where;
}

IdentityReport finish(std::vector<IdentityCheck> checks) {
  IdentityReport r;
  r.checks = std::move(checks);
  for (auto& c : r.checks) r.pass = r.pass && c.pass();
  return r;
}

}  // namespace

IdentityReport verify_pq_recurrences(unsigned n_max, std::size_t samples, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::vector<IdentityCheck> c(5);
  c[0].name = "P_k^{n+1} = P_{k-1}^n l_ij + Q_k^n";
  c[1].name = "P_{n+1}^{n+1} = P_n^n l_ij + l_ji^n";
  c[2].name = "Q_k^{n+1} = Q_{k-1}^n l_ji + Q_k^n";
  c[3].name = "Q_{n+1}^{n+1} = Q_n^n l_ji + l_ji^n";
  c[4].name = "P_1^n = Q_1^n = 1";
  Sampler s(seed);
  Field f = Field::rationals();
  for (std::size_t smp = 0; smp < samples; ++smp) {
    Scalar lij = s.scalar(f, sample_height(smp), true), lji = s.scalar(f, sample_height(smp), false);
    std::string tag = "l_ij=" + lij.to_string() + ", l_ji=" + lji.to_string();
    for (unsigned n = 1; n <= n_max; ++n) {
      std::string at = tag + ", n=" + std::to_string(n);
      record(c[4], P(1, n, lij, lji).is_one() && Q(1, n, lji).is_one(), at);
      if (n + 1 > n_max) continue;
      for (unsigned k = 2; k <= n; ++k) {
        std::string atk = at + ", k=" + std::to_string(k);
        record(c[0], P(k, n + 1, lij, lji) == P(k - 1, n, lij, lji) * lij + Q(k, n, lji), atk);
        record(c[2], Q(k, n + 1, lji) == Q(k - 1, n, lji) * lji + Q(k, n, lji), atk);
      }
      record(c[1], P(n + 1, n + 1, lij, lji) == P(n, n, lij, lji) * lij + lji.pow(n), at);
      record(c[3], Q(n + 1, n + 1, lji) == Q(n, n, lji) * lji + lji.pow(n), at);
    }
  }
  return finish(std::move(c));
}

CommutationInstance commutation_instance(CommutationSide side, DiffusionType type, unsigned n,
                                         const Scalar& lij, const Scalar& lji, const Scalar& xi,
                                         const Scalar& xj, const Field& field) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  DiffusionPresentation dp(field, 2, type);
  dp.set_lambda(0, 1, lij);
  dp.set_lambda(1, 0, lji);
  if (type == DiffusionType::type1) {
    dp.set_x(0, xi);
    dp.set_x(1, xj);
  }
  CommutationInstance out{encode_presentation(dp), {}, {}, {}};
  const Presentation& pres = out.pres;
  Rewriter rw(pres);
  Scalar a = field.coerce(lij), b = field.coerce(lji);
  NcPoly Di = pres.gen(0), Dj = pres.gen(1);
  NcPoly Xi = type == DiffusionType::type1 ? pres.one() * field.coerce(xi) : pres.gen(2);
  NcPoly Xj = type == DiffusionType::type1 ? pres.one() * field.coerce(xj) : pres.gen(3);
  auto pw = [&](const NcPoly& p, unsigned e) { return e == 0 ? pres.one() : rw.power(p, e); };
  auto mul = [&](std::initializer_list<NcPoly> fs) {
    NcPoly acc = pres.one();
    for (const auto& g : fs) acc = rw.multiply(acc, g);
    return acc;
  };
  auto sign = [&](unsigned e) { return field.from_int(e % 2 ? -1 : 1); };
  if (side == CommutationSide::right) {
    out.lhs = a.pow(n) * mul({pw(Di, n), Dj});
    out.rhs = b.pow(n) * mul({Dj, pw(Di, n)});
    for (unsigned k = 1; k <= n; ++k) {
      out.rhs += sign(k + n) * P(k, n, a, b) * mul({pw(Xi, n - k), Xj, pw(Di, k)});
      out.rhs += sign(n + k - 1) * Q(k, n, b) * mul({pw(Xi, n - k + 1), Dj, pw(Di, k - 1)});
    }
  } else {
    out.lhs = a.pow(n) * mul({Di, pw(Dj, n)});
    out.rhs = b.pow(n) * mul({pw(Dj, n), Di});
    for (unsigned k = 1; k <= n; ++k) {
      out.rhs += Q(k, n, b) * mul({pw(Xj, n - k + 1), Dj, pw(Di, k - 1)});
      out.rhs -= P(k, n, a, b) * mul({pw(Xj, n - k), Xi, pw(Di, k)});
    }
  }
  out.residual = out.lhs - out.rhs;
  return out;
}

CommutationReport verify_commutation(CommutationSide side, DiffusionType type, unsigned n_max,
                                     std::size_t samples, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CommutationReport r;
  r.side = side;
  r.type = type;
  Sampler s(seed);
  Field f = Field::rationals();
  for (unsigned n = 1; n <= n_max; ++n) {
    CommutationLevel lv;
    lv.n = n;
    for (std::size_t smp = 0; smp < samples; ++smp) {
      std::int64_t h = sample_height(smp);
      Scalar lij = s.scalar(f, h, true), lji = s.scalar(f, h, false);
      Scalar xi = s.scalar(f, h, false), xj = s.scalar(f, h, false);
      CommutationInstance inst = commutation_instance(side, type, n, lij, lji, xi, xj, f);
      ++lv.samples;
      if (inst.residual.is_zero()) continue;
      ++lv.failures;
      if (!r.min_failing_n) {
        r.min_failing_n = n;
        std::string p = "l_ij=" + lij.to_string() + ", l_ji=" + lji.to_string();
        if (type == DiffusionType::type1) p += ", x_i=" + xi.to_string() + ", x_j=" + xj.to_string();
        r.counterexample = p;
        r.residual = inst.pres.format(inst.residual);
      }
    }
    r.levels.push_back(lv);
  }
  r.status = r.min_failing_n ? IdentityStatus::discrepant : IdentityStatus::pass;
  return r;
}

const std::vector<std::string>& diffusion_labels() {
  static const std::vector<std::string> l{"A_I", "A_II", "B_I", "B_II", "B_III", "B_IV", "C_I", "C_II", "D"};
  return l;
}

std::set<std::string> classify_diffusion_3(const DiffusionPresentation& dp) {
  if (dp.size() != 3) throw MismatchedArity("classify_diffusion_3 needs three generators");
  constexpr std::size_t i = 0, j = 1, k = 2;
  auto l = [&](std::size_t a, std::size_t b) { return dp.lambda(a, b); };
  auto nz = [](const Scalar& v) { return !v.is_zero(); };
  const Scalar &xi = dp.x(i), &xj = dp.x(j), &xk = dp.x(k);
  std::set<std::string> out;

  Scalar L = l(i, j);
  if (nz(L) && l(j, i) == L && l(i, k) == L && l(k, i) == L && l(j, k) == L && l(k, j) == L && nz(xi) &&
      nz(xj) && nz(xk))
    out.insert("A_I");

  Scalar gi = l(i, j) + l(j, k) - l(i, k), gj = l(j, k) - l(i, k), gk = -l(i, k);
  if (l(i, j) == gi - gj && l(i, k) == gi - gk && l(j, k) == gj - gk && nz(l(i, j)) && nz(l(i, k)) &&
      nz(l(j, k)) && l(j, i).is_zero() && l(k, i).is_zero() && l(k, j).is_zero() && nz(xi) && nz(xj) && nz(xk))
    out.insert("A_II");

  Scalar Lam = l(i, j) - l(j, i);
  if (l(i, j) == l(j, k) && nz(l(i, j)) && l(j, i) == l(k, j) && l(i, k) - l(k, i) == Lam &&
      l(j, k) - l(k, j) == Lam && nz(xi) && nz(xk) && xj.is_zero())
    out.insert("B_I");

  if (l(k, j).is_zero() && l(j, i).is_zero() && nz(l(i, j)) && nz(l(i, k)) && nz(l(j, k)) && xj.is_zero())
    out.insert("B_II");

  if (l(k, i).is_zero() && l(k, j).is_zero() && nz(l(i, j)) && l(i, j) - l(j, i) == l(i, k) - l(j, k) &&
      nz(l(i, k)) && l(i, k) != l(i, j) - l(j, i) && xk.is_zero())
    out.insert("B_III");

  if (l(j, i).is_zero() && l(k, i).is_zero() && xi.is_zero() && l(i, k) - l(i, j) == l(j, k) - l(k, j) &&
      nz(l(i, k)) && l(i, k) != l(i, k) - l(i, j))
    out.insert("B_IV");

  if (l(i, j) - l(j, i) == l(i, k) - l(k, i) && nz(l(i, j)) && nz(l(i, k)) && nz(l(j, k)) && xj.is_zero() &&
      xk.is_zero())
    out.insert("C_I");

  if (xj.is_zero() && xk.is_zero() && l(k, j).is_zero() && nz(l(i, j)) && nz(l(j, k)) && nz(l(i, k)))
    out.insert("C_II");

  if (xi.is_zero() && xj.is_zero() && xk.is_zero() && nz(l(i, j)) && nz(l(i, k)) && nz(l(j, k)))
    out.insert("D");
  return out;
}

std::string crosswalk_to_3d(const std::string& label) {
  if (label == "C_I") return "2e";
  if (label == "D") return "1";
  if (label == "A_I" || label == "B_I") return "UNRESOLVED";
  for (auto& l : diffusion_labels())
    if (l == label) return "NOT_SKEW";
  throw std::invalid_argument("unknown diffusion class " + label);
}

DiffusionPresentation sample_diffusion_class(const std::string& label, Sampler& s, std::int64_t height,
                                             const Field& field) {
  constexpr std::size_t i = 0, j = 1, k = 2;
  auto nz = [&] { return s.scalar(field, height, true); };
  auto any = [&] { return s.scalar(field, height, false); };
  Scalar zero = field.from_int(0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // lam[a][b] = lambda_ab; x = (x_i, x_j, x_k)
    Scalar lam[3][3];
    std::array<Scalar, 3> x{any(), any(), any()};
    for (auto& row : lam)
      for (auto& v : row) v = any();
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) lam[a][b] = nz();
    if (label == "A_I") {
      Scalar L = nz();
      for (auto& row : lam)
        for (auto& v : row) v = L;
      x = {nz(), nz(), nz()};
    } else if (label == "A_II") {
      lam[i][k] = lam[i][j] + lam[j][k];
      lam[j][i] = lam[k][i] = lam[k][j] = zero;
      x = {nz(), nz(), nz()};
    } else if (label == "B_I") {
      lam[j][k] = lam[i][j];
      lam[k][j] = lam[j][i];
      lam[k][i] = lam[i][k] - (lam[i][j] - lam[j][i]);
      x = {nz(), zero, nz()};
    } else if (label == "B_II") {
      lam[k][j] = lam[j][i] = zero;
      x[j] = zero;
    } else if (label == "B_III") {
      lam[k][i] = lam[k][j] = zero;
      lam[j][k] = lam[i][k] - (lam[i][j] - lam[j][i]);
      x[k] = zero;
    } else if (label == "B_IV") {
      lam[j][i] = lam[k][i] = zero;
      lam[j][k] = lam[i][k] - lam[i][j] + lam[k][j];
      x[i] = zero;
    } else if (label == "C_I") {
      lam[k][i] = lam[i][k] - lam[i][j] + lam[j][i];
      x[j] = x[k] = zero;
    } else if (label == "C_II") {
      lam[k][j] = zero;
      x[j] = x[k] = zero;
    } else if (label == "D") {
      x = {zero, zero, zero};
    } else {
      throw std::invalid_argument("unknown diffusion class " + label);
    }
    if (lam[i][j].is_zero() || lam[i][k].is_zero() || lam[j][k].is_zero()) continue;
    DiffusionPresentation dp(field, 3);
    for (std::size_t a = 0; a < 3; ++a) {
      dp.set_x(a, x[a]);
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) dp.set_lambda(a, b, lam[a][b]);
    }
    if (classify_diffusion_3(dp).count(label)) return dp;
  }
  throw std::runtime_error("could not sample class " + label);
}

AutCoefficients AutCoefficients::identity() {
  AutCoefficients c;
  for (auto& row : c.coeff)
    for (auto& v : row) v = Scalar(0);
  for (std::size_t g = 0; g < 4; ++g) c.coeff[g][g] = Scalar(1);
  return c;
}

AutCoeffMatrices build_aut_matrices(const AutCoefficients& c, const Scalar& lambda12, const Scalar& lambda21) {
  AutCoeffMatrices m;
  m.lambda12 = lambda12;
  m.lambda21 = lambda21;
  m.A = Matrix(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t g = 0; g < 4; ++g) m.A(r, g) = c.coeff[g][r];
  for (std::size_t g = 0; g < 4; ++g) m.constants.push_back(c.coeff[g][4]);
  auto col = [&](std::size_t g) { return m.A.column(g); };
  std::vector<Scalar> A = col(0), B = col(1);
  m.S = col(2);
  m.H = col(3);
  m.L1 = {Scalar(0), -lambda21, Scalar(0), Scalar(1)};
  m.L2 = {lambda12, Scalar(0), Scalar(1), Scalar(0)};
  Scalar dl = lambda12 - lambda21;
  m.Gamma = Matrix(4, 4);
  m.Theta = Matrix(4, 4);
  m.L = Matrix(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    m.Gamma(r, 0) = dl * B[r] - m.H[r];
    m.Gamma(r, 1) = dl * A[r] + m.S[r];
    m.Gamma(r, 2) = B[r];
    m.Gamma(r, 3) = -A[r];
    m.Theta(r, 0) = lambda12 * B[r] + m.L1[r];
    m.Theta(r, 1) = m.L2[r] - lambda21 * A[r];
    m.Theta(r, 2) = -A[r];
    m.Theta(r, 3) = B[r];
    m.L(r, 0) = m.L1[r];
    m.L(r, 1) = m.L2[r];
    m.L(r, 2) = A[r];
    m.L(r, 3) = B[r];
  }
  return m;
}

namespace {

// D1, D2, x1, x2 as the type-2 algebra on two D's.
Presentation two_by_two(const AutCoeffMatrices& m) {
  DiffusionPresentation dp(Field::rationals(), 2, DiffusionType::type2);
  dp.set_lambda(0, 1, m.lambda12);
  dp.set_lambda(1, 0, m.lambda21);
  return encode_presentation(dp);
}

NcPoly image(const Presentation& p, const AutCoeffMatrices& m, std::size_t g, const Scalar& constant) {
  std::vector<Scalar> lin(4);
  for (std::size_t r = 0; r < 4; ++r) lin[r] = m.A(r, g);
  return coerce(NcPoly::linear(lin, constant), p.field());
}

std::vector<Scalar> degree_one(const NcPoly& p) {
  std::vector<Scalar> out(4, Scalar(0));
  for (std::size_t g = 0; g < 4; ++g) {
    Monomial mono(4);
    mono[g] = 1;
    out[g] = p.coefficient(mono);
  }
  return out;
}

}  // namespace

Matrix sigma_system_from_engine(const AutCoeffMatrices& m) {
  Presentation p = two_by_two(m);
  Rewriter rw(p);
  Matrix out(4, 4);
  for (std::size_t u = 0; u < 4; ++u) {
    std::array<NcPoly, 4> s;
    for (std::size_t g = 0; g < 4; ++g) s[g] = image(p, m, g, Scalar(g == u ? 1 : 0));
    NcPoly rel = m.lambda12 * rw.multiply(s[0], s[1]) - m.lambda21 * rw.multiply(s[1], s[0]) -
                 rw.multiply(s[3], s[0]) + rw.multiply(s[2], s[1]);
    auto row = degree_one(rel);
    for (std::size_t r = 0; r < 4; ++r) out(r, u) = row[r];
  }
  return out;
}

Matrix derivation_system_from_engine(const AutCoeffMatrices& m) {
  Presentation p = two_by_two(m);
  Rewriter rw(p);
  std::array<NcPoly, 4> s, gen;
  for (std::size_t g = 0; g < 4; ++g) {
    s[g] = image(p, m, g, Scalar(0));
    gen[g] = p.gen(g);
  }
  // unknown order (a_k, b_k, d_k, c_k) maps to d(D1), d(D2), d(x2), d(x1)
  const std::array<std::size_t, 4> target{0, 1, 3, 2};
  Matrix out(4, 4);
  for (std::size_t u = 0; u < 4; ++u) {
    std::array<NcPoly, 4> d;
    for (std::size_t g = 0; g < 4; ++g) d[g] = p.one() * Scalar(target[u] == g ? 1 : 0);
    auto leib = [&](std::size_t a, std::size_t b) { return rw.multiply(d[a], s[b]) + rw.multiply(gen[a], d[b]); };
    NcPoly rel = m.lambda12 * leib(0, 1) - m.lambda21 * leib(1, 0) - leib(3, 0) + leib(2, 1);
    auto row = degree_one(rel);
    for (std::size_t r = 0; r < 4; ++r) out(r, u) = row[r];
  }
  return out;
}

AutCoefficients sample_aut_coefficients(Sampler& s, const Scalar& lambda12, const Scalar& lambda21,
                                        bool span_hypothesis, std::int64_t height) {
  Field f = Field::rationals();
  for (;;) {
    AutCoefficients c;
    for (auto& row : c.coeff) {
      for (std::size_t h = 0; h < 4; ++h) row[h] = s.scalar(f, height, false);
      row[4] = Scalar(0);
    }
    if (span_hypothesis) {
      Scalar p = s.scalar(f, height, false), q = s.scalar(f, height, false);
      Scalar r = s.scalar(f, height, false), t = s.scalar(f, height, false);
      if ((p * t - q * r).is_zero()) continue;
      std::array<Scalar, 4> L1{Scalar(0), -lambda21, Scalar(0), Scalar(1)};
      std::array<Scalar, 4> L2{lambda12, Scalar(0), Scalar(1), Scalar(0)};
      for (std::size_t h = 0; h < 4; ++h) {
        c.coeff[2][h] = p * L1[h] + q * L2[h];
        c.coeff[3][h] = r * L1[h] + t * L2[h];
      }
    }
    if (!determinant_cofactor(build_aut_matrices(c, lambda12, lambda21).A).is_zero()) return c;
  }
}

IdentityReport verify_determinant_identities(std::size_t samples, std::uint64_t seed) {
  std::vector<IdentityCheck> c(3);
  c[0].name = "det(Gamma) = det(A)";
  c[1].name = "det(Theta) = -det(L)";
  c[2].name = "engine Gamma = Gamma";
  Sampler s(seed);
  Field f = Field::rationals();
  for (std::size_t smp = 0; smp < samples; ++smp) {
    std::int64_t h = sample_height(smp);
    Scalar l12 = s.scalar(f, h, true), l21 = s.scalar(f, h, false);
    AutCoefficients a;
    for (auto& row : a.coeff)
      for (auto& v : row) v = s.scalar(f, h, false);
    AutCoeffMatrices m = build_aut_matrices(a, l12, l21);
    std::string at = "sample " + std::to_string(smp);
    record(c[0], determinant_cofactor(m.Gamma) == determinant_cofactor(m.A), at);
    record(c[1], determinant_cofactor(m.Theta) == -determinant_cofactor(m.L), at);
    record(c[2], sigma_system_from_engine(m) == m.Gamma, at);
  }
  return finish(std::move(c));
}

SigmaConstantsResult solve_sigma_constant_terms(const AutCoeffMatrices& m) {
  if (determinant_cofactor(m.A).is_zero()) throw SingularAutMatrix("det(A) = 0");
  SigmaConstantsResult r;
  r.solution.assign(4, Scalar(0));
  auto ker = nullspace(m.Gamma);
  if (!ker.empty()) {
    r.solution = ker.front();
    r.zero = false;
  }
  r.residual = mat_vec(m.Gamma, r.solution);
  return r;
}

DerivationReport check_derivation_constant_terms(const AutCoeffMatrices& m) {
  DerivationReport r;
  r.det_theta = determinant_cofactor(m.Theta);
  r.engine_rows_match = derivation_system_from_engine(m) == m.Theta;
  Matrix block = Matrix::from_columns({m.S, m.H, m.L1, m.L2});
  Matrix sh = Matrix::from_columns({m.S, m.H});
  Matrix ll = Matrix::from_columns({m.L1, m.L2});
  std::size_t rl = rank(ll);
  r.hypothesis = rank(block) == rl && rank(sh) == rl;
  if (!r.hypothesis) return r;
  r.kernel = nullspace(m.Theta);
  r.status = r.kernel.empty() ? DerivationStatus::zero_constants : DerivationStatus::nonzero_constants;
  return r;
}

}  // namespace dsmooth
