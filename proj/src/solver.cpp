#include "dsmooth/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "dsmooth/error.hpp"
#include "dsmooth/linalg.hpp"

namespace dsmooth {
namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

struct Coeffs {
  const Presentation& p;
  Scalar a(std::size_t i, std::size_t j) const { return p.quad(i, j); }
  Scalar b(std::size_t i, std::size_t j) const { return p.b(i, j); }
  Scalar c(std::size_t i, std::size_t j) const { return p.c(i, j); }
  Scalar e(std::size_t i, std::size_t j) const { return p.e(i, j); }
};

void push(std::vector<ConstantCheck>& out, const char* fam, int member, std::size_t k,
          std::size_t j, std::size_t t, const Scalar& r) {
  out.push_back({fam, member, k, j, t, r.is_zero(), r});
}

int family_rank(const std::string& f) {
  static const char* order[] = {"eq3", "eq4", "eq5", "comm1", "comm2", "comm3"};
  for (int i = 0; i < 6; ++i)
    if (f == order[i]) return i;
  return 6;
}

}  // namespace

std::string ConstantCheck::id() const {
  return family + "." + std::to_string(member) + "[k=" + idx(k) + ",j=" + idx(j) + ",t=" + idx(t) + "]";
}

std::string LinearConstraint::id() const { return family + "[k=" + idx(k) + ",j=" + idx(j) + "]"; }

std::vector<ConstantCheck> assemble_constant_checks(const Presentation& pres) {
  if (!pres.diagonal_tails()) throw NonDiagonalTail("constant checks need tails supported on {1, x_i, x_j}");
  Coeffs q{pres};
  std::size_t n = pres.size();
  std::vector<ConstantCheck> out;
  Scalar one(1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = j + 1; t < n; ++t) {
        if (j == k || t == k) continue;
        if (t < k) {
          push(out, "eq3", 1, k, j, t, (q.a(j, t) - one) * q.c(t, k) + (q.a(t, k) - one) * q.b(j, t));
          push(out, "eq3", 2, k, j, t, (q.a(j, t) - one) * q.c(j, k) + (q.a(j, k) - one) * q.c(j, t));
          push(out, "eq3", 3, k, j, t,
               (q.a(j, k) * q.a(t, k) - one) * q.e(j, t) + q.b(j, t) * q.c(j, k) + q.c(j, t) * q.c(t, k) +
                   (one - q.a(j, t)) * q.c(t, k) * q.c(j, k));
        } else if (j < k) {
          push(out, "eq4", 1, k, j, t, (q.a(j, t) - one) * q.c(j, k) + (q.a(j, k) - one) * q.c(j, t));
          push(out, "eq4", 2, k, j, t, (q.a(j, t) - one) * q.b(k, t) + q.b(j, t) * (one - q.a(k, t)));
          push(out, "eq4", 3, k, j, t,
               (q.a(j, k) - q.a(k, t)) * q.e(j, t) + (q.c(j, t) + q.c(j, k)) * q.b(k, t) +
                   (q.b(j, t) * q.a(k, t) - q.a(j, t) * q.b(k, t)) * q.c(j, k));
        } else {
          push(out, "eq5", 1, k, j, t, (q.a(j, t) - one) * q.b(k, t) + (one - q.a(k, t)) * q.b(j, t));
          push(out, "eq5", 2, k, j, t, q.b(k, j) * (q.a(j, t) - one) + (one - q.a(k, j)) * q.c(j, t));
          push(out, "eq5", 3, k, j, t,
               (one - q.a(k, j) * q.a(k, t)) * q.e(j, t) + q.b(k, t) * (q.b(k, j) + q.a(k, j) * q.c(j, t)) +
                   q.b(k, j) * (q.a(k, t) * q.b(j, t) - q.a(j, t) * q.b(k, t)));
        }
      }
    }
    for (std::size_t j = k + 1; j < n; ++j)
      for (std::size_t t = j + 1; t < n; ++t)
        push(out, "comm1", 1, k, j, t, q.c(k, j) * (q.a(k, t) - one) - q.c(k, t) * (q.a(k, j) - one));
    for (std::size_t j = k + 1; j < n; ++j)
      for (std::size_t t = 0; t < k; ++t)
        push(out, "comm2", 1, k, j, t, q.c(k, j) * (one - q.a(t, k)) - q.b(t, k) * (q.a(k, j) - one));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = j + 1; t < k; ++t)
        push(out, "comm3", 1, k, j, t, q.b(j, k) * (one - q.a(t, k)) - q.b(t, k) * (one - q.a(j, k)));
  }
  std::stable_sort(out.begin(), out.end(), [](const ConstantCheck& x, const ConstantCheck& y) {
    return std::make_tuple(family_rank(x.family), x.k, x.j, x.t, x.member) <
           std::make_tuple(family_rank(y.family), y.k, y.j, y.t, y.member);
  });
  return out;
}

std::vector<LinearConstraint> diagonal_constraints(const Presentation& pres, std::size_t k,
                                                   bool with_comm4) {
  if (!pres.diagonal_tails()) throw NonDiagonalTail("diagonal system needs tails supported on {1, x_i, x_j}");
  if (k >= pres.size()) throw IndexOutOfRange("generator index out of range");
  Coeffs q{pres};
  Scalar one(1);
  std::vector<LinearConstraint> out;
  for (std::size_t j = 0; j < pres.size(); ++j) {
    if (j < k) {
      Scalar a = q.a(j, k), b = q.b(j, k), c = q.c(j, k), e = q.e(j, k);
      out.push_back({"eq1a", k, j, b, a - one, -b});
      out.push_back({"eq1b", k, j, a * e, a * c, -e - b * c});
      out.push_back({"comm5", k, j, -b, one - a, b});
    } else if (j > k) {
      Scalar a = q.a(k, j), b = q.b(k, j), c = q.c(k, j), e = q.e(k, j);
      out.push_back({"eq2a", k, j, c, a - one, -c});
      out.push_back({"eq2b", k, j, e, b, -e * a + c * b});
      if (with_comm4) out.push_back({"comm4", k, j, c, -(a - one), -c});
    }
  }
  return out;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique: return "UNIQUE";
    case SolveStatus::parametric: return "PARAMETRIC";
    case SolveStatus::empty: return "EMPTY";
  }
  return "?";
}

namespace {

struct AffineSet {
  std::optional<std::array<Scalar, 2>> particular;
  std::vector<std::array<Scalar, 2>> homogeneous;
};

AffineSet solve_system(const std::vector<LinearConstraint>& cs) {
  Matrix m(cs.size(), 2);
  std::vector<Scalar> rhs;
  for (std::size_t r = 0; r < cs.size(); ++r) {
    m(r, 0) = cs[r].cA;
    m(r, 1) = cs[r].cB;
    rhs.push_back(-cs[r].c0);
  }
  AffineSet s;
  if (cs.empty()) {
    s.particular = std::array<Scalar, 2>{Scalar(0), Scalar(0)};
    s.homogeneous = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    return s;
  }
  auto x = solve(m, rhs);
  if (!x) return s;
  s.particular = std::array<Scalar, 2>{(*x)[0], (*x)[1]};
  for (auto& v : nullspace(m)) s.homogeneous.push_back({v[0], v[1]});
  return s;
}

bool admits_nonzero_a(const AffineSet& s) {
  if (!s.particular) return false;
  if (!(*s.particular)[0].is_zero()) return true;
  for (auto& h : s.homogeneous)
    if (!h[0].is_zero()) return true;
  return false;
}

bool satisfies(const std::vector<LinearConstraint>& cs, const Scalar& A, const Scalar& B) {
  for (auto& c : cs)
    if (!c.evaluate(A, B).is_zero()) return false;
  return true;
}

}  // namespace

NuSystemSolution solve_diagonal_unknowns(const Presentation& pres, std::size_t k) {
  NuSystemSolution sol;
  sol.k = k;
  sol.constraints = diagonal_constraints(pres, k, true);
  AffineSet s = solve_system(sol.constraints);
  sol.particular = s.particular;
  sol.homogeneous = s.homogeneous;
  if (!admits_nonzero_a(s)) {
    sol.status = SolveStatus::empty;
    if (!s.particular)
      sol.reasons.push_back("inconsistent system for generator " + idx(k));
    else
      sol.reasons.push_back("system for generator " + idx(k) + " forces a_kk = 0");
    AffineSet relaxed = solve_system(diagonal_constraints(pres, k, false));
    if (admits_nonzero_a(relaxed)) {
      sol.comm4_conflict = true;
      for (auto& c : sol.constraints)
        if (c.family == "comm4" && !c.cA.is_zero())
          sol.reasons.push_back("eq2a+comm4[k=" + idx(k) + ",j=" + idx(c.j) + "]");
      if (sol.reasons.size() == 1) sol.reasons.push_back("eq2a+comm4[k=" + idx(k) + "]");
    }
    return sol;
  }
  const Field& f = pres.field();
  Scalar one = f.from_int(1), zero = f.from_int(0);
  sol.status = s.homogeneous.empty() ? SolveStatus::unique : SolveStatus::parametric;
  auto p = *s.particular;
  if (satisfies(sol.constraints, one, zero)) {
    sol.witness = std::array<Scalar, 2>{one, zero};
  } else {
    auto dir = std::find_if(s.homogeneous.begin(), s.homogeneous.end(),
                            [](const auto& h) { return !h[0].is_zero(); });
    if (dir != s.homogeneous.end()) {
      Scalar t = (one - p[0]) / (*dir)[0];
      sol.witness = std::array<Scalar, 2>{one, p[1] + t * (*dir)[1]};
    } else {
      sol.witness = p;
    }
  }
  return sol;
}

std::optional<std::array<std::size_t, 3>> obstruction_check(const Presentation& pres, long gkdim) {
  std::size_t n = pres.size();
  if (gkdim < 0 || static_cast<std::size_t>(gkdim) != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && !pres.linear(i, j, k).is_zero())
          return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

std::vector<AffineEndo> build_nu_family(const Presentation& pres,
                                        const std::vector<std::array<Scalar, 2>>& diag) {
  std::size_t n = pres.size();
  if (diag.size() != n) throw MismatchedArity("one diagonal pair per generator is required");
  std::vector<AffineEndo> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> s(n), t(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j > k) {
        Scalar inv = pres.quad(k, j).inverse();
        s[j] = inv;
        t[j] = -inv * pres.b(k, j);
      } else if (j < k) {
        s[j] = pres.quad(j, k);
        t[j] = pres.c(j, k);
      } else {
        s[j] = diag[k][0];
        t[j] = -diag[k][1];
      }
    }
    out.emplace_back(s, t);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::smooth_sufficient: return "SMOOTH_SUFFICIENT";
    case Verdict::not_smooth: return "NOT_SMOOTH";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

SmoothnessVerdict decide(const Presentation& pres, long gkdim) {
  if (pres.ordering() != Ordering::ascending)
    throw std::invalid_argument("decide expects the ascending convention");
  SmoothnessVerdict v;
  v.gkdim = gkdim;
  std::size_t n = pres.size();
  if (pres.tails_linear()) {
    v.obstruction = obstruction_check(pres, gkdim);
    if (v.obstruction) {
      auto [i, j, k] = *v.obstruction;
      v.verdict = Verdict::not_smooth;
      v.reasons.push_back("obstruction[i=" + idx(i) + ",j=" + idx(j) + ",k=" + idx(k) + "]");
      return v;
    }
  }
  if (!pres.tails_linear()) {
    v.reasons.push_back("tail of degree above one");
    return v;
  }
  if (!pres.diagonal_tails()) {
    v.reasons.push_back("off-diagonal tail and gkdim " + std::to_string(gkdim) + " != " + std::to_string(n));
    return v;
  }
  v.pbw = check_pbw_overlaps(pres);
  if (!v.pbw->pass) {
    for (auto& t : v.pbw->triples)
      if (!t.pass) v.reasons.push_back("pbw_overlap[" + idx(t.i) + "," + idx(t.j) + "," + idx(t.k) + "]");
    return v;
  }
  v.checks = assemble_constant_checks(pres);
  bool ok = true;
  for (auto& c : v.checks)
    if (!c.holds) {
      ok = false;
      v.reasons.push_back(c.id());
    }
  std::vector<std::array<Scalar, 2>> diag;
  for (std::size_t k = 0; k < n; ++k) {
    v.systems.push_back(solve_diagonal_unknowns(pres, k));
    auto& s = v.systems.back();
    if (s.status == SolveStatus::empty) {
      ok = false;
      v.reasons.insert(v.reasons.end(), s.reasons.begin(), s.reasons.end());
    } else {
      diag.push_back(*s.witness);
    }
  }
  if (!ok) return v;
  auto family = build_nu_family(pres, diag);
  for (std::size_t k = 0; k < n; ++k) {
    auto rep = respects_relations(family[k], pres);
    for (auto& f : rep.failures)
      v.reasons.push_back("witness nu_" + idx(k) + " breaks relation (" + idx(f.i) + "," + idx(f.j) + ")");
    for (std::size_t l = k + 1; l < n; ++l)
      if (!commute(family[k], family[l]))
        v.reasons.push_back("witness nu_" + idx(k) + " and nu_" + idx(l) + " do not commute");
  }
  if (!v.reasons.empty()) return v;
  v.verdict = Verdict::smooth_sufficient;
  v.witness = std::move(family);
  return v;
}

OreVerdict decide_ore_extension(std::size_t n, const std::vector<Scalar>& b,
                                const std::vector<Scalar>& a, const std::vector<Scalar>& c,
                                long gkdim, const Field& field) {
  if (b.size() != n || a.size() != n || c.size() != n)
    throw MismatchedArity("Ore data needs n entries in each of b, a, c");
  for (std::size_t i = 0; i < n; ++i)
    if (field.coerce(b[i]).is_zero()) throw ZeroSlope("sigma slope b_" + idx(i) + " is zero");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + idx(i));
  names.push_back("y");
  Presentation p(field, n + 1, Ordering::ascending, names);
  Scalar zero(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) p.set_linear_relation(i, k, 1, std::vector<Scalar>(n + 1, zero), 0);
    // y x_i = (b_i x_i + a_i) y + c_i x_i, solved for x_i y
    Scalar binv = field.coerce(b[i]).inverse();
    std::vector<Scalar> lin(n + 1, zero);
    lin[i] = -c[i] * binv;
    lin[n] = -a[i] * binv;
    p.set_linear_relation(i, n, binv, lin, 0);
  }
  OreVerdict out{p, decide(p, gkdim)};
  out.first_condition = true;
  for (std::size_t i = 0; i < n; ++i)
    if (field.coerce(a[i]).is_zero() || !field.coerce(c[i]).is_zero()) out.first_condition = false;
  out.second_condition = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!field.coerce(a[i]).is_zero()) out.second_condition = false;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && !field.coerce(c[i] * (b[k] - 1) + c[k] * (b[i] - 1)).is_zero()) out.second_condition = false;
  }
  if (out.first_condition || out.second_condition)
    out.agreement = out.result.verdict == Verdict::smooth_sufficient;
  return out;
}

}  // namespace dsmooth
