#include <gtest/gtest.h>

#include <functional>

#include "dsmooth/classify.hpp"
#include "dsmooth/error.hpp"
#include "dsmooth/sampling.hpp"
#include "dsmooth/solver.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

namespace dsmooth {
namespace {

// Independent assembly of the per-generator system as functions of (A, B) = (a_kk, b_kk),
// transcribed term by term, then solved by hand elimination.
namespace ref {

using Eq = std::function<Scalar(const Scalar&, const Scalar&)>;

std::vector<Eq> equations(const Presentation& p, std::size_t k) {
  std::vector<Eq> out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j < k) {
      Scalar a = p.quad(j, k), b = p.b(j, k), c = p.c(j, k), e = p.e(j, k);
      out.push_back([=](auto& A, auto& B) { return B * (a - 1) + b * (A - 1); });
      out.push_back([=](auto& A, auto& B) { return (A * a - 1) * e + (a * B - b) * c; });
      out.push_back([=](auto& A, auto& B) { return B * (Scalar(1) - a) - b * (A - 1); });
    } else if (j > k) {
      Scalar a = p.quad(k, j), b = p.b(k, j), c = p.c(k, j), e = p.e(k, j);
      out.push_back([=](auto& A, auto& B) { return (A - 1) * c + B * (a - 1); });
      out.push_back([=](auto& A, auto& B) { return e * (A - a) + (B + c) * b; });
      out.push_back([=](auto& A, auto& B) { return c * (A - 1) - B * (a - 1); });
    }
  }
  return out;
}

struct Row {
  Scalar p, q, r;  // p A + q B + r = 0
};

SolveStatus status(const Presentation& pres, std::size_t k) {
  std::vector<Row> rows;
  for (auto& f : equations(pres, k)) {
    Scalar r = f(Scalar(0), Scalar(0));
    Row row{f(Scalar(1), Scalar(0)) - r, f(Scalar(0), Scalar(1)) - r, r};
    if (row.p.is_zero() && row.q.is_zero()) {
      if (!row.r.is_zero()) return SolveStatus::empty;
      continue;
    }
    rows.push_back(row);
  }
  if (rows.empty()) return SolveStatus::parametric;
  const Row& r0 = rows[0];
  const Row* r1 = nullptr;
  for (auto& r : rows)
    if (!(r0.p * r.q - r0.q * r.p).is_zero()) {
      r1 = &r;
      break;
    }
  if (!r1) {
    for (auto& r : rows) {
      // proportional rows need proportional constants
      Scalar s = r0.p.is_zero() ? r.q / r0.q : r.p / r0.p;
      if (r.r != s * r0.r) return SolveStatus::empty;
    }
    // a line: A is free unless the line is vertical, B is free either way
    if (!r0.q.is_zero()) return SolveStatus::parametric;
    return (-r0.r / r0.p).is_zero() ? SolveStatus::empty : SolveStatus::parametric;
  }
  Scalar det = r0.p * r1->q - r0.q * r1->p;
  Scalar A = (-r0.r * r1->q + r0.q * r1->r) / det;
  Scalar B = (-r0.p * r1->r + r0.r * r1->p) / det;
  for (auto& r : rows)
    if (!(r.p * A + r.q * B + r.r).is_zero()) return SolveStatus::empty;
  return A.is_zero() ? SolveStatus::empty : SolveStatus::unique;
}

}  // namespace ref

Presentation commutative(std::size_t n) {
  Presentation p(Field::rationals(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.set_linear_relation(i, j, 1, std::vector<Scalar>(n, 0), 0);
  return p;
}

Presentation random_two_gen(Sampler& s) {
  Field q = Field::rationals();
  auto coeff = [&] { return s.integer(0, 2) == 0 ? Scalar(0) : s.scalar(q, 3, false); };
  Scalar a = s.integer(0, 2) == 0 ? Scalar(1) : s.scalar(q, 3, true);
  return two_gen(a, coeff(), coeff(), coeff());
}

// Three-generator family restricted to parameters that pass the overlap check.
Presentation random_pbw_theorem1(Sampler& s) {
  Field q = Field::rationals();
  Scalar one(1);
  Scalar beta = s.scalar(q, 3, true);
  if (s.integer(0, 1) == 0) {
    Scalar alpha = s.scalar(q, 3, true), gamma = s.scalar(q, 3, true);
    Scalar b = s.integer(0, 1) ? s.scalar(q, 3, false) : Scalar(0);
    if (!b.is_zero()) gamma = alpha;
    return theorem1(alpha, beta, gamma, 0, b, 0);
  }
  Scalar a = s.scalar(q, 3, false), d = s.scalar(q, 3, false), b = s.scalar(q, 3, false);
  if (!b.is_zero()) d = a;
  return theorem1(one, beta, one, a, b, d);
}

TEST(ConstantChecks, CommutativeAllHold) {
  auto checks = assemble_constant_checks(commutative(4));
  EXPECT_FALSE(checks.empty());
  for (auto& c : checks) EXPECT_TRUE(c.holds) << c.id();
}

TEST(ConstantChecks, DiagonalFamilyHolds) {
  for (auto& c : assemble_constant_checks(theorem1(2, 3, 2, 0, 7, 0))) EXPECT_TRUE(c.holds) << c.id();
  for (auto& c : assemble_constant_checks(theorem1(2, 3, 5, 0, 0, 0))) EXPECT_TRUE(c.holds) << c.id();
}

TEST(ConstantChecks, ConstantTailWithDistinctOuterSlopes) {
  // (gamma - alpha) e_xz is the only nonzero residual
  std::vector<ConstantCheck> failing;
  for (auto& c : assemble_constant_checks(theorem1(2, 3, 5, 0, 7, 0)))
    if (!c.holds) failing.push_back(c);
  ASSERT_EQ(failing.size(), 1U);
  EXPECT_EQ(failing[0].id(), "eq4.3[k=2,j=1,t=3]");
  EXPECT_EQ(failing[0].residual, Scalar(3) * Scalar(-7, 3));
}

TEST(ConstantChecks, OffDiagonalTailRejected) {
  EXPECT_THROW(assemble_constant_checks(make_three_dim("2a", {{"beta", 3}})), NonDiagonalTail);
}

TEST(ConstantChecks, DeterministicOrder) {
  auto checks = assemble_constant_checks(commutative(4));
  std::vector<std::string> fams{"eq3", "eq4", "eq5", "comm1", "comm2", "comm3"};
  std::size_t pos = 0;
  for (auto& c : checks) {
    while (pos < fams.size() && fams[pos] != c.family) ++pos;
    ASSERT_LT(pos, fams.size()) << "family out of order: " << c.id();
  }
  EXPECT_EQ(checks.front().id(), "eq3.1[k=3,j=1,t=2]");
  EXPECT_EQ(assemble_constant_checks(commutative(4)).size(), checks.size());
}

TEST(ConstantChecks, FiveEWithShiftFails) {
  auto checks = assemble_constant_checks(make_three_dim("5e", {{"a", 1}}));
  std::vector<std::string> failing;
  for (auto& c : checks)
    if (!c.holds) failing.push_back(c.id());
  ASSERT_EQ(failing.size(), 1U);
  EXPECT_EQ(failing[0], "eq5.3[k=1,j=2,t=3]");
}

TEST(Solve, CommutativeIsParametricAtIdentity) {
  Presentation p = commutative(3);
  for (std::size_t k = 0; k < 3; ++k) {
    auto s = solve_diagonal_unknowns(p, k);
    EXPECT_EQ(s.status, SolveStatus::parametric);
    ASSERT_TRUE(s.witness);
    EXPECT_EQ((*s.witness)[0], Scalar(1));
    EXPECT_EQ((*s.witness)[1], Scalar(0));
  }
}

TEST(Solve, TableDiagonalSatisfiesSystem) {
  Presentation p = theorem1(2, 3, 2, 0, 7, 0);
  for (auto& c : diagonal_constraints(p, 0)) EXPECT_TRUE(c.evaluate(Scalar(1, 3), 0).is_zero()) << c.id();
  for (auto& c : diagonal_constraints(p, 2)) EXPECT_TRUE(c.evaluate(Scalar(3), 0).is_zero()) << c.id();
  EXPECT_NE(solve_diagonal_unknowns(p, 0).status, SolveStatus::empty);
}

TEST(Solve, EngineeredTwoGenerator) {
  Presentation p = two_gen(1, 1, 0, 1);
  for (std::size_t k = 0; k < 2; ++k) {
    auto s = solve_diagonal_unknowns(p, k);
    EXPECT_EQ(s.status, ref::status(p, k));
  }
  auto s = solve_diagonal_unknowns(p, 1);
  EXPECT_EQ(s.status, SolveStatus::parametric);
  EXPECT_EQ((*s.witness)[0], Scalar(1));
}

TEST(Solve, InconsistentSystemIsEmpty) {
  Presentation p = make_three_dim("4", {{"alpha", 2}, {"b1", 1}, {"b2", 3}, {"b3", 5}});
  for (std::size_t k = 0; k < 3; ++k) {
    auto s = solve_diagonal_unknowns(p, k);
    EXPECT_EQ(s.status, SolveStatus::empty);
    EXPECT_EQ(ref::status(p, k), SolveStatus::empty);
    EXPECT_FALSE(s.witness);
  }
}

TEST(Solve, SignConflictSurfaced) {
  // eq2a with comm4 pins (a_11, b_11) = (1, 0), which eq2b rejects; without comm4, (2, -1) works.
  Presentation p = two_gen(2, 0, 1, 1);
  auto s = solve_diagonal_unknowns(p, 0);
  EXPECT_EQ(s.status, SolveStatus::empty);
  EXPECT_EQ(ref::status(p, 0), SolveStatus::empty);
  EXPECT_TRUE(s.comm4_conflict);
  bool named = false;
  for (auto& r : s.reasons) named |= r == "eq2a+comm4[k=1,j=2]";
  EXPECT_TRUE(named);
}

TEST(Property, SolveMatchesOracle) {
  Sampler s(17);
  int empties = 0;
  for (int it = 0; it < 300; ++it) {
    Presentation p = it % 2 ? random_two_gen(s) : random_pbw_theorem1(s);
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto sol = solve_diagonal_unknowns(p, k);
      ASSERT_EQ(sol.status, ref::status(p, k)) << "iteration " << it << " k=" << k;
      if (sol.status == SolveStatus::empty) {
        ++empties;
        continue;
      }
      auto [A, B] = *sol.witness;
      EXPECT_FALSE(A.is_zero());
      for (auto& f : ref::equations(p, k)) EXPECT_TRUE(f(A, B).is_zero());
    }
  }
  EXPECT_GT(empties, 0);
}

TEST(Obstruction, Examples) {
  auto w = obstruction_check(make_three_dim("5a", {}), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_FALSE(obstruction_check(theorem1(2, 3, 2, 0, 7, 0), 3));
  EXPECT_TRUE(obstruction_check(make_three_dim("4", {{"alpha", 2}, {"a1", 1}}), 3));
  EXPECT_FALSE(obstruction_check(make_three_dim("5a", {}), 2));
}

TEST(Decide, DiagonalFamilyIsSmooth) {
  auto v = decide(theorem1(2, 3, 2, 0, 7, 0), 3);
  EXPECT_EQ(v.verdict, Verdict::smooth_sufficient);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.gkdim, 3);
}

TEST(Decide, NonPbwInputIsInconclusive) {
  auto v = decide(theorem1(2, 3, 5, 0, 7, 0), 3);
  EXPECT_EQ(v.verdict, Verdict::inconclusive);
  ASSERT_FALSE(v.reasons.empty());
  EXPECT_EQ(v.reasons[0].rfind("pbw_overlap", 0), 0U);
}

TEST(Decide, PaperExamples) {
  EXPECT_EQ(decide(make_three_dim("5e", {{"a", 1}}), 3).verdict, Verdict::inconclusive);
  EXPECT_EQ(decide(make_three_dim("2c", {{"beta", 3}}), 3).verdict, Verdict::not_smooth);
  EXPECT_EQ(decide(make_three_dim("5e", {{"a", 0}}), 3).verdict, Verdict::smooth_sufficient);
}

TEST(Decide, OffDiagonalWithOtherGkdimIsInconclusive) {
  auto v = decide(make_three_dim("2c", {{"beta", 3}}), 2);
  EXPECT_EQ(v.verdict, Verdict::inconclusive);
}

TEST(Decide, DescendingRejected) {
  Presentation p(Field::rationals(), 2, Ordering::descending);
  p.set_linear_relation(0, 1, 2, {0, 0}, 0);
  EXPECT_THROW(decide(p, 2), std::invalid_argument);
  EXPECT_EQ(decide(to_ascending(p), 2).verdict, Verdict::smooth_sufficient);
}

TEST(Decide, NonlinearTailIsInconclusive) {
  Presentation p(Field::rationals(), 2);
  p.set_relation(0, 1, 1, NcPoly::term(mono({2, 0}), 1));
  auto v = decide(p, 2);
  EXPECT_EQ(v.verdict, Verdict::inconclusive);
}

TEST(Decide, PrimeField) {
  Field f = Field::prime(101);
  auto v = decide(theorem1_presentation(2, 3, 2, 0, 7, 0, f), 3);
  EXPECT_EQ(v.verdict, Verdict::smooth_sufficient);
}

TEST(Decide, VerdictTable) {
  struct Row {
    std::string label;
    ClassParams params;
    Verdict want;
  };
  std::vector<Row> rows{
      {"1", {{"alpha", 2}, {"beta", 3}, {"gamma", 5}}, Verdict::smooth_sufficient},
      {"2a", {{"beta", 3}}, Verdict::not_smooth},
      {"2b", {{"beta", 3}, {"b", 7}}, Verdict::smooth_sufficient},
      {"2c", {{"beta", 3}}, Verdict::not_smooth},
      {"2d", {{"beta", 3}, {"b", 7}}, Verdict::smooth_sufficient},
      {"2e", {{"beta", 3}, {"a", 2}}, Verdict::smooth_sufficient},
      {"2f", {{"beta", 3}}, Verdict::smooth_sufficient},
      {"3a", {{"alpha", 2}, {"beta", 3}, {"b", 7}}, Verdict::not_smooth},
      {"3b", {{"alpha", 2}, {"beta", 3}, {"b", 7}}, Verdict::smooth_sufficient},
      {"4", {{"alpha", 2}, {"a1", 1}, {"b2", 1}}, Verdict::not_smooth},
      {"4", {{"alpha", 2}, {"a3", -1}}, Verdict::not_smooth},
      {"5a", {}, Verdict::not_smooth},
      {"5b", {}, Verdict::not_smooth},
      {"5c", {{"b", 7}}, Verdict::smooth_sufficient},
      {"5d", {}, Verdict::not_smooth},
      {"5e", {{"a", 1}}, Verdict::inconclusive},
      {"5e", {{"a", -3}}, Verdict::inconclusive},
      {"5e", {{"a", 0}}, Verdict::smooth_sufficient},
  };
  for (auto& r : rows) {
    auto v = decide(make_three_dim(r.label, r.params), 3);
    EXPECT_EQ(to_string(v.verdict), to_string(r.want)) << "class " << r.label;
  }
}

void expect_sound(const SmoothnessVerdict& v, const Presentation& p) {
  if (v.verdict != Verdict::smooth_sufficient) return;
  ASSERT_TRUE(v.witness);
  const auto& w = *v.witness;
  ASSERT_EQ(w.size(), p.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    EXPECT_TRUE(respects_relations(w[k], p).pass);
    for (std::size_t l = 0; l < w.size(); ++l) EXPECT_TRUE(commute(w[k], w[l]));
  }
}

TEST(Property, WitnessSoundness) {
  Sampler s(29);
  int smooth = 0;
  for (int it = 0; it < 120; ++it) {
    Presentation p = it % 2 ? random_two_gen(s) : random_pbw_theorem1(s);
    auto v = decide(p, static_cast<long>(p.size()));
    smooth += v.verdict == Verdict::smooth_sufficient;
    expect_sound(v, p);
  }
  EXPECT_GT(smooth, 10);
}

TEST(Property, RescalingInvariance) {
  Sampler s(31);
  Field q = Field::rationals();
  std::vector<Presentation> base;
  for (auto& l : class_labels()) base.push_back(make_three_dim(l, {{"alpha", 2}, {"beta", 3}, {"gamma", 5}, {"a", 1}, {"b", 7}}));
  for (int it = 0; it < 40; ++it) base.push_back(random_pbw_theorem1(s));
  for (auto& p : base) {
    std::vector<Scalar> mu;
    for (std::size_t g = 0; g < p.size(); ++g) mu.push_back(s.scalar(q, 4, true));
    Presentation r = relabel(p, {0, 1, 2}, mu, Ordering::ascending, p.names());
    auto v1 = decide(p, 3), v2 = decide(r, 3);
    EXPECT_EQ(to_string(v1.verdict), to_string(v2.verdict));
    expect_sound(v2, r);
  }
}

TEST(Ore, ClosedFormExamples) {
  auto first = decide_ore_extension(2, {2, 3}, {1, 1}, {0, 0}, 3);
  EXPECT_TRUE(first.first_condition);
  EXPECT_EQ(first.result.verdict, Verdict::smooth_sufficient);
  EXPECT_TRUE(first.agreement);

  auto trivial = decide_ore_extension(1, {1}, {0}, {0}, 2);
  EXPECT_EQ(trivial.result.verdict, Verdict::smooth_sufficient);

  auto second = decide_ore_extension(2, {1, 1}, {0, 0}, {3, -9}, 3);
  EXPECT_TRUE(second.second_condition);
  EXPECT_EQ(second.result.verdict, Verdict::smooth_sufficient);
  EXPECT_TRUE(second.agreement);
}

TEST(Ore, SecondConditionWithoutPbw) {
  // c_1(b_2-1) + c_2(b_1-1) = 0 holds, but the extension needs c_2(b_1-1) = c_1(b_2-1).
  auto v = decide_ore_extension(2, {2, 4}, {0, 0}, {3, -9}, 3);
  EXPECT_TRUE(v.second_condition);
  EXPECT_FALSE(check_pbw_overlaps(v.pres).pass);
  EXPECT_EQ(v.result.verdict, Verdict::inconclusive);
  EXPECT_FALSE(v.agreement);
}

TEST(Ore, Encoding) {
  auto v = decide_ore_extension(1, {2}, {5}, {3}, 2);
  // x1 y = 1/2 y x1 - 5/2 y - 3/2 x1
  EXPECT_EQ(v.pres.quad(0, 1), Scalar(1, 2));
  EXPECT_EQ(v.pres.b(0, 1), Scalar(-3, 2));
  EXPECT_EQ(v.pres.c(0, 1), Scalar(-5, 2));
  EXPECT_THROW(decide_ore_extension(1, {0}, {0}, {0}, 2), ZeroSlope);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_3d(three_dim(2, 3, 5, {}, {}, {})).label, "1");
  auto c = classify_3d(three_dim(1, 3, 1, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}));
  EXPECT_EQ(c.label, "2b");
  EXPECT_EQ(c.params["b"], Scalar(1));
  EXPECT_TRUE(c.regime_holds);
  EXPECT_EQ(classify_3d(three_dim(1, 1, 1, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0})).label, "5a");
  EXPECT_EQ(classify_3d(three_dim(1, 1, 1, {1, 1, 0, 0}, {}, {})).label, "NONE");
}

TEST(Classify, RegimeFlag) {
  auto c = classify_3d(three_dim(2, 2, 3, {}, {}, {}));
  EXPECT_EQ(c.label, "1");
  EXPECT_FALSE(c.regime_holds);
}

TEST(Classify, RoundTripOverCatalog) {
  ClassParams p{{"alpha", 2}, {"beta", 3}, {"gamma", 5}, {"a", 4}, {"b", 7}, {"a1", 1},
                {"a2", 2}, {"a3", 3}, {"b1", -1}, {"b2", -2}, {"b3", -3}};
  for (auto& l : class_labels()) {
    auto c = classify_3d(make_three_dim(l, p));
    EXPECT_EQ(c.label, l);
    EXPECT_TRUE(c.regime_holds) << l;
  }
}

TEST(Classify, ThreeParameterBuilderMatchesFixture) {
  EXPECT_EQ(theorem1_presentation(2, 3, 2, 4, 7, 5).tail(0, 2), theorem1(2, 3, 2, 4, 7, 5).tail(0, 2));
  EXPECT_EQ(theorem1_presentation(2, 3, 2, 4, 7, 5).tail(1, 2), theorem1(2, 3, 2, 4, 7, 5).tail(1, 2));
  EXPECT_EQ(theorem1_presentation(2, 3, 2, 4, 7, 5).quad(0, 2), Scalar(1, 3));
}

}  // namespace
}  // namespace dsmooth
