#include <gtest/gtest.h>

#include "dsmooth/calculus.hpp"
#include "dsmooth/classify.hpp"
#include "dsmooth/error.hpp"
#include "dsmooth/linalg.hpp"
#include "dsmooth/sampling.hpp"
#include "dsmooth/solver.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace dsmooth {
namespace {

constexpr Subset X = 1, Y = 2, Z = 4;

Calculus table_calculus(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Scalar& a,
                        const Scalar& b, const Scalar& d) {
  return Calculus(theorem1(alpha, beta, gamma, a, b, d), theorem1_table(alpha, beta, gamma, a, d));
}

Calculus witness_calculus(const Presentation& p) {
  auto v = decide(p, static_cast<long>(p.size()));
  EXPECT_EQ(v.verdict, Verdict::smooth_sufficient);
  return Calculus(p, *v.witness);
}

Calculus commutative_calculus(std::size_t n) {
  Presentation p(Field::rationals(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.set_linear_relation(i, j, 1, std::vector<Scalar>(n, 0), 0);
  return Calculus(p, std::vector<AffineEndo>(n, AffineEndo::identity(n)));
}

Calculus one_generator(const Scalar& theta, const Scalar& shift = 0) {
  return Calculus(Presentation(Field::rationals(), 1), {endo({theta}, {shift})});
}

// Quasi-commuting n generators with random a_ij; the witness family comes from decide.
Presentation random_quantum_space(Sampler& s, std::size_t n) {
  Presentation p(Field::rationals(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      p.set_linear_relation(i, j, s.scalar(Field::rationals(), 4, true), std::vector<Scalar>(n, 0), 0);
  return p;
}

NcPoly x(const Calculus& c, std::size_t g, const Scalar& k = 1) { return c.presentation().gen(g, k); }

// Letter-by-letter Leibniz expansion: d(w) = sum_p dx_{w_p} nu_{w_p}(w_<p) w_>p.
DiffForm oracle_d(const Calculus& c, const NcPoly& f) {
  const Presentation& pres = c.presentation();
  DiffForm out(1);
  for (const auto& [m, coef] : f.terms()) {
    auto w = oracle::letters(m, pres);
    for (std::size_t p = 0; p < w.size(); ++p) {
      const AffineEndo& nu = c.nus()[w[p]];
      NcPoly acc = NcPoly::constant(pres.size(), coef);
      for (std::size_t q = 0; q < p; ++q)
        acc = oracle::product(acc, pres.gen(w[q], nu.slope(w[q])) + pres.one() * nu.shift(w[q]), pres);
      for (std::size_t q = p + 1; q < w.size(); ++q) acc = oracle::product(acc, pres.gen(w[q]), pres);
      out.add(Subset{1} << w[p], acc);
    }
  }
  return out;
}

// e_T ^ e_S by counting the pairs (u in T, v in S) with u > v.
Scalar oracle_sign(const Calculus& c, Subset t, Subset s) {
  Scalar out(1);
  for (std::size_t u : members(t))
    for (std::size_t v : members(s))
      if (u > v) out *= -c.nus()[v].slope(u);
  return out;
}

TEST(LeftAct, Scalars) {
  Calculus c = table_calculus(2, 3, 2, 0, 7, 0);
  DiffForm f = DiffForm::basis(X | Z, x(c, 1) + c.presentation().one());
  EXPECT_EQ(left_act(c, c.presentation().one() * Scalar(5), f), f * Scalar(5));
}

TEST(LeftAct, TableValues) {
  Calculus c = table_calculus(2, 3, 2, 0, 7, 0);
  NcPoly one = c.presentation().one();
  EXPECT_EQ(left_act(c, x(c, 0), DiffForm::basis(Z, one)), DiffForm::basis(Z, x(c, 0, Scalar(1, 3))));
  Calculus c5 = table_calculus(2, 3, 5, 0, 0, 0);
  EXPECT_EQ(left_act(c5, x(c5, 0), DiffForm::basis(Y, one)), DiffForm::basis(Y, x(c5, 0, 5)));
}

TEST(Wedge, Examples) {
  Calculus c = table_calculus(2, 3, 5, 0, 0, 0);
  NcPoly one = c.presentation().one();
  EXPECT_TRUE(wedge(c, DiffForm::basis(X, one), DiffForm::basis(X, one)).is_zero());
  EXPECT_EQ(wedge(c, DiffForm::basis(Y, one), DiffForm::basis(X, one)), DiffForm::basis(X | Y, one * Scalar(-1, 5)));
  EXPECT_EQ(wedge(c, DiffForm::basis(Z, one), DiffForm::basis(X, one)), DiffForm::basis(X | Z, one * Scalar(-3)));
  EXPECT_EQ(wedge(c, DiffForm::basis(Z, one), DiffForm::basis(Y, one)), DiffForm::basis(Y | Z, one * Scalar(-1, 2)));
}

TEST(Wedge, MovingCoefficientThroughBasis) {
  // case with shifts: nu_z(y) = y + a
  Calculus c = table_calculus(1, 3, 1, 4, 0, 4);
  NcPoly one = c.presentation().one(), y = x(c, 1);
  DiffForm lhs = wedge(c, DiffForm::basis(X, y), DiffForm::basis(Z, one));
  DiffForm rhs = wedge(c, DiffForm::basis(X, one), left_act(c, y, DiffForm::basis(Z, one)));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs, DiffForm::basis(X | Z, y + one * Scalar(4)));
}

TEST(Differential, Generators) {
  Calculus c = table_calculus(2, 3, 2, 0, 7, 0);
  for (std::size_t g = 0; g < 3; ++g)
    EXPECT_EQ(differential(c, DiffForm::function(x(c, g))), DiffForm::basis(Subset{1} << g, c.presentation().one()));
}

TEST(Differential, PowerSums) {
  Calculus comm = commutative_calculus(1);
  NcPoly sq = NcPoly::term(mono({2}), 1);
  EXPECT_EQ(differential(comm, DiffForm::function(sq)), DiffForm::basis(1, NcPoly::generator(1, 0, 2)));
  Calculus c = one_generator(2);
  NcPoly cube = NcPoly::term(mono({3}), 1);
  EXPECT_EQ(differential(c, DiffForm::function(cube)), DiffForm::basis(1, NcPoly::term(mono({2}), 7)));
}

TEST(Differential, GeneralBinomialMatchesShortcut) {
  // with b_kk != 0 the block sum is sum_j (A x - B)^(j-1) x^(l-j)
  Sampler s(2);
  for (int it = 0; it < 20; ++it) {
    Scalar A = s.scalar(Field::rationals(), 3, true), sh = s.scalar(Field::rationals(), 3, false);
    Calculus c = one_generator(A, sh);
    for (unsigned l = 1; l <= 5; ++l) {
      NcPoly want;
      NcPoly img = NcPoly::generator(1, 0, A) + NcPoly::constant(1, sh), xx = NcPoly::generator(1, 0);
      for (unsigned j = 1; j <= l; ++j)
        want += oracle::product(oracle::product(NcPoly::constant(1, 1), c.rewriter().power(img, j - 1), c.presentation()),
                                c.rewriter().power(xx, l - j), c.presentation());
      EXPECT_EQ(partial_bar(c, 0, NcPoly::term(mono({l}), 1)), want);
      if (sh.is_zero()) {
        Scalar geo(0);
        for (unsigned j = 0; j < l; ++j) geo += A.pow(j);
        EXPECT_EQ(want, NcPoly::term(mono({l - 1}), geo));
      }
    }
  }
}

TEST(Kernel, Connected) {
  auto k = kernel_of_d_bounded(commutative_calculus(3), 4);
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0], NcPoly::constant(3, 1));
  auto k2 = kernel_of_d_bounded(table_calculus(2, 3, 2, 0, 7, 0), 4);
  ASSERT_EQ(k2.size(), 1U);
  EXPECT_EQ(k2[0].degree(), 0);
}

TEST(Kernel, RootOfUnityEnlargesKernel) {
  Calculus c = one_generator(-1);
  auto k = kernel_of_d_bounded(c, 4);
  // oracle: dense null space of the letter-wise d on {1, x, .., x^4}
  auto basis = monomials_up_to(1, 4);
  Matrix m(4, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    NcPoly dj = oracle_d(c, NcPoly::term(basis[j], 1)).component(1);
    for (const auto& [t, v] : dj.terms()) m(t[0], j) = v;
  }
  auto ref = nullspace(m);
  ASSERT_EQ(k.size(), ref.size());
  EXPECT_EQ(k.size(), 3U);
  std::vector<NcPoly> expect{NcPoly::constant(1, 1), NcPoly::term(mono({2}), 1), NcPoly::term(mono({4}), 1)};
  EXPECT_EQ(k, expect);
}

TEST(IntegralForms, TableValues) {
  Scalar al = 2, be = 3, ga = 2;
  Calculus c = table_calculus(al, be, ga, 0, 7, 0);
  auto entries = integral_form_coefficients(c);
  ASSERT_EQ(entries.size(), 6U);
  auto find = [&](int k, Subset s) {
    for (auto& e : entries)
      if (e.k == k && e.s == s) return e;
    ADD_FAILURE() << "missing entry";
    return IntegralFormEntry{};
  };
  EXPECT_EQ(find(2, X | Z).A, -ga);
  EXPECT_EQ(find(2, X | Y).A, al / be);
  EXPECT_EQ(find(2, Y | Z).A, Scalar(1));
  EXPECT_EQ(find(1, X).Abar, ga / be);
  EXPECT_EQ(find(1, Y).Abar, -al);
  EXPECT_EQ(find(1, Z).Abar, Scalar(1));
  for (auto& e : entries) {
    if (e.k == 1) EXPECT_EQ(e.A, Scalar(1));
    if (e.k == 2) EXPECT_EQ(e.Abar, Scalar(1));
    // closed products miss only S = {y, z}
    EXPECT_EQ(e.closed_normalized, e.s != (Y | Z)) << e.s;
  }
  EXPECT_EQ(find(2, Y | Z).closed_A, Scalar(-1, 2));
  EXPECT_FALSE(find(1, X).closed_equal);
  EXPECT_EQ(find(1, X).closed_A, -ga / be * al);
  EXPECT_EQ(find(1, X).closed_Abar, -al.inverse());
}

TEST(IntegralForms, CommutativeSigns) {
  Calculus c = commutative_calculus(3);
  for (auto& e : integral_form_coefficients(c)) {
    EXPECT_TRUE(e.A == Scalar(1) || e.A == Scalar(-1));
    EXPECT_TRUE(e.Abar == Scalar(1) || e.Abar == Scalar(-1));
  }
}

TEST(IntegralForms, NormalizationOnFourGenerators) {
  Sampler s(41);
  for (int it = 0; it < 5; ++it) {
    Calculus c = witness_calculus(random_quantum_space(s, 4));
    NcPoly one = c.presentation().one();
    for (auto& e : integral_form_coefficients(c)) {
      EXPECT_EQ(e.sigma, oracle_sign(c, e.t, e.s));
      DiffForm w = wedge(c, DiffForm::basis(e.t, one * e.Abar), DiffForm::basis(e.s, one * e.A));
      EXPECT_EQ(w, DiffForm::basis(c.full(), one));
    }
  }
}

TEST(Integrability, BasisAndZeroForms) {
  Calculus c = table_calculus(2, 3, 2, 0, 7, 0);
  auto entries = integral_form_coefficients(c);
  for (int k = 1; k < 3; ++k) {
    EXPECT_TRUE(integrability_holds(c, entries, DiffForm(k), false));
    EXPECT_TRUE(integrability_holds(c, entries, DiffForm(k), true));
  }
  for (auto& e : entries) {
    DiffForm w = DiffForm::basis(e.s, c.presentation().one());
    EXPECT_TRUE(integrability_holds(c, entries, w, false));
    EXPECT_TRUE(integrability_holds(c, entries, w, true));
  }
}

TEST(Integrability, RandomForms) {
  auto rep = verify_integrability(table_calculus(2, 3, 2, 0, 7, 0), 2, 6, 9);
  EXPECT_TRUE(rep.pass);
  ASSERT_EQ(rep.levels.size(), 2U);
  Sampler s(43);
  auto rep4 = verify_integrability(witness_calculus(random_quantum_space(s, 4)), 2, 3, 10);
  EXPECT_TRUE(rep4.pass);
  auto rep_shift = verify_integrability(table_calculus(1, 3, 1, 4, 0, 4), 2, 4, 11);
  EXPECT_TRUE(rep_shift.pass);
}

TEST(Calculus, RejectsNonCommutingFamily) {
  Presentation p(Field::rationals(), 2);
  p.set_linear_relation(0, 1, 1, {0, 0}, 0);
  EXPECT_THROW(Calculus(p, {endo({2, 1}, {0, 0}), endo({1, 1}, {1, 0})}), std::invalid_argument);
  EXPECT_THROW(Calculus(p, {AffineEndo::identity(2)}), MismatchedArity);
}

std::vector<Calculus> smooth_catalog() {
  std::vector<Calculus> out;
  ClassParams p{{"alpha", 2}, {"beta", 3}, {"gamma", 5}, {"a", 2}, {"b", 7}};
  for (auto& l : class_labels()) {
    Presentation pres = make_three_dim(l, l == "5e" ? ClassParams{{"a", 0}} : p);
    auto v = decide(pres, 3);
    if (v.verdict == Verdict::smooth_sufficient) out.emplace_back(pres, *v.witness);
  }
  return out;
}

TEST(Property, DSquaredVanishes) {
  auto cat = smooth_catalog();
  EXPECT_GE(cat.size(), 8U);
  for (auto& c : cat) {
    for (const auto& m : monomials_up_to(3, 5)) {
      DiffForm f = DiffForm::function(NcPoly::term(m, 1));
      DiffForm d1 = differential(c, f);
      EXPECT_TRUE(differential(c, d1).is_zero()) << c.format(f);
      EXPECT_TRUE(differential(c, differential(c, d1)).is_zero());
    }
  }
}

TEST(Property, DifferentialMatchesLetterwiseOracle) {
  Sampler s(47);
  for (auto& c : smooth_catalog())
    for (int it = 0; it < 5; ++it) {
      NcPoly f = s.poly(c.presentation(), 4, 4, sample_height(0));
      EXPECT_EQ(differential(c, DiffForm::function(f)), oracle_d(c, f));
    }
}

DiffForm random_form(const Calculus& c, Sampler& s, int k, unsigned deg) {
  DiffForm w(k);
  for (Subset m = 0; m <= c.full(); ++m)
    if (popcount(m) == k) w.add(m, s.poly(c.presentation(), deg, 2, sample_height(0)));
  return w;
}

TEST(Property, GradedLeibniz) {
  Sampler s(53);
  auto cat = smooth_catalog();
  for (std::size_t ci = 0; ci < cat.size(); ++ci) {
    auto& c = cat[ci];
    for (int it = 0; it < 4; ++it) {
      int kf = s.integer(0, 2), kg = s.integer(0, 2);
      DiffForm f = random_form(c, s, kf, 3), g = random_form(c, s, kg, 3);
      DiffForm lhs = differential(c, wedge(c, f, g));
      DiffForm rhs = wedge(c, differential(c, f), g);
      DiffForm second = wedge(c, f, differential(c, g));
      rhs += kf % 2 ? second * Scalar(-1) : second;
      EXPECT_EQ(lhs, rhs) << "catalog " << ci << " degrees " << kf << "," << kg;
    }
  }
}

TEST(Property, TopDegreeIsRankOne) {
  Calculus c = table_calculus(2, 3, 2, 0, 7, 0);
  NcPoly one = c.presentation().one();
  std::vector<std::vector<Subset>> orders{{X, Y, Z}, {Z, Y, X}, {Y, Z, X}, {X, Z, Y}};
  for (auto& o : orders) {
    DiffForm w = DiffForm::basis(o[0], one);
    for (std::size_t i = 1; i < o.size(); ++i) w = wedge(c, w, DiffForm::basis(o[i], one));
    ASSERT_EQ(w.components().size(), 1U);
    EXPECT_EQ(w.components().begin()->first, c.full());
    EXPECT_EQ(w.components().begin()->second.degree(), 0);
    EXPECT_TRUE(wedge(c, w, DiffForm::basis(X, one)).is_zero());
  }
}

TEST(Property, LeftActIsAnAction) {
  Sampler s(59);
  for (auto& c : smooth_catalog())
    for (int it = 0; it < 3; ++it) {
      NcPoly a = s.poly(c.presentation(), 2, 2, sample_height(0));
      NcPoly b = s.poly(c.presentation(), 2, 2, sample_height(0));
      DiffForm f = random_form(c, s, static_cast<int>(s.integer(0, 3)), 2);
      EXPECT_EQ(left_act(c, c.rewriter().multiply(a, b), f), left_act(c, a, left_act(c, b, f)));
    }
}

TEST(Property, VolumeFormTwist) {
  Sampler s(61);
  for (auto& c : smooth_catalog()) {
    NcPoly one = c.presentation().one();
    for (int it = 0; it < 3; ++it) {
      NcPoly a = s.poly(c.presentation(), 3, 3, sample_height(0));
      // a dx ^ dy ^ dz built one factor at a time
      DiffForm w = left_act(c, a, DiffForm::basis(X, one));
      w = wedge(c, w, DiffForm::basis(Y, one));
      w = wedge(c, w, DiffForm::basis(Z, one));
      EXPECT_EQ(w, DiffForm::basis(c.full(), apply(c.nu_omega(), a, c.presentation())));
    }
  }
}

}  // namespace
}  // namespace dsmooth
