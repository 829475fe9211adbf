#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsmooth/endomorphism.hpp"
#include "dsmooth/presentation.hpp"
#include "dsmooth/rewriting.hpp"

namespace dsmooth {

/// One instance of a coefficient identity that does not involve the diagonal unknowns.
/// family is one of eq3, eq4, eq5, comm1, comm2, comm3; member numbers the identity
/// inside its family (1-based).
struct ConstantCheck {
  std::string family;
  int member = 1;
  std::size_t k = 0, j = 0, t = 0;
  bool holds = true;
  Scalar residual;

  /// e.g. "eq3.2[k=3,j=1,t=2]" with 1-based generator indices.
  std::string id() const;
};

/// Every instance over all index triples, sorted by (family, k, j, t, member).
/// Throws NonDiagonalTail unless the presentation passes diagonal_tails().
std::vector<ConstantCheck> assemble_constant_checks(const Presentation& pres);

/// cA * a_kk + cB * b_kk + c0 = 0.
struct LinearConstraint {
  std::string family;  // eq1a, eq1b, eq2a, eq2b, comm4, comm5
  std::size_t k = 0, j = 0;
  Scalar cA, cB, c0;

  Scalar evaluate(const Scalar& A, const Scalar& B) const { return cA * A + cB * B + c0; }
  std::string id() const;
};

std::vector<LinearConstraint> diagonal_constraints(const Presentation& pres, std::size_t k,
                                                   bool with_comm4 = true);

enum class SolveStatus { unique, parametric, empty };
std::string to_string(SolveStatus s);

/// Solution set of the system for nu_k(x_k) = a_kk x_k - b_kk.
struct NuSystemSolution {
  std::size_t k = 0;
  SolveStatus status = SolveStatus::empty;
  std::optional<std::array<Scalar, 2>> witness;  // (a_kk, b_kk), a_kk != 0
  std::optional<std::array<Scalar, 2>> particular;
  std::vector<std::array<Scalar, 2>> homogeneous;
  std::vector<LinearConstraint> constraints;
  /// Set when the set is empty but dropping comm4 makes it nonempty.
  bool comm4_conflict = false;
  std::vector<std::string> reasons;
};

NuSystemSolution solve_diagonal_unknowns(const Presentation& pres, std::size_t k);

/// First (i, j, k) whose tail has a nonzero x_k coefficient with k outside {i, j},
/// reported only when gkdim equals the number of generators.
std::optional<std::array<std::size_t, 3>> obstruction_check(const Presentation& pres, long gkdim);

/// nu_k(x_j): a_kj^{-1}(x_j - b_kj) for j > k, a_jk x_j + c_jk for j < k,
/// diag[k] = (a_kk, b_kk) giving a_kk x_k - b_kk.
std::vector<AffineEndo> build_nu_family(const Presentation& pres,
                                        const std::vector<std::array<Scalar, 2>>& diag);

enum class Verdict { smooth_sufficient, not_smooth, inconclusive };
std::string to_string(Verdict v);

struct SmoothnessVerdict {
  Verdict verdict = Verdict::inconclusive;
  long gkdim = 0;
  std::optional<std::vector<AffineEndo>> witness;
  std::vector<std::string> reasons;
  std::optional<std::array<std::size_t, 3>> obstruction;
  std::optional<OverlapReport> pbw;
  std::vector<ConstantCheck> checks;
  std::vector<NuSystemSolution> systems;
};

/// Requires the ascending convention (std::invalid_argument otherwise).
SmoothnessVerdict decide(const Presentation& pres, long gkdim);

struct OreVerdict {
  Presentation pres;
  SmoothnessVerdict result;
  bool first_condition = false;   // a_i != 0 and c_i = 0 for all i
  bool second_condition = false;  // a_i = 0 and c_i(b_k-1) + c_k(b_i-1) = 0 for i != k
  /// Closed form and decide agree whenever a condition holds (vacuous otherwise).
  bool agreement = true;
};

/// K[x_1..x_n][y; sigma, delta], sigma(x_i) = b_i x_i + a_i, delta(x_i) = c_i x_i.
/// Generator y is the last one. Throws ZeroSlope if some b_i is zero.
OreVerdict decide_ore_extension(std::size_t n, const std::vector<Scalar>& b,
                                const std::vector<Scalar>& a, const std::vector<Scalar>& c,
                                long gkdim, const Field& field = Field::rationals());

}  // namespace dsmooth
