#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dsmooth/linalg.hpp"
#include "dsmooth/presentation.hpp"
#include "dsmooth/sampling.hpp"

namespace dsmooth {

enum class DiffusionType { type1, type2 };
std::string to_string(DiffusionType t);

/// lambda_ij D_i D_j - lambda_ji D_j D_i = x_j D_i - x_i D_j for i < j.
///
/// Type 1 carries scalar x_i; type 2 has x_1..x_n as central generators.
/// Every lambda starts at 1 and every scalar x_i at 0.
class DiffusionPresentation {
 public:
  DiffusionPresentation() = default;
  DiffusionPresentation(Field field, std::size_t n, DiffusionType type = DiffusionType::type1);

  /// Ordered pair i != j. Throws ZeroLambda for a zero lambda_ij with i < j.
  void set_lambda(std::size_t i, std::size_t j, const Scalar& v);
  /// Type 1 only.
  void set_x(std::size_t i, const Scalar& v);

  const Field& field() const { return field_; }
  std::size_t size() const { return n_; }
  DiffusionType type() const { return type_; }
  const Scalar& lambda(std::size_t i, std::size_t j) const;
  const Scalar& x(std::size_t i) const;

  friend bool operator==(const DiffusionPresentation&, const DiffusionPresentation&) = default;

 private:
  Field field_;
  std::size_t n_ = 0;
  DiffusionType type_ = DiffusionType::type1;
  std::vector<Scalar> lambda_;  // n*n, row i column j
  std::vector<Scalar> x_;
};

/// DESCENDING presentation: D_i D_j -> (lambda_ji D_j D_i + x_j D_i - x_i D_j) / lambda_ij.
/// Generators D1..Dn, then x1..xn (central) for type 2.
Presentation encode_presentation(const DiffusionPresentation& dp);

/// P_k^n = sum_t C(n-k+t-1, n-k) lji^(t-1) lij^(k-t); throws IndexOutOfRange unless 1 <= k <= n.
Scalar P(unsigned k, unsigned n, const Scalar& lij, const Scalar& lji);
/// Q_k^n = C(n, k-1) lji^(k-1).
Scalar Q(unsigned k, unsigned n, const Scalar& lji);

struct IdentityCheck {
  std::string name;
  std::size_t instances = 0, failures = 0;
  std::optional<std::string> first_failure;
  bool pass() const { return failures == 0; }
};

struct IdentityReport {
  bool pass = true;
  std::vector<IdentityCheck> checks;
};

/// Every recurrence instance with n + 1 <= n_max at `samples` random (lij, lji).
IdentityReport verify_pq_recurrences(unsigned n_max, std::size_t samples = 20, std::uint64_t seed = 1);

enum class CommutationSide { right, left };
enum class IdentityStatus { pass, discrepant };
std::string to_string(CommutationSide s);
std::string to_string(IdentityStatus s);

/// Both sides of the power commutation law for one pair D_1, D_2, in normal form.
struct CommutationInstance {
  Presentation pres;
  NcPoly lhs, rhs, residual;  // residual = lhs - rhs
};

/// right: lij^n D_i^n D_j = lji^n D_j D_i^n + sum_k (-1)^(k+n) P x_i^(n-k) x_j D_i^k
///                           + (-1)^(n+k-1) Q x_i^(n-k+1) D_j D_i^(k-1)
/// left:  lij^n D_i D_j^n = lji^n D_j^n D_i + sum_k Q x_j^(n-k+1) D_j D_i^(k-1) - P x_j^(n-k) x_i D_i^k
/// Type 2 ignores xi, xj and uses the central generators.
CommutationInstance commutation_instance(CommutationSide side, DiffusionType type, unsigned n,
                                         const Scalar& lij, const Scalar& lji, const Scalar& xi,
                                         const Scalar& xj, const Field& field = Field::rationals());

struct CommutationLevel {
  unsigned n = 0;
  std::size_t samples = 0, failures = 0;
};

struct CommutationReport {
  CommutationSide side = CommutationSide::right;
  DiffusionType type = DiffusionType::type1;
  IdentityStatus status = IdentityStatus::pass;
  std::vector<CommutationLevel> levels;
  std::optional<unsigned> min_failing_n;
  std::optional<std::string> counterexample;  // parameters of the first failure at min_failing_n
  std::optional<std::string> residual;
};

CommutationReport verify_commutation(CommutationSide side, DiffusionType type, unsigned n_max,
                                     std::size_t samples, std::uint64_t seed = 1);
inline CommutationReport verify_right_commutation(DiffusionType type, unsigned n_max, std::size_t samples,
                                                  std::uint64_t seed = 1) {
  return verify_commutation(CommutationSide::right, type, n_max, samples, seed);
}
inline CommutationReport verify_left_commutation(DiffusionType type, unsigned n_max, std::size_t samples,
                                                 std::uint64_t seed = 1) {
  return verify_commutation(CommutationSide::left, type, n_max, samples, seed);
}

/// A_I, A_II, B_I, B_II, B_III, B_IV, C_I, C_II, D.
const std::vector<std::string>& diffusion_labels();
/// Every class whose predicate holds for D_1, D_2, D_3 (type 1, n = 3).
std::set<std::string> classify_diffusion_3(const DiffusionPresentation& dp);
/// "2e", "1", "UNRESOLVED" or "NOT_SKEW"; std::invalid_argument for an unknown label.
std::string crosswalk_to_3d(const std::string& label);
/// Random type-1 instance satisfying the predicate of `label`.
DiffusionPresentation sample_diffusion_class(const std::string& label, Sampler& s, std::int64_t height = 5,
                                             const Field& field = Field::rationals());

/// sigma(g) = sum_h coeff[g][h] h + coeff[g][4] over (D1, D2, x1, x2); rows g are
/// sigma(D1) (A), sigma(D2) (B), sigma(x1) (S), sigma(x2) (H).
struct AutCoefficients {
  std::array<std::array<Scalar, 5>, 4> coeff;
  static AutCoefficients identity();
};

struct AutCoeffMatrices {
  Scalar lambda12, lambda21;
  Matrix A;       // columns A, B, S, H over rows D1, D2, x1, x2
  Matrix Gamma;   // acts on (A_k, B_k, S_k, H_k)
  Matrix Theta;   // acts on (a_k, b_k, d_k, c_k)
  Matrix L;
  std::vector<Scalar> L1, L2, S, H;
  std::vector<Scalar> constants;  // A_k, B_k, S_k, H_k
};

AutCoeffMatrices build_aut_matrices(const AutCoefficients& c, const Scalar& lambda12, const Scalar& lambda21);

/// Degree-one coefficients of sigma(relation), computed in the rewriting engine, as a
/// matrix in (A_k, B_k, S_k, H_k).
Matrix sigma_system_from_engine(const AutCoeffMatrices& m);
/// Degree-one coefficients of d(relation) for a sigma-derivation with
/// d(ab) = d(a) sigma(b) + a d(b), sigma without constants, in (a_k, b_k, d_k, c_k).
Matrix derivation_system_from_engine(const AutCoeffMatrices& m);

/// Random coefficients; when `span_hypothesis`, S and H are an invertible recombination of L1, L2.
/// A is always invertible.
AutCoefficients sample_aut_coefficients(Sampler& s, const Scalar& lambda12, const Scalar& lambda21,
                                        bool span_hypothesis, std::int64_t height = 5);

/// det(Gamma) = det(A) and det(Theta) = -det(L) at `samples` random instances.
IdentityReport verify_determinant_identities(std::size_t samples, std::uint64_t seed = 1);

struct SigmaConstantsResult {
  std::vector<Scalar> solution;  // A_k, B_k, S_k, H_k
  bool zero = true;
  std::vector<Scalar> residual;  // Gamma * given constants
};

/// Solves Gamma x = 0; throws SingularAutMatrix when det(A) = 0.
SigmaConstantsResult solve_sigma_constant_terms(const AutCoeffMatrices& m);

enum class DerivationStatus { zero_constants, hypothesis_not_met, nonzero_constants };
std::string to_string(DerivationStatus s);

struct DerivationReport {
  DerivationStatus status = DerivationStatus::hypothesis_not_met;
  bool hypothesis = false;
  Scalar det_theta;
  std::vector<std::vector<Scalar>> kernel;  // basis of Theta y = 0, y = (a_k, b_k, d_k, c_k)
  bool engine_rows_match = false;           // derivation_system_from_engine == Theta
};

DerivationReport check_derivation_constant_terms(const AutCoeffMatrices& m);

}  // namespace dsmooth
