#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsmooth/calculus.hpp"
#include "dsmooth/classify.hpp"
#include "dsmooth/diffusion.hpp"
#include "dsmooth/rewriting.hpp"
#include "dsmooth/solver.hpp"

namespace dsmooth {

/// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// Everything the `calculus` command reports for one presentation.
struct CalculusAnalysis {
  SmoothnessVerdict verdict;
  bool built = false;  // a witness family existed
  unsigned max_degree = 0;
  std::size_t d_squared_checked = 0, d_squared_failures = 0;
  std::vector<std::string> d_squared_counterexamples;  // first few
  std::vector<NcPoly> kernel;
  bool connected = false;
  /// dx_u ^ dx_v = coefficient * dx_v ^ dx_u for u > v.
  struct WedgeRelation {
    std::size_t u = 0, v = 0;
    Scalar coefficient;
  };
  std::vector<WedgeRelation> wedge_relations;
  std::vector<IntegralFormEntry> integral_forms;
  bool integral_normalized = false;  // A * Abar * sigma = 1 for every entry
  std::optional<IntegrabilityReport> integrability;
};

/// Runs decide, and when it yields a witness builds the calculus and checks
/// d o d on forms e_S m with deg m <= D, the kernel of d up to D and the integral forms.
/// integrability_samples > 0 additionally runs verify_integrability.
CalculusAnalysis analyse_calculus(const Presentation& pres, long gkdim, unsigned max_degree,
                                  std::size_t integrability_samples = 0, std::uint64_t seed = 1);

struct ConstantTermTally {
  std::size_t instances = 0, zero = 0;
  std::optional<std::string> first_failure;
  bool pass() const { return zero == instances; }
};

/// The `verify-identities` battery.
struct IdentitySuite {
  unsigned n_max = 6, pq_n_max = 30;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  IdentityReport pq;
  CommutationReport right1, right2, left1, left2;
  IdentityReport determinants;
  ConstantTermTally sigma_constants;       // invertible instances, Gamma x = 0 forces x = 0
  ConstantTermTally derivation_constants;  // span-hypothesis instances
  /// Every check except the left identity, which is allowed to be DISCREPANT.
  bool pass() const;
};

/// pq recurrences run to max(30, n_max); each sub-report gets its own seed derived from `seed`.
IdentitySuite run_identity_suite(unsigned n_max, std::size_t samples, std::uint64_t seed);

Json to_json(const Scalar& s);
Json to_json(const SmoothnessVerdict& v, const Presentation& pres);
Json to_json(const OverlapReport& r, const Presentation& pres);
Json to_json(const Classification& c);
Json to_json(const CalculusAnalysis& a, const Presentation& pres);
Json to_json(const IdentityReport& r);
Json to_json(const CommutationReport& r);
Json to_json(const IdentitySuite& s);
/// Label set and crosswalk for each label.
Json diffusion_classification_json(const std::set<std::string>& labels, const OverlapReport& pbw,
                                   const Presentation& encoded);

}  // namespace dsmooth
