#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dsmooth/ncpoly.hpp"
#include "dsmooth/presentation.hpp"

namespace dsmooth {

/// Scalar times a product of generators in arbitrary order.
struct Word {
  Scalar coeff{1};
  std::vector<std::size_t> letters;
};

/// Normal-form multiplication against one presentation.
///
/// Products m * x_g are computed recursively by swapping x_g past the last letter of m;
/// results are memoized for the lifetime of the object. Not thread safe; create one per
/// thread.
class Rewriter {
 public:
  explicit Rewriter(const Presentation& pres, std::size_t step_budget = 20'000'000);

  const Presentation& presentation() const { return pres_; }

  NcPoly times_generator(const Monomial& m, std::size_t g);
  NcPoly right_multiply(const NcPoly& p, std::size_t g);
  NcPoly times_monomial(const Monomial& m, const Monomial& u);
  NcPoly multiply(const NcPoly& p, const NcPoly& q);
  NcPoly word(const Word& w);
  NcPoly power(const NcPoly& p, unsigned e);

  /// x_u x_v = kappa x_v x_u + tau for pos(u) > pos(v).
  std::pair<Scalar, NcPoly> swap_rule(std::size_t u, std::size_t v) const;

 private:
  const Presentation& pres_;
  std::map<std::pair<Monomial, std::size_t>, NcPoly> cache_;
  std::size_t steps_ = 0;
  std::size_t budget_;
};

NcPoly normal_form(const Word& w, const Presentation& pres);
NcPoly normal_form(const std::vector<Word>& words, const Presentation& pres);
NcPoly multiply(const NcPoly& p, const NcPoly& q, const Presentation& pres);

struct OverlapTriple {
  std::size_t i = 0, j = 0, k = 0;  // i < j < k
  bool pass = true;
  NcPoly discrepancy;  // route (left pair first) minus route (right pair first)
};

struct OverlapReport {
  bool pass = true;
  std::vector<OverlapTriple> triples;
};

/// Diamond check: the fully inverted word on every triple is reduced starting from each
/// of its two adjacent pairs and the normal forms are compared.
OverlapReport check_pbw_overlaps(const Presentation& pres);

}  // namespace dsmooth
