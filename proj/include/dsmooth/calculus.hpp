#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsmooth/endomorphism.hpp"
#include "dsmooth/presentation.hpp"
#include "dsmooth/rewriting.hpp"

namespace dsmooth {

/// Index subset of {0..n-1} as a bit mask; bit g stands for dx_g.
using Subset = std::uint32_t;

std::vector<std::size_t> members(Subset s);
Subset subset_of(const std::vector<std::size_t>& idx);
int popcount(Subset s);

/// Sum of e_S f_S, e_S = dx_{s1} ^ ... ^ dx_{sk} with s1 < ... < sk, coefficients on the right.
class DiffForm {
 public:
  DiffForm() = default;
  explicit DiffForm(int degree) : degree_(degree) {}
  /// Degree-0 form.
  static DiffForm function(const NcPoly& f);
  /// e_S * f.
  static DiffForm basis(Subset s, const NcPoly& f);

  int degree() const { return degree_; }
  const std::map<Subset, NcPoly>& components() const { return comp_; }
  NcPoly component(Subset s) const;
  bool is_zero() const { return comp_.empty(); }

  /// Adds f to the component at s; zero results are dropped.
  void add(Subset s, const NcPoly& f);
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  DiffForm& operator*=(const Scalar& c);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(DiffForm a, const Scalar& c) { return a *= c; }
  friend bool operator==(const DiffForm&, const DiffForm&) = default;

 private:
  int degree_ = 0;
  std::map<Subset, NcPoly> comp_;
};

/// Presentation plus a pairwise commuting family nu_{x_1..x_n}; owns a rewriter.
class Calculus {
 public:
  /// Throws MismatchedArity on a wrong family size and std::invalid_argument if two
  /// members do not commute.
  Calculus(Presentation pres, std::vector<AffineEndo> nus);
  Calculus(Calculus&&) = default;
  Calculus& operator=(Calculus&&) = default;

  const Presentation& presentation() const { return *pres_; }
  const std::vector<AffineEndo>& nus() const { return nus_; }
  std::size_t size() const { return pres_->size(); }
  Rewriter& rewriter() const { return *rw_; }

  /// Composite of nu_s over s in S (identity for the empty set).
  const AffineEndo& nu(Subset s) const;
  const AffineEndo& nu_omega() const { return nu(full()); }
  Subset full() const { return static_cast<Subset>((std::uint64_t{1} << size()) - 1); }

  std::string format(const DiffForm& f) const;

 private:
  std::shared_ptr<const Presentation> pres_;
  std::vector<AffineEndo> nus_;
  std::unique_ptr<Rewriter> rw_;
  mutable std::map<Subset, AffineEndo> nu_cache_;
};

/// a e_S f = e_S nu_S(a) f.
DiffForm left_act(const Calculus& c, const NcPoly& a, const DiffForm& f);
/// e_S ^ e_T as a multiple of e_{S u T} (zero if S and T meet).
Scalar sort_sign(const Calculus& c, Subset s, Subset t);
/// (e_S f) ^ (e_T g) = (e_S ^ e_T) nu_T(f) g.
DiffForm wedge(const Calculus& c, const DiffForm& f, const DiffForm& g);

/// Twisted partial: d(a) = sum_i dx_i partial_bar_i(a).
NcPoly partial_bar(const Calculus& c, std::size_t i, const NcPoly& a);
/// d(e_S f) = (-1)^k e_S ^ d(f), with d(e_S) = 0.
DiffForm differential(const Calculus& c, const DiffForm& f);

/// All normal monomials of total degree <= D, by degree then exponent order.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned D);
/// Basis of {a : deg a <= D, d(a) = 0}.
std::vector<NcPoly> kernel_of_d_bounded(const Calculus& c, unsigned D);

struct IntegralFormEntry {
  int k = 0;
  Subset s = 0, t = 0;  // t is the complement of s
  Scalar A, Abar;       // omega^k = A e_S, omega_bar^{n-k} = Abar e_T
  Scalar sigma;         // e_T ^ e_S = sigma * omega
  /// The closed-form double products, evaluated literally.
  Scalar closed_A, closed_Abar;
  bool closed_normalized = false;  // closed_Abar * closed_A * sigma == 1
  bool closed_equal = false;       // closed values coincide with (A, Abar)
};

/// One entry per k = 1..n-1 and per k-subset S, subsets in lexicographic order.
std::vector<IntegralFormEntry> integral_form_coefficients(const Calculus& c);

struct IntegrabilityCheck {
  int k = 0;
  std::size_t samples = 0;
  bool first_pass = true, second_pass = true;
  std::optional<std::string> counterexample;
};

struct IntegrabilityReport {
  bool pass = true;
  std::vector<IntegrabilityCheck> levels;
};

/// omega' = sum_i omega_i^k pi(omega_bar_i^{n-k} ^ omega')
///        = sum_i nu_omega^{-1}(pi(omega' ^ omega_i^{n-k})) omega_bar_i^k
/// on `samples` random forms per level (coefficients of degree <= D) plus every basis form.
IntegrabilityReport verify_integrability(const Calculus& c, unsigned D, std::size_t samples,
                                         std::uint64_t seed = 1);

/// Both identities for one form.
bool integrability_holds(const Calculus& c, const std::vector<IntegralFormEntry>& entries,
                         const DiffForm& w, bool second);

}  // namespace dsmooth
