#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dsmooth/diffusion.hpp"
#include "dsmooth/presentation.hpp"

namespace dsmooth {

enum class AlgebraKind { skew, diffusion1, diffusion2 };
std::string to_string(AlgebraKind k);

/// Parsed `.alg` file.
///
///     name: theorem1_case_i
///     kind: skew                      # skew | diffusion1 | diffusion2
///     field: Q                        # Q | Fp:<prime>, p >= 5
///     n: 3
///     x1*x2 - 5*x2*x1 = 0             # skew: x<i>*x<j> - a*x<j>*x<i> = linear, i < j
///     lambda(1,2) = 2                 # diffusion: ordered pair, default 1
///     x(1) = 5                        # diffusion1 only, default 0
///
/// Unlisted skew pairs commute. `#` starts a comment.
struct AlgebraFile {
  std::string name = "unnamed";
  AlgebraKind kind = AlgebraKind::skew;
  std::variant<Presentation, DiffusionPresentation> algebra;

  const Field& field() const;
  std::size_t n() const;
  bool is_skew() const { return kind == AlgebraKind::skew; }
  const Presentation& skew() const { return std::get<Presentation>(algebra); }
  const DiffusionPresentation& diffusion() const { return std::get<DiffusionPresentation>(algebra); }

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws SyntaxError, DuplicatePair, ZeroQuadCoeff, ZeroLambda or BadCharacteristic.
AlgebraFile parse_algebra(std::string_view text);
std::string emit_algebra(const AlgebraFile& f);
/// Reads and parses a file; std::runtime_error if it cannot be opened.
AlgebraFile read_algebra_file(const std::string& path);

/// The skew presentation, or the DESCENDING encoding of a diffusion algebra.
Presentation presentation_of(const AlgebraFile& f);

}  // namespace dsmooth
