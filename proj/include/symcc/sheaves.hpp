#ifndef SYMCC_SHEAVES_HPP
#define SYMCC_SHEAVES_HPP

#include "symcc/divisor.hpp"
#include "symcc/series.hpp"

namespace symcc {

/// Numerical shadow of a constructible sheaf on a curve: generic rank, rank
/// drops a_s = r - dim F_s at the singular points, tameness, and the
/// characteristic of the coefficient field.
struct SheafDescriptor {
  unsigned rank = 0;
  Divisor drops;
  bool tame = true;
  long coeff_char = 2;

  /// Validates 0 <= a_s <= rank and a prime coeff_char; ArgumentError otherwise.
  static SheafDescriptor make(unsigned rank, Divisor drops, bool tame = true, long coeff_char = 2);

  friend bool operator==(const SheafDescriptor&, const SheafDescriptor&) = default;
};

/// S_F for a tame descriptor. UnsupportedError for wild sheaves;
/// PreconditionError when coeff_char equals the base characteristic.
CycleSeries build_series(const SheafDescriptor& d, const CurveContext& ctx, unsigned max_degree);

/// F' (+) F'': ranks and drops add. ArgumentError on mismatched coefficients.
SheafDescriptor direct_sum(const SheafDescriptor& a, const SheafDescriptor& b);

/// S_{F[1]} = S_F^{-1}.
CycleSeries shifted_series(const SheafDescriptor& d, const CurveContext& ctx, unsigned max_degree);

/// Tame Grothendieck-Ogg-Shafarevich: chi = r(2 - 2g) - deg(drops).
long euler_char(const SheafDescriptor& d, const CurveContext& ctx);

/// n_F = r(2g - 2) + deg(drops) = -chi.
long n_f(const SheafDescriptor& d, const CurveContext& ctx);

}  // namespace symcc

#endif  // SYMCC_SHEAVES_HPP
