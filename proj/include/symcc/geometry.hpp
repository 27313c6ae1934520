#ifndef SYMCC_GEOMETRY_HPP
#define SYMCC_GEOMETRY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "symcc/combinat.hpp"
#include "symcc/divisor.hpp"
#include "symcc/sheaves.hpp"

namespace symcc {

/// D = delta + sum_i i * parts[i], with delta <= drops and parts[i] effective.
struct TypedDecomposition {
  Divisor delta;
  std::map<unsigned, Divisor> parts;

  /// The e-typed part D' = sum_i i * D'_i.
  Divisor typed_part() const;
  Divisor total() const { return delta + typed_part(); }
  /// e_i = deg D'_i.
  MultVec type() const;
};

/// D'^{reduced} = sum_i D'_i.
Divisor reduced_support(const TypedDecomposition& dec);

enum class Verdict { acyclic_everywhere, acyclic_off_KF, not_covered };

std::string to_string(Verdict v);

struct AcyclicityReport {
  Verdict verdict = Verdict::not_covered;
  long n_f = 0;
  /// "r·K_X + [drops]"; empty when n_F <= 0.
  std::string k_f_label;
  /// drops + r div(omega), only for acyclic_off_KF with omega supplied.
  std::optional<Divisor> critical_divisor;
};

/// Local acyclicity of (X^(n) -> Pic^n, F^(n)). For n < n_F no claim is made.
/// ArgumentError when n < 1.
AcyclicityReport acyclicity(const CurveContext& ctx, const SheafDescriptor& d, long n,
                            const std::optional<Divisor>& div_omega = std::nullopt);

/// "r·K_X + [drops]".
std::string k_f_label(const SheafDescriptor& d);

struct SingularityCertificate {
  Divisor delta;
  MultVec e;
  std::string constraint;

  friend bool operator==(const SingularityCertificate& a, const SingularityCertificate& b) {
    return a.delta == b.delta && a.e == b.e;
  }
};

/// Searches the labels (delta <= drops, e with parts <= r, deg delta + ||e|| = n)
/// of S_F in degree n for one with |e| <= 2g - 2, i.e. one where a nonzero
/// form vanishing on the reduced support could exist. For n >= n_F the answer
/// is unique: (drops, {r: 2g-2}) at n = n_F, none above. Below n_F the
/// candidate of smallest |e| is returned. Requires r >= 1.
std::optional<SingularityCertificate> singularity_certificate(const CurveContext& ctx,
                                                              const SheafDescriptor& d, long n);

/// drops + r * div_omega. div_omega must be effective of degree 2g - 2 with g >= 1.
Divisor critical_point(const CurveContext& ctx, const SheafDescriptor& d, const Divisor& div_omega);

struct EpsilonReport {
  long n = 0;
  int sign = 1;
  Divisor critical_divisor;
  std::string k_f_label;
  std::set<Point> sigma;
  std::string localization;
};

/// Symbolic localization of det R Gamma(X, F) at the critical divisor.
/// PreconditionError when n_F <= 0.
EpsilonReport epsilon_report(const CurveContext& ctx, const SheafDescriptor& d, const Divisor& div_omega);

struct RiemannRochReport {
  long chi_coh = 0;
  bool h0_positive = false;
  bool aj_smooth = false;
};

/// chi(L) = deg - g + 1; h0 > 0 once deg >= g; Abel-Jacobi smooth for deg > 2g - 2.
RiemannRochReport riemann_roch(const CurveContext& ctx, long deg);

}  // namespace symcc

#endif  // SYMCC_GEOMETRY_HPP
