#ifndef SYMCC_SERIES_HPP
#define SYMCC_SERIES_HPP

#include <vector>

#include "symcc/combinat.hpp"
#include "symcc/cycle_algebra.hpp"
#include "symcc/divisor.hpp"

namespace symcc {

/// Graded series sum_n s_n with s_n in degree n, truncated after max_degree.
class CycleSeries {
 public:
  /// The zero series with components of degree 0..max_degree.
  explicit CycleSeries(unsigned max_degree);
  static CycleSeries one(unsigned max_degree);

  unsigned max_degree() const { return static_cast<unsigned>(components_.size()) - 1; }
  const std::vector<CycleSum>& components() const { return components_; }
  const CycleSum& operator[](unsigned n) const { return components_.at(n); }

  /// Adds z into the component of degree z.degree(); ignored above max_degree.
  void add(const CycleSum& z);
  void add(const TauBasis& b, const Integer& coef);

  CycleSeries operator+(const CycleSeries& other) const;
  CycleSeries operator-(const CycleSeries& other) const;

  friend bool operator==(const CycleSeries&, const CycleSeries&) = default;

 private:
  std::vector<CycleSum> components_;
};

/// Truncated Cauchy product. ArgumentError on a truncation mismatch.
CycleSeries series_mul(const CycleSeries& a, const CycleSeries& b);
CycleSeries series_pow(const CycleSeries& s, unsigned k);

/// Geometric series in x = 1 - s. The degree-0 component must be exactly 1.
CycleSeries series_inverse(const CycleSeries& s);

/// Series of the constant sheaf of rank r:
/// degree n is (-1)^n sum_{||e|| = n} prod_i C(r, i)^{e_i} tau*_e.
/// Also checks the result against (S_Lambda)^r and throws InternalError on
/// a mismatch.
CycleSeries s_constant_rank(unsigned r, unsigned max_degree);

/// Closed form only, without the power cross-check.
CycleSeries s_constant_rank_closed(unsigned r, unsigned max_degree);

/// Skyscraper with stalk dimensions given by `stalks`. shifted: prod (1 - tau*_s)^{r_s};
/// otherwise the inverse, sum_D (-1)^{|D|} C(-stalks, D) tau*_D.
CycleSeries s_skyscraper(const Divisor& stalks, bool shifted, unsigned max_degree);

/// Tame sheaf of generic rank r with rank drops `drops`. Builds
/// S_{Lambda^r} * prod (1 - tau*_s)^{a_s} and the closed form
/// (-1)^n sum C(drops, D) prod C(r, i)^{e_i} tau*_{D,e}; throws InternalError
/// if they differ. ArgumentError when some a_s > r or drops is not effective.
CycleSeries s_tame(unsigned r, const Divisor& drops, unsigned max_degree);

/// Closed form of the tame series alone.
CycleSeries s_tame_closed(unsigned r, const Divisor& drops, unsigned max_degree);

/// Characteristic cycle of the pushforward of the constant sheaf along
/// prod_j X^(mu_j) -> X^(n): (-1)^n sum_lambda m_{lambda,mu} tau*_lambda.
/// Cross-checked against (-1)^n prod_j tau*_{1^{mu_j}}.
CycleSum cc_pushforward_composition(const std::vector<unsigned>& mu);

/// Characteristic cycle of the pushforward along X^A -> X^(n) for a set
/// partition A of type lambda: (-1)^l sum over coarsenings B of tau*_B.
/// PreconditionError when some part is not invertible in ctx.base_char.
CycleSum cc_pushforward_partition(const Partition& lambda, const CurveContext& ctx);

}  // namespace symcc

#endif  // SYMCC_SERIES_HPP
