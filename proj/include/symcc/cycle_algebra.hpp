#ifndef SYMCC_CYCLE_ALGEBRA_HPP
#define SYMCC_CYCLE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "symcc/combinat.hpp"
#include "symcc/divisor.hpp"
#include "symcc/integer.hpp"

namespace symcc {

/// Label (delta, e) of the basic cycle tau*_{delta,e} on T*X^(n) with
/// n = deg(delta) + ||e||. The empty label is the unit.
class TauBasis {
 public:
  TauBasis() = default;
  /// `delta` must be effective.
  TauBasis(Divisor delta, MultVec e);
  explicit TauBasis(MultVec e) : TauBasis(Divisor(), std::move(e)) {}
  explicit TauBasis(Divisor delta) : TauBasis(std::move(delta), MultVec()) {}

  /// Parses "s; 1^2 3^1", "0; 2^1", "s;" (or with the surrounding tau[...]).
  static TauBasis parse(std::string_view text);

  const Divisor& delta() const { return delta_; }
  const MultVec& e() const { return e_; }
  unsigned grade() const { return static_cast<unsigned>(delta_.degree()) + e_.weight(); }
  bool is_unit() const { return delta_.is_zero() && e_.empty(); }

  /// "tau[s; 1^2 3^1]", "tau[0; 2^1]", "tau[s;]".
  std::string to_string() const;

  friend bool operator==(const TauBasis& a, const TauBasis& b) {
    return a.delta_ == b.delta_ && a.e_ == b.e_;
  }
  /// Orders by the canonical divisor string, then by e as a sparse list.
  friend bool operator<(const TauBasis& a, const TauBasis& b) {
    if (a.delta_key_ != b.delta_key_) return a.delta_key_ < b.delta_key_;
    return a.e_ < b.e_;
  }

 private:
  Divisor delta_;
  MultVec e_;
  std::string delta_key_ = "0";
};

/// Integer combination of basis cycles, all of the same degree.
class CycleSum {
 public:
  using Terms = std::map<TauBasis, Integer>;

  explicit CycleSum(unsigned degree = 0) : degree_(degree) {}
  static CycleSum unit() { return term(TauBasis(), 1); }
  static CycleSum term(const TauBasis& b, const Integer& coef);

  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coef(const TauBasis& b) const;

  /// Adds coef * b; throws ArgumentError when b has the wrong grade.
  void add(const TauBasis& b, const Integer& coef);
  CycleSum& operator+=(const CycleSum& other);
  CycleSum operator+(const CycleSum& other) const;
  CycleSum operator-(const CycleSum& other) const;
  CycleSum operator-() const { return scaled(-1); }
  CycleSum scaled(const Integer& k) const;

  friend bool operator==(const CycleSum&, const CycleSum&) = default;

 private:
  unsigned degree_;
  Terms terms_;
};

/// Coefficients N(e, e'; f) of tau*_e . tau*_{e'} = sum_f N tau*_f.
using StructureMap = std::map<MultVec, Integer>;

/// Closed enumeration over matching matrices between the blocks of a set
/// partition of type e and one of type e'. Results are memoized; safe to call
/// concurrently.
std::shared_ptr<const StructureMap> structure_constants(const MultVec& e, const MultVec& e2);

/// Brute force over all set partitions C of I u I' with C n I in A u {0} and
/// C n I' in A' u {0}. Refuses ||e|| + ||e'|| > 10.
StructureMap oracle_structure_constants(const MultVec& e, const MultVec& e2);

/// d-fold generalization of the oracle: set partitions of I_1 u ... u I_d
/// restricting to the given partitions, each weighted by f!. Refuses total > 10.
/// Returns the coefficients of prod_i tau*_{A_i} in the tau*_f basis.
StructureMap oracle_product_of_set_partitions(const std::vector<MultVec>& types);

/// Bilinear product; tau*_{D,e} . tau*_{D',e'} = sum_f N(e,e';f) tau*_{D+D',f}.
CycleSum multiply(const CycleSum& a, const CycleSum& b);

/// prod_i tau*_{A_i} where A_i has type types[i] and tau*_A = e! tau*_e.
CycleSum product_of_set_partitions(const std::vector<MultVec>& types);

/// Finite set of labels of one common grade.
class SupportSet {
 public:
  explicit SupportSet(unsigned grade = 0) : grade_(grade) {}
  SupportSet(unsigned grade, std::set<TauBasis> labels);
  static SupportSet unit() { return SupportSet(0, {TauBasis()}); }
  static SupportSet of(const CycleSum& z);

  unsigned grade() const { return grade_; }
  const std::set<TauBasis>& labels() const { return labels_; }
  void insert(const TauBasis& b);

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  unsigned grade_;
  std::set<TauBasis> labels_;
};

/// Labels (D+D', f) over all pairs with N(e,e';f) != 0.
SupportSet support_vee(const SupportSet& a, const SupportSet& b);

struct StratumInfo {
  MultVec e;
  unsigned dimension;
  /// Every i with e_i != 0 is invertible in the base characteristic.
  bool smooth_param;
};

/// One entry per e with ||e|| = n, in reverse lexicographic order of the
/// associated partitions.
std::vector<StratumInfo> stratum_report(unsigned n, const CurveContext& ctx);

}  // namespace symcc

#endif  // SYMCC_CYCLE_ALGEBRA_HPP
