#ifndef SYMCC_INDEX_HPP
#define SYMCC_INDEX_HPP

#include <map>
#include <vector>

#include "symcc/combinat.hpp"
#include "symcc/divisor.hpp"
#include "symcc/integer.hpp"
#include "symcc/sheaves.hpp"

namespace symcc {

/// Coefficients of (1 - t)^{-chi} up to t^max_degree: the Euler
/// characteristics of the symmetric powers of a sheaf with Euler characteristic chi.
std::vector<Integer> chi_sym_powers(long chi, unsigned max_degree);

/// Intersection degrees d_lambda(g) of tau*_lambda with the zero section,
/// for every partition of 0..max_degree.
struct DegreeTable {
  long genus = 0;
  unsigned max_degree = 0;
  std::map<Partition, Integer> entries;

  const Integer& at(const Partition& lambda) const;
  const Integer& at(const MultVec& e) const;
  /// Partitions of n in reverse lexicographic order with their degrees.
  std::vector<std::pair<Partition, Integer>> row(unsigned n) const;
};

/// Solves (-1)^n sum_lambda m_{lambda,mu} d_lambda = prod_j chi(X^(mu_j)) over
/// partitions mu of each n <= max_degree, using the unit triangular shape of
/// (m_{lambda^T, mu}) in reverse lexicographic order; then re-checks every
/// composition mu. Any failure of triangularity or consistency throws InternalError.
DegreeTable infer_degrees(long genus, unsigned max_degree);

struct IndexCheckRow {
  unsigned degree;
  Integer intersection;  // sum over terms of coef * d_e
  Integer euler;         // chi(X^(n), F^(n))
};

/// Per-degree comparison of the index formula for build_series(d).
std::vector<IndexCheckRow> index_check_rows(const CurveContext& ctx, const SheafDescriptor& d, unsigned max_degree);

/// True iff every row agrees. Labels tau*_{D,e} are given the degree d_e.
bool index_check(const CurveContext& ctx, const SheafDescriptor& d, unsigned max_degree);

}  // namespace symcc

#endif  // SYMCC_INDEX_HPP
