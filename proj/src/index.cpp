#include "symcc/index.hpp"

#include "symcc/errors.hpp"
#include "symcc/series.hpp"

namespace symcc {

std::vector<Integer> chi_sym_powers(long chi, unsigned max_degree) {
  std::vector<Integer> out;
  out.reserve(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) out.push_back(sign_power(n) * gen_binomial(-chi, n));
  return out;
}

const Integer& DegreeTable::at(const Partition& lambda) const {
  auto it = entries.find(lambda);
  if (it == entries.end()) {
    throw ArgumentError("no degree for " + lambda.to_string() + " (table stops at degree " +
                        std::to_string(max_degree) + ")");
  }
  return it->second;
}

const Integer& DegreeTable::at(const MultVec& e) const { return at(e_to_lambda(e)); }

std::vector<std::pair<Partition, Integer>> DegreeTable::row(unsigned n) const {
  std::vector<std::pair<Partition, Integer>> out;
  for (const auto& lambda : partitions_of(n)) out.emplace_back(lambda, at(lambda));
  return out;
}

DegreeTable infer_degrees(long genus, unsigned max_degree) {
  if (genus < 0) throw ArgumentError("genus must be nonnegative");
  DegreeTable table;
  table.genus = genus;
  table.max_degree = max_degree;
  const std::vector<Integer> chi = chi_sym_powers(2 - 2 * genus, max_degree);

  for (unsigned n = 0; n <= max_degree; ++n) {
    const auto parts = partitions_of(n);
    const std::size_t k = parts.size();
    const Integer sign = sign_power(n);
    auto rhs_of = [&](const std::vector<unsigned>& mu) {
      Integer r = 1;
      for (unsigned j : mu) r *= chi[j];
      return r;
    };

    // coef[a][b] = m_{parts[a]^T, parts[b]}: must be upper unit triangular.
    std::vector<std::vector<Integer>> coef(k, std::vector<Integer>(k));
    for (std::size_t a = 0; a < k; ++a) {
      const Partition nu_t = conjugate(parts[a]);
      for (std::size_t b = 0; b < k; ++b) {
        coef[a][b] = count_m(nu_t, parts[b].parts());
        if ((a == b && coef[a][b] != 1) || (a > b && coef[a][b] != 0)) {
          throw InternalError("m-matrix is not unit upper triangular at degree " + std::to_string(n));
        }
      }
    }

    // Equation for mu = parts[b]: sum_{a <= b} coef[a][b] y_a = sign * rhs,
    // where y_a = d_{parts[a]^T}. Forward substitution in b.
    std::vector<Integer> y(k);
    for (std::size_t b = 0; b < k; ++b) {
      Integer acc = sign * rhs_of(parts[b].parts());
      for (std::size_t a = 0; a < b; ++a) acc -= coef[a][b] * y[a];
      y[b] = acc;
    }
    for (std::size_t a = 0; a < k; ++a) table.entries[conjugate(parts[a])] = y[a];

    // Every composition gives an equation; all must hold.
    for (const auto& mu : compositions_of(n)) {
      Integer lhs = 0;
      for (const auto& lambda : parts) lhs += count_m(lambda, mu) * table.entries[lambda];
      if (sign * lhs != rhs_of(mu)) {
        throw InternalError("index system inconsistent at degree " + std::to_string(n) + " for genus " +
                            std::to_string(genus));
      }
    }
  }
  return table;
}

std::vector<IndexCheckRow> index_check_rows(const CurveContext& ctx, const SheafDescriptor& d, unsigned max_degree) {
  const DegreeTable table = infer_degrees(ctx.genus, max_degree);
  const CycleSeries series = build_series(d, ctx, max_degree);
  const std::vector<Integer> euler = chi_sym_powers(euler_char(d, ctx), max_degree);
  std::vector<IndexCheckRow> rows;
  for (unsigned n = 0; n <= max_degree; ++n) {
    Integer lhs = 0;
    for (const auto& [b, c] : series[n].terms()) lhs += c * table.at(b.e());
    rows.push_back({n, lhs, euler[n]});
  }
  return rows;
}

bool index_check(const CurveContext& ctx, const SheafDescriptor& d, unsigned max_degree) {
  for (const auto& row : index_check_rows(ctx, d, max_degree)) {
    if (row.intersection != row.euler) return false;
  }
  return true;
}

}  // namespace symcc
