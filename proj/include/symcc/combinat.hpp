#ifndef SYMCC_COMBINAT_HPP
#define SYMCC_COMBINAT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcc/integer.hpp"

namespace symcc {

/// Integer partition: parts weakly decreasing, all >= 1.
class Partition {
 public:
  Partition() = default;
  /// Validates that `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<unsigned> parts);
  /// Sorts `parts` into decreasing order first; zero parts are rejected.
  static Partition from_unsorted(std::vector<unsigned> parts);
  /// Parses "2,1,1" (or the empty string).
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return n_; }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// Multiplicity vector e = (e_1, e_2, ...): e_i parts (or blocks) of size i.
/// Stored sparsely as (i, e_i) pairs sorted by i with every e_i >= 1.
class MultVec {
 public:
  using Entry = std::pair<unsigned, unsigned>;

  MultVec() = default;
  /// Accepts entries in any order; merges repeated sizes and drops zeros.
  explicit MultVec(std::vector<Entry> entries);
  /// Parses "1^2 3^1"; a bare "2" means 2^1. Empty text is the empty vector.
  static MultVec parse(std::string_view text);

  const std::vector<Entry>& entries() const { return entries_; }
  unsigned count(unsigned i) const;
  void add(unsigned i, unsigned k = 1);

  /// |e| = sum of e_i (number of parts).
  unsigned cardinality() const;
  /// ||e|| = sum of i * e_i (the degree).
  unsigned weight() const;
  bool empty() const { return entries_.empty(); }

  /// "1^2 3^1"; empty string for the empty vector.
  std::string to_string() const;

  friend bool operator==(const MultVec&, const MultVec&) = default;
  friend auto operator<=>(const MultVec& a, const MultVec& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<Entry> entries_;
};

MultVec lambda_to_e(const Partition& lambda);
Partition e_to_lambda(const MultVec& e);

/// e! = prod_i e_i!
Integer e_factorial(const MultVec& e);

/// Young-diagram transpose.
Partition conjugate(const Partition& lambda);

/// All partitions of n, in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(unsigned n);

/// All compositions of n with positive parts, in lexicographic order.
std::vector<std::vector<unsigned>> compositions_of(unsigned n);

/// All vectors in N^r summing to n (zero entries allowed).
std::vector<std::vector<unsigned>> weak_compositions(unsigned n, unsigned r);

/// Number of 0-1 matrices of shape l x m with row sums lambda and column sums
/// mu. Zero entries of mu are allowed. Throws ArgumentError when |mu| != |lambda|.
Integer count_m(const Partition& lambda, const std::vector<unsigned>& mu);

/// Same count by enumerating all 2^(l*m) subsets; refuses l*m > 24.
Integer count_m_exhaustive(const Partition& lambda, const std::vector<unsigned>& mu);

/// True iff `coarse` arises from `fine` by repeatedly merging two parts into
/// their sum. Reflexive. Throws ArgumentError on a size mismatch.
bool merge_closure_leq(const Partition& fine, const Partition& coarse);

/// Partition of a finite set of integer labels. Canonical form: each block
/// sorted, blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  /// {1..l_1}, {l_1+1..l_1+l_2}, ... for the parts of lambda.
  static SetPartition canonical(const Partition& lambda);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<int> ground() const;
  std::size_t block_count() const { return blocks_.size(); }

  /// e_i = number of blocks of size i.
  MultVec type() const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Calls `visit` with every set partition of {0, ..., n-1}, encoded as a
/// restricted growth string (block index of each element).
template <class Visit>
void for_each_set_partition(unsigned n, Visit&& visit) {
  std::vector<unsigned> rgs(n, 0), maxes(n, 0);
  if (n == 0) {
    visit(rgs, 0u);
    return;
  }
  while (true) {
    visit(rgs, maxes[n - 1] + 1);
    // advance to the next restricted growth string
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rgs[k] = 0;
      maxes[k] = maxes[i];
    }
  }
}

/// Bell number B(n).
Integer bell_number(unsigned n);

/// Every set partition of the same ground set whose blocks are unions of
/// blocks of `a`; includes `a`. Sorted with finer partitions first.
std::vector<SetPartition> coarsenings(const SetPartition& a);

}  // namespace symcc

#endif  // SYMCC_COMBINAT_HPP
