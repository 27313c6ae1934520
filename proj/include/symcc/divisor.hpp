#ifndef SYMCC_DIVISOR_HPP
#define SYMCC_DIVISOR_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcc/integer.hpp"

namespace symcc {

/// Symbolic point of a curve. Ids are nonempty, printable, and contain no
/// whitespace and none of the separators ':', '*', '+', '-', ';'.
class Point {
 public:
  explicit Point(std::string id);
  const std::string& id() const { return id_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::string id_;
};

/// Formal integer combination of points. No zero coefficients are stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(const Point& p, long coef);

  /// Parses "2*s + 1*t", "s + t", "-2*s", "0". Points are created on first
  /// mention; repeated mentions add up.
  static Divisor parse(std::string_view text);

  const std::map<Point, long>& coeffs() const { return coeffs_; }
  long coef(const Point& p) const;
  void add(const Point& p, long coef);

  long degree() const;
  bool effective() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::set<Point> support() const;

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor scaled(long k) const;

  /// Canonical form "2*s + 1*t" with points sorted by id; "0" when empty.
  std::string to_string() const;
  /// Compact form used inside cycle labels: "2*s+t"; "0" when empty.
  std::string label() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Point, long> coeffs_;
};

/// Coefficientwise comparison a <= b.
bool divisor_leq(const Divisor& a, const Divisor& b);

/// prod over the support of `lower` of C(upper(s), lower(s)); `lower` must be
/// effective (ArgumentError otherwise). `upper` may have negative coefficients.
Integer divisor_binomial(const Divisor& upper, const Divisor& lower);

/// Calls `visit` with every effective divisor 0 <= D <= bound (bound effective).
template <class Visit>
void for_each_effective_below(const Divisor& bound, Visit&& visit);

struct CurveContext {
  long genus = 0;
  /// 0 or a prime.
  long base_char = 0;

  long canonical_degree() const { return 2 * genus - 2; }
  /// Whether the integer k is a unit in a field of characteristic base_char.
  bool invertible(long k) const { return base_char == 0 ? k != 0 : k % base_char != 0; }
};

/// Validates genus >= 0 and base_char in {0} or prime; ArgumentError otherwise.
CurveContext make_curve_context(long genus, long base_char);

bool is_prime(long p);

// ---------------------------------------------------------------------------

template <class Visit>
void for_each_effective_below(const Divisor& bound, Visit&& visit) {
  std::vector<std::pair<Point, long>> pts(bound.coeffs().begin(), bound.coeffs().end());
  std::vector<long> cur(pts.size(), 0);
  while (true) {
    Divisor d;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (cur[k] != 0) d.add(pts[k].first, cur[k]);
    }
    visit(static_cast<const Divisor&>(d));
    std::size_t k = 0;
    while (k < pts.size() && cur[k] == pts[k].second) cur[k++] = 0;
    if (k == pts.size()) return;
    ++cur[k];
  }
}

}  // namespace symcc

#endif  // SYMCC_DIVISOR_HPP
