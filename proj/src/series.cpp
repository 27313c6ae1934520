#include "symcc/series.hpp"

#include <numeric>

#include "symcc/errors.hpp"

namespace symcc {

CycleSeries::CycleSeries(unsigned max_degree) {
  components_.reserve(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) components_.emplace_back(n);
}

CycleSeries CycleSeries::one(unsigned max_degree) {
  CycleSeries s(max_degree);
  s.components_[0] = CycleSum::unit();
  return s;
}

void CycleSeries::add(const CycleSum& z) {
  if (z.degree() > max_degree()) return;
  components_[z.degree()] += z;
}

void CycleSeries::add(const TauBasis& b, const Integer& coef) {
  if (b.grade() > max_degree()) return;
  components_[b.grade()].add(b, coef);
}

CycleSeries CycleSeries::operator+(const CycleSeries& other) const {
  if (other.max_degree() != max_degree()) throw ArgumentError("series truncation mismatch");
  CycleSeries r = *this;
  for (unsigned n = 0; n <= max_degree(); ++n) r.components_[n] += other.components_[n];
  return r;
}

CycleSeries CycleSeries::operator-(const CycleSeries& other) const {
  if (other.max_degree() != max_degree()) throw ArgumentError("series truncation mismatch");
  CycleSeries r = *this;
  for (unsigned n = 0; n <= max_degree(); ++n) r.components_[n] += -other.components_[n];
  return r;
}

CycleSeries series_mul(const CycleSeries& a, const CycleSeries& b) {
  if (a.max_degree() != b.max_degree()) {
    throw ArgumentError("series truncation mismatch: " + std::to_string(a.max_degree()) + " vs " +
                        std::to_string(b.max_degree()));
  }
  const unsigned N = a.max_degree();
  CycleSeries out(N);
  for (unsigned i = 0; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= N; ++j) {
      if (b[j].is_zero()) continue;
      out.add(multiply(a[i], b[j]));
    }
  }
  return out;
}

CycleSeries series_pow(const CycleSeries& s, unsigned k) {
  CycleSeries result = CycleSeries::one(s.max_degree());
  CycleSeries base = s;
  while (k > 0) {
    if (k & 1u) result = series_mul(result, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

CycleSeries series_inverse(const CycleSeries& s) {
  if (s[0] != CycleSum::unit()) {
    throw ArgumentError("series_inverse: degree-0 component must be exactly 1");
  }
  const unsigned N = s.max_degree();
  // x = 1 - s has no degree-0 part, so x^k starts in degree k.
  const CycleSeries x = CycleSeries::one(N) - s;
  CycleSeries acc = CycleSeries::one(N);
  CycleSeries power = CycleSeries::one(N);
  for (unsigned k = 1; k <= N; ++k) {
    power = series_mul(power, x);
    acc = acc + power;
  }
  return acc;
}

CycleSeries s_constant_rank_closed(unsigned r, unsigned max_degree) {
  CycleSeries out(max_degree);
  for (unsigned n = 0; n <= max_degree; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      Integer c = sign_power(n);
      for (unsigned part : lambda.parts()) c *= gen_binomial(static_cast<long>(r), part);
      if (c != 0) out.add(TauBasis(lambda_to_e(lambda)), c);
    }
  }
  return out;
}

CycleSeries s_constant_rank(unsigned r, unsigned max_degree) {
  CycleSeries closed = s_constant_rank_closed(r, max_degree);
  if (r > 1) {
    CycleSeries powered = series_pow(s_constant_rank_closed(1, max_degree), r);
    if (powered != closed) {
      throw InternalError("constant-rank series: closed form differs from (S_Lambda)^" + std::to_string(r));
    }
  }
  return closed;
}

CycleSeries s_skyscraper(const Divisor& stalks, bool shifted, unsigned max_degree) {
  if (!stalks.effective()) {
    throw ArgumentError("skyscraper stalk dimensions " + stalks.to_string() + " must be effective");
  }
  CycleSeries out(max_degree);
  // Shifted: 0 <= D <= stalks. Unshifted: every effective D on the support.
  Divisor bound;
  if (shifted) {
    bound = stalks;
  } else {
    for (const auto& [p, c] : stalks.coeffs()) bound.add(p, static_cast<long>(max_degree));
  }
  const Divisor upper = shifted ? stalks : stalks.scaled(-1);
  for_each_effective_below(bound, [&](const Divisor& d) {
    if (d.degree() > static_cast<long>(max_degree)) return;
    Integer c = sign_power(static_cast<unsigned long>(d.degree())) * divisor_binomial(upper, d);
    out.add(TauBasis(d), c);
  });
  return out;
}

namespace {

void check_drops(unsigned r, const Divisor& drops) {
  if (!drops.effective()) {
    throw ArgumentError("rank drops " + drops.to_string() + " must be effective");
  }
  for (const auto& [p, a] : drops.coeffs()) {
    if (a > static_cast<long>(r)) {
      throw ArgumentError("rank drop " + std::to_string(a) + " at " + p.id() + " exceeds rank " +
                          std::to_string(r));
    }
  }
}

}  // namespace

CycleSeries s_tame_closed(unsigned r, const Divisor& drops, unsigned max_degree) {
  check_drops(r, drops);
  CycleSeries out(max_degree);
  for_each_effective_below(drops, [&](const Divisor& d) {
    const long dd = d.degree();
    if (dd > static_cast<long>(max_degree)) return;
    const Integer cd = divisor_binomial(drops, d);
    for (unsigned n = static_cast<unsigned>(dd); n <= max_degree; ++n) {
      for (const auto& lambda : partitions_of(n - static_cast<unsigned>(dd))) {
        Integer c = sign_power(n) * cd;
        for (unsigned part : lambda.parts()) c *= gen_binomial(static_cast<long>(r), part);
        if (c != 0) out.add(TauBasis(d, lambda_to_e(lambda)), c);
      }
    }
  });
  return out;
}

CycleSeries s_tame(unsigned r, const Divisor& drops, unsigned max_degree) {
  check_drops(r, drops);
  CycleSeries product =
      series_mul(s_constant_rank(r, max_degree), s_skyscraper(drops, /*shifted=*/true, max_degree));
  if (product != s_tame_closed(r, drops, max_degree)) {
    throw InternalError("tame series: product form and closed form differ");
  }
  return product;
}

CycleSum cc_pushforward_composition(const std::vector<unsigned>& mu) {
  for (unsigned p : mu) {
    if (p == 0) throw ArgumentError("composition parts must be positive");
  }
  const unsigned n = std::accumulate(mu.begin(), mu.end(), 0u);
  const Integer sign = sign_power(n);
  CycleSum via_count(n);
  for (const auto& lambda : partitions_of(n)) {
    Integer m = count_m(lambda, mu);
    if (m != 0) via_count.add(TauBasis(lambda_to_e(lambda)), sign * m);
  }
  CycleSum via_product = CycleSum::unit();
  for (unsigned p : mu) via_product = multiply(via_product, CycleSum::term(TauBasis(MultVec({{1, p}})), 1));
  via_product = via_product.scaled(sign);
  if (via_product != via_count) {
    throw InternalError("pushforward along a composition: m-count form differs from the product form");
  }
  return via_count;
}

CycleSum cc_pushforward_partition(const Partition& lambda, const CurveContext& ctx) {
  for (unsigned part : lambda.parts()) {
    if (!ctx.invertible(part)) {
      throw PreconditionError("part " + std::to_string(part) + " of " + lambda.to_string() +
                              " is not invertible in characteristic " + std::to_string(ctx.base_char));
    }
  }
  const Integer sign = sign_power(lambda.length());
  CycleSum out(lambda.size());
  for (const auto& b : coarsenings(SetPartition::canonical(lambda))) {
    const MultVec f = b.type();
    out.add(TauBasis(f), sign * e_factorial(f));
  }
  CycleSum via_product = CycleSum::unit();
  for (unsigned part : lambda.parts()) {
    via_product = multiply(via_product, CycleSum::term(TauBasis(MultVec({{part, 1}})), -1));
  }
  if (via_product != out) {
    throw InternalError("pushforward along X^A: coarsening sum differs from the product form");
  }
  return out;
}

}  // namespace symcc
