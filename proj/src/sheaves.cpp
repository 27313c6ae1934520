#include "symcc/sheaves.hpp"

#include "symcc/errors.hpp"

namespace symcc {

namespace {

void require_tame(const SheafDescriptor& d) {
  if (!d.tame) throw UnsupportedError("wildly ramified sheaves are not supported");
}

}  // namespace

SheafDescriptor SheafDescriptor::make(unsigned rank, Divisor drops, bool tame, long coeff_char) {
  if (!is_prime(coeff_char)) {
    throw ArgumentError("coefficient characteristic must be prime, got " + std::to_string(coeff_char));
  }
  if (!drops.effective()) throw ArgumentError("rank drops " + drops.to_string() + " must be effective");
  for (const auto& [p, a] : drops.coeffs()) {
    if (a > static_cast<long>(rank)) {
      throw ArgumentError("rank drop " + std::to_string(a) + " at " + p.id() + " exceeds rank " +
                          std::to_string(rank));
    }
  }
  return SheafDescriptor{rank, std::move(drops), tame, coeff_char};
}

CycleSeries build_series(const SheafDescriptor& d, const CurveContext& ctx, unsigned max_degree) {
  require_tame(d);
  if (ctx.base_char != 0 && d.coeff_char == ctx.base_char) {
    throw PreconditionError("coefficient characteristic " + std::to_string(d.coeff_char) +
                            " must be invertible in the base field of characteristic " +
                            std::to_string(ctx.base_char));
  }
  return s_tame(d.rank, d.drops, max_degree);
}

SheafDescriptor direct_sum(const SheafDescriptor& a, const SheafDescriptor& b) {
  if (a.coeff_char != b.coeff_char) {
    throw ArgumentError("direct sum of sheaves with coefficients of characteristic " +
                        std::to_string(a.coeff_char) + " and " + std::to_string(b.coeff_char));
  }
  return SheafDescriptor{a.rank + b.rank, a.drops + b.drops, a.tame && b.tame, a.coeff_char};
}

CycleSeries shifted_series(const SheafDescriptor& d, const CurveContext& ctx, unsigned max_degree) {
  return series_inverse(build_series(d, ctx, max_degree));
}

long euler_char(const SheafDescriptor& d, const CurveContext& ctx) {
  require_tame(d);
  return static_cast<long>(d.rank) * (2 - 2 * ctx.genus) - d.drops.degree();
}

long n_f(const SheafDescriptor& d, const CurveContext& ctx) {
  const long n = -euler_char(d, ctx);
  if (n != static_cast<long>(d.rank) * ctx.canonical_degree() + d.drops.degree()) {
    throw InternalError("n_F differs from r(2g-2) + deg(drops)");
  }
  return n;
}

}  // namespace symcc
