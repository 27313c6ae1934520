#include "symcc/geometry.hpp"

#include <tuple>

#include "symcc/errors.hpp"

namespace symcc {

Divisor TypedDecomposition::typed_part() const {
  Divisor d;
  for (const auto& [i, part] : parts) d = d + part.scaled(static_cast<long>(i));
  return d;
}

MultVec TypedDecomposition::type() const {
  MultVec e;
  for (const auto& [i, part] : parts) {
    if (!part.effective()) throw ArgumentError("decomposition part " + part.to_string() + " is not effective");
    e.add(i, static_cast<unsigned>(part.degree()));
  }
  return e;
}

Divisor reduced_support(const TypedDecomposition& dec) {
  Divisor d;
  for (const auto& [i, part] : dec.parts) d = d + part;
  return d;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::acyclic_everywhere:
      return "acyclic_everywhere";
    case Verdict::acyclic_off_KF:
      return "acyclic_off_KF";
    case Verdict::not_covered:
      return "not_covered";
  }
  return "not_covered";
}

std::string k_f_label(const SheafDescriptor& d) {
  return std::to_string(d.rank) + "·K_X + [" + d.drops.label() + "]";
}

AcyclicityReport acyclicity(const CurveContext& ctx, const SheafDescriptor& d, long n,
                            const std::optional<Divisor>& div_omega) {
  if (n < 1) throw ArgumentError("acyclicity: degree n must be positive, got " + std::to_string(n));
  AcyclicityReport rep;
  rep.n_f = n_f(d, ctx);
  if (rep.n_f > 0) rep.k_f_label = k_f_label(d);
  if (n > rep.n_f) {
    rep.verdict = Verdict::acyclic_everywhere;
  } else if (n == rep.n_f) {
    rep.verdict = Verdict::acyclic_off_KF;
    if (div_omega) rep.critical_divisor = critical_point(ctx, d, *div_omega);
  } else {
    rep.verdict = Verdict::not_covered;
  }
  return rep;
}

std::optional<SingularityCertificate> singularity_certificate(const CurveContext& ctx,
                                                              const SheafDescriptor& d, long n) {
  if (d.rank == 0) throw PreconditionError("singularity certificate needs rank >= 1");
  const long nf = n_f(d, ctx);
  const long r = static_cast<long>(d.rank);
  const long bound = ctx.canonical_degree();

  std::vector<SingularityCertificate> found;
  for_each_effective_below(d.drops, [&](const Divisor& delta) {
    const long rest = n - delta.degree();
    if (rest < 0) return;
    long min_card = -1;
    for (const auto& lambda : partitions_of(static_cast<unsigned>(rest))) {
      if (!lambda.empty() && lambda.parts().front() > static_cast<unsigned>(r)) continue;
      const long card = static_cast<long>(lambda.length());
      if (min_card < 0 || card < min_card) min_card = card;
      if (card <= bound) found.push_back({delta, lambda_to_e(lambda), {}});
    }
    const long expected = (rest + r - 1) / r;
    if (min_card != expected) {
      throw InternalError("minimal number of parts " + std::to_string(min_card) + " differs from ceil(" +
                          std::to_string(rest) + "/" + std::to_string(r) + ")");
    }
  });
  if (found.empty()) return std::nullopt;

  if (n > nf) throw InternalError("singular label found above the critical degree");
  if (n == nf) {
    if (found.size() != 1) throw InternalError("critical-degree certificate is not unique");
    SingularityCertificate c = found.front();
    if (c.delta != d.drops || c.e != MultVec({{d.rank, static_cast<unsigned>(bound)}})) {
      throw InternalError("critical-degree certificate is not (drops, {r: 2g-2})");
    }
    c.constraint = "D = " + d.drops.label() + " + " + std::to_string(r) + "*D'' with [D''] = K_X";
    return c;
  }
  auto best = std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.e.cardinality(), a.delta.to_string(), a.e) <
           std::make_tuple(b.e.cardinality(), b.delta.to_string(), b.e);
  });
  SingularityCertificate c = *best;
  c.constraint = "D = " + c.delta.label() + " + D' with deg(D' reduced) = " + std::to_string(c.e.cardinality()) +
                 " <= 2g-2 = " + std::to_string(bound) + "; nonzero forms vanishing on it are not excluded";
  return c;
}

Divisor critical_point(const CurveContext& ctx, const SheafDescriptor& d, const Divisor& div_omega) {
  if (ctx.genus < 1) throw PreconditionError("critical point needs genus >= 1 (a nonzero differential)");
  if (!div_omega.effective()) {
    throw ArgumentError("div(omega) = " + div_omega.to_string() + " must be effective");
  }
  if (div_omega.degree() != ctx.canonical_degree()) {
    throw ArgumentError("div(omega) has degree " + std::to_string(div_omega.degree()) + ", expected 2g-2 = " +
                        std::to_string(ctx.canonical_degree()));
  }
  return d.drops + div_omega.scaled(static_cast<long>(d.rank));
}

EpsilonReport epsilon_report(const CurveContext& ctx, const SheafDescriptor& d, const Divisor& div_omega) {
  EpsilonReport rep;
  rep.n = n_f(d, ctx);
  if (rep.n <= 0) {
    throw PreconditionError("epsilon report needs n_F > 0, got n_F = " + std::to_string(rep.n));
  }
  rep.sign = rep.n % 2 == 0 ? 1 : -1;
  rep.critical_divisor = critical_point(ctx, d, div_omega);
  rep.k_f_label = k_f_label(d);
  for (const auto& p : d.drops.support()) rep.sigma.insert(p);
  for (const auto& p : div_omega.support()) rep.sigma.insert(p);
  rep.localization = "det RΓ(X, F) ≅ det^(" + std::to_string(rep.sign) + ") Φ at D = " +
                     rep.critical_divisor.label() + " over K_F = " + rep.k_f_label;
  return rep;
}

RiemannRochReport riemann_roch(const CurveContext& ctx, long deg) {
  return {deg - ctx.genus + 1, deg >= ctx.genus, deg > ctx.canonical_degree()};
}

}  // namespace symcc
