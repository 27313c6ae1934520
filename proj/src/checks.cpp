#include "symcc/checks.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "symcc/combinat.hpp"
#include "symcc/cycle_algebra.hpp"
#include "symcc/errors.hpp"
#include "symcc/geometry.hpp"
#include "symcc/index.hpp"
#include "symcc/render.hpp"
#include "symcc/series.hpp"
#include "symcc/sheaves.hpp"

namespace symcc::checks {

namespace {

// Failure inside a check body; carries the first counterexample.
struct CheckFailure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure{what};
}

CheckResult timed(int id, std::string name, double budget, const std::function<std::string()>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const CheckFailure& f) {
    r.detail = f.what;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds > budget) {
    r.passed = false;
    r.detail += "; exceeded time budget";
  }
  return r;
}

std::vector<MultVec> multvecs_of_weight(unsigned n) {
  std::vector<MultVec> out;
  for (const auto& lambda : partitions_of(n)) out.push_back(lambda_to_e(lambda));
  return out;
}

std::vector<Divisor> effective_divisors_of_degree(const std::vector<Point>& pts, long deg) {
  std::vector<Divisor> out;
  Divisor bound;
  for (const auto& p : pts) bound.add(p, deg);
  for_each_effective_below(bound, [&](const Divisor& d) {
    if (d.degree() == deg) out.push_back(d);
  });
  return out;
}

std::vector<TauBasis> basis_of_grade(const std::vector<Point>& pts, unsigned grade) {
  std::vector<TauBasis> out;
  for (unsigned dd = 0; dd <= grade; ++dd) {
    for (const auto& delta : effective_divisors_of_degree(pts, dd)) {
      for (const auto& e : multvecs_of_weight(grade - dd)) out.emplace_back(delta, e);
    }
  }
  return out;
}

// Pascal's triangle, kept separate from gen_binomial.
Integer pascal(unsigned r, unsigned i) {
  if (i > r) return 0;
  std::vector<Integer> row{1};
  for (unsigned k = 0; k < r; ++k) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[i];
}

// Drop divisors on `pts` with every coefficient in [0, r].
std::vector<Divisor> drop_grid(const std::vector<Point>& pts, unsigned r) {
  Divisor bound;
  for (const auto& p : pts) bound.add(p, static_cast<long>(r));
  std::vector<Divisor> out;
  for_each_effective_below(bound, [&](const Divisor& d) { out.push_back(d); });
  return out;
}

CycleSeries one_minus_tau(const Point& p, unsigned N) {
  CycleSeries s = CycleSeries::one(N);
  s.add(TauBasis(Divisor(p, 1)), -1);
  return s;
}

// S_Lambda = sum_n (-1)^n tau*_{1^n}, written out directly.
CycleSeries s_lambda_direct(unsigned N) {
  CycleSeries s(N);
  for (unsigned n = 0; n <= N; ++n) s.add(TauBasis(MultVec({{1, n}})), sign_power(n));
  return s;
}

}  // namespace

CheckResult oracle_equivalence() {
  return timed(1, "structure constants match the set-partition oracle", 10.0, [] {
    unsigned pairs = 0;
    for (unsigned total = 0; total <= 8; ++total) {
      for (unsigned a = 0; a <= total; ++a) {
        for (const auto& e : multvecs_of_weight(a)) {
          for (const auto& e2 : multvecs_of_weight(total - a)) {
            const auto fast = structure_constants(e, e2);
            const auto slow = oracle_structure_constants(e, e2);
            require(*fast == slow, "mismatch for e = [" + e.to_string() + "], e' = [" + e2.to_string() + "]");
            ++pairs;
          }
        }
      }
    }
    return std::to_string(pairs) + " ordered pairs";
  });
}

CheckResult ring_axioms() {
  return timed(2, "commutativity and associativity up to grade 6", 20.0, [] {
    const std::vector<Point> pts{Point("s"), Point("t")};
    std::vector<std::vector<TauBasis>> by_grade;
    for (unsigned g = 0; g <= 6; ++g) by_grade.push_back(basis_of_grade(pts, g));
    unsigned pairs = 0, triples = 0;
    for (unsigned ga = 0; ga <= 6; ++ga) {
      for (unsigned gb = 0; ga + gb <= 6; ++gb) {
        for (const auto& a : by_grade[ga]) {
          const CycleSum za = CycleSum::term(a, 1);
          for (const auto& b : by_grade[gb]) {
            const CycleSum zb = CycleSum::term(b, 1);
            const CycleSum ab = multiply(za, zb);
            require(ab == multiply(zb, za), "a*b != b*a for " + a.to_string() + ", " + b.to_string());
            for (const auto& [label, coef] : ab.terms()) {
              require(label.grade() == ga + gb, "grade not additive for " + a.to_string() + " * " + b.to_string());
            }
            ++pairs;
            for (unsigned gc = 0; ga + gb + gc <= 6; ++gc) {
              for (const auto& c : by_grade[gc]) {
                const CycleSum zc = CycleSum::term(c, 1);
                require(multiply(ab, zc) == multiply(za, multiply(zb, zc)),
                        "(ab)c != a(bc) for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
                ++triples;
              }
            }
          }
        }
      }
    }
    return std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
  });
}

CheckResult pushforward_composition() {
  return timed(3, "product of tau_(mu_j) equals the m-count expansion", 5.0, [] {
    unsigned count = 0;
    for (unsigned n = 0; n <= 6; ++n) {
      const Integer sign = sign_power(n);
      for (const auto& mu : compositions_of(n)) {
        CycleSum via_product = CycleSum::unit();
        for (unsigned p : mu) via_product = multiply(via_product, CycleSum::term(TauBasis(MultVec({{1, p}})), 1));
        via_product = via_product.scaled(sign);
        CycleSum via_count(n);
        for (const auto& lambda : partitions_of(n)) via_count.add(TauBasis(lambda_to_e(lambda)), sign * count_m(lambda, mu));
        require(via_product == via_count, "mismatch for a composition of " + std::to_string(n));
        require(cc_pushforward_composition(mu) == via_count, "cc_pushforward_composition disagrees");
        ++count;
      }
    }
    return std::to_string(count) + " compositions";
  });
}

CheckResult constant_rank_series() {
  return timed(4, "S_{Lambda^r} = (S_Lambda)^r with prod C(r,i)^{e_i}", 5.0, [] {
    for (unsigned N = 0; N <= 6; ++N) {
      const CycleSeries s1 = s_lambda_direct(N);
      for (unsigned r = 0; r <= 4; ++r) {
        const CycleSeries closed = s_constant_rank(r, N);
        require(closed == series_pow(s1, r), "power mismatch r=" + std::to_string(r) + " N=" + std::to_string(N));
        for (unsigned n = 0; n <= N; ++n) {
          for (const auto& e : multvecs_of_weight(n)) {
            Integer expect = sign_power(n);
            for (const auto& [i, k] : e.entries()) {
              for (unsigned j = 0; j < k; ++j) expect *= pascal(r, i);
            }
            require(closed[n].coef(TauBasis(e)) == expect,
                    "coefficient of tau[0; " + e.to_string() + "] for r=" + std::to_string(r));
          }
        }
      }
    }
    return std::string("r <= 4, N <= 6");
  });
}

CheckResult tame_closed_form() {
  return timed(5, "tame product form equals the closed form", 10.0, [] {
    const std::vector<Point> pts{Point("s"), Point("t"), Point("u")};
    const unsigned N = 6;
    const CycleSeries s1 = s_lambda_direct(N);
    unsigned count = 0;
    for (unsigned r = 0; r <= 3; ++r) {
      const CycleSeries lisse = series_pow(s1, r);
      for (const auto& drops : drop_grid(pts, r)) {
        CycleSeries product = lisse;
        for (const auto& [p, a] : drops.coeffs()) {
          product = series_mul(product, series_pow(one_minus_tau(p, N), static_cast<unsigned>(a)));
        }
        require(product == s_tame_closed(r, drops, N), "r=" + std::to_string(r) + " drops=" + drops.to_string());
        require(product == s_tame(r, drops, N), "s_tame disagrees for drops=" + drops.to_string());
        ++count;
      }
    }
    return std::to_string(count) + " descriptors at N = 6";
  });
}

CheckResult devissage() {
  return timed(6, "S_{F+G} = S_F S_G and S_F S_F^{-1} = 1", 5.0, [] {
    const std::vector<Point> pts{Point("s"), Point("t")};
    const unsigned N = 5;
    std::vector<SheafDescriptor> grid;
    for (unsigned r = 0; r <= 2; ++r) {
      for (const auto& drops : drop_grid(pts, r)) grid.push_back(SheafDescriptor::make(r, drops));
    }
    unsigned count = 0;
    for (long g = 0; g <= 2; ++g) {
      const CurveContext ctx = make_curve_context(g, 0);
      std::vector<CycleSeries> series;
      for (const auto& d : grid) {
        series.push_back(build_series(d, ctx, N));
        require(series_mul(series.back(), shifted_series(d, ctx, N)) == CycleSeries::one(N),
                "inverse fails for rank " + std::to_string(d.rank) + " drops " + d.drops.to_string());
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
          const SheafDescriptor sum = direct_sum(grid[i], grid[j]);
          require(build_series(sum, ctx, N) == series_mul(series[i], series[j]),
                  "multiplicativity fails for " + grid[i].drops.to_string() + " (+) " + grid[j].drops.to_string());
          require(euler_char(sum, ctx) == euler_char(grid[i], ctx) + euler_char(grid[j], ctx),
                  "Euler characteristic not additive");
          ++count;
        }
      }
    }
    return std::to_string(count) + " pairs over g <= 2";
  });
}

CheckResult m_matrix() {
  return timed(7, "m-matrix unit triangular; binomial row sums", 5.0, [] {
    for (unsigned n = 0; n <= 7; ++n) {
      const auto parts = partitions_of(n);
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = 0; b < parts.size(); ++b) {
          const Integer m = count_m(conjugate(parts[a]), parts[b].parts());
          if (a == b) require(m == 1, "diagonal entry != 1 at " + parts[a].to_string());
          if (a > b) require(m == 0, "nonzero below diagonal at n=" + std::to_string(n));
        }
      }
    }
    for (unsigned n = 0; n <= 6; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        for (unsigned r = 0; r <= 5; ++r) {
          Integer sum = 0;
          for (const auto& mu : weak_compositions(n, r)) sum += count_m(lambda, mu);
          Integer expect = 1;
          for (unsigned p : lambda.parts()) expect *= pascal(r, p);
          require(sum == expect, "row sum for " + lambda.to_string() + ", r=" + std::to_string(r));
        }
      }
    }
    return std::string("n <= 7 triangular; n <= 6, r <= 5 sums");
  });
}

CheckResult index_consistency() {
  return timed(8, "index degrees solve uniquely and satisfy the index formula", 10.0, [] {
    for (long g = 0; g <= 3; ++g) {
      const DegreeTable t = infer_degrees(g, 6);  // throws on any inconsistency
      require(t.at(Partition()) == 1, "d of the empty partition != 1");
      const auto chi = chi_sym_powers(2 - 2 * g, 6);
      for (unsigned n = 0; n <= 6; ++n) {
        const Partition ones(std::vector<unsigned>(n, 1));
        require(sign_power(n) * t.at(ones) == chi[n], "(-1)^n d_(1^n) anchor fails at g=" + std::to_string(g));
        if (g == 0) require(sign_power(n) * t.at(ones) == Integer(n + 1), "chi(P^n) != n+1");
      }
    }
    // Skyscrapers: every tau*_D has degree 1, and chi(P^(n)) follows (1 - t)^{-deg}.
    const std::vector<Point> pts{Point("s"), Point("t")};
    for (const auto& stalks : drop_grid(pts, 2)) {
      const CycleSeries s = s_skyscraper(stalks, false, 5);
      const auto chi = chi_sym_powers(stalks.degree(), 5);
      for (unsigned n = 0; n <= 5; ++n) {
        Integer sum = 0;
        for (const auto& [b, c] : s[n].terms()) sum += c;
        require(sum == chi[n], "skyscraper Euler characteristic for " + stalks.to_string());
      }
    }
    unsigned count = 0;
    for (long g = 0; g <= 2; ++g) {
      const CurveContext ctx = make_curve_context(g, 0);
      for (unsigned r = 0; r <= 2; ++r) {
        for (const auto& drops : drop_grid(pts, r)) {
          require(index_check(ctx, SheafDescriptor::make(r, drops), 5),
                  "index check fails: g=" + std::to_string(g) + " r=" + std::to_string(r) + " drops=" +
                      drops.to_string());
          ++count;
        }
      }
    }
    return std::to_string(count) + " descriptors";
  });
}

CheckResult acyclicity_grid() {
  return timed(9, "acyclicity verdicts and certificates", 2.0, [] {
    const Point s("s"), t("t"), x("x");
    unsigned count = 0;
    for (long g = 0; g <= 3; ++g) {
      const CurveContext ctx = make_curve_context(g, 0);
      for (unsigned r = 1; r <= 3; ++r) {
        for (long deg = 0; deg <= 4; ++deg) {
          // one-point and two-point drop shapes of this degree with a_s <= r
          std::vector<Divisor> shapes;
          for (long a = 0; a <= deg; ++a) {
            if (a <= static_cast<long>(r) && deg - a <= static_cast<long>(r)) {
              Divisor d;
              d.add(s, a);
              d.add(t, deg - a);
              shapes.push_back(d);
            }
          }
          for (const auto& drops : shapes) {
            const SheafDescriptor d = SheafDescriptor::make(r, drops);
            const long nf = n_f(d, ctx);
            if (g >= 1) {
              const Divisor omega(x, 2 * g - 2);
              const Divisor crit = critical_point(ctx, d, omega);
              require(crit.degree() == nf, "critical point degree != n_F");
              require(divisor_leq(drops, crit), "critical point does not dominate drops");
            }
            for (long n = std::max(1L, nf - 2); n <= nf + 3; ++n) {
              const auto rep = acyclicity(ctx, d, n);
              require((rep.verdict == Verdict::acyclic_everywhere) == (n > nf), "verdict wrong");
              if (n < nf) continue;
              const auto cert = singularity_certificate(ctx, d, n);
              // The certificate (drops, {r: 2g-2}) only makes sense when 2g - 2 >= 0.
              const bool expect = (n == nf) && nf > 0 && g >= 1;
              require(cert.has_value() == expect,
                      "certificate presence wrong at g=" + std::to_string(g) + " r=" + std::to_string(r) +
                          " drops=" + drops.to_string() + " n=" + std::to_string(n));
              if (cert) {
                require(cert->delta == drops && cert->e == MultVec({{r, static_cast<unsigned>(2 * g - 2)}}),
                        "certificate is not (drops, {r: 2g-2})");
              }
              ++count;
            }
          }
        }
      }
    }
    return std::to_string(count) + " (descriptor, n) cases";
  });
}

std::vector<CheckResult> run_library_checks() {
  return {oracle_equivalence(), ring_axioms(),  pushforward_composition(),
          constant_rank_series(), tame_closed_form(), devissage(),
          m_matrix(),             index_consistency(), acyclicity_grid()};
}

std::string format_line(const CheckResult& r, bool with_time) {
  std::string line = std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name;
  if (with_time) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2f s of %.0f s)", r.seconds, r.budget_seconds);
    line += buf;
  }
  return line + ": " + r.detail;
}

}  // namespace symcc::checks
