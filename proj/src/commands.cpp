#include "symcc/commands.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "symcc/checks.hpp"
#include "symcc/combinat.hpp"
#include "symcc/cycle_algebra.hpp"
#include "symcc/errors.hpp"
#include "symcc/geometry.hpp"
#include "symcc/index.hpp"
#include "symcc/series.hpp"

namespace symcc::commands {

using nlohmann::ordered_json;

namespace {

std::string dump(ordered_json j) { return j.dump(2) + "\n"; }

ordered_json with_schema(const std::string& kind) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = kind;
  return j;
}

ordered_json descriptor_json(const SheafDescriptor& d, long genus) {
  return {{"genus", genus},
          {"rank", d.rank},
          {"drops", d.drops.to_string()},
          {"tame", d.tame},
          {"coeff_char", d.coeff_char}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<unsigned> parse_composition(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("--mu: '" + item + "' is not a positive integer");
    }
    if (used != item.size() || v == 0) throw ArgumentError("--mu: '" + item + "' is not a positive integer");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::string cycle_in(const CycleSum& z, Format fmt, const std::string& kind) {
  switch (fmt) {
    case Format::text:
      return to_text(z) + "\n";
    case Format::latex:
      return to_latex(z) + "\n";
    case Format::json: {
      ordered_json j = with_schema(kind);
      j["degree"] = z.degree();
      j["terms"] = to_json_terms(z);
      return dump(j);
    }
  }
  return {};
}

std::string certificate_text(const std::optional<SingularityCertificate>& c) {
  if (!c) return "none";
  return "delta = " + c->delta.to_string() + ", e = [" + c->e.to_string() + "]; " + c->constraint;
}

}  // namespace

unsigned default_max_degree() {
  const char* env = std::getenv("SYMCC_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw ArgumentError(std::string("SYMCC_MAX_DEGREE='") + env + "' is not a degree");
  return static_cast<unsigned>(v);
}

Divisor parse_sing(const std::vector<std::string>& items) {
  Divisor d;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ArgumentError("--sing '" + item + "': expected point:drop");
    const std::string value = item.substr(colon + 1);
    std::size_t used = 0;
    long a = 0;
    try {
      a = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw ArgumentError("--sing '" + item + "': drop is not an integer");
    if (a < 0) throw ArgumentError("--sing '" + item + "': drop must be nonnegative");
    d.add(Point(item.substr(0, colon)), a);
  }
  return d;
}

SheafDescriptor make_descriptor(const SheafArgs& a) {
  return SheafDescriptor::make(a.rank, parse_sing(a.sing), !a.wild, a.coeff_char.value_or(2));
}

std::string product(const std::vector<std::string>& es, const std::vector<std::string>& taus, Format fmt) {
  if (es.empty() && taus.empty()) throw ArgumentError("product: give at least one --e or --tau");
  CycleSum z = CycleSum::unit();
  for (const auto& e : es) z = multiply(z, CycleSum::term(TauBasis(MultVec::parse(e)), 1));
  for (const auto& t : taus) z = multiply(z, CycleSum::term(TauBasis::parse(t), 1));
  return cycle_in(z, fmt, "product");
}

std::string series(const SheafArgs& a, unsigned max_degree, bool shifted, Format fmt) {
  const CurveContext ctx = make_curve_context(a.genus, a.base_char);
  const SheafDescriptor d = make_descriptor(a);
  const CycleSeries s = shifted ? shifted_series(d, ctx, max_degree) : build_series(d, ctx, max_degree);
  switch (fmt) {
    case Format::text:
      return to_text(s);
    case Format::latex:
      return to_latex(s);
    case Format::json: {
      ordered_json j = with_schema("series");
      j["descriptor"] = descriptor_json(d, a.genus);
      j["shifted"] = shifted;
      j["series"] = to_json(s);
      return dump(j);
    }
  }
  return {};
}

std::string mtable(unsigned n, Format fmt) {
  const auto parts = partitions_of(n);
  std::vector<std::vector<Integer>> m(parts.size(), std::vector<Integer>(parts.size()));
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const Partition row = conjugate(parts[a]);
    for (std::size_t b = 0; b < parts.size(); ++b) m[a][b] = count_m(row, parts[b].parts());
  }
  std::string out;
  switch (fmt) {
    case Format::text: {
      out = "m[nu^T, mu] for n = " + std::to_string(n) + ", nu and mu in reverse lexicographic order\n";
      std::size_t width = 1;
      for (const auto& row : m) {
        for (const auto& v : row) width = std::max(width, v.get_str().size());
      }
      std::size_t label_width = 0;
      for (const auto& p : parts) label_width = std::max(label_width, p.to_string().size());
      for (std::size_t a = 0; a < parts.size(); ++a) {
        std::string line = parts[a].to_string();
        line.resize(label_width, ' ');
        for (const auto& v : m[a]) {
          const std::string s = v.get_str();
          line += std::string(width + 1 - s.size(), ' ') + s;
        }
        out += line + "\n";
      }
      return out;
    }
    case Format::latex: {
      out = "\\begin{pmatrix}\n";
      for (const auto& row : m) {
        for (std::size_t b = 0; b < row.size(); ++b) out += (b ? " & " : "") + row[b].get_str();
        out += " \\\\\n";
      }
      return out + "\\end{pmatrix}\n";
    }
    case Format::json: {
      ordered_json j = with_schema("mtable");
      j["n"] = n;
      auto labels = ordered_json::array();
      for (const auto& p : parts) labels.push_back(p.to_string());
      j["partitions"] = labels;
      auto rows = ordered_json::array();
      for (const auto& row : m) {
        auto r = ordered_json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
      }
      j["matrix"] = rows;
      return dump(j);
    }
  }
  return out;
}

std::string strata(unsigned n, long base_char, Format fmt) {
  const CurveContext ctx = make_curve_context(0, base_char);
  const auto report = stratum_report(n, ctx);
  switch (fmt) {
    case Format::text: {
      std::string out;
      for (const auto& s : report) {
        out += "e = [" + s.e.to_string() + "]  dim " + std::to_string(s.dimension) + "  smooth parametrization " +
               yes_no(s.smooth_param) + "\n";
      }
      return out;
    }
    case Format::latex: {
      std::string out = "\\begin{tabular}{lcc}\n$\\lambda$ & $\\dim$ & smooth \\\\\n";
      for (const auto& s : report) {
        out += "$" + e_to_lambda(s.e).to_string() + "$ & " + std::to_string(s.dimension) + " & " +
               yes_no(s.smooth_param) + " \\\\\n";
      }
      return out + "\\end{tabular}\n";
    }
    case Format::json: {
      ordered_json j = with_schema("strata");
      j["n"] = n;
      j["base_char"] = base_char;
      auto arr = ordered_json::array();
      for (const auto& s : report) {
        ordered_json e = ordered_json::object();
        for (const auto& [i, k] : s.e.entries()) e[std::to_string(i)] = k;
        arr.push_back({{"e", e}, {"dimension", s.dimension}, {"smooth_param", s.smooth_param}});
      }
      j["strata"] = arr;
      return dump(j);
    }
  }
  return {};
}

std::string pushforward(const std::string& mu, const std::string& lambda, long base_char, Format fmt) {
  if (mu.empty() == lambda.empty()) throw ArgumentError("pushforward: give exactly one of --mu and --lambda");
  if (!mu.empty()) return cycle_in(cc_pushforward_composition(parse_composition(mu)), fmt, "pushforward");
  const CurveContext ctx = make_curve_context(0, base_char);
  return cycle_in(cc_pushforward_partition(Partition::parse(lambda), ctx), fmt, "pushforward");
}

std::string acyclicity(const SheafArgs& a, long n, const std::optional<std::string>& omega, Format fmt) {
  const CurveContext ctx = make_curve_context(a.genus, a.base_char);
  const SheafDescriptor d = make_descriptor(a);
  std::optional<Divisor> div_omega;
  if (omega) div_omega = Divisor::parse(*omega);
  const AcyclicityReport rep = symcc::acyclicity(ctx, d, n, div_omega);
  std::optional<SingularityCertificate> cert;
  if (d.rank >= 1) cert = singularity_certificate(ctx, d, n);
  switch (fmt) {
    case Format::text: {
      std::string out = "n = " + std::to_string(n) + "\n";
      out += "n_F = " + std::to_string(rep.n_f) + "\n";
      out += "verdict: " + to_string(rep.verdict) + "\n";
      out += "K_F: " + (rep.k_f_label.empty() ? std::string("-") : rep.k_f_label) + "\n";
      out += "critical divisor: " + (rep.critical_divisor ? rep.critical_divisor->to_string() : std::string("-")) +
             "\n";
      out += "certificate: " + (d.rank >= 1 ? certificate_text(cert) : std::string("-")) + "\n";
      return out;
    }
    case Format::latex: {
      std::string out = "n = " + std::to_string(n) + ",\\quad n_F = " + std::to_string(rep.n_f) +
                        ",\\quad \\text{" + to_string(rep.verdict) + "}";
      if (rep.critical_divisor) out += ",\\quad \\Delta_{F,\\omega} = " + rep.critical_divisor->label();
      return out + "\n";
    }
    case Format::json: {
      ordered_json j = with_schema("acyclicity");
      j["descriptor"] = descriptor_json(d, a.genus);
      j["n"] = n;
      j["verdict"] = to_string(rep.verdict);
      j["n_f"] = rep.n_f;
      j["k_f_label"] = rep.k_f_label.empty() ? ordered_json(nullptr) : ordered_json(rep.k_f_label);
      j["critical_divisor"] =
          rep.critical_divisor ? ordered_json(rep.critical_divisor->to_string()) : ordered_json(nullptr);
      if (cert) {
        ordered_json e = ordered_json::object();
        for (const auto& [i, k] : cert->e.entries()) e[std::to_string(i)] = k;
        j["certificate"] = {{"delta", cert->delta.to_string()}, {"e", e}, {"constraint", cert->constraint}};
      } else {
        j["certificate"] = nullptr;
      }
      return dump(j);
    }
  }
  return {};
}

std::string epsilon_report(const SheafArgs& a, const std::string& omega, Format fmt) {
  const CurveContext ctx = make_curve_context(a.genus, a.base_char);
  const SheafDescriptor d = make_descriptor(a);
  const EpsilonReport rep = symcc::epsilon_report(ctx, d, Divisor::parse(omega));
  std::vector<std::string> sigma;
  for (const auto& p : rep.sigma) sigma.push_back(p.id());
  switch (fmt) {
    case Format::text: {
      std::string out = "n = " + std::to_string(rep.n) + "\n";
      out += "sign = " + std::to_string(rep.sign) + "\n";
      out += "critical divisor: " + rep.critical_divisor.to_string() + "\n";
      out += "K_F: " + rep.k_f_label + "\n";
      out += "sigma: {";
      for (std::size_t i = 0; i < sigma.size(); ++i) out += (i ? ", " : "") + sigma[i];
      out += "}\n";
      return out + "localization: " + rep.localization + "\n";
    }
    case Format::latex:
      return "n = " + std::to_string(rep.n) + ",\\quad (-1)^n = " + std::to_string(rep.sign) +
             ",\\quad \\Delta_{F,\\omega} = " + rep.critical_divisor.label() + "\n";
    case Format::json: {
      ordered_json j = with_schema("epsilon-report");
      j["descriptor"] = descriptor_json(d, a.genus);
      j["n"] = rep.n;
      j["sign"] = rep.sign;
      j["critical_divisor"] = rep.critical_divisor.to_string();
      j["k_f_label"] = rep.k_f_label;
      j["sigma"] = sigma;
      j["localization"] = rep.localization;
      return dump(j);
    }
  }
  return {};
}

std::string index_degrees(long genus, unsigned max_degree, Format fmt) {
  const DegreeTable t = infer_degrees(genus, max_degree);
  switch (fmt) {
    case Format::text: {
      std::string out = "genus " + std::to_string(genus) + "\n";
      for (unsigned n = 0; n <= max_degree; ++n) {
        out += "n = " + std::to_string(n) + ":";
        for (const auto& [lambda, d] : t.row(n)) out += " d" + lambda.to_string() + " = " + d.get_str() + ";";
        out.pop_back();
        out += "\n";
      }
      return out;
    }
    case Format::latex: {
      std::string out = "\\begin{tabular}{rll}\n$n$ & $\\lambda$ & $d_\\lambda$ \\\\\n";
      for (unsigned n = 0; n <= max_degree; ++n) {
        for (const auto& [lambda, d] : t.row(n)) {
          out += std::to_string(n) + " & $" + lambda.to_string() + "$ & $" + d.get_str() + "$ \\\\\n";
        }
      }
      return out + "\\end{tabular}\n";
    }
    case Format::json: {
      ordered_json j = with_schema("index-degrees");
      j["genus"] = genus;
      j["max_degree"] = max_degree;
      auto rows = ordered_json::array();
      for (unsigned n = 0; n <= max_degree; ++n) {
        auto entries = ordered_json::array();
        for (const auto& [lambda, d] : t.row(n)) entries.push_back({{"partition", lambda.to_string()}, {"d", d.get_str()}});
        rows.push_back({{"n", n}, {"entries", entries}});
      }
      j["degrees"] = rows;
      return dump(j);
    }
  }
  return {};
}

SelftestOutcome selftest() {
  SelftestOutcome out;
  out.passed = true;
  for (const auto& r : checks::run_library_checks()) {
    out.text += checks::format_line(r) + "\n";
    out.passed = out.passed && r.passed;
  }

  SheafArgs sheaf;
  sheaf.genus = 2;
  sheaf.rank = 2;
  sheaf.sing = {"s:1", "t:2"};
  const std::vector<std::function<std::string(Format)>> runs = {
      [](Format f) { return product({"1^1", "1^2"}, {"s; 2^1"}, f); },
      [&](Format f) { return series(sheaf, 5, false, f); },
      [](Format f) { return mtable(5, f); },
      [](Format f) { return strata(5, 2, f); },
      [](Format f) { return pushforward("2,1,1", "", 0, f); },
      [](Format f) { return pushforward("", "2,1", 0, f); },
      [&](Format f) { return acyclicity(sheaf, 5, std::string("x + y"), f); },
      [&](Format f) { return epsilon_report(sheaf, "x + y", f); },
      [](Format f) { return index_degrees(2, 6, f); }};
  bool same = true;
  unsigned count = 0;
  for (const auto& run : runs) {
    for (Format f : {Format::text, Format::json, Format::latex}) {
      same = same && run(f) == run(f);
      ++count;
    }
  }
  out.text += std::string(same ? "[PASS]" : "[FAIL]") + " 10 repeated subcommand output is identical (" +
              std::to_string(count) + " runs, in process)\n";
  out.passed = out.passed && same;
  return out;
}

}  // namespace symcc::commands
