#include "symcc/render.hpp"

#include <functional>

#include "symcc/errors.hpp"

namespace symcc {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw ArgumentError("unknown format '" + name + "' (expected text, json or latex)");
}

namespace {

std::string signed_join(const CycleSum& z, const std::function<std::string(const TauBasis&)>& name,
                        const std::string& times) {
  std::string out;
  for (const auto& [b, c] : z.terms()) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + times;
    out += name(b);
  }
  return out;
}

bool all_negative(const CycleSum& z) {
  for (const auto& [b, c] : z.terms()) {
    if (c > 0) return false;
  }
  return true;
}

}  // namespace

std::string to_text(const CycleSum& z) {
  if (z.is_zero()) return "0";
  auto name = [](const TauBasis& b) { return b.to_string(); };
  if (z.terms().size() > 1 && all_negative(z)) return "-(" + signed_join(-z, name, "*") + ")";
  return signed_join(z, name, "*");
}

std::string to_latex(const TauBasis& b) {
  if (b.is_unit()) return "1";
  std::string sub;
  if (!b.delta().is_zero()) {
    for (const auto& [p, c] : b.delta().coeffs()) {
      if (!sub.empty()) sub += "+";
      if (c != 1) sub += std::to_string(c);
      sub += p.id();
    }
  }
  if (!b.e().empty()) {
    if (!sub.empty()) sub += ",\\,";
    const Partition lambda = e_to_lambda(b.e());
    sub += std::to_string(lambda.size()) + "=";
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      if (i) sub += "+";
      sub += std::to_string(lambda.parts()[i]);
    }
  }
  return "\\tau^*_{" + sub + "}";
}

std::string to_latex(const CycleSum& z) {
  if (z.is_zero()) return "0";
  auto name = [](const TauBasis& b) { return to_latex(b); };
  if (z.terms().size() > 1 && all_negative(z)) return "-\\left(" + signed_join(-z, name, "\\,") + "\\right)";
  return signed_join(z, name, "\\,");
}

nlohmann::ordered_json to_json_terms(const CycleSum& z) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [b, c] : z.terms()) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    for (const auto& [i, k] : b.e().entries()) e[std::to_string(i)] = k;
    terms.push_back({{"delta", b.delta().to_string()}, {"e", e}, {"coef", c.get_str()}});
  }
  return terms;
}

nlohmann::ordered_json to_json(const CycleSeries& s) {
  auto comps = nlohmann::ordered_json::array();
  for (const auto& z : s.components()) comps.push_back({{"degree", z.degree()}, {"terms", to_json_terms(z)}});
  return comps;
}

std::string to_text(const CycleSeries& s) {
  std::string out;
  for (const auto& z : s.components()) out += "degree " + std::to_string(z.degree()) + ": " + to_text(z) + "\n";
  return out;
}

std::string to_latex(const CycleSeries& s) {
  std::string out = "\\begin{align*}\n";
  for (const auto& z : s.components()) {
    out += "S_{" + std::to_string(z.degree()) + "} &= " + to_latex(z) + " \\\\\n";
  }
  return out + "\\end{align*}\n";
}

}  // namespace symcc
