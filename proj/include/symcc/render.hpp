#ifndef SYMCC_RENDER_HPP
#define SYMCC_RENDER_HPP

#include <string>

#include <json.hpp>

#include "symcc/cycle_algebra.hpp"
#include "symcc/series.hpp"

namespace symcc {

enum class Format { text, json, latex };

Format parse_format(const std::string& name);

/// "2*tau[0; 1^2] + tau[0; 2^1]"; a sum whose coefficients are all negative
/// is printed as "-(...)". The zero cycle prints as "0".
std::string to_text(const CycleSum& z);

/// tau*_{D, n=l_1+...+l_k} notation; "1" for the unit label.
std::string to_latex(const TauBasis& b);
std::string to_latex(const CycleSum& z);

/// [{"delta": "1*s", "e": {"1": 2}, "coef": "-3"}, ...]. Coefficients are
/// decimal strings so that no precision is lost.
nlohmann::ordered_json to_json_terms(const CycleSum& z);
nlohmann::ordered_json to_json(const CycleSeries& s);

/// One "degree n: ..." line per component.
std::string to_text(const CycleSeries& s);
std::string to_latex(const CycleSeries& s);

}  // namespace symcc

#endif  // SYMCC_RENDER_HPP
