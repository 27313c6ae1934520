#include "symcc/divisor.hpp"

#include <cctype>
#include <charconv>

#include "symcc/errors.hpp"

namespace symcc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_id_char(char c) {
  return std::isprint(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c)) &&
         c != ':' && c != '*' && c != '+' && c != '-' && c != ';';
}

}  // namespace

Point::Point(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw ArgumentError("point id must be nonempty");
  if (std::isdigit(static_cast<unsigned char>(id_.front()))) {
    throw ArgumentError("point id '" + id_ + "' must not start with a digit");
  }
  for (char c : id_) {
    if (!valid_id_char(c)) throw ArgumentError("invalid character in point id '" + id_ + "'");
  }
}

Divisor::Divisor(const Point& p, long coef) { add(p, coef); }

Divisor Divisor::parse(std::string_view text) {
  Divisor d;
  std::string s(trim(text));
  if (s.empty()) throw ArgumentError("empty divisor text");
  if (s == "0") return d;

  // Split on '+' and '-' at term boundaries; a leading sign belongs to the term.
  std::size_t pos = 0;
  while (pos < s.size()) {
    long sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || std::isspace(static_cast<unsigned char>(s[pos])))) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term = trim(std::string_view(s).substr(pos, end - pos));
    if (term.empty()) throw ArgumentError("malformed divisor '" + s + "'");
    long coef = 1;
    std::string_view id = term;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      auto num = trim(term.substr(0, star));
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), coef);
      if (ec != std::errc() || ptr != num.data() + num.size()) {
        throw ArgumentError("bad coefficient '" + std::string(num) + "' in divisor '" + s + "'");
      }
      id = trim(term.substr(star + 1));
    } else if (std::isdigit(static_cast<unsigned char>(term.front()))) {
      throw ArgumentError("expected 'coef*point' in divisor '" + s + "'");
    }
    d.add(Point(std::string(id)), sign * coef);
    pos = end;
  }
  return d;
}

long Divisor::coef(const Point& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::add(const Point& p, long coef) {
  if (coef == 0) return;
  auto [it, inserted] = coeffs_.emplace(p, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, c] : coeffs_) d += c;
  return d;
}

bool Divisor::effective() const {
  for (const auto& [p, c] : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

std::set<Point> Divisor::support() const {
  std::set<Point> out;
  for (const auto& [p, c] : coeffs_) out.insert(p);
  return out;
}

Divisor Divisor::operator+(const Divisor& other) const {
  Divisor r = *this;
  for (const auto& [p, c] : other.coeffs_) r.add(p, c);
  return r;
}

Divisor Divisor::operator-(const Divisor& other) const { return *this + other.scaled(-1); }

Divisor Divisor::scaled(long k) const {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [p, c] : coeffs_) r.coeffs_.emplace(p, c * k);
  return r;
}

std::string Divisor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : coeffs_) {
    if (out.empty()) {
      out += std::to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += std::to_string(c < 0 ? -c : c);
    }
    out += '*' + p.id();
  }
  return out;
}

std::string Divisor::label() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : coeffs_) {
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += '-';
    long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + '*';
    out += p.id();
  }
  return out;
}

bool divisor_leq(const Divisor& a, const Divisor& b) {
  for (const auto& [p, c] : a.coeffs()) {
    if (c > b.coef(p)) return false;
  }
  for (const auto& [p, c] : b.coeffs()) {
    if (a.coef(p) > c) return false;
  }
  return true;
}

Integer divisor_binomial(const Divisor& upper, const Divisor& lower) {
  if (!lower.effective()) {
    throw ArgumentError("divisor_binomial: lower divisor " + lower.to_string() + " is not effective");
  }
  Integer r = 1;
  for (const auto& [p, m] : lower.coeffs()) {
    r *= gen_binomial(upper.coef(p), static_cast<unsigned long>(m));
  }
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

CurveContext make_curve_context(long genus, long base_char) {
  if (genus < 0) throw ArgumentError("genus must be nonnegative, got " + std::to_string(genus));
  if (base_char != 0 && !is_prime(base_char)) {
    throw ArgumentError("base characteristic must be 0 or a prime, got " + std::to_string(base_char));
  }
  return CurveContext{genus, base_char};
}

}  // namespace symcc
