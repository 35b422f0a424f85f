#include "corrterms/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace corrterms {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto parse_int = [&](std::string_view sv) -> long long {
    long long value = 0;
    const char* first = sv.data();
    const char* last = sv.data() + sv.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw invalid_input("rational: cannot parse '" + text + "'");
    }
    return value;
  };

  std::string_view sv(text);
  // Trim surrounding whitespace.
  while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
  while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
  if (sv.empty()) throw invalid_input("rational: empty string");

  const auto slash = sv.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(sv));
  }
  const long long n = parse_int(sv.substr(0, slash));
  const long long d = parse_int(sv.substr(slash + 1));
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace corrterms
