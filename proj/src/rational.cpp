#include "octgroups/rational.hpp"

#include <regex>
#include <stdexcept>

namespace octgroups {

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return make_rational(num, den);
}

}  // namespace octgroups
