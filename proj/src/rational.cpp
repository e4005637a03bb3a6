#include "steinercut/rational.hpp"

namespace stc {

Rational Rational::parse(const std::string& text) {
  auto parse_int = [](const std::string& s) -> BigInt {
    if (s.empty()) fail_parse("empty number in rational");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i == 0 && s[i] == '-') continue;
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail_parse("malformed rational '" + s + "'");
    }
    return BigInt(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text), 1);
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) fail_parse("rational denominator must be positive");
  return Rational(num, den);
}

}  // namespace stc
