#include "olab/rational.hpp"

#include "olab/errors.hpp"

namespace olab {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
      throw_input("zero denominator in rational '" + text + "'");
    }
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw_input("malformed rational '" + text + "'");
  }
}

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational acc(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) acc *= b;
    b *= b;
    exp >>= 1u;
  }
  return acc;
}

}  // namespace olab
