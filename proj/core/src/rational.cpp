#include "momenta/rational.hpp"

#include <cctype>
#include <ostream>

namespace momenta {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_decimal(const std::string& text) {
  // [sign] digits [. digits] [eE [sign] digits]
  std::string mantissa;
  long exponent = 0;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') mantissa += '-';
    ++i;
  }
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    mantissa += text[i];
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      mantissa += text[i];
      --exponent;
      any_digit = true;
    }
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::string etok = text.substr(i);
    if (!valid_integer_token(etok)) throw InputError("bad scalar literal: " + text);
    exponent += std::stol(etok);
    i = text.size();
  }
  if (!any_digit || i != text.size())
    throw InputError("bad scalar literal: " + text);
  if (mantissa.empty() || mantissa == "-") mantissa += '0';

  mpq_class v{mpz_class(mantissa, 10)};
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10,
                static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0)
    v /= pow10;
  else
    v *= pow10;
  v.canonicalize();
  return Rational(v);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw InputError("bad rational literal: " + text);
    mpz_class d{den, 10};
    if (d == 0) throw InputError("rational with zero denominator: " + text);
    mpq_class v{mpz_class(num, 10), d};
    v.canonicalize();
    return Rational(v);
  }
  if (valid_integer_token(text)) {
    mpq_class v{mpz_class(text, 10)};
    return Rational(v);
  }
  return parse_decimal(text);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

}  // namespace momenta
