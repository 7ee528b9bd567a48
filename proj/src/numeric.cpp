#include "gkp/numeric.hpp"

#include <cctype>
#include <limits>

#include "gkp/error.hpp"

namespace gkp {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotTypeI: return "NotTypeI";
    case Errc::NotTypeIV: return "NotTypeIV";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DivByNonUnit: return "DivByNonUnit";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::NotReversible: return "NotReversible";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::DomainError: return "DomainError";
    case Errc::IrrationalConstant: return "IrrationalConstant";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::NonConsecutiveIndex: return "NonConsecutiveIndex";
    case Errc::NotInFixtures: return "NotInFixtures";
    case Errc::NetworkError: return "NetworkError";
    case Errc::MalformedResponse: return "MalformedResponse";
    case Errc::Infeasible: return "Infeasible";
    case Errc::PrefixTooShallow: return "PrefixTooShallow";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(Errc::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.str(); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_nonneg_integer(const Rational& q) { return is_integer(q) && q >= 0; }

bool is_positive_integer(const Rational& q) { return is_integer(q) && q > 0; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw Error(Errc::DomainError, "expected an integer, got " + q.str());
  const Integer& n = numerator(q);
  if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min()) {
    throw Error(Errc::DomainError, "integer out of range: " + q.str());
  }
  return n.convert_to<long>();
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw Error(Errc::DomainError, "0 raised to a negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1 / base) : base;
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational result(1);
  while (m) {
    if (m & 1u) result *= b;
    b *= b;
    m >>= 1;
  }
  return result;
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long i = 0; i < k; ++i) {
    result *= (a - i);
    result /= (i + 1);
  }
  return result;
}

Integer factorial(long n) {
  Integer f(1);
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Real to_real(const Rational& q) { return Real(q); }

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

}  // namespace gkp
