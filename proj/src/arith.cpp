#include "gradedgrowth/arith.hpp"

#include <cmath>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits.empty() || digits == "-") throw ParseError("bad decimal '" + text + "'");
      BigInt den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(BigInt(digits), den);
    }
    return Rational(BigInt(text));
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

Rational pow(const Rational& q, std::uint64_t e) {
  Rational result = 1;
  Rational base = q;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 16U) || !is_prime(p))
    throw ContractError("field characteristic must be a prime below 2^16, got " +
                        std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw ContractError("division by zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

}  // namespace gradedgrowth
