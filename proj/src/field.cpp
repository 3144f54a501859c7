#include "biliaison/field.hpp"

#include <charconv>

namespace biliaison {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void FieldSpec::validate() const {
  if (kind == FieldKind::rationals) {
    if (characteristic != 0) throw ParseError("rational field must have characteristic 0");
    return;
  }
  if (!is_prime(characteristic)) throw ParseError("characteristic " + std::to_string(characteristic) + " is not prime");
  if (characteristic < 1000)
    throw ParseError("prime characteristic must be >= 1000 for generic sampling");
  if (characteristic >= (1u << 31)) throw ParseError("prime characteristic must be below 2^31");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? "rationals" : "prime:" + std::to_string(characteristic);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rationals" || text == "QQ" || text == "Q") return rationals();
  if (text == "prime") return prime();
  if (text.rfind("prime:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = text.data() + 6;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last) throw ParseError("bad field specification '" + text + "'");
    FieldSpec spec = prime(p);
    spec.validate();
    return spec;
  }
  throw ParseError("bad field specification '" + text + "'");
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<Element>(r.get_ui());
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
  return 1 / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
  if (sgn(b) == 0) throw std::domain_error("RationalField: division by zero");
  return a / b;
}

}  // namespace biliaison
