#ifndef BILIAISON_FIELD_HPP
#define BILIAISON_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace biliaison {

/// Raised for malformed input (polynomial strings, matrix files, bad arguments).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two operands live over different coefficient fields.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class FieldKind { rationals, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint32_t characteristic = 32003;

  static FieldSpec prime(std::uint32_t p = 32003) { return {FieldKind::prime, p}; }
  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }

  /// Throws ParseError unless the characteristic is 0 (for Q) or a prime >= 1000.
  void validate() const;

  /// "rationals" or "prime:P".
  std::string to_string() const;
  static FieldSpec parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Z/pZ with elements stored as reduced uint32 residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const;
  Element from_mpz(const mpz_class& v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }
  /// Leading sign used when printing polynomials.
  bool is_negative(Element a) const { return a > p_ / 2; }

  template <class Rng>
  Element random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return dist(rng);
  }
  template <class Rng>
  Element random_nonzero(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(1, p_ - 1);
    return dist(rng);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals with GMP arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using Element = mpq_class;

  /// Random draws are integers in [-bound, bound].
  explicit RationalField(std::int64_t sample_bound = 1000) : bound_(sample_bound) {}

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;

  Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return mpq_class(v); }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  template <class Rng>
  Element random(Rng& rng) const {
    std::uniform_int_distribution<std::int64_t> dist(-bound_, bound_);
    return from_int(dist(rng));
  }
  template <class Rng>
  Element random_nonzero(Rng& rng) const {
    for (;;) {
      Element e = random(rng);
      if (!is_zero(e)) return e;
    }
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

 private:
  std::int64_t bound_;
};

template <class F>
concept Field = requires(const F& f, const typename F::Element& a, std::mt19937_64& rng) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Element>;
  { f.random(rng) } -> std::convertible_to<typename F::Element>;
  { f.spec() } -> std::convertible_to<FieldSpec>;
};

/// Deterministic generator used for every "general element" draw in the library.
using Rng = std::mt19937_64;

}  // namespace biliaison

#endif  // BILIAISON_FIELD_HPP
