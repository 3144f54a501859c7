#ifndef BILIAISON_HILBERT_HPP
#define BILIAISON_HILBERT_HPP

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "biliaison/charfun.hpp"

namespace biliaison {

/// Polynomial in n of degree at most 3 with rational coefficients, c[k] the coefficient
/// of n^k.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::array<mpq_class, 4> c) : c_(std::move(c)) {
    for (auto& x : c_) x.canonicalize();
  }

  /// C(n - k + 3, 3), the Hilbert polynomial of R(-k).
  static HilbertPolynomial shifted_binomial(int k) {
    // (n + a)(n + a - 1)(n + a - 2) / 6 with a = 3 - k
    mpq_class a = 3 - k;
    mpq_class r0 = a, r1 = a - 1, r2 = a - 2;
    std::array<mpq_class, 4> c;
    c[3] = 1;
    c[2] = r0 + r1 + r2;
    c[1] = r0 * r1 + r0 * r2 + r1 * r2;
    c[0] = r0 * r1 * r2;
    for (auto& x : c) x /= 6;
    return HilbertPolynomial(c);
  }
  /// Hilbert polynomial of the free module with the given summand degrees.
  static HilbertPolynomial free_module(const CharFunction& f) {
    HilbertPolynomial p;
    for (auto [k, m] : f.values()) p = p + shifted_binomial(k).scaled(m);
    return p;
  }
  /// The cubic through (ns[i], values[i]), i = 0..3.
  static HilbertPolynomial fit(const std::array<long, 4>& ns, const std::array<mpq_class, 4>& values) {
    std::array<mpq_class, 4> c{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      // Lagrange basis polynomial for node i.
      std::array<mpq_class, 4> basis{1, 0, 0, 0};
      mpq_class denom = 1;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        std::array<mpq_class, 4> next{0, 0, 0, 0};
        for (int d = 0; d < 3; ++d) {
          next[d + 1] += basis[d];
          next[d] -= basis[d] * ns[j];
        }
        basis = next;
        denom *= ns[i] - ns[j];
      }
      for (int d = 0; d < 4; ++d) c[d] += basis[d] * values[i] / denom;
    }
    return HilbertPolynomial(c);
  }

  const mpq_class& coeff(int k) const { return c_.at(k); }
  mpq_class operator()(long n) const {
    mpq_class r = 0;
    for (int k = 3; k >= 0; --k) r = r * n + c_[k];
    return r;
  }
  HilbertPolynomial scaled(long s) const {
    auto c = c_;
    for (auto& x : c) x *= s;
    return HilbertPolynomial(c);
  }
  friend HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b) {
    std::array<mpq_class, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = a.c_[k] + b.c_[k];
    return HilbertPolynomial(c);
  }
  friend HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b) {
    std::array<mpq_class, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = a.c_[k] - b.c_[k];
    return HilbertPolynomial(c);
  }
  friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) { return a.c_ == b.c_; }

  /// Coefficients as rational strings, constant term first.
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    for (const auto& x : c_) out.push_back(x.get_str());
    return out;
  }
  std::string to_string() const {
    std::string s;
    for (int k = 3; k >= 0; --k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += c_[k] < 0 ? " - " : " + ";
      else if (c_[k] < 0) s += "-";
      mpq_class a = abs(c_[k]);
      if (k == 0 || a != 1) s += a.get_str();
      if (k > 0) s += (k == 0 || a != 1 ? "*n" : "n") + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::array<mpq_class, 4> c_{0, 0, 0, 0};
};

}  // namespace biliaison

#endif  // BILIAISON_HILBERT_HPP
