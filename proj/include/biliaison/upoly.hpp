#ifndef BILIAISON_UPOLY_HPP
#define BILIAISON_UPOLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "biliaison/field.hpp"

namespace biliaison {

/// Dense univariate polynomial over K, coefficients from low to high degree, no
/// trailing zeros. Used for restrictions of polynomials to lines and for
/// arithmetic in K[t]/(h).
template <Field K>
class UPoly {
 public:
  using Element = typename K::Element;

  UPoly() = default;
  explicit UPoly(const K& field) : field_(field) {}
  UPoly(const K& field, std::vector<Element> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const K& field, const Element& c) { return UPoly(field, {c}); }
  /// t - r
  static UPoly linear_root(const K& field, const Element& r) { return UPoly(field, {field.neg(r), field.one()}); }

  const K& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Element& lead() const { return c_.back(); }
  Element coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : field_.zero(); }

  UPoly operator+(const UPoly& o) const {
    std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
    return UPoly(field_, std::move(r));
  }
  UPoly operator-(const UPoly& o) const {
    std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
    return UPoly(field_, std::move(r));
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(field_);
    std::vector<Element> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return UPoly(field_, std::move(r));
  }
  UPoly scaled(const Element& s) const {
    std::vector<Element> r = c_;
    for (auto& x : r) x = field_.mul(x, s);
    return UPoly(field_, std::move(r));
  }

  /// (quotient, remainder)
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
    if (degree() < d.degree()) return {UPoly(field_), *this};
    std::vector<Element> r = c_;
    std::vector<Element> q(c_.size() - d.c_.size() + 1, field_.zero());
    Element inv = field_.inv(d.lead());
    for (int i = degree(); i >= d.degree(); --i) {
      if (field_.is_zero(r[i])) continue;
      Element f = field_.mul(r[i], inv);
      int shift = i - d.degree();
      q[shift] = f;
      for (int j = 0; j <= d.degree(); ++j) r[shift + j] = field_.sub(r[shift + j], field_.mul(f, d.c_[j]));
    }
    r.resize(d.c_.size() - 1);
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
  }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  UPoly monic() const { return is_zero() ? *this : scaled(field_.inv(lead())); }
  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(field_);
    std::vector<Element> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i)));
    return UPoly(field_, std::move(r));
  }
  Element evaluate(const Element& t) const {
    Element acc = field_.zero();
    for (int i = degree(); i >= 0; --i) acc = field_.add(field_.mul(acc, t), c_[i]);
    return acc;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_{};
  std::vector<Element> c_;
};

/// Monic gcd (zero only if both inputs are zero).
template <Field K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Squarefree part (product of distinct irreducible factors), valid when the degree is
/// below the characteristic.
template <Field K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  if (f.degree() <= 0) return f.monic();
  UPoly<K> g = gcd(f, f.derivative());
  return (f / g).monic();
}

/// Newton interpolation through (xs[i], ys[i]) with distinct nodes.
template <Field K>
UPoly<K> interpolate(const K& field, const std::vector<typename K::Element>& xs,
                     const std::vector<typename K::Element>& ys) {
  using E = typename K::Element;
  const std::size_t n = xs.size();
  std::vector<E> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = field.div(field.sub(dd[i], dd[i - 1]), field.sub(xs[i], xs[i - level]));
      if (i == level) break;
    }
  UPoly<K> result(field);
  for (std::size_t k = n; k-- > 0;) {
    result = result * UPoly<K>::linear_root(field, xs[k]) + UPoly<K>::constant(field, dd[k]);
  }
  return result;
}

}  // namespace biliaison

#endif  // BILIAISON_UPOLY_HPP
