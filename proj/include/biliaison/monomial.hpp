#ifndef BILIAISON_MONOMIAL_HPP
#define BILIAISON_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace biliaison {

/// Variables of R_A = A[X,Y,Z,T]; `a` is the uniformizer of the DVR A.
enum Var : int { X = 0, Y = 1, Z = 2, T = 3, A = 4 };
inline constexpr int kNumVars = 5;
/// Number of homogeneous (graded) variables.
inline constexpr int kNumGraded = 4;

const char* var_name(int v);

/// Exponent vector over (X, Y, Z, T, a). The grading ignores `a`.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kNumVars>;

  constexpr Monomial() = default;
  explicit Monomial(const Exponents& e) : e_(e) { recompute(); }
  static Monomial var(int v, int power = 1) {
    Exponents e{};
    e[v] = static_cast<std::uint16_t>(power);
    return Monomial(e);
  }
  static Monomial xyzt(int x, int y, int z, int t) {
    return Monomial(Exponents{static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                              static_cast<std::uint16_t>(z), static_cast<std::uint16_t>(t), 0});
  }

  int operator[](int v) const { return e_[v]; }
  const Exponents& exponents() const { return e_; }
  /// Degree in X, Y, Z, T.
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0 && e_[A] == 0; }
  bool has_parameter() const { return e_[A] != 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < kNumVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
    r.deg_ = o.deg_ - deg_;
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Exponents e;
    for (int i = 0; i < kNumVars; ++i) e[i] = std::max(e_[i], o.e_[i]);
    return Monomial(e);
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }
  Monomial without(int v) const {
    Monomial r = *this;
    r.e_[v] = 0;
    r.recompute();
    return r;
  }

  /// Graded reverse lexicographic order on X > Y > Z > T, ties broken by the power of a.
  /// Returns <0, 0, >0.
  friend int compare(const Monomial& p, const Monomial& q) {
    if (p.deg_ != q.deg_) return p.deg_ < q.deg_ ? -1 : 1;
    for (int i = kNumGraded - 1; i >= 0; --i)
      if (p.e_[i] != q.e_[i]) return p.e_[i] > q.e_[i] ? -1 : 1;
    if (p.e_[A] != q.e_[A]) return p.e_[A] < q.e_[A] ? -1 : 1;
    return 0;
  }
  friend bool operator==(const Monomial& p, const Monomial& q) { return p.e_ == q.e_; }
  friend bool operator<(const Monomial& p, const Monomial& q) { return compare(p, q) < 0; }

  std::string to_string() const;

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto x : e_) h = h * 131 + x;
    return h;
  }

 private:
  void recompute() { deg_ = e_[X] + e_[Y] + e_[Z] + e_[T]; }

  Exponents e_{};
  int deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace biliaison

#endif  // BILIAISON_MONOMIAL_HPP
