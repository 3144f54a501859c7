#ifndef BILIAISON_CHARFUN_HPP
#define BILIAISON_CHARFUN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biliaison {

/// Finitely supported function Z -> N, e.g. the degrees of the summands of a graded
/// free module or dissociated sheaf.
class CharFunction {
 public:
  CharFunction() = default;
  explicit CharFunction(const std::map<int, int>& values) {
    for (auto [n, k] : values) add(n, k);
  }
  /// One summand per listed degree.
  static CharFunction from_degrees(const std::vector<int>& degrees) {
    CharFunction f;
    for (int d : degrees) f.add(d, 1);
    return f;
  }

  void add(int n, int k) {
    if (k < 0) throw std::invalid_argument("CharFunction: negative multiplicity");
    if (k == 0) return;
    m_[n] += k;
  }

  int operator()(int n) const {
    auto it = m_.find(n);
    return it == m_.end() ? 0 : it->second;
  }
  /// f#(n) = sum of f(k) over k <= n.
  int cumulative(int n) const {
    int s = 0;
    for (auto [d, k] : m_) {
      if (d > n) break;
      s += k;
    }
    return s;
  }
  int rank() const {
    int s = 0;
    for (auto [d, k] : m_) s += k;
    return s;
  }
  bool empty() const { return m_.empty(); }
  std::optional<int> min_degree() const {
    if (m_.empty()) return std::nullopt;
    return m_.begin()->first;
  }
  std::optional<int> max_degree() const {
    if (m_.empty()) return std::nullopt;
    return m_.rbegin()->first;
  }
  /// sum of n * f(n)
  std::int64_t weighted_sum() const {
    std::int64_t s = 0;
    for (auto [d, k] : m_) s += static_cast<std::int64_t>(d) * k;
    return s;
  }
  /// Sorted list of degrees with repetition.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (auto [d, k] : m_) out.insert(out.end(), k, d);
    return out;
  }
  const std::map<int, int>& values() const { return m_; }

  friend bool operator==(const CharFunction&, const CharFunction&) = default;

  /// "{2:3, 5:1}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [d, k] : m_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(d) + ":" + std::to_string(k);
    }
    return s + "}";
  }

 private:
  std::map<int, int> m_;
};

}  // namespace biliaison

#endif  // BILIAISON_CHARFUN_HPP
