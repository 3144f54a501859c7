#ifndef BILIAISON_QPROFILE_HPP
#define BILIAISON_QPROFILE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biliaison/grmatrix.hpp"
#include "json.hpp"

namespace biliaison {

inline constexpr std::uint64_t kDefaultSeed = 0xB111A150u;
inline constexpr std::uint64_t kDefaultMinorBudget = 20000;

/// An input hypothesis was checked and found false.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProfileOptions {
  /// [n_min, n_max]; default [inf L2 - 1, max L2].
  std::optional<std::pair<int, int>> window;
  std::uint64_t minor_budget = kDefaultMinorBudget;
  std::uint64_t seed = kDefaultSeed;
  /// Continue (with a warning) when the cokernel is found not locally free.
  bool assume_locally_free = false;
  /// Skip the local freeness check entirely (the fixture asserts it by construction).
  bool locally_free_by_construction = false;
};

struct DegreeRecord {
  int n;
  std::size_t alpha;
  std::size_t beta;
  std::size_t q_sharp;
};

struct QProfile {
  int n_min = 0;
  int n_max = -1;
  std::vector<DegreeRecord> rows;
  /// Largest valid degree in the window; when b0_unbounded every degree was valid and
  /// b0 >= n_max is all that is known.
  int b0 = 0;
  bool b0_unbounded = false;
  std::size_t stable_rank = 0;
  bool dissociated = false;
  /// q_sharp(n_max) = r - 1.
  bool stabilized = false;
  /// "certified", "trusted" or "not locally free".
  std::string locally_free;
  std::vector<std::string> warnings;

  std::size_t alpha(int n) const;
  std::size_t beta(int n) const;
  /// 0 below the window, the last value above it.
  std::size_t q_sharp(int n) const;
  CharFunction q() const;
  std::string b0_string() const;
  nlohmann::json to_json() const;
  static QProfile from_json(const nlohmann::json& j);
};

/// The window was exhausted before q_sharp reached r - 1; carries the partial profile.
class ProfileIncomplete : public std::runtime_error {
 public:
  ProfileIncomplete(const std::string& what, QProfile partial)
      : std::runtime_error(what), profile(std::move(partial)) {}
  QProfile profile;
};

/// Generic rank of the columns of degree <= n at the closed point.
template <Field K>
std::size_t alpha(const GradedMatrix<K>& s, int n);

/// Largest k such that the k-minors of the truncated matrix at the closed point have no
/// common factor.
template <Field K>
std::size_t beta(const GradedMatrix<K>& s, int n, std::uint64_t minor_budget = kDefaultMinorBudget,
                 std::uint64_t seed = kDefaultSeed);

/// Number of minimal generators of the module generated by the columns of degree <= n at
/// the closed point.
template <Field K>
std::size_t column_module_generators(const GradedMatrix<K>& s, int n);

/// Whether n is below the threshold: alpha = beta and the column module is free.
template <Field K>
bool below_threshold(const GradedMatrix<K>& s, int n, std::size_t alpha_n, std::size_t beta_n);

/// Certification of the local freeness hypothesis on the r-minors at the closed point,
/// blockwise. nullopt when a block exceeds the minor budget.
template <Field K>
std::optional<bool> certify_locally_free(const GradedMatrix<K>& s, std::uint64_t minor_budget);

template <Field K>
QProfile compute_q_profile(const GradedMatrix<K>& s, const ProfileOptions& options = {});

struct Admissibility {
  bool admissible = true;
  std::string reason;
  std::optional<int> witness;
};

/// Conditions on p against the profile. Throws std::invalid_argument unless the mass of
/// p is r - 1.
Admissibility check_p_admissible(const CharFunction& p, const QProfile& profile);

/// Lower bound for q_sharp(n) by random search: the largest mass m such that some sampled
/// morphism from a free module with generators in degrees <= n, composed with s at the
/// closed point, has rank m and coprime m-minors.
template <Field K>
std::size_t q_oracle(const GradedMatrix<K>& s, int n, std::size_t trials, std::uint64_t seed);

/// Characteristic functions with support in [lo, hi] and the given mass, higher degrees
/// first.
std::vector<CharFunction> characteristic_functions(int lo, int hi, int mass);

/// Sum of (q_sharp - p_sharp) over the degrees where either is non-constant.
long sharp_difference_sum(const CharFunction& p, const CharFunction& q);

}  // namespace biliaison

#endif  // BILIAISON_QPROFILE_HPP
