#ifndef BILIAISON_FAMILIES_HPP
#define BILIAISON_FAMILIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "biliaison/hilbert.hpp"
#include "biliaison/qprofile.hpp"

namespace biliaison {

inline constexpr int kRetryCap = 10;

/// A sampled morphism failed a check; a fresh sample may succeed.
class MorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal-family operations refuse a dissociated N.
class DissociatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hilbert polynomial of the image of s at the closed point.
template <Field K>
HilbertPolynomial image_hilbert_polynomial(const GradedMatrix<K>& s);

/// deg N = 2 * (n^2 coefficient of P_N - r). Throws std::runtime_error if not an integer.
long sheaf_degree(const HilbertPolynomial& image_polynomial, std::size_t stable_rank);

template <Field K>
long sheaf_degree(const GradedMatrix<K>& s);

/// h0 = sum n q(n) + deg N. Throws DissociatedError for a dissociated profile.
long minimal_shift(const QProfile& profile, long deg_n);

/// v : P -> L2 with random coefficients; rows carry the degrees of L2, columns those of p.
/// Throws std::invalid_argument if p is not admissible for the profile.
template <Field K>
GradedMatrix<K> sample_general_morphism(const GradedMatrix<K>& s, const QProfile& profile, const CharFunction& p,
                                        std::uint64_t seed);

struct MorphismCertificate {
  std::size_t rank = 0;
  bool minors_coprime = false;
  std::string summary() const;
};

/// W = (s v) at the closed point must have rank r - 1 = its column count and coprime
/// (r - 1)-minors. Throws MorphismError otherwise.
template <Field K>
MorphismCertificate verify_general_morphism(const GradedMatrix<K>& s, const GradedMatrix<K>& v, std::size_t stable_rank,
                                            std::uint64_t seed = kDefaultSeed);

struct FamilyInvariants {
  long h = 0;
  long d = 0;
  mpz_class g;
  HilbertPolynomial image;     // P_N
  HilbertPolynomial morphism;  // Hilbert polynomial of the image of W, by Groebner basis
  HilbertPolynomial source;    // P_P = sum p(m) C(n - m + 3, 3)
  HilbertPolynomial quotient;  // P_Q = P_N - P_W
  /// P_Q + P_P = P_N.
  bool conserved() const { return quotient + source == image; }
};

/// (h, d, g) of the cokernel of a verified morphism. Throws MorphismError when P_Q is not
/// the polynomial of a twisted ideal sheaf of a curve.
template <Field K>
FamilyInvariants family_degree_genus(const GradedMatrix<K>& s, const GradedMatrix<K>& v, const CharFunction& p,
                                     long deg_n, const HilbertPolynomial& image_polynomial);

struct MinimalFamilyReport {
  CharFunction q;
  long deg_n = 0;
  long h0 = 0;
  long d0 = 0;
  mpz_class g0;
  /// C(n+3,3) - d0 n - 1 + g0.
  HilbertPolynomial ideal_sheaf;
  FamilyInvariants family;
  std::uint64_t seed = 0;
  int attempts = 0;
  MorphismCertificate certificate;
  nlohmann::json to_json() const;
};

struct FamilyOptions {
  std::uint64_t seed = kDefaultSeed;
  int retry_cap = kRetryCap;
};

/// Minimal family for a computed profile: samples u with p = q until it verifies.
template <Field K>
MinimalFamilyReport minimal_family(const GradedMatrix<K>& s, const QProfile& profile, const FamilyOptions& options = {});

/// Family for an admissible p (same sampling and retries as minimal_family).
template <Field K>
FamilyInvariants family_for(const GradedMatrix<K>& s, const QProfile& profile, const CharFunction& p,
                            const FamilyOptions& options, MorphismCertificate* certificate = nullptr,
                            int* attempts = nullptr);

/// diag(s, 1) with the new row and column in degree m: N is extended by O(-m).
template <Field K>
GradedMatrix<K> add_free_summand(const GradedMatrix<K>& s, int m);

}  // namespace biliaison

#endif  // BILIAISON_FAMILIES_HPP
