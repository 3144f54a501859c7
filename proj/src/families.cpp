#include "biliaison/families.hpp"

#include "biliaison/minors.hpp"
#include "biliaison/modgb.hpp"

namespace biliaison {

namespace {

// Raises the Groebner degree cap while the basis is truncated and the fit fails.
template <Field K>
HilbertPolynomial column_hilbert_polynomial(const GradedMatrix<K>& m) {
  int top = 0;
  for (int d : m.col_degrees()) top = std::max(top, d);
  for (int slack = 8;; slack *= 2) {
    SubmodulePresentation<K> gb(m, GroebnerOptions{top + slack});
    try {
      return gb.hilbert_polynomial();
    } catch (const BudgetExceeded&) {
      if (gb.complete() || slack >= 64) throw;
    }
  }
}

}  // namespace

template <Field K>
HilbertPolynomial image_hilbert_polynomial(const GradedMatrix<K>& s) {
  return column_hilbert_polynomial(specialize_closed_point(s));
}

long sheaf_degree(const HilbertPolynomial& image_polynomial, std::size_t stable_rank) {
  mpq_class deg = 2 * (image_polynomial.coeff(2) - static_cast<long>(stable_rank));
  deg.canonicalize();
  if (deg.get_den() != 1) throw std::runtime_error("sheaf degree " + deg.get_str() + " is not an integer");
  return deg.get_num().get_si();
}

template <Field K>
long sheaf_degree(const GradedMatrix<K>& s) {
  return sheaf_degree(image_hilbert_polynomial(s), rank_fraction_field(specialize_closed_point(s)));
}

long minimal_shift(const QProfile& profile, long deg_n) {
  if (profile.dissociated) throw DissociatedError("N is dissociated; there is no minimal family");
  return profile.q().weighted_sum() + deg_n;
}

template <Field K>
GradedMatrix<K> sample_general_morphism(const GradedMatrix<K>& s, const QProfile& profile, const CharFunction& p,
                                        std::uint64_t seed) {
  auto adm = check_p_admissible(p, profile);
  if (!adm.admissible) throw std::invalid_argument("p is not admissible: " + adm.reason);
  Rng rng(seed);
  return random_graded_matrix(s.field(), s.col_degrees(), p.degrees(), rng);
}

std::string MorphismCertificate::summary() const {
  return "rank " + std::to_string(rank) + ", maximal minors " + (minors_coprime ? "coprime" : "not certified coprime");
}

template <Field K>
MorphismCertificate verify_general_morphism(const GradedMatrix<K>& s, const GradedMatrix<K>& v, std::size_t stable_rank,
                                            std::uint64_t seed) {
  if (stable_rank == 0 || v.cols() != stable_rank - 1)
    throw std::invalid_argument("the morphism must have r - 1 columns");
  const auto w = specialize_closed_point(s * v);
  MorphismCertificate c;
  c.rank = rank_fraction_field(w, seed);
  if (c.rank != w.cols()) throw MorphismError("morphism not injective at the closed point: " + c.summary());
  Rng rng(seed);
  c.minors_coprime = w.cols() == 0 || minors_certified_coprime(w, w.cols(), rng);
  if (!c.minors_coprime) throw MorphismError("cokernel may have torsion: " + c.summary());
  return c;
}

template <Field K>
FamilyInvariants family_degree_genus(const GradedMatrix<K>& s, const GradedMatrix<K>& v, const CharFunction& p,
                                     long deg_n, const HilbertPolynomial& image_polynomial) {
  FamilyInvariants f;
  f.image = image_polynomial;
  f.source = HilbertPolynomial::free_module(p);
  if (v.cols() == 0) {
    f.morphism = HilbertPolynomial();
  } else {
    f.morphism = column_hilbert_polynomial(specialize_closed_point(s * v));
  }
  f.quotient = f.image - f.morphism;
  f.h = deg_n + p.weighted_sum();
  // P_Q(n) = C(n + h + 3, 3) - d (n + h) - 1 + g
  const auto defect = f.quotient - HilbertPolynomial::shifted_binomial(static_cast<int>(-f.h));
  if (defect.coeff(3) != 0 || defect.coeff(2) != 0 || defect.coeff(1).get_den() != 1 || defect.coeff(0).get_den() != 1)
    throw MorphismError("quotient polynomial " + f.quotient.to_string() + " is not that of a twisted curve ideal");
  mpz_class d = -defect.coeff(1).get_num();
  if (d < 1) throw MorphismError("quotient polynomial " + f.quotient.to_string() + " gives degree " + d.get_str());
  f.d = d.get_si();
  f.g = defect.coeff(0).get_num() + d * f.h + 1;
  return f;
}

template <Field K>
FamilyInvariants family_for(const GradedMatrix<K>& s, const QProfile& profile, const CharFunction& p,
                            const FamilyOptions& options, MorphismCertificate* certificate, int* attempts) {
  const auto image = image_hilbert_polynomial(s);
  const long deg_n = sheaf_degree(image, profile.stable_rank);
  Rng seeds(options.seed);
  std::string last;
  for (int attempt = 1; attempt <= options.retry_cap; ++attempt) {
    const std::uint64_t seed = seeds();
    auto v = sample_general_morphism(s, profile, p, seed);
    try {
      auto cert = verify_general_morphism(s, v, profile.stable_rank, seed ^ 0x9E3779B97F4A7C15ull);
      auto f = family_degree_genus(s, v, p, deg_n, image);
      if (certificate) *certificate = cert;
      if (attempts) *attempts = attempt;
      return f;
    } catch (const MorphismError& e) {
      last = e.what();
    }
  }
  throw MorphismError("no sampled morphism verified after " + std::to_string(options.retry_cap) + " attempts: " + last);
}

template <Field K>
MinimalFamilyReport minimal_family(const GradedMatrix<K>& s, const QProfile& profile, const FamilyOptions& options) {
  if (profile.dissociated) throw DissociatedError("N is dissociated; there is no minimal family");
  MinimalFamilyReport r;
  r.q = profile.q();
  r.seed = options.seed;
  r.family = family_for(s, profile, r.q, options, &r.certificate, &r.attempts);
  r.deg_n = r.family.h - r.q.weighted_sum();
  r.h0 = minimal_shift(profile, r.deg_n);
  r.d0 = r.family.d;
  r.g0 = r.family.g;
  auto c = HilbertPolynomial::shifted_binomial(0);
  std::array<mpq_class, 4> coeffs{c.coeff(0) - 1 + mpq_class(r.g0), c.coeff(1) - r.d0, c.coeff(2), c.coeff(3)};
  r.ideal_sheaf = HilbertPolynomial(coeffs);
  return r;
}

nlohmann::json MinimalFamilyReport::to_json() const {
  nlohmann::json j;
  nlohmann::json qj = nlohmann::json::object();
  for (auto [n, k] : q.values()) qj[std::to_string(n)] = k;
  j["q"] = qj;
  j["deg_N"] = deg_n;
  j["h0"] = h0;
  j["d0"] = d0;
  j["g0"] = g0.get_str();
  j["hilbert_polynomial"] = ideal_sheaf.coefficient_strings();
  j["quotient_hilbert_polynomial"] = family.quotient.coefficient_strings();
  j["seed"] = seed;
  j["certificate"] = {{"attempts", attempts}, {"rank", certificate.rank},
                      {"minors_coprime", certificate.minors_coprime}, {"conserved", family.conserved()}};
  return j;
}

template <Field K>
GradedMatrix<K> add_free_summand(const GradedMatrix<K>& s, int m) {
  auto rd = s.row_degrees();
  auto cd = s.col_degrees();
  rd.push_back(m);
  cd.push_back(m);
  GradedMatrix<K> out(s.field(), rd, cd);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) out.set(i, j, s(i, j));
  out.set(s.rows(), s.cols(), MultiPoly<K>::constant(s.field(), 1));
  return out;
}

#define BILIAISON_INSTANTIATE(K)                                                                                  \
  template HilbertPolynomial image_hilbert_polynomial(const GradedMatrix<K>&);                                    \
  template long sheaf_degree(const GradedMatrix<K>&);                                                             \
  template GradedMatrix<K> sample_general_morphism(const GradedMatrix<K>&, const QProfile&, const CharFunction&,  \
                                                   std::uint64_t);                                                \
  template MorphismCertificate verify_general_morphism(const GradedMatrix<K>&, const GradedMatrix<K>&, std::size_t, \
                                                       std::uint64_t);                                            \
  template FamilyInvariants family_degree_genus(const GradedMatrix<K>&, const GradedMatrix<K>&,                   \
                                                const CharFunction&, long, const HilbertPolynomial&);             \
  template FamilyInvariants family_for(const GradedMatrix<K>&, const QProfile&, const CharFunction&,              \
                                       const FamilyOptions&, MorphismCertificate*, int*);                          \
  template MinimalFamilyReport minimal_family(const GradedMatrix<K>&, const QProfile&, const FamilyOptions&);     \
  template GradedMatrix<K> add_free_summand(const GradedMatrix<K>&, int);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
