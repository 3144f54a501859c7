#include "biliaison/qprofile.hpp"

#include <algorithm>
#include <functional>

#include "biliaison/minors.hpp"
#include "biliaison/modgb.hpp"
#include "biliaison/polyalg.hpp"

namespace biliaison {

namespace {

const DegreeRecord* find_row(const QProfile& p, int n) {
  for (const auto& r : p.rows)
    if (r.n == n) return &r;
  return nullptr;
}

template <Field K>
GradedMatrix<K> closed_truncation(const GradedMatrix<K>& s, int n) {
  return specialize_closed_point(truncate_columns(s, n));
}

template <Field K>
GradedMatrix<K> block_of(const GradedMatrix<K>& t, const Block& b) {
  return t.submatrix(b.rows, b.cols);
}

}  // namespace

std::size_t QProfile::alpha(int n) const {
  if (const auto* r = find_row(*this, n)) return r->alpha;
  if (rows.empty() || n < n_min) return 0;
  return rows.back().alpha;
}

std::size_t QProfile::beta(int n) const {
  if (const auto* r = find_row(*this, n)) return r->beta;
  if (rows.empty() || n < n_min) return 0;
  return rows.back().beta;
}

std::size_t QProfile::q_sharp(int n) const {
  if (const auto* r = find_row(*this, n)) return r->q_sharp;
  if (rows.empty() || n < n_min) return 0;
  return rows.back().q_sharp;
}

CharFunction QProfile::q() const {
  CharFunction f;
  std::size_t prev = 0;
  for (const auto& r : rows) {
    f.add(r.n, static_cast<int>(r.q_sharp) - static_cast<int>(prev));
    prev = r.q_sharp;
  }
  return f;
}

std::string QProfile::b0_string() const {
  return (b0_unbounded ? ">= " : "") + std::to_string(b0);
}

nlohmann::json QProfile::to_json() const {
  nlohmann::json j;
  j["window"] = {n_min, n_max};
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back({{"n", r.n}, {"alpha", r.alpha}, {"beta", r.beta}, {"q_sharp", r.q_sharp}});
  j["b0"] = b0;
  j["b0_unbounded"] = b0_unbounded;
  j["stable_rank"] = stable_rank;
  j["dissociated"] = dissociated;
  j["stabilized"] = stabilized;
  j["locally_free"] = locally_free;
  nlohmann::json q_json = nlohmann::json::object();
  if (!dissociated) {
    const auto qf = q();
    for (auto [n, k] : qf.values()) q_json[std::to_string(n)] = k;
  }
  j["q"] = q_json;
  j["warnings"] = warnings;
  return j;
}

QProfile QProfile::from_json(const nlohmann::json& j) {
  QProfile p;
  p.n_min = j.at("window").at(0).get<int>();
  p.n_max = j.at("window").at(1).get<int>();
  for (const auto& r : j.at("rows"))
    p.rows.push_back({r.at("n").get<int>(), r.at("alpha").get<std::size_t>(), r.at("beta").get<std::size_t>(),
                      r.at("q_sharp").get<std::size_t>()});
  p.b0 = j.at("b0").get<int>();
  p.b0_unbounded = j.at("b0_unbounded").get<bool>();
  p.stable_rank = j.at("stable_rank").get<std::size_t>();
  p.dissociated = j.at("dissociated").get<bool>();
  p.stabilized = j.at("stabilized").get<bool>();
  p.locally_free = j.at("locally_free").get<std::string>();
  p.warnings = j.at("warnings").get<std::vector<std::string>>();
  return p;
}

template <Field K>
std::size_t alpha(const GradedMatrix<K>& s, int n) {
  return rank_fraction_field(closed_truncation(s, n));
}

template <Field K>
std::size_t beta(const GradedMatrix<K>& s, int n, std::uint64_t minor_budget, std::uint64_t seed) {
  const auto t = closed_truncation(s, n);
  const std::size_t a = rank_fraction_field(t);
  if (a == 0) return 0;
  Rng rng(seed);
  std::size_t b = a;
  // The a-minors of a block-diagonal matrix are products of the maximal minors of the
  // blocks, so a common factor lives in one block; its rank drop is measured on all of t.
  for (const auto& blk : block_decomposition(t)) {
    const auto sub = block_of(t, blk);
    const std::size_t k = rank_fraction_field(sub);
    if (k == 0 || minors_certified_coprime(sub, k, rng)) continue;
    const auto g = minor_gcd(sub, k, minor_budget, rng);
    if (g.is_zero() || g.degree() == 0) continue;
    for (const auto& f : squarefree_factors(g)) b = std::min(b, rank_modulo_hypersurface(t, f, rng()));
  }
  return b;
}

template <Field K>
std::size_t column_module_generators(const GradedMatrix<K>& s, int n) {
  return static_cast<std::size_t>(minimal_generator_count(closed_truncation(s, n)).rank());
}

template <Field K>
bool below_threshold(const GradedMatrix<K>& s, int n, std::size_t alpha_n, std::size_t beta_n) {
  return alpha_n == beta_n && column_module_generators(s, n) == alpha_n;
}

template <Field K>
std::optional<bool> certify_locally_free(const GradedMatrix<K>& s, std::uint64_t minor_budget) {
  const auto t = specialize_closed_point(s);
  bool over_budget = false;
  for (const auto& blk : block_decomposition(t)) {
    const auto sub = block_of(t, blk);
    const std::size_t k = rank_fraction_field(sub);
    const unsigned __int128 count =
        static_cast<unsigned __int128>(binomial(sub.rows(), k)) * binomial(sub.cols(), k);
    if (count > minor_budget) {
      over_budget = true;
      continue;
    }
    if (!is_empty_projective_locus(minors(sub, k, MinorSelection::all))) return false;
  }
  if (over_budget) return std::nullopt;
  return true;
}

template <Field K>
QProfile compute_q_profile(const GradedMatrix<K>& s, const ProfileOptions& options) {
  QProfile p;
  if (s.cols() == 0) {
    // N = 0 is the empty direct sum of twists.
    p.dissociated = true;
    p.b0_unbounded = true;
    p.stabilized = true;
    p.locally_free = "certified";
    return p;
  }
  const auto& cd = s.col_degrees();
  const int inf = *std::min_element(cd.begin(), cd.end());
  const int sup = *std::max_element(cd.begin(), cd.end());
  std::tie(p.n_min, p.n_max) = options.window.value_or(std::pair{inf - 1, sup});
  if (p.n_min > p.n_max) throw std::invalid_argument("empty degree window");

  if (options.locally_free_by_construction) {
    p.locally_free = "trusted";
    p.warnings.push_back("local freeness of the cokernel asserted by construction, not certified");
  } else {
    auto cert = certify_locally_free(s, options.minor_budget);
    if (!cert) {
      p.locally_free = "trusted";
      p.warnings.push_back("local freeness of the cokernel not certified: minor count exceeds the budget");
    } else if (*cert) {
      p.locally_free = "certified";
    } else if (options.assume_locally_free) {
      p.locally_free = "not locally free";
      p.warnings.push_back("the maximal minors vanish somewhere; continuing because local freeness was assumed");
    } else {
      throw HypothesisError("the cokernel is not locally free: the maximal minors at the closed point have a common zero");
    }
  }

  p.stable_rank = rank_fraction_field(specialize_closed_point(s));
  for (int n = p.n_min; n <= p.n_max; ++n) {
    const std::size_t a = alpha(s, n);
    const std::size_t b = beta(s, n, options.minor_budget, options.seed + static_cast<std::uint64_t>(n - p.n_min));
    p.rows.push_back({n, a, b, 0});
  }

  // Valid degrees form an initial segment.
  p.b0 = p.n_min - 1;
  p.b0_unbounded = true;
  for (const auto& r : p.rows) {
    if (!below_threshold(s, r.n, r.alpha, r.beta)) {
      p.b0_unbounded = false;
      break;
    }
    p.b0 = r.n;
  }
  if (p.b0 < p.n_min) p.warnings.push_back("no degree of the window lies below the threshold");
  p.dissociated = p.b0_unbounded && p.rows.back().alpha == p.stable_rank;

  std::size_t prev = 0;
  for (auto& r : p.rows) {
    r.q_sharp = r.n <= p.b0 || r.alpha == 0 ? r.alpha : std::min(r.alpha - 1, r.beta);
    if (r.q_sharp < prev) p.warnings.push_back("q_sharp decreases at degree " + std::to_string(r.n));
    prev = r.q_sharp;
  }
  const std::size_t target = p.dissociated ? p.stable_rank : p.stable_rank - 1;
  p.stabilized = p.rows.back().alpha == p.stable_rank && p.rows.back().q_sharp == target;
  if (p.dissociated) p.warnings.push_back("N is dissociated: every degree of the window is below the threshold");
  if (!p.stabilized)
    throw ProfileIncomplete("q_sharp did not reach r - 1 = " + std::to_string(p.stable_rank - 1) +
                                " by degree " + std::to_string(p.n_max),
                            p);
  return p;
}

Admissibility check_p_admissible(const CharFunction& p, const QProfile& profile) {
  if (profile.stable_rank == 0 || p.rank() != static_cast<int>(profile.stable_rank) - 1)
    throw std::invalid_argument("p must have total mass r - 1 = " +
                                std::to_string(static_cast<long>(profile.stable_rank) - 1));
  if (profile.dissociated) return {false, "N is dissociated", std::nullopt};
  int lo = std::min(p.min_degree().value_or(profile.n_min), profile.n_min);
  int hi = std::max(p.max_degree().value_or(profile.n_max), profile.n_max);
  for (int n = lo; n <= hi; ++n) {
    const std::size_t ps = static_cast<std::size_t>(p.cumulative(n));
    if (ps > profile.q_sharp(n))
      return {false,
              "p#(" + std::to_string(n) + ")=" + std::to_string(ps) + " > q#(" + std::to_string(n) +
                  ")=" + std::to_string(profile.q_sharp(n)),
              n};
  }
  for (int n = lo; n <= profile.b0; ++n) {
    if (static_cast<std::size_t>(p.cumulative(n)) != profile.q_sharp(n)) continue;
    for (int m = lo; m <= n; ++m)
      if (static_cast<std::size_t>(p.cumulative(m)) != profile.alpha(m))
        return {false,
                "p#(" + std::to_string(n) + ") = q#(" + std::to_string(n) + ") at or below b0 but p#(" +
                    std::to_string(m) + ")=" + std::to_string(p.cumulative(m)) + " differs from alpha_" +
                    std::to_string(m) + "=" + std::to_string(profile.alpha(m)),
                m};
  }
  return {};
}

std::vector<CharFunction> characteristic_functions(int lo, int hi, int mass) {
  std::vector<CharFunction> out;
  if (mass < 0) return out;
  if (hi < lo) {
    if (mass == 0) out.emplace_back();
    return out;
  }
  std::vector<int> parts(static_cast<std::size_t>(hi - lo + 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts.size()) {
      parts[i] = left;
      CharFunction f;
      for (std::size_t k = 0; k < parts.size(); ++k) f.add(lo + static_cast<int>(k), parts[k]);
      out.push_back(f);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, mass);
  std::stable_sort(out.begin(), out.end(),
                   [](const CharFunction& a, const CharFunction& b) { return a.weighted_sum() > b.weighted_sum(); });
  return out;
}

long sharp_difference_sum(const CharFunction& p, const CharFunction& q) {
  if (p.empty() && q.empty()) return 0;
  int lo = std::min(p.min_degree().value_or(*q.min_degree()), q.min_degree().value_or(*p.min_degree()));
  int hi = std::max(p.max_degree().value_or(*q.max_degree()), q.max_degree().value_or(*p.max_degree()));
  long s = 0;
  for (int n = lo; n <= hi; ++n) s += q.cumulative(n) - p.cumulative(n);
  return s;
}

template <Field K>
std::size_t q_oracle(const GradedMatrix<K>& s, int n, std::size_t trials, std::uint64_t seed) {
  if (s.cols() == 0) return 0;
  const auto t = specialize_closed_point(s);
  const std::size_t a = alpha(s, n);
  if (a == 0) return 0;
  const auto& cd = s.col_degrees();
  const int inf = *std::min_element(cd.begin(), cd.end());
  Rng rng(seed);
  for (std::size_t m = a; m >= 1; --m) {
    for (const auto& p : characteristic_functions(inf, n, static_cast<int>(m))) {
      int rank_misses = 0;
      for (std::size_t trial = 0; trial < trials; ++trial) {
        auto v = random_graded_matrix(s.field(), cd, p.degrees(), rng);
        auto w = t * v;
        if (rank_fraction_field(w, rng()) != m) {
          // The generic rank of this shape is below m.
          if (++rank_misses == 2) break;
          continue;
        }
        if (minors_certified_coprime(w, m, rng)) return m;
      }
    }
  }
  return 0;
}

#define BILIAISON_INSTANTIATE(K)                                                                 \
  template std::size_t alpha(const GradedMatrix<K>&, int);                                       \
  template std::size_t beta(const GradedMatrix<K>&, int, std::uint64_t, std::uint64_t);          \
  template std::size_t column_module_generators(const GradedMatrix<K>&, int);                    \
  template bool below_threshold(const GradedMatrix<K>&, int, std::size_t, std::size_t);          \
  template std::optional<bool> certify_locally_free(const GradedMatrix<K>&, std::uint64_t);      \
  template QProfile compute_q_profile(const GradedMatrix<K>&, const ProfileOptions&);            \
  template std::size_t q_oracle(const GradedMatrix<K>&, int, std::size_t, std::uint64_t);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
