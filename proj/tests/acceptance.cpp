// One pass/fail line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "biliaison/families.hpp"
#include "biliaison/fixtures.hpp"
#include "biliaison/minors.hpp"
#include "biliaison/modgb.hpp"

using namespace biliaison;

namespace {

const PrimeField kFp{32003};
using Matrix = GradedMatrix<PrimeField>;

struct Run {
  std::string name;
  Matrix matrix;
  QProfile profile;
};

std::vector<Run> all_profiles;
std::vector<FamilyInvariants> verified;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

QProfile profile_of(const ExampleDescriptor<PrimeField>& ex) {
  ProfileOptions opt;
  opt.locally_free_by_construction = ex.locally_free_asserted;
  return compute_q_profile(ex.matrix, opt);
}

std::string fixture_regression(Outcome& o, const std::string& name, double limit) {
  auto t0 = std::chrono::steady_clock::now();
  auto ex = example(kFp, name);
  const auto& e = ex.expected;
  if (e.sigma2_columns)
    o.expect(ex.sigma2.col_function() == CharFunction(std::map<int, int>{{3, static_cast<int>(*e.sigma2_columns)}}),
             "sigma2 " + ex.sigma2.col_function().to_string());
  auto p = profile_of(ex);
  for (auto [n, v] : e.alpha) o.expect(p.alpha(n) == static_cast<std::size_t>(v), "alpha_" + std::to_string(n));
  for (auto [n, v] : e.beta) o.expect(p.beta(n) == static_cast<std::size_t>(v), "beta_" + std::to_string(n));
  if (e.b0 && !e.b0_is_lower_bound) o.expect(p.b0 == *e.b0 && !p.b0_unbounded, "b0 " + p.b0_string());
  if (e.b0 && e.b0_is_lower_bound) o.expect(p.b0 >= *e.b0 && p.b0 < e.b0_below.value_or(p.b0 + 1), "b0 " + p.b0_string());
  o.expect(p.q() == CharFunction(e.q), "q " + p.q().to_string());
  auto r = minimal_family(ex.matrix, p);
  if (e.h0) o.expect(r.h0 == *e.h0, "h0 " + std::to_string(r.h0));
  o.expect(r.d0 == e.d0 && r.g0 == e.g0, "(d0,g0) (" + std::to_string(r.d0) + "," + r.g0.get_str() + ")");
  const double t = seconds_since(t0);
  o.expect(t < limit, "time " + std::to_string(t));
  all_profiles.push_back({name, ex.matrix, p});
  verified.push_back(r.family);
  std::ostringstream s;
  s << "q=" << p.q().to_string() << " b0=" << p.b0_string() << " h0=" << r.h0 << " (d0,g0)=(" << r.d0 << ","
    << r.g0.get_str() << ") " << std::fixed << std::setprecision(2) << t << "s";
  return s.str();
}

Matrix random_matrix(Rng& rng) {
  std::uniform_int_distribution<int> rows_d(1, 3), zero(0, 9), bit(0, 1), entry(0, 2);
  const int rows = rows_d(rng);
  std::uniform_int_distribution<int> cols_d(rows + 3, 6);
  const int cols = cols_d(rng);
  std::vector<int> rd(rows), cd(cols);
  for (auto& r : rd) r = bit(rng);
  // Entry degrees col - row lie in 0..2 for every row.
  for (auto& c : cd) c = 1 + entry(rng) % 2;
  Matrix m(kFp, rd, cd);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (zero(rng) >= 3) m.set(i, j, random_form(kFp, cd[j] - rd[i], rng));
  return m;
}

std::string criterion4(Outcome& o) {
  Rng rng(0xC0FFEE);
  int accepted = 0, drawn = 0, degrees = 0;
  while (accepted < 50 && drawn < 2000) {
    ++drawn;
    auto m = random_matrix(rng);
    if (rank_fraction_field(m) == 0) continue;
    auto cert = certify_locally_free(m, kDefaultMinorBudget);
    if (!cert || !*cert) continue;
    QProfile p;
    try {
      p = compute_q_profile(m);
    } catch (const ProfileIncomplete& e) {
      o.expect(false, "profile did not stabilize: " + m.to_string());
      continue;
    }
    ++accepted;
    for (const auto& r : p.rows) {
      ++degrees;
      const auto oracle = q_oracle(m, r.n, 50, rng());
      if (oracle != r.q_sharp)
        o.expect(false, "n=" + std::to_string(r.n) + " profile " + std::to_string(r.q_sharp) + " oracle " +
                            std::to_string(oracle) + " for " + m.to_string());
    }
    all_profiles.push_back({"random", m, p});
  }
  o.expect(accepted >= 50, "only " + std::to_string(accepted) + " matrices accepted");
  return std::to_string(accepted) + " matrices, " + std::to_string(degrees) + " degrees compared";
}

std::string criterion5(Outcome& o) {
  for (const auto& run : all_profiles) {
    const auto& p = run.profile;
    const auto& cd = run.matrix.col_degrees();
    const int inf = *std::min_element(cd.begin(), cd.end());
    std::size_t prev = 0;
    auto fail = [&](const std::string& what) { o.expect(false, run.name + ": " + what); };
    for (const auto& r : p.rows) {
      if (r.q_sharp < prev) fail("q# decreases at " + std::to_string(r.n));
      if (!(r.q_sharp <= r.beta && r.beta <= r.alpha)) fail("q# <= beta <= alpha fails at " + std::to_string(r.n));
      if (r.n <= p.b0 && r.q_sharp != r.alpha) fail("q# != alpha at " + std::to_string(r.n));
      if (r.n > p.b0 && r.q_sharp == r.alpha && r.alpha > 0) fail("q# = alpha above b0 at " + std::to_string(r.n));
      if (r.n > p.b0 && r.q_sharp != std::min(r.alpha - 1, r.beta)) fail("q# formula at " + std::to_string(r.n));
      if (r.n < inf && r.q_sharp != 0) fail("q# nonzero below inf L2");
      prev = r.q_sharp;
    }
    // The examples have b0 = inf L2 - 1, so the bound checked is b0 >= inf L2 - 1.
    if (p.b0 < inf - 1) fail("b0 below inf L2 - 1");
    const std::size_t target = p.dissociated ? p.stable_rank : p.stable_rank - 1;
    if (p.rows.back().q_sharp != target) fail("q# does not stabilize at r - 1");
    if (p.rows.back().alpha != p.stable_rank) fail("alpha does not reach r");
  }
  return std::to_string(all_profiles.size()) + " profiles";
}

// Moves each generator of q up by a random amount.
CharFunction random_later(const CharFunction& q, Rng& rng) {
  std::uniform_int_distribution<int> shift(0, 4), coin(0, 1);
  CharFunction p;
  for (int d : q.degrees()) p.add(d + (coin(rng) == 0 ? shift(rng) + 1 : 0), 1);
  return p;
}

std::string criterion6(Outcome& o) {
  Rng rng(0x5A1F7);
  int families = 0;
  for (const auto& name : example_names()) {
    auto ex = example(kFp, name);
    auto prof = profile_of(ex);
    const auto q = prof.q();
    const long deg_n = sheaf_degree(ex.matrix);
    const long h0 = minimal_shift(prof, deg_n);
    std::set<std::string> seen;
    int found = 0;
    for (int draw = 0; draw < 2000 && found < 20; ++draw) {
      auto p = random_later(q, rng);
      if (p == q || !seen.insert(p.to_string()).second) continue;
      if (!check_p_admissible(p, prof).admissible) continue;
      ++found;
      o.expect(p.weighted_sum() - q.weighted_sum() == sharp_difference_sum(p, q), name + " Abel identity for " + p.to_string());
      const long h = deg_n + p.weighted_sum();
      o.expect(h > h0, name + " shift " + std::to_string(h) + " for " + p.to_string());
      try {
        auto f = family_for(ex.matrix, prof, p, FamilyOptions{rng(), kRetryCap});
        ++families;
        verified.push_back(f);
        o.expect(f.h == h, name + " computed shift " + std::to_string(f.h) + " for " + p.to_string());
      } catch (const std::exception& e) {
        o.expect(false, name + " " + p.to_string() + ": " + e.what());
      }
    }
    o.expect(found == 20, name + " only " + std::to_string(found) + " admissible p");
  }
  return "60 p checked, " + std::to_string(families) + " families computed";
}

std::string criterion7(Outcome& o) {
  for (const auto& f : verified)
    o.expect(f.conserved(), "P_Q + P_P != P_N for " + f.quotient.to_string());
  return std::to_string(verified.size()) + " morphisms";
}

std::string criterion8(Outcome& o) {
  auto k = koszul_matrices(kFp);
  o.expect((k.u * k.v).is_zero(), "UV != 0");
  o.expect((k.v * k.v_prime).is_zero(), "VV' != 0");
  o.expect(bareiss_rank(k.u) == 1 && bareiss_rank(k.v) == 3 && bareiss_rank(k.v_prime) == 3, "ranks");
  return "ranks (" + std::to_string(bareiss_rank(k.u)) + ", " + std::to_string(bareiss_rank(k.v)) + ", " +
         std::to_string(bareiss_rank(k.v_prime)) + ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<std::string(Outcome&)>>> criteria = {
      {1, [](Outcome& o) { return fixture_regression(o, "3.2", 10); }},
      {2, [](Outcome& o) { return fixture_regression(o, "3.3", 30); }},
      {3, [](Outcome& o) { return fixture_regression(o, "3.4", 600); }},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
  };
  bool all = true;
  for (const auto& [id, body] : criteria) {
    Outcome o;
    std::string summary;
    try {
      summary = body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << summary << o.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
