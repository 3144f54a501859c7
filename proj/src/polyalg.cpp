#include "biliaison/polyalg.hpp"

#include <algorithm>
#include <optional>

namespace biliaison {

template <Field K>
int full_degree(const MultiPoly<K>& f) {
  int d = kDegreeOfZero;
  for (const auto& t : f.terms()) d = std::max(d, t.mono.degree() + t.mono[A]);
  return d;
}

template <Field K>
UPoly<K> restrict_to_line(const MultiPoly<K>& f, const Line<K>& line) {
  const K& field = f.field();
  if (f.is_zero()) return UPoly<K>(field);
  int d = full_degree(f);
  std::vector<typename K::Element> xs, ys;
  xs.reserve(d + 1);
  ys.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    auto t = field.from_int(i);
    xs.push_back(t);
    ys.push_back(f.evaluate(line.at(field, t)));
  }
  return interpolate(field, xs, ys);
}

namespace {

// True when f and g are certainly coprime: on a line where f keeps its full degree,
// a common factor would survive as a nonconstant common factor of the restrictions.
template <Field K>
bool certified_coprime(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  const K& field = f.field();
  Rng rng(0xC0941E5u);
  for (int attempt = 0; attempt < 2; ++attempt) {
    Line<K> line = Line<K>::random(field, rng);
    UPoly<K> rf = restrict_to_line(f, line);
    if (rf.degree() != full_degree(f)) continue;
    UPoly<K> rg = restrict_to_line(g, line);
    if (gcd(rf, rg).is_constant()) return true;
  }
  return false;
}

// Picks a variable occurring in f or g, preferring the smallest positive degree in both.
template <Field K>
int choose_variable(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  int best = -1, best_deg = 1 << 30;
  for (int v = 0; v < kNumVars; ++v) {
    int df = f.degree_in(v), dg = g.degree_in(v);
    if (df <= 0 && dg <= 0) continue;
    int score = (df > 0 && dg > 0) ? std::min(df, dg) : (1 << 20) + std::max(df, dg);
    if (score < best_deg) {
      best_deg = score;
      best = v;
    }
  }
  return best;
}

template <Field K>
MultiPoly<K> leading_coefficient_in(const MultiPoly<K>& f, int v) {
  auto coeffs = f.coefficients_in(v);
  return coeffs.back();
}

// Pseudo-remainder of a by b with respect to v.
template <Field K>
MultiPoly<K> pseudo_remainder(MultiPoly<K> a, const MultiPoly<K>& b, int v) {
  const int m = b.degree_in(v);
  const MultiPoly<K> lb = leading_coefficient_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= m) {
    int da = a.degree_in(v);
    MultiPoly<K> la = leading_coefficient_in(a, v);
    MultiPoly<K> shift = MultiPoly<K>::variable(a.field(), v, da - m);
    a = a * lb - la * shift * b;
  }
  return a;
}

template <Field K>
MultiPoly<K> primitive_part_in(const MultiPoly<K>& f, int v) {
  MultiPoly<K> c = content_in(f, v);
  return c.is_constant() ? f.monic() : f.exact_divide(c).monic();
}

template <Field K>
MultiPoly<K> gcd_impl(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  const K& field = f.is_zero() ? g.field() : f.field();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return MultiPoly<K>(field, field.one());
  if (f.size() == 1 && g.size() == 1) {
    // Monomial gcd.
    auto ef = f.leading_monomial().exponents(), eg = g.leading_monomial().exponents();
    Monomial::Exponents e;
    for (int i = 0; i < kNumVars; ++i) e[i] = std::min(ef[i], eg[i]);
    return MultiPoly<K>::monomial(field, Monomial(e), field.one());
  }
  if (certified_coprime(f, g)) return MultiPoly<K>(field, field.one());

  int v = choose_variable(f, g);
  int df = f.degree_in(v), dg = g.degree_in(v);
  if (dg <= 0) return gcd_impl(content_in(f, v), g);
  if (df <= 0) return gcd_impl(f, content_in(g, v));

  MultiPoly<K> cf = content_in(f, v), cg = content_in(g, v);
  MultiPoly<K> c = gcd_impl(cf, cg);
  MultiPoly<K> a = cf.is_constant() ? f : f.exact_divide(cf);
  MultiPoly<K> b = cg.is_constant() ? g : g.exact_divide(cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    MultiPoly<K> r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) <= 0) {
      b = MultiPoly<K>(field, field.one());
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
  MultiPoly<K> result = b.is_constant() ? c : c * primitive_part_in(b, v);
  return result.monic();
}

}  // namespace

template <Field K>
MultiPoly<K> content_in(const MultiPoly<K>& f, int v) {
  auto coeffs = f.coefficients_in(v);
  std::vector<MultiPoly<K>> nonzero;
  for (auto& c : coeffs)
    if (!c.is_zero()) nonzero.push_back(std::move(c));
  if (nonzero.empty()) return MultiPoly<K>(f.field());
  // Smallest first keeps the running gcd cheap.
  std::sort(nonzero.begin(), nonzero.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  MultiPoly<K> g = nonzero.front().monic();
  for (std::size_t i = 1; i < nonzero.size() && !g.is_constant(); ++i) g = gcd_impl(g, nonzero[i]);
  return g;
}

template <Field K>
MultiPoly<K> gcd(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  if (!f.is_zero() && !g.is_zero() && !(f.field() == g.field()))
    throw FieldMismatch("gcd of polynomials over different fields");
  return gcd_impl(f, g);
}

template <Field K>
MultiPoly<K> gcd_many(std::span<const MultiPoly<K>> polys) {
  std::optional<GcdAccumulator<K>> acc;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!acc) acc.emplace(p.field());
    if (acc->add(p)) break;
  }
  if (!acc || acc->empty()) throw std::invalid_argument("gcd_many: all inputs are zero");
  return acc->value();
}

namespace {

template <Field K>
void collect_squarefree(const MultiPoly<K>& f, std::vector<MultiPoly<K>>& out) {
  if (f.is_constant()) return;
  int v = -1;
  for (int i = 0; i < kNumVars; ++i)
    if (f.degree_in(i) > 0) {
      v = i;
      break;
    }
  MultiPoly<K> cont = content_in(f, v);
  MultiPoly<K> pp = cont.is_constant() ? f : f.exact_divide(cont);
  // Yun's algorithm in v.
  MultiPoly<K> dp = pp.derivative(v);
  MultiPoly<K> b = gcd(pp, dp);
  MultiPoly<K> c = pp.exact_divide(b);
  MultiPoly<K> d = dp.exact_divide(b) - c.derivative(v);
  while (!c.is_constant()) {
    MultiPoly<K> a = d.is_zero() ? c.monic() : gcd(c, d);
    if (!a.is_constant()) out.push_back(a.monic());
    c = c.exact_divide(a);
    d = d.exact_divide(a) - c.derivative(v);
  }
  collect_squarefree(cont, out);
}

}  // namespace

template <Field K>
std::vector<MultiPoly<K>> squarefree_factors(const MultiPoly<K>& p) {
  if (p.is_constant()) throw std::invalid_argument("squarefree_factors: constant input");
  std::vector<MultiPoly<K>> out;
  collect_squarefree(p, out);
  return out;
}

#define BILIAISON_INSTANTIATE(K)                                                   \
  template int full_degree(const MultiPoly<K>&);                                   \
  template UPoly<K> restrict_to_line(const MultiPoly<K>&, const Line<K>&);         \
  template MultiPoly<K> gcd(const MultiPoly<K>&, const MultiPoly<K>&);             \
  template MultiPoly<K> gcd_many(std::span<const MultiPoly<K>>);                   \
  template MultiPoly<K> content_in(const MultiPoly<K>&, int);                      \
  template std::vector<MultiPoly<K>> squarefree_factors(const MultiPoly<K>&);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
