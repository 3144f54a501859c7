#include "biliaison/minors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace biliaison {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

template <Field K>
std::vector<Block> block_decomposition(const GradedMatrix<K>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> row_used(R, false), col_used(C, false);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      if (m(i, j).is_zero()) continue;
      row_used[i] = col_used[j] = true;
      parent[find(i)] = find(R + j);
    }
  std::vector<Block> blocks;
  std::vector<long> block_of(R + C, -1);
  auto block_for = [&](std::size_t node) -> Block& {
    std::size_t root = find(node);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    return blocks[block_of[root]];
  };
  for (std::size_t i = 0; i < R; ++i)
    if (row_used[i]) block_for(i).rows.push_back(i);
  for (std::size_t j = 0; j < C; ++j)
    if (col_used[j]) block_for(R + j).cols.push_back(j);
  return blocks;
}

namespace {

template <Field K>
using PolyGrid = std::vector<std::vector<MultiPoly<K>>>;

template <Field K>
PolyGrid<K> to_grid(const GradedMatrix<K>& m) {
  PolyGrid<K> a(m.rows(), std::vector<MultiPoly<K>>(m.cols(), MultiPoly<K>(m.field())));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

// Fraction-free elimination; every intermediate entry is a minor of the input, so the
// divisions are exact. Returns the rank and, for square input, the determinant.
template <Field K>
std::size_t bareiss(PolyGrid<K>& a, const K& field, MultiPoly<K>* det) {
  const std::size_t R = a.size(), C = R ? a[0].size() : 0;
  MultiPoly<K> prev(field, field.one());
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    // Prefer the sparsest pivot.
    for (std::size_t i = r; i < R; ++i)
      if (!a[i][c].is_zero() && (a[p][c].is_zero() || a[i][c].size() < a[p][c].size())) p = i;
    if (a[p][c].is_zero()) {
      if (det) {
        *det = MultiPoly<K>(field);
        return r;
      }
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      negate = !negate;
    }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        MultiPoly<K> v = a[r][c] * a[i][j];
        if (!a[i][c].is_zero() && !a[r][j].is_zero()) v -= a[i][c] * a[r][j];
        a[i][j] = prev.is_one() ? std::move(v) : v.exact_divide(prev);
      }
      a[i][c] = MultiPoly<K>(field);
    }
    prev = a[r][c];
    ++r;
  }
  if (det) *det = negate ? -prev : prev;
  return r;
}

template <Field K>
typename K::Element numeric_minor(const GradedMatrix<K>& m, const MinorIndex& idx,
                                  const std::array<typename K::Element, kNumVars>& point) {
  const std::size_t k = idx.rows.size();
  DenseMatrix<K> d(m.field(), k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const auto& p = m(idx.rows[a], idx.cols[b]);
      if (!p.is_zero()) d(a, b) = p.evaluate(point);
    }
  return determinant(std::move(d));
}

template <Field K>
int minor_degree(const GradedMatrix<K>& m, const MinorIndex& idx) {
  int d = 0;
  for (auto j : idx.cols) d += m.col_degree(j);
  for (auto i : idx.rows) d -= m.row_degree(i);
  return d;
}

// Homogeneous determinant by interpolation of its dehomogenization T = 1 on a cubic grid.
MultiPoly<PrimeField> interpolated_determinant(const GradedMatrix<PrimeField>& sq) {
  const PrimeField& field = sq.field();
  MinorIndex all;
  for (std::size_t i = 0; i < sq.rows(); ++i) {
    all.rows.push_back(i);
    all.cols.push_back(i);
  }
  const int D = minor_degree(sq, all);
  const int n = D + 1;
  std::vector<std::uint32_t> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = field.from_int(i + 1);
  // values[(i * n + j) * n + l] = det at (x_i, y_j, z_l, 1)
  std::vector<std::uint32_t> grid(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        std::array<std::uint32_t, kNumVars> pt{nodes[i], nodes[j], nodes[l], 1, 0};
        grid[(static_cast<std::size_t>(i) * n + j) * n + l] = numeric_minor(sq, all, pt);
      }
  auto at = [&](int i, int j, int l) -> std::uint32_t& { return grid[(static_cast<std::size_t>(i) * n + j) * n + l]; };
  std::vector<std::uint32_t> ys(n);
  // Convert each axis in turn from values to power-basis coefficients.
  for (int axis = 2; axis >= 0; --axis)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) ys[w] = axis == 2 ? at(u, v, w) : axis == 1 ? at(u, w, v) : at(w, u, v);
        UPoly<PrimeField> c = interpolate(field, nodes, ys);
        for (int w = 0; w < n; ++w) {
          std::uint32_t cw = c.coeff(w);
          (axis == 2 ? at(u, v, w) : axis == 1 ? at(u, w, v) : at(w, u, v)) = cw;
        }
      }
  std::vector<MultiPoly<PrimeField>::Term> terms;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        std::uint32_t c = at(i, j, l);
        if (c == 0) continue;
        if (i + j + l > D) throw std::logic_error("interpolated determinant is not of the expected degree");
        terms.push_back({Monomial::xyzt(i, j, l, D - i - j - l), c});
      }
  return MultiPoly<PrimeField>::from_terms(field, std::move(terms));
}

// Advances a k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

template <Field K>
std::array<typename K::Element, kNumVars> random_point(const K& field, Rng& rng) {
  std::array<typename K::Element, kNumVars> p;
  for (auto& x : p) x = field.random(rng);
  return p;
}

}  // namespace

template <Field K>
MultiPoly<K> determinant(const GradedMatrix<K>& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const K& field = square.field();
  if (square.rows() == 0) return MultiPoly<K>(field, field.one());
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (square.rows() >= 6 && !square.has_parameter()) {
      MinorIndex all;
      for (std::size_t i = 0; i < square.rows(); ++i) {
        all.rows.push_back(i);
        all.cols.push_back(i);
      }
      if (minor_degree(square, all) >= 0) return interpolated_determinant(square);
    }
  }
  auto a = to_grid(square);
  MultiPoly<K> det(field);
  bareiss(a, field, &det);
  return det;
}

template <Field K>
std::size_t bareiss_rank(const GradedMatrix<K>& m) {
  auto a = to_grid(m);
  return bareiss(a, m.field(), static_cast<MultiPoly<K>*>(nullptr));
}

template <Field K>
std::size_t rank_fraction_field(const GradedMatrix<K>& m, std::uint64_t seed) {
  if (m.rows() * m.cols() <= 48) return bareiss_rank(m);
  Rng rng(seed);
  std::size_t total = 0;
  for (const auto& b : block_decomposition(m)) {
    GradedMatrix<K> sub = m.submatrix(b.rows, b.cols);
    if (sub.rows() * sub.cols() <= 48) {
      total += bareiss_rank(sub);
      continue;
    }
    const std::size_t cap = std::min(sub.rows(), sub.cols());
    std::size_t best = 0;
    for (int attempt = 0; attempt < 3 && best < cap; ++attempt)
      best = std::max(best, rank_of(sub.evaluate(random_point(m.field(), rng))));
    total += best;
  }
  return total;
}

template <Field K>
std::vector<MultiPoly<K>> minors(const GradedMatrix<K>& m, std::size_t k, MinorSelection selection,
                                 std::size_t sample, std::uint64_t seed) {
  if (k > std::min(m.rows(), m.cols())) throw std::out_of_range("minor size exceeds the matrix dimensions");
  std::vector<MultiPoly<K>> out;
  const std::uint64_t total = binomial(m.rows(), k) * binomial(m.cols(), k);
  if (selection == MinorSelection::all || sample >= total) {
    auto rs = first_combination(k);
    do {
      auto cs = first_combination(k);
      do out.push_back(minor(m, MinorIndex{rs, cs}));
      while (next_combination(cs, m.cols()));
    } while (next_combination(rs, m.rows()));
    return out;
  }
  Rng rng(seed);
  std::set<MinorIndex> seen;
  auto draw = [&](std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  while (out.size() < sample) {
    MinorIndex mi{draw(m.rows()), draw(m.cols())};
    if (!seen.insert(mi).second) continue;
    out.push_back(minor(m, mi));
  }
  return out;
}

template <Field K>
std::vector<MinorIndex> sample_nonzero_minors(const GradedMatrix<K>& m, std::size_t k, std::size_t count, Rng& rng) {
  const K& field = m.field();
  std::set<MinorIndex> seen;
  std::vector<MinorIndex> out;
  if (k > std::min(m.rows(), m.cols())) return out;
  for (std::size_t attempt = 0; attempt < 4 * count + 8 && out.size() < count; ++attempt) {
    DenseMatrix<K> d = m.evaluate(random_point(field, rng));
    std::vector<std::size_t> rperm(m.rows()), cperm(m.cols());
    std::iota(rperm.begin(), rperm.end(), 0);
    std::iota(cperm.begin(), cperm.end(), 0);
    std::shuffle(rperm.begin(), rperm.end(), rng);
    std::shuffle(cperm.begin(), cperm.end(), rng);
    std::vector<bool> row_done(m.rows(), false);
    MinorIndex mi;
    for (std::size_t cj = 0; cj < cperm.size() && mi.rows.size() < k; ++cj) {
      std::size_t c = cperm[cj];
      std::size_t pivot = m.rows();
      for (auto r : rperm)
        if (!row_done[r] && !field.is_zero(d(r, c))) {
          pivot = r;
          break;
        }
      if (pivot == m.rows()) continue;
      row_done[pivot] = true;
      mi.rows.push_back(pivot);
      mi.cols.push_back(c);
      auto inv = field.inv(d(pivot, c));
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (row_done[r] || field.is_zero(d(r, c))) continue;
        auto f = field.mul(d(r, c), inv);
        for (std::size_t j = 0; j < m.cols(); ++j) d(r, j) = field.sub(d(r, j), field.mul(f, d(pivot, j)));
      }
    }
    if (mi.rows.size() < k) continue;
    std::sort(mi.rows.begin(), mi.rows.end());
    std::sort(mi.cols.begin(), mi.cols.end());
    if (seen.insert(mi).second) out.push_back(std::move(mi));
  }
  return out;
}

template <Field K>
bool minors_certified_coprime(const GradedMatrix<K>& m, std::size_t k, Rng& rng, std::size_t max_minors) {
  if (k == 0) return true;
  if (m.has_parameter()) return false;
  const K& field = m.field();
  const Line<K> line = Line<K>::random(field, rng);
  auto picks = sample_nonzero_minors(m, k, max_minors, rng);
  UPoly<K> acc(field);
  bool anchored = false;
  for (const auto& mi : picks) {
    const int D = minor_degree(m, mi);
    std::vector<typename K::Element> xs, ys;
    for (int i = 0; i <= D; ++i) {
      auto t = field.from_int(i);
      xs.push_back(t);
      ys.push_back(numeric_minor(m, mi, line.at(field, t)));
    }
    UPoly<K> u = interpolate(field, xs, ys);
    if (u.is_zero()) continue;
    anchored = anchored || u.degree() == D;
    acc = acc.is_zero() ? u.monic() : gcd(acc, u);
    if (anchored && acc.is_constant()) return true;
  }
  return false;
}

template <Field K>
MultiPoly<K> minor_gcd(const GradedMatrix<K>& m, std::size_t k, std::uint64_t budget, Rng& rng, std::size_t sample) {
  const K& field = m.field();
  GcdAccumulator<K> acc(field);
  if (k == 0) return MultiPoly<K>(field, field.one());
  const std::uint64_t total = binomial(m.rows(), k) * binomial(m.cols(), k);
  if (total <= budget) {
    auto rs = first_combination(k);
    do {
      auto cs = first_combination(k);
      do {
        if (acc.add(minor(m, MinorIndex{rs, cs}))) return acc.value();
      } while (next_combination(cs, m.cols()));
    } while (next_combination(rs, m.rows()));
    return acc.value();
  }
  for (const auto& mi : sample_nonzero_minors(m, k, sample, rng))
    if (acc.add(minor(m, mi))) break;
  return acc.value();
}

namespace {

// s with s * a = gcd(a, b) (mod b), together with that gcd (not normalized).
template <Field K>
std::pair<UPoly<K>, UPoly<K>> half_extended_gcd(const UPoly<K>& a, const UPoly<K>& b) {
  const K& field = b.field();
  UPoly<K> r0 = b, r1 = a % b;
  UPoly<K> s0(field), s1 = UPoly<K>::constant(field, field.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<K> s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return {s0, r0};
}

template <Field K>
using UGrid = std::vector<std::vector<UPoly<K>>>;

template <Field K>
UGrid<K> reduce_grid(const UGrid<K>& a, const UPoly<K>& g) {
  UGrid<K> out = a;
  for (auto& row : out)
    for (auto& e : row) e = e % g;
  return out;
}

// Rank over K[t]/(g), g squarefree: the minimum over the fields K[t]/(h) for the
// irreducible factors h of g, found by splitting g whenever a pivot is a zero divisor.
template <Field K>
std::size_t split_rank(UGrid<K> a, UPoly<K> g, std::size_t r, std::size_t c) {
  const std::size_t R = a.size(), C = R ? a[0].size() : 0;
  for (; c < C && r < R; ++c) {
    std::size_t pivot = R;
    for (std::size_t i = r; i < R && pivot == R; ++i) {
      if (a[i][c].is_zero()) continue;
      auto [s, h] = half_extended_gcd(a[i][c], g);
      if (h.degree() > 0) {
        UPoly<K> g1 = h.monic(), g2 = (g / g1).monic();
        return std::min(split_rank(reduce_grid(a, g1), g1, r, c), split_rank(reduce_grid(a, g2), g2, r, c));
      }
      pivot = i;
      a[i][c] = (s.scaled(g.field().inv(h.lead())) * a[i][c]) % g;
      for (std::size_t j = c + 1; j < C; ++j) a[i][j] = (s.scaled(g.field().inv(h.lead())) * a[i][j]) % g;
    }
    if (pivot == R) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      if (a[i][c].is_zero()) continue;
      UPoly<K> f = a[i][c];
      for (std::size_t j = c; j < C; ++j)
        if (!a[r][j].is_zero()) a[i][j] = (a[i][j] - f * a[r][j]) % g;
    }
    ++r;
  }
  return r;
}

}  // namespace

template <Field K>
std::size_t rank_modulo_hypersurface(const GradedMatrix<K>& m, const MultiPoly<K>& f, std::uint64_t seed) {
  if (f.is_constant()) throw std::invalid_argument("rank modulo a constant polynomial");
  const K& field = m.field();
  Rng rng(seed);
  std::size_t best = 0;
  int lines = 0;
  for (int attempt = 0; attempt < 12 && lines < 2; ++attempt) {
    Line<K> line = Line<K>::random(field, rng);
    UPoly<K> fl = restrict_to_line(f, line);
    if (fl.degree() != full_degree(f)) continue;
    UPoly<K> g = squarefree_part(fl);
    UGrid<K> a(m.rows(), std::vector<UPoly<K>>(m.cols(), UPoly<K>(field)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) a[i][j] = restrict_to_line(m(i, j), line) % g;
    best = std::max(best, split_rank(std::move(a), g, 0, 0));
    ++lines;
  }
  if (lines == 0) throw std::runtime_error("rank modulo hypersurface: no line of full degree found");
  return best;
}

#define BILIAISON_INSTANTIATE(K)                                                                           \
  template std::vector<Block> block_decomposition(const GradedMatrix<K>&);                                 \
  template MultiPoly<K> determinant(const GradedMatrix<K>&);                                               \
  template std::size_t bareiss_rank(const GradedMatrix<K>&);                                               \
  template std::size_t rank_fraction_field(const GradedMatrix<K>&, std::uint64_t);                         \
  template std::vector<MultiPoly<K>> minors(const GradedMatrix<K>&, std::size_t, MinorSelection, std::size_t, \
                                            std::uint64_t);                                                \
  template std::vector<MinorIndex> sample_nonzero_minors(const GradedMatrix<K>&, std::size_t, std::size_t, Rng&); \
  template bool minors_certified_coprime(const GradedMatrix<K>&, std::size_t, Rng&, std::size_t);          \
  template MultiPoly<K> minor_gcd(const GradedMatrix<K>&, std::size_t, std::uint64_t, Rng&, std::size_t);  \
  template std::size_t rank_modulo_hypersurface(const GradedMatrix<K>&, const MultiPoly<K>&, std::uint64_t);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
