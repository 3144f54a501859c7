#include "biliaison/modgb.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace biliaison {

namespace {

std::uint64_t term_key(const Monomial& m, std::uint32_t comp) {
  return static_cast<std::uint64_t>(m[X]) | static_cast<std::uint64_t>(m[Y]) << 12 |
         static_cast<std::uint64_t>(m[Z]) << 24 | static_cast<std::uint64_t>(m[T]) << 36 |
         static_cast<std::uint64_t>(comp) << 48;
}

int compare_terms(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb,
                  const std::vector<int>& ambient) {
  int da = a.degree() + ambient[ca], db = b.degree() + ambient[cb];
  if (da != db) return da < db ? -1 : 1;
  if (int c = compare(a, b)) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

const std::vector<Monomial>& cached_monomials(int d) {
  static std::map<int, std::vector<Monomial>> cache;
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, monomials_of_degree(d)).first;
  return it->second;
}

// All module monomials of one shifted degree, in decreasing order, with the basis element
// (if any) whose leading term divides each of them.
struct DegreeSpace {
  std::vector<Monomial> mono;
  std::vector<std::uint32_t> comp;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<int> reducer;

  DegreeSpace(int d, const std::vector<int>& ambient) {
    std::vector<std::pair<Monomial, std::uint32_t>> all;
    for (std::uint32_t i = 0; i < ambient.size(); ++i)
      for (const auto& m : cached_monomials(d - ambient[i])) all.emplace_back(m, i);
    std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
      return compare_terms(a.first, a.second, b.first, b.second, ambient) > 0;
    });
    index.reserve(all.size() * 2);
    for (std::uint32_t k = 0; k < all.size(); ++k) {
      mono.push_back(all[k].first);
      comp.push_back(all[k].second);
      index.emplace(term_key(all[k].first, all[k].second), k);
    }
    reducer.assign(all.size(), -1);
  }
  std::size_t size() const { return mono.size(); }
  std::uint32_t at(const Monomial& m, std::uint32_t c) const { return index.at(term_key(m, c)); }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

template <Field K>
class Engine {
 public:
  using E = typename K::Element;

  Engine(const K& field, const std::vector<int>& ambient) : field_(field), ambient_(ambient) {}

  std::vector<ModuleVector<K>> basis;
  std::vector<int> degrees;
  std::vector<Monomial> lead;
  std::vector<std::uint32_t> lead_comp;

  void fill_reducers(DegreeSpace& sp) const {
    for (std::size_t k = 0; k < sp.size(); ++k)
      for (std::size_t g = 0; g < basis.size(); ++g)
        if (lead_comp[g] == sp.comp[k] && lead[g].divides(sp.mono[k])) {
          sp.reducer[k] = static_cast<int>(g);
          break;
        }
  }

  void load(std::vector<E>& w, const DegreeSpace& sp, const ModuleVector<K>& v, const Monomial& q, const E& c) const {
    for (const auto& t : v) {
      auto k = sp.at(q * t.mono, t.comp);
      w[k] = field_.add(w[k], field_.mul(c, t.coef));
    }
  }

  void reduce_dense(std::vector<E>& w, const DegreeSpace& sp, std::size_t start) const {
    for (std::size_t k = start; k < sp.size(); ++k) {
      if (field_.is_zero(w[k])) continue;
      int g = sp.reducer[k];
      if (g < 0) continue;
      Monomial q = lead[g].quotient_of(sp.mono[k]);
      E c = field_.neg(w[k]);
      load(w, sp, basis[g], q, c);
    }
  }

  ModuleVector<K> extract(std::vector<E>& w, const DegreeSpace& sp) const {
    ModuleVector<K> out;
    for (std::size_t k = 0; k < sp.size(); ++k)
      if (!field_.is_zero(w[k])) {
        out.push_back({sp.mono[k], sp.comp[k], w[k]});
        w[k] = field_.zero();
      }
    return out;
  }

  void make_monic(ModuleVector<K>& v) const {
    E inv = field_.inv(v.front().coef);
    for (auto& t : v) t.coef = field_.mul(t.coef, inv);
  }

  // Gebauer-Moeller update for a new basis element h.
  void update_pairs(std::size_t h) {
    const Monomial& lh = lead[h];
    const bool ideal = ambient_.size() == 1;
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < h; ++g)
      if (lead_comp[g] == lead_comp[h]) {
        Monomial l = lead[g].lcm(lh);
        fresh.push_back({g, h, l, l.degree() + ambient_[lead_comp[h]]});
      }
    // Chain criterion among the new pairs; equal lcms keep one representative.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a)) redundant = true;
      }
      if (!redundant) kept.push_back(fresh[a]);
    }
    if (ideal)
      std::erase_if(kept, [&](const Pair& p) { return lead[p.i].coprime(lh); });
    std::erase_if(pending, [&](const Pair& p) {
      if (lead_comp[p.i] != lead_comp[h] || !lh.divides(p.lcm)) return false;
      return !(lead[p.i].lcm(lh) == p.lcm) && !(lead[p.j].lcm(lh) == p.lcm);
    });
    pending.insert(pending.end(), kept.begin(), kept.end());
  }

  std::vector<Pair> pending;

  // Runs Buchberger degree by degree; returns false if pairs above the cap remain.
  bool run(std::vector<ModuleVector<K>> gens, int cap) {
    std::stable_sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) { return deg(a) < deg(b); });
    std::size_t next_gen = 0;
    while (true) {
      int d = std::numeric_limits<int>::max();
      if (next_gen < gens.size()) d = deg(gens[next_gen]);
      for (const auto& p : pending) d = std::min(d, p.degree);
      if (d == std::numeric_limits<int>::max()) return true;
      if (d > cap) return false;

      DegreeSpace sp(d, ambient_);
      fill_reducers(sp);
      std::vector<E> w(sp.size(), field_.zero());
      std::vector<Pair> now;
      std::erase_if(pending, [&](const Pair& p) {
        if (p.degree != d) return false;
        now.push_back(p);
        return true;
      });
      std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) { return std::tie(a.j, a.i) < std::tie(b.j, b.i); });
      const std::size_t first_new = basis.size();
      auto absorb = [&]() {
        reduce_dense(w, sp, 0);
        ModuleVector<K> r = extract(w, sp);
        if (r.empty()) return;
        make_monic(r);
        std::size_t h = basis.size();
        sp.reducer[sp.at(r.front().mono, r.front().comp)] = static_cast<int>(h);
        lead.push_back(r.front().mono);
        lead_comp.push_back(r.front().comp);
        degrees.push_back(d);
        basis.push_back(std::move(r));
        update_pairs(h);
      };
      for (; next_gen < gens.size() && deg(gens[next_gen]) == d; ++next_gen) {
        load(w, sp, gens[next_gen], Monomial(), field_.one());
        absorb();
      }
      for (const auto& p : now) {
        load(w, sp, basis[p.i], lead[p.i].quotient_of(p.lcm), field_.one());
        load(w, sp, basis[p.j], lead[p.j].quotient_of(p.lcm), field_.neg(field_.one()));
        absorb();
      }
      // Tail-reduce the elements of this degree.
      for (std::size_t h = first_new; h < basis.size(); ++h) {
        load(w, sp, basis[h], Monomial(), field_.one());
        reduce_dense(w, sp, sp.at(lead[h], lead_comp[h]) + 1);
        basis[h] = extract(w, sp);
      }
    }
  }

  int deg(const ModuleVector<K>& v) const { return v.front().mono.degree() + ambient_[v.front().comp]; }

 private:
  K field_;
  std::vector<int> ambient_;
};

template <Field K>
std::vector<typename K::Element> coordinates(const std::vector<MultiPoly<K>>& column, const Monomial& q,
                                             const DegreeSpace& sp, const K& field) {
  std::vector<typename K::Element> v(sp.size(), field.zero());
  for (std::uint32_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms()) {
      auto k = sp.at(q * t.mono, i);
      v[k] = field.add(v[k], t.coef);
    }
  return v;
}

// Rows kept in echelon form with normalized pivots; add() reports whether the span grew.
template <Field K>
class Echelon {
 public:
  using E = typename K::Element;
  explicit Echelon(const K& field) : field_(field) {}

  bool add(std::vector<E>& v) {
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && field_.is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    E inv = field_.inv(v[p]);
    for (auto& x : v) x = field_.mul(x, inv);
    rows_.push_back(v);
    pivots_.push_back(p);
    return true;
  }
  void reduce(std::vector<E>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const E c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      const auto& row = rows_[r];
      for (std::size_t k = pivots_[r]; k < v.size(); ++k)
        if (!field_.is_zero(row[k])) v[k] = field_.sub(v[k], field_.mul(c, row[k]));
    }
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  K field_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

template <Field K>
SubmodulePresentation<K>::SubmodulePresentation(const GradedMatrix<K>& generators, GroebnerOptions options)
    : field_(generators.field()), ambient_(generators.row_degrees()), gens_(generators) {
  if (generators.has_parameter())
    throw std::invalid_argument("Groebner bases are computed at the closed point; specialize a first");
  int max_deg = 0;
  for (auto c : generators.col_degrees()) max_deg = std::max(max_deg, c);
  for (auto r : ambient_) max_deg = std::max(max_deg, r);
  cap_ = options.degree_cap.value_or(max_deg + 8);
  std::vector<ModuleVector<K>> gens;
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    auto v = to_vector(generators.column(j));
    if (!v.empty()) gens.push_back(std::move(v));
  }
  Engine<K> engine(field_, ambient_);
  complete_ = engine.run(std::move(gens), cap_);
  basis_ = std::move(engine.basis);
  basis_deg_ = std::move(engine.degrees);
}

template <Field K>
int SubmodulePresentation<K>::degree_of(const ModuleVector<K>& v) const {
  if (v.empty()) return kDegreeOfZero;
  return v.front().mono.degree() + ambient_[v.front().comp];
}

template <Field K>
ModuleVector<K> SubmodulePresentation<K>::to_vector(const std::vector<MultiPoly<K>>& column) const {
  if (column.size() != ambient_.size()) throw std::invalid_argument("element has the wrong number of components");
  ModuleVector<K> v;
  for (std::uint32_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms()) v.push_back({t.mono, i, t.coef});
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return compare_terms(a.mono, a.comp, b.mono, b.comp, ambient_) > 0;
  });
  if (!v.empty()) {
    int d = degree_of(v);
    for (const auto& t : v)
      if (t.mono.degree() + ambient_[t.comp] != d) throw DegreeError("inhomogeneous module element");
  }
  return v;
}

template <Field K>
std::vector<MultiPoly<K>> SubmodulePresentation<K>::to_column(const ModuleVector<K>& v) const {
  std::vector<std::vector<typename MultiPoly<K>::Term>> terms(ambient_.size());
  for (const auto& t : v) terms[t.comp].push_back({t.mono, t.coef});
  std::vector<MultiPoly<K>> out;
  for (auto& ts : terms) out.push_back(MultiPoly<K>::from_terms(field_, std::move(ts)));
  return out;
}

template <Field K>
ModuleVector<K> SubmodulePresentation<K>::reduce(const ModuleVector<K>& v) const {
  if (v.empty()) return v;
  const int d = degree_of(v);
  if (!complete_ && d > cap_) throw BudgetExceeded("reduction above the Groebner degree cap " + std::to_string(cap_));
  Engine<K> engine(field_, ambient_);
  engine.basis = basis_;
  engine.degrees = basis_deg_;
  for (const auto& b : basis_) {
    engine.lead.push_back(b.front().mono);
    engine.lead_comp.push_back(b.front().comp);
  }
  DegreeSpace sp(d, ambient_);
  engine.fill_reducers(sp);
  std::vector<typename K::Element> w(sp.size(), field_.zero());
  engine.load(w, sp, v, Monomial(), field_.one());
  engine.reduce_dense(w, sp, 0);
  return engine.extract(w, sp);
}

template <Field K>
bool SubmodulePresentation<K>::contains(const std::vector<MultiPoly<K>>& column) const {
  return reduce(to_vector(column)).empty();
}

template <Field K>
std::size_t SubmodulePresentation<K>::hilbert_function(int n) const {
  if (!complete_ && n > cap_)
    throw BudgetExceeded("Hilbert function in degree " + std::to_string(n) + " exceeds the Groebner degree cap " +
                         std::to_string(cap_));
  std::size_t total = 0;
  for (std::uint32_t i = 0; i < ambient_.size(); ++i) {
    const int k = n - ambient_[i];
    if (k < 0) continue;
    std::vector<Monomial> leads;
    for (const auto& b : basis_)
      if (b.front().comp == i && b.front().mono.degree() <= k) leads.push_back(b.front().mono);
    std::size_t in_module = 0;
    for (const auto& m : cached_monomials(k))
      for (const auto& l : leads)
        if (l.divides(m)) {
          ++in_module;
          break;
        }
    total += in_module;
  }
  return total;
}

template <Field K>
HilbertPolynomial SubmodulePresentation<K>::hilbert_polynomial(std::optional<int> window_cap) const {
  int start = 0;
  for (auto r : ambient_) start = std::max(start, r);
  for (auto d : basis_deg_) start = std::max(start, d);
  int limit = window_cap.value_or(complete_ ? std::max(cap_, start + 14) : cap_);
  for (int n0 = start; n0 + 6 <= limit; ++n0) {
    std::array<long, 4> ns;
    std::array<mpq_class, 4> vals;
    for (int i = 0; i < 4; ++i) {
      ns[i] = n0 + i;
      vals[i] = static_cast<unsigned long>(hilbert_function(n0 + i));
    }
    HilbertPolynomial p = HilbertPolynomial::fit(ns, vals);
    bool ok = true;
    for (int i = 4; i < 7 && ok; ++i) ok = p(n0 + i) == mpq_class(static_cast<unsigned long>(hilbert_function(n0 + i)));
    if (ok) {
      fitted_from_ = n0;
      return p;
    }
  }
  throw BudgetExceeded("Hilbert function did not stabilize to a cubic below degree " + std::to_string(limit));
}

template <Field K>
std::string SubmodulePresentation<K>::dump() const {
  std::ostringstream os;
  for (const auto& b : basis_) {
    os << b.front().comp << ":";
    auto col = to_column(b);
    for (std::size_t i = 0; i < col.size(); ++i)
      if (!col[i].is_zero()) os << " e" << i << "*(" << col[i].to_string() << ")";
    os << "\n";
  }
  return os.str();
}

template <Field K>
std::size_t span_dimension(const GradedMatrix<K>& generators, int d) {
  DegreeSpace sp(d, generators.row_degrees());
  Echelon<K> ech(generators.field());
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    if (generators.col_degree(j) > d) continue;
    auto col = generators.column(j);
    for (const auto& q : cached_monomials(d - generators.col_degree(j))) {
      auto v = coordinates(col, q, sp, generators.field());
      ech.add(v);
    }
  }
  return ech.rank();
}

template <Field K>
CharFunction minimal_generator_count(const GradedMatrix<K>& generators) {
  CharFunction mu;
  std::vector<int> degs = generators.col_degrees();
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  for (int d : degs) {
    DegreeSpace sp(d, generators.row_degrees());
    Echelon<K> ech(generators.field());
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      if (generators.col_degree(j) >= d) continue;
      auto col = generators.column(j);
      for (const auto& q : cached_monomials(d - generators.col_degree(j))) {
        auto v = coordinates(col, q, sp, generators.field());
        ech.add(v);
      }
    }
    int fresh = 0;
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      if (generators.col_degree(j) != d) continue;
      auto v = coordinates(generators.column(j), Monomial(), sp, generators.field());
      if (ech.add(v)) ++fresh;
    }
    mu.add(d, fresh);
  }
  return mu;
}

template <Field K>
GradedMatrix<K> syzygies(const GradedMatrix<K>& generators, int up_to_degree) {
  const K& field = generators.field();
  using E = typename K::Element;
  struct Slot {
    std::size_t gen;
    Monomial mono;
  };
  std::vector<std::vector<MultiPoly<K>>> found_columns;
  std::vector<int> found_degrees;
  std::vector<std::vector<E>> previous_kernel;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> previous_index;
  int min_deg = std::numeric_limits<int>::max();
  for (auto c : generators.col_degrees()) min_deg = std::min(min_deg, c);
  std::vector<std::vector<MultiPoly<K>>> cols;
  for (std::size_t j = 0; j < generators.cols(); ++j) cols.push_back(generators.column(j));

  for (int d = min_deg; d <= up_to_degree && generators.cols() > 0; ++d) {
    std::vector<Slot> slots;
    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> index;
    for (std::size_t j = 0; j < generators.cols(); ++j)
      for (const auto& m : cached_monomials(d - generators.col_degree(j))) {
        index[{j, term_key(m, 0)}] = slots.size();
        slots.push_back({j, m});
      }
    DegreeSpace sp(d, generators.row_degrees());
    DenseMatrix<K> a(field, sp.size(), slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto v = coordinates(cols[slots[s].gen], slots[s].mono, sp, field);
      for (std::size_t k = 0; k < v.size(); ++k) a(k, s) = v[k];
    }
    auto kernel = kernel_basis(std::move(a));
    Echelon<K> ech(field);
    // Multiples of the lower-degree syzygies.
    for (const auto& z : previous_kernel)
      for (int var = 0; var < kNumGraded; ++var) {
        std::vector<E> v(slots.size(), field.zero());
        for (const auto& [key, pos] : previous_index) {
          if (field.is_zero(z[pos])) continue;
          Monomial m(Monomial::Exponents{static_cast<std::uint16_t>(key.second & 0xFFF),
                                         static_cast<std::uint16_t>(key.second >> 12 & 0xFFF),
                                         static_cast<std::uint16_t>(key.second >> 24 & 0xFFF),
                                         static_cast<std::uint16_t>(key.second >> 36 & 0xFFF), 0});
          v[index.at({key.first, term_key(m * Monomial::var(var), 0)})] = z[pos];
        }
        ech.add(v);
      }
    for (auto z : kernel) {
      if (!ech.add(z)) continue;
      std::vector<std::vector<typename MultiPoly<K>::Term>> entries(generators.cols());
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (!field.is_zero(z[s])) entries[slots[s].gen].push_back({slots[s].mono, z[s]});
      std::vector<MultiPoly<K>> column;
      for (auto& e : entries) column.push_back(MultiPoly<K>::from_terms(field, std::move(e)));
      found_columns.push_back(std::move(column));
      found_degrees.push_back(d);
    }
    previous_kernel = std::move(kernel);
    previous_index = std::move(index);
  }
  GradedMatrix<K> out(field, generators.col_degrees(), found_degrees);
  for (std::size_t c = 0; c < found_columns.size(); ++c)
    for (std::size_t r = 0; r < generators.cols(); ++r) out.set(r, c, found_columns[c][r]);
  return out;
}

template <Field K>
bool is_empty_projective_locus(const std::vector<MultiPoly<K>>& generators, std::optional<int> degree_cap) {
  std::vector<MultiPoly<K>> nonzero;
  for (const auto& g : generators)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return false;
  const K& field = nonzero.front().field();
  std::vector<int> degs;
  int max_deg = 0;
  for (const auto& g : nonzero) {
    if (g.has_parameter() || !g.is_homogeneous()) throw std::invalid_argument("locus test needs forms in X, Y, Z, T");
    degs.push_back(g.degree());
    max_deg = std::max(max_deg, g.degree());
  }
  GradedMatrix<K> m(field, {0}, degs);
  for (std::size_t j = 0; j < nonzero.size(); ++j) m.set(0, j, nonzero[j]);
  SubmodulePresentation<K> gb(m, GroebnerOptions{degree_cap.value_or(max_deg + 16)});
  std::array<bool, kNumGraded> pure{};
  for (const auto& b : gb.basis()) {
    const Monomial& l = b.front().mono;
    if (l.is_one()) return true;
    for (int v = 0; v < kNumGraded; ++v)
      if (l[v] == l.degree()) pure[v] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

#define BILIAISON_INSTANTIATE(K)                                                          \
  template class SubmodulePresentation<K>;                                                \
  template std::size_t span_dimension(const GradedMatrix<K>&, int);                       \
  template CharFunction minimal_generator_count(const GradedMatrix<K>&);                  \
  template GradedMatrix<K> syzygies(const GradedMatrix<K>&, int);                         \
  template bool is_empty_projective_locus(const std::vector<MultiPoly<K>>&, std::optional<int>);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
