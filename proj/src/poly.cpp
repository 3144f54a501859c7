#include "biliaison/poly.hpp"

#include <cctype>
#include <sstream>

namespace biliaison {

const char* var_name(int v) {
  static constexpr const char* kNames[kNumVars] = {"X", "Y", "Z", "T", "a"};
  return kNames[v];
}

std::string Monomial::to_string() const {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (e_[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e_[v] > 1) out += '^' + std::to_string(e_[v]);
  }
  return out.empty() ? "1" : out;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::from_terms(const K& field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  MultiPoly p(field);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = field.add(p.terms_.back().coef, t.coef);
    } else {
      if (!p.terms_.empty() && field.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && field.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
  return p;
}

template <Field K>
int MultiPoly<K>::degree() const {
  int d = kDegreeOfZero;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <Field K>
int MultiPoly<K>::degree_in(int v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

template <Field K>
bool MultiPoly<K>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <Field K>
bool MultiPoly<K>::has_parameter() const {
  for (const auto& t : terms_)
    if (t.mono.has_parameter()) return true;
  return false;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = field_.neg(t.coef);
  return r;
}

namespace {

template <Field K, class Term>
std::vector<Term> merge_terms(const K& field, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coef) : b[j].coef});
      ++j;
    } else {
      auto s = subtract ? field.sub(a[i].coef, b[j].coef) : field.add(a[i].coef, b[j].coef);
      if (!field.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? field.neg(b[j].coef) : b[j].coef});
  return out;
}

}  // namespace

template <Field K>
MultiPoly<K>& MultiPoly<K>::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    field_ = o.field_;
    return *this;
  }
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  terms_ = merge_terms(field_, terms_, o.terms_, false);
  return *this;
}

template <Field K>
MultiPoly<K>& MultiPoly<K>::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    field_ = o.field_;
    *this = -o;
    return *this;
  }
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  terms_ = merge_terms(field_, terms_, o.terms_, true);
  return *this;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::times(const MultiPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return MultiPoly(field_);
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coef);
  if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) prod.push_back({s.mono * t.mono, field_.mul(s.coef, t.coef)});
  return from_terms(field_, std::move(prod));
}

template <Field K>
MultiPoly<K> MultiPoly<K>::scaled(const Element& c) const {
  if (field_.is_zero(c)) return MultiPoly(field_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = field_.mul(t.coef, c);
  return r;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::times_term(const Monomial& m, const Element& c) const {
  if (field_.is_zero(c)) return MultiPoly(field_);
  MultiPoly r(field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coef, c)});
  return r;
}

template <Field K>
void MultiPoly<K>::add_multiple(const Element& c, const Monomial& m, const MultiPoly& o) {
  *this += o.times_term(m, c);
}

template <Field K>
MultiPoly<K> MultiPoly<K>::pow(int e) const {
  MultiPoly result = MultiPoly(field_, field_.one());
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::exact_divide(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (!is_zero() && !(field_ == d.field_)) throw FieldMismatch("polynomials over different fields");
  MultiPoly rem = *this;
  std::vector<Term> quot;
  const Term& lead = d.terms_.front();
  Element lead_inv = field_.inv(lead.coef);
  MultiPoly tail(field_);
  tail.terms_.assign(d.terms_.begin() + 1, d.terms_.end());
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    if (!lead.mono.divides(r.mono)) throw InexactDivision("exact_divide: divisor does not divide");
    Monomial qm = lead.mono.quotient_of(r.mono);
    Element qc = field_.mul(r.coef, lead_inv);
    quot.push_back({qm, qc});
    rem.terms_.erase(rem.terms_.begin());
    rem.add_multiple(field_.neg(qc), qm, tail);
  }
  MultiPoly q(field_);
  q.terms_ = std::move(quot);  // produced in decreasing order
  return q;
}

template <Field K>
bool MultiPoly<K>::divides(const MultiPoly& other) const {
  try {
    (void)other.exact_divide(*this);
    return true;
  } catch (const InexactDivision&) {
    return false;
  }
}

template <Field K>
MultiPoly<K> MultiPoly<K>::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_coefficient()));
}

template <Field K>
MultiPoly<K> MultiPoly<K>::specialize_parameter(const Element& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono[A];
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    Element c = t.coef;
    for (int i = 0; i < e; ++i) c = field_.mul(c, value);
    if (!field_.is_zero(c)) out.push_back({t.mono.without(A), c});
  }
  return from_terms(field_, std::move(out));
}

template <Field K>
typename MultiPoly<K>::Element MultiPoly<K>::evaluate(const std::array<Element, kNumVars>& point) const {
  // Cache powers per variable up to the needed degree.
  std::array<std::vector<Element>, kNumVars> powers;
  for (int v = 0; v < kNumVars; ++v) {
    int d = degree_in(v);
    powers[v].assign(std::max(d, 0) + 1, field_.one());
    for (int i = 1; i <= d; ++i) powers[v][i] = field_.mul(powers[v][i - 1], point[v]);
  }
  Element sum = field_.zero();
  for (const auto& t : terms_) {
    Element c = t.coef;
    for (int v = 0; v < kNumVars; ++v)
      if (t.mono[v]) c = field_.mul(c, powers[v][t.mono[v]]);
    sum = field_.add(sum, c);
  }
  return sum;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[v];
    if (e == 0) continue;
    auto ex = t.mono.exponents();
    ex[v] = static_cast<std::uint16_t>(e - 1);
    Element c = field_.mul(t.coef, field_.from_int(e));
    if (!field_.is_zero(c)) out.push_back({Monomial(ex), c});
  }
  return from_terms(field_, std::move(out));
}

template <Field K>
std::vector<MultiPoly<K>> MultiPoly<K>::coefficients_in(int v) const {
  int d = degree_in(v);
  std::vector<std::vector<Term>> buckets(std::max(d, 0) + 1);
  for (const auto& t : terms_) buckets[t.mono[v]].push_back({t.mono.without(v), t.coef});
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MultiPoly p(field_);
    p.terms_ = std::move(b);  // removing one variable keeps the relative order
    out.push_back(std::move(p));
  }
  if (d < 0) out.clear();
  return out;
}

template <Field K>
MultiPoly<K> MultiPoly<K>::from_coefficients_in(const K& field, int v, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m = Monomial::var(v, static_cast<int>(i));
    for (const auto& t : coeffs[i].terms_) out.push_back({t.mono * m, t.coef});
  }
  return from_terms(field, std::move(out));
}

template <Field K>
std::string MultiPoly<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = field_.is_negative(t.coef);
    Element mag = negative ? field_.neg(t.coef) : t.coef;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit = field_.is_one(mag);
    if (t.mono.is_one()) {
      out += field_.to_string(mag);
    } else if (unit) {
      out += t.mono.to_string();
    } else {
      out += field_.to_string(mag) + "*" + t.mono.to_string();
    }
  }
  return out;
}

namespace {

template <Field K>
class PolyParser {
 public:
  PolyParser(const K& field, const std::string& text) : field_(field), text_(text) {}

  MultiPoly<K> parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    MultiPoly<K> result(field_);
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      MultiPoly<K> term = parse_term();
      if (negative) result -= term;
      else result += term;
    }
    return result;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + text_ + "': " + msg + " at position " + std::to_string(pos_));
  }
  bool at_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'Y' || c == 'Z' || c == 'T' || c == 'a';
  }
  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }
  MultiPoly<K> parse_term() {
    typename K::Element coef = field_.one();
    Monomial mono;
    bool any = false;
    while (true) {
      skip();
      if (!at_factor()) {
        if (!any) fail("expected a coefficient or variable");
        break;
      }
      any = true;
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = parse_integer();
        typename K::Element val = field_.from_mpz(num);
        skip();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          skip();
          mpz_class den = parse_integer();
          if (den == 0) fail("zero denominator");
          val = field_.div(val, field_.from_mpz(den));
        }
        coef = field_.mul(coef, val);
      } else {
        int v = c == 'X' ? X : c == 'Y' ? Y : c == 'Z' ? Z : c == 'T' ? T : A;
        ++pos_;
        int power = 1;
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip();
          mpz_class e = parse_integer();
          if (e > 1000) fail("exponent too large");
          power = static_cast<int>(e.get_si());
        }
        mono = mono * Monomial::var(v, power);
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!at_factor()) fail("dangling '*'");
      }
    }
    return MultiPoly<K>::monomial(field_, mono, coef);
  }

  const K& field_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <Field K>
MultiPoly<K> parse_poly(const K& field, const std::string& text) {
  return PolyParser<K>(field, text).parse();
}

template class MultiPoly<PrimeField>;
template class MultiPoly<RationalField>;
template MultiPoly<PrimeField> parse_poly(const PrimeField&, const std::string&);
template MultiPoly<RationalField> parse_poly(const RationalField&, const std::string&);

}  // namespace biliaison
