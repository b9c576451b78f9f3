#include "grassmann/element.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "grassmann/errors.hpp"

namespace grassmann {

namespace {

bool key_less(const Term& a, const Term& b) {
  return canonical_key(a.mask) < canonical_key(b.mask);
}

Scalar to_field(Scalar c, Field field) {
  if (field.is_rational() || !c.is_rational()) return c;
  return c.in(field);
}

}  // namespace

void require_generator_count(int n) {
  if (n < 1 || n > kMaxGenerators) {
    throw DimensionError("generator count must lie in 1.." + std::to_string(kMaxGenerators) +
                         ", got " + std::to_string(n));
  }
}

Element::Element(int n, Field field) : n_(n), field_(field) { require_generator_count(n); }

Element Element::constant(int n, Field field, const Scalar& c) { return monomial(n, field, 0, c); }

Element Element::monomial(int n, Field field, Mask mask, const Scalar& c) {
  Element out(n, field);
  if ((mask & ~full_mask(n)) != 0) throw DimensionError("monomial uses generators beyond n");
  Scalar coeff = to_field(c, field);
  if (!coeff.is_zero()) out.terms_.push_back(Term{mask, std::move(coeff)});
  return out;
}

Element Element::generator(int n, Field field, int i) {
  if (i < 1 || i > n) throw DimensionError("generator index out of range");
  return monomial(n, field, generator_mask(i));
}

Element Element::top(int n, Field field) { return monomial(n, field, full_mask(n)); }

Element Element::from_terms(int n, Field field, std::vector<Term> terms) {
  Element out(n, field);
  const Mask allowed = full_mask(n);
  for (auto& t : terms) {
    if ((t.mask & ~allowed) != 0) throw DimensionError("monomial uses generators beyond n");
  }
  std::sort(terms.begin(), terms.end(), key_less);
  out.terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    Scalar sum = to_field(std::move(terms[i].coeff), field);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mask == terms[i].mask; ++j) sum += terms[j].coeff;
    if (!sum.is_zero()) out.terms_.push_back(Term{terms[i].mask, std::move(sum)});
    i = j;
  }
  return out;
}

Scalar Element::coeff(Mask mask) const {
  const Term probe{mask, Scalar(0)};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, key_less);
  if (it != terms_.end() && it->mask == mask) return it->coeff;
  return Scalar(0).in(field_);
}

int Element::lowest_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.front().mask);
}

int Element::highest_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.back().mask);
}

bool Element::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return degree_of(t.mask) % 2 == 0; });
}

bool Element::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return degree_of(t.mask) % 2 == 1; });
}

void Element::require_compatible(const Element& other) const {
  if (n_ != other.n_) {
    throw DimensionError("mismatched generator counts " + std::to_string(n_) + " and " +
                         std::to_string(other.n_));
  }
  if (!(field_ == other.field_)) {
    throw FieldError("mismatched fields " + field_.to_string() + " and " +
                     other.field_.to_string());
  }
}

Element& Element::operator+=(const Element& rhs) {
  require_compatible(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && key_less(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || key_less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Scalar sum = std::move(a->coeff);
      sum += b->coeff;
      if (!sum.is_zero()) merged.push_back(Term{a->mask, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += -rhs; }

Element& Element::operator*=(const Element& rhs) {
  *this = *this * rhs;
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  const Scalar k = to_field(c, field_);
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Element operator*(const Element& a, const Element& b) {
  a.require_compatible(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      if ((ta.mask & tb.mask) != 0) continue;
      Scalar c = ta.coeff * tb.coeff;
      if (product_sign_negative(ta.mask, tb.mask)) c = -c;
      products.push_back(Term{ta.mask | tb.mask, std::move(c)});
    }
  }
  return Element::from_terms(a.n_, a.field_, std::move(products));
}

bool operator==(const Element& a, const Element& b) {
  if (a.n_ != b.n_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mask != b.terms_[i].mask || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element scale(const Scalar& c, const Element& a) { return c * a; }
Element mul(const Element& a, const Element& b) { return a * b; }

Element left_multiply(Mask mask, const Element& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if ((t.mask & mask) != 0) continue;
    out.push_back(Term{t.mask | mask, product_sign_negative(mask, t.mask) ? -t.coeff : t.coeff});
  }
  return Element::from_terms(a.n(), a.field(), std::move(out));
}

Element right_multiply(const Element& a, Mask mask) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if ((t.mask & mask) != 0) continue;
    out.push_back(Term{t.mask | mask, product_sign_negative(t.mask, mask) ? -t.coeff : t.coeff});
  }
  return Element::from_terms(a.n(), a.field(), std::move(out));
}

namespace {

template <typename Pred>
Element filter_terms(const Element& a, Pred keep) {
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if (keep(t.mask)) out.push_back(t);
  }
  return Element::from_terms(a.n(), a.field(), std::move(out));
}

void require_index(const Element& a, int i) {
  if (i < 1 || i > a.n()) {
    throw DimensionError("generator index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(a.n()));
  }
}

}  // namespace

Element parity_involution(const Element& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    out.push_back(Term{t.mask, degree_of(t.mask) % 2 == 0 ? t.coeff : -t.coeff});
  }
  return Element::from_terms(a.n(), a.field(), std::move(out));
}

Element grade_component(const Element& a, int degree) {
  if (degree < 0 || degree > a.n()) throw DimensionError("degree out of range");
  return filter_terms(a, [degree](Mask m) { return degree_of(m) == degree; });
}

ParityParts parity_split(const Element& a) { return {even_part(a), odd_part(a)}; }

Element even_part(const Element& a) {
  return filter_terms(a, [](Mask m) { return degree_of(m) % 2 == 0; });
}

Element odd_part(const Element& a) {
  return filter_terms(a, [](Mask m) { return degree_of(m) % 2 == 1; });
}

Element substitute_zero(const Element& a, std::span<const int> indices) {
  Mask killed = 0;
  for (int i : indices) {
    require_index(a, i);
    killed |= generator_mask(i);
  }
  return filter_terms(a, [killed](Mask m) { return (m & killed) == 0; });
}

Element substitute_zero(const Element& a, std::initializer_list<int> indices) {
  return substitute_zero(a, std::span<const int>(indices.begin(), indices.size()));
}

Element skew_partial(const Element& a, int i) {
  require_index(a, i);
  const Mask bit = generator_mask(i);
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if ((t.mask & bit) == 0) continue;
    const bool negative = degree_of(t.mask & (bit - 1)) % 2 == 1;
    out.push_back(Term{t.mask & ~bit, negative ? -t.coeff : t.coeff});
  }
  return Element::from_terms(a.n(), a.field(), std::move(out));
}

Element h_op(int i, const Element& a) {
  require_index(a, i);
  const Mask bit = generator_mask(i);
  return filter_terms(a, [bit](Mask m) { return (m & bit) != 0; });
}

bool uses_only_generators_above(const Element& a, int k) {
  const Mask low = k <= 0 ? 0 : full_mask(k);
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [low](const Term& t) { return (t.mask & low) == 0; });
}

Element substitute(const Element& a, std::span<const Element> images) {
  if (static_cast<int>(images.size()) != a.n()) {
    throw DimensionError("substitution needs one image per generator");
  }
  Element result(a.n(), a.field());
  for (const auto& t : a.terms()) {
    Element product = Element::constant(a.n(), a.field(), t.coeff);
    for (Mask m = t.mask; m != 0 && !product.is_zero(); m &= m - 1) {
      product = product * images[static_cast<std::size_t>(std::countr_zero(m))];
    }
    result += product;
  }
  return result;
}

MonomialOrder::MonomialOrder(int n) : n_(n) {
  require_generator_count(n);
  const std::size_t count = std::size_t{1} << n;
  masks_.resize(count);
  for (std::size_t m = 0; m < count; ++m) masks_[m] = static_cast<Mask>(m);
  std::sort(masks_.begin(), masks_.end(),
            [](Mask a, Mask b) { return canonical_key(a) < canonical_key(b); });
  index_of_.resize(count);
  for (std::size_t k = 0; k < count; ++k) index_of_[masks_[k]] = static_cast<std::uint32_t>(k);
}

Vector MonomialOrder::coordinates(const Element& a) const {
  if (a.n() != n_) throw DimensionError("coordinate order built for a different n");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(masks_.size()));
  for (const auto& t : a.terms()) v(static_cast<Eigen::Index>(index(t.mask))) = t.coeff;
  return v;
}

Element MonomialOrder::element(const Vector& coords, Field field) const {
  std::vector<Term> terms;
  for (Eigen::Index k = 0; k < coords.size(); ++k) {
    if (!coords(k).is_zero()) terms.push_back(Term{masks_[static_cast<std::size_t>(k)], coords(k)});
  }
  return Element::from_terms(n_, field, std::move(terms));
}

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    const bool negative = t.coeff.is_negative();
    const Scalar magnitude = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mask == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    bool first_gen = true;
    for (Mask m = t.mask; m != 0; m &= m - 1) {
      if (!first_gen) out += "*";
      first_gen = false;
      out += "x" + std::to_string(std::countr_zero(m) + 1);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& a) { return os << to_string(a); }

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, int n, Field field) : text_(text), n_(n), field_(field) {}

  Element parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty element");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return Element::from_terms(n_, field_, std::move(terms));
  }

 private:
  Term term() {
    skip_space();
    if (at_end()) fail("missing term");
    Scalar coeff(1);
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      has_coeff = true;
      skip_space();
      if (at_end() || peek() != '*') return Term{0, coeff};
      ++pos_;
      skip_space();
    }
    if (at_end() || peek() != 'x') fail(has_coeff ? "expected monomial after '*'" : "expected term");
    Mask mask = 0;
    bool negative = false;
    bool vanished = false;
    for (;;) {
      const int i = generator_index();
      const Mask bit = generator_mask(i);
      if ((mask & bit) != 0) vanished = true;
      // moving x_i left past every larger generator already collected
      if (degree_of(mask & ~(bit | (bit - 1))) % 2 == 1) negative = !negative;
      mask |= bit;
      skip_space();
      if (!at_end() && peek() == '*') {
        const std::size_t save = pos_;
        ++pos_;
        skip_space();
        if (!at_end() && peek() == 'x') continue;
        pos_ = save;
        break;
      }
      if (!at_end() && peek() == 'x') continue;
      break;
    }
    if (vanished) return Term{0, Scalar(0)};
    if (negative) coeff = -coeff;
    return Term{mask, coeff.in(field_)};
  }

  Scalar coefficient() {
    const mpz_class num = integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      const Scalar q = Scalar::rational(num, den);
      try {
        return q.in(field_);
      } catch (const FieldError&) {
        fail("coefficient " + q.to_string() + " is not defined in " + field_.to_string());
      }
    }
    return Scalar::rational(num, 1).in(field_);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int generator_index() {
    ++pos_;  // 'x'
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 3) fail("bad generator index");
    const int i = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (i < 1 || i > n_) {
      fail("generator x" + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    return i;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  Field field_;
};

}  // namespace

Element parse_element(std::string_view text, int n, Field field) {
  require_generator_count(n);
  return ElementParser(text, n, field).parse();
}

}  // namespace grassmann
