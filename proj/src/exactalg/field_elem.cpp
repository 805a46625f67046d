#include "vermalab/exactalg/field_elem.hpp"

#include <cctype>
#include <map>

#include "vermalab/exactalg/poly_gcd.hpp"

namespace vermalab::exact {

namespace {

IntPoly eval_partial(const IntPoly& p, const Assignment& at, mpz_class& scale, bool& fully) {
  // Returns an integer polynomial equal to scale * p(at) with a positive integer scale.
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  fully = true;
  for (const auto& t : p.terms()) {
    mpq_class c(t.coeff);
    Monomial m;
    for (int s = 0; s < kNumSlots; ++s) {
      unsigned e = t.mono.exponent(s);
      if (e == 0) continue;
      const auto& v = at.get(s);
      if (v) {
        mpq_class pw;
        mpz_pow_ui(pw.get_num_mpz_t(), v->get_num_mpz_t(), e);
        mpz_pow_ui(pw.get_den_mpz_t(), v->get_den_mpz_t(), e);
        c *= pw;
      } else {
        fully = false;
        m = m * Monomial::var(s, e);
      }
    }
    terms.push_back({m, c});
  }
  auto [ip, s] = clear_denominators(MultiPoly::from_terms(std::move(terms)));
  scale = s;
  return ip;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse field element '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  FieldElem term() {
    FieldElem v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }
  FieldElem factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    FieldElem base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  FieldElem primary() {
    skip();
    if (accept('(')) {
      FieldElem v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      return FieldElem(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    auto sym = Symbol::parse(s_.substr(start, pos_ - start));
    if (!sym) fail("unknown symbol");
    return FieldElem::symbol(*sym);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool Assignment::covers(std::uint32_t mask) const {
  for (int s = 0; s < kNumSlots; ++s)
    if ((mask & (1U << s)) != 0 && !values_[static_cast<std::size_t>(s)]) return false;
  return true;
}

Assignment Assignment::parse(std::string_view text) {
  Assignment a;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected name=value in '" + std::string(item) + "'");
    auto sym = Symbol::parse(item.substr(0, eq));
    if (!sym) throw std::invalid_argument("unknown symbol in '" + std::string(item) + "'");
    FieldElem v = FieldElem::parse(item.substr(eq + 1));
    if (!v.is_constant()) throw std::invalid_argument("value must be a rational number: '" + std::string(item) + "'");
    a.set(*sym, v.constant_value());
    pos = comma + 1;
  }
  return a;
}

FieldElem::FieldElem() {
  static const auto zero = std::make_shared<const Rep>(Rep{IntPoly(), IntPoly(1)});
  rep_ = zero;
}

FieldElem::FieldElem(long c) : FieldElem(mpz_class(c)) {}

FieldElem::FieldElem(const mpz_class& c) : rep_(std::make_shared<const Rep>(Rep{IntPoly(c), IntPoly(1)})) {}

FieldElem::FieldElem(const mpq_class& c)
    : rep_(std::make_shared<const Rep>(Rep{IntPoly(mpz_class(c.get_num())), IntPoly(mpz_class(c.get_den()))})) {}

FieldElem::FieldElem(const IntPoly& p) : rep_(std::make_shared<const Rep>(Rep{p, IntPoly(1)})) {}

FieldElem::FieldElem(const MultiPoly& p) : FieldElem(fraction(p, MultiPoly(1))) {}

FieldElem FieldElem::symbol(Symbol s) { return FieldElem(IntPoly::variable(s.slot())); }

FieldElem FieldElem::canonical(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return FieldElem();
  IntPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = *num.divide_exact(g);
    den = *den.divide_exact(g);
  }
  if (sgn(den.leading_coeff()) < 0) {
    num = -num;
    den = -den;
  }
  return FieldElem(std::make_shared<const Rep>(Rep{std::move(num), std::move(den)}));
}

FieldElem FieldElem::fraction(const IntPoly& num, const IntPoly& den) { return canonical(num, den); }

FieldElem FieldElem::fraction(const MultiPoly& num, const MultiPoly& den) {
  auto [n, sn] = clear_denominators(num);
  auto [d, sd] = clear_denominators(den);
  return canonical(n.scaled(sd), d.scaled(sn));
}

FieldElem FieldElem::parse(std::string_view text) { return Parser(text).parse(); }

mpq_class FieldElem::constant_value() const {
  if (!is_constant()) throw std::logic_error("field element is not constant");
  mpq_class r(num().constant_value(), den().constant_value());
  r.canonicalize();
  return r;
}

FieldElem FieldElem::operator-() const {
  if (is_zero()) return *this;
  return FieldElem(std::make_shared<const Rep>(Rep{-num(), den()}));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() && b.is_constant()) return FieldElem(mpq_class(a.constant_value() + b.constant_value()));
  const IntPoly& an = a.num();
  const IntPoly& ad = a.den();
  const IntPoly& bn = b.num();
  const IntPoly& bd = b.den();
  if (ad == bd) return FieldElem::canonical(an + bn, ad);
  if (ad.is_one()) {
    return FieldElem(std::make_shared<const FieldElem::Rep>(FieldElem::Rep{an * bd + bn, bd}));
  }
  if (bd.is_one()) {
    return FieldElem(std::make_shared<const FieldElem::Rep>(FieldElem::Rep{bn * ad + an, ad}));
  }
  IntPoly g = poly_gcd(ad, bd);
  if (g.is_one()) {
    IntPoly n = an * bd + bn * ad;
    if (n.is_zero()) return FieldElem();
    return FieldElem(std::make_shared<const FieldElem::Rep>(FieldElem::Rep{std::move(n), ad * bd}));
  }
  IntPoly ad1 = *ad.divide_exact(g);
  IntPoly bd1 = *bd.divide_exact(g);
  IntPoly t = an * bd1 + bn * ad1;
  if (t.is_zero()) return FieldElem();
  IntPoly g2 = poly_gcd(t, g);
  if (!g2.is_one()) {
    t = *t.divide_exact(g2);
    return FieldElem(std::make_shared<const FieldElem::Rep>(FieldElem::Rep{std::move(t), ad1 * *bd.divide_exact(g2)}));
  }
  return FieldElem(std::make_shared<const FieldElem::Rep>(FieldElem::Rep{std::move(t), ad1 * bd}));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_constant() && b.is_constant()) return FieldElem(mpq_class(a.constant_value() * b.constant_value()));
  IntPoly g1 = poly_gcd(a.num(), b.den());
  IntPoly g2 = poly_gcd(b.num(), a.den());
  IntPoly n1 = g1.is_one() ? a.num() : *a.num().divide_exact(g1);
  IntPoly d2 = g1.is_one() ? b.den() : *b.den().divide_exact(g1);
  IntPoly n2 = g2.is_one() ? b.num() : *b.num().divide_exact(g2);
  IntPoly d1 = g2.is_one() ? a.den() : *a.den().divide_exact(g2);
  return FieldElem(std::make_shared<const FieldElem::Rep>(FieldElem::Rep{n1 * n2, d1 * d2}));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (sgn(num().leading_coeff()) < 0) return FieldElem(std::make_shared<const Rep>(Rep{-den(), -num()}));
  return FieldElem(std::make_shared<const Rep>(Rep{den(), num()}));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::derivative(int slot) const {
  IntPoly dn = num().derivative(slot), dd = den().derivative(slot);
  if (dd.is_zero()) return fraction(dn, den());
  return fraction(dn * den() - num() * dd, den() * den());
}

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result(1L);
  FieldElem base = *this;
  while (e != 0) {
    if ((e & 1) != 0) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.rep_ == b.rep_) return true;
  return a.num() == b.num() && a.den() == b.den();
}

mpq_class FieldElem::evaluate(const Assignment& at) const {
  if (!at.covers(slot_mask())) throw std::invalid_argument("assignment does not cover " + to_string());
  std::vector<mpq_class> values(kNumSlots);
  for (int s = 0; s < kNumSlots; ++s)
    if (at.get(s)) values[static_cast<std::size_t>(s)] = *at.get(s);
  mpq_class d = den().evaluate(values);
  if (sgn(d) == 0) throw PoleError(den().to_string());
  mpq_class n = num().evaluate(values);
  return n / d;
}

FieldElem FieldElem::substitute(const Assignment& at) const {
  mpz_class sn, sd;
  bool fn = false, fd = false;
  IntPoly n = eval_partial(num(), at, sn, fn);
  IntPoly d = eval_partial(den(), at, sd, fd);
  if (d.is_zero()) throw PoleError(den().to_string());
  return canonical(n.scaled(sd), d.scaled(sn));
}

std::string FieldElem::to_string() const {
  if (den().is_one()) return num().to_string();
  return "(" + num().to_string() + ")/(" + den().to_string() + ")";
}

FieldElem sum(const std::vector<FieldElem>& terms) {
  std::map<std::string, std::pair<IntPoly, IntPoly>> by_den;
  std::vector<std::string> order;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    std::string key = t.den().to_string();
    auto it = by_den.find(key);
    if (it == by_den.end()) {
      by_den.emplace(key, std::make_pair(t.num(), t.den()));
      order.push_back(key);
    } else {
      it->second.first += t.num();
    }
  }
  FieldElem acc;
  for (const auto& k : order) {
    const auto& [n, d] = by_den.at(k);
    acc += FieldElem::fraction(n, d);
  }
  return acc;
}

}  // namespace vermalab::exact
