#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vermalab/exactalg/monomial.hpp"

namespace vermalab::exact {

namespace detail {
inline bool coeff_divides(const mpz_class& d, const mpz_class& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}
inline bool coeff_divides(const mpq_class&, const mpq_class&) { return true; }
inline mpz_class coeff_quotient(const mpz_class& a, const mpz_class& d) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}
inline mpq_class coeff_quotient(const mpq_class& a, const mpq_class& d) { return a / d; }
}  // namespace detail

/// Sparse multivariate polynomial; terms held in strictly descending monomial order.
template <class C>
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    C coeff;
  };

  Polynomial() = default;
  Polynomial(long c) : Polynomial(C(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const C& c) {                  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
  }

  static Polynomial variable(int slot) {
    Polynomial p;
    p.terms_.push_back({Monomial::var(slot), C(1)});
    return p;
  }
  static Polynomial monomial(const Monomial& m, const C& c) {
    Polynomial p;
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == 1; }
  C constant_value() const { return terms_.empty() ? C(0) : terms_[0].coeff; }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return C(0);
  }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const C& leading_coeff() const { return terms_.front().coeff; }

  unsigned degree(int slot) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(slot));
    return d;
  }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.total_degree(); }
  /// Bit s set iff slot s occurs with positive exponent.
  std::uint32_t slot_mask() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_)
      for (int s = 0; s < kNumSlots; ++s)
        if (t.mono.exponent(s) != 0) m |= (1u << s);
    return m;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const C& c) const {
    if (sgn(c) == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }
  /// Divides every coefficient exactly (integer case assumes divisibility).
  Polynomial divided_by_coeff(const C& c) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = detail::coeff_quotient(t.coeff, c);
    return r;
  }
  Polynomial divided_by_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono / m;
    return r;
  }

  /// Quotient when d divides *this exactly, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Polynomial{};
    if (d.is_constant()) {
      const C& c = d.terms_[0].coeff;
      for (const auto& t : terms_)
        if (!detail::coeff_divides(c, t.coeff)) return std::nullopt;
      return divided_by_coeff(c);
    }
    if (d.terms_.size() == 1) {
      const auto& dt = d.terms_[0];
      for (const auto& t : terms_)
        if (!dt.mono.divides(t.mono) || !detail::coeff_divides(dt.coeff, t.coeff)) return std::nullopt;
      return divided_by_monomial(dt.mono).divided_by_coeff(dt.coeff);
    }
    const auto& lt = d.terms_.front();
    for (int s = 0; s < kNumSlots; ++s)
      if (d.degree(s) > degree(s)) return std::nullopt;
    std::vector<Term> quot;
    Polynomial r = *this;
    while (!r.is_zero()) {
      const auto& head = r.terms_.front();
      if (!lt.mono.divides(head.mono) || !detail::coeff_divides(lt.coeff, head.coeff)) return std::nullopt;
      Term q{head.mono / lt.mono, detail::coeff_quotient(head.coeff, lt.coeff)};
      r = r - d.times_monomial(q.mono).scaled(q.coeff);
      quot.push_back(std::move(q));
    }
    Polynomial out;
    out.terms_ = std::move(quot);
    return out;
  }

  Polynomial derivative(int slot) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono.exponent(slot);
      if (e != 0) out.push_back({t.mono.with_exponent(slot, e - 1), t.coeff * C(static_cast<long>(e))});
    }
    return from_terms(std::move(out));
  }

  /// Substitutes values for all slots; `values[s]` is used for slot s.
  template <class V>
  V evaluate(const std::vector<V>& values) const {
    V acc(0);
    for (const auto& t : terms_) {
      V term(t.coeff);
      for (int s = 0; s < kNumSlots; ++s) {
        unsigned e = t.mono.exponent(s);
        for (unsigned k = 0; k < e; ++k) term *= values[static_cast<std::size_t>(s)];
      }
      acc += term;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  /// Canonical text: descending terms, e.g. "x1^2*hbar - 3*q2 + 1".
  std::string to_string() const;

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].mono > a.terms_[i].mono) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (sgn(c) != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using IntPoly = Polynomial<mpz_class>;
using MultiPoly = Polynomial<mpq_class>;

std::string monomial_to_string(const Monomial& m);

template <class C>
std::string Polynomial<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    C c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += monomial_to_string(t.mono);
    }
  }
  return out;
}

/// Integer content (positive gcd of coefficients); zero for the zero polynomial.
mpz_class integer_content(const IntPoly& p);
/// Clears denominators: returns (integer polynomial, positive scale) with p = ip / scale.
std::pair<IntPoly, mpz_class> clear_denominators(const MultiPoly& p);
MultiPoly to_multipoly(const IntPoly& p);

}  // namespace vermalab::exact
