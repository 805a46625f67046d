#include "vermalab/exactalg/symbol.hpp"

#include <charconv>
#include <stdexcept>

#include "vermalab/exactalg/monomial.hpp"
#include "vermalab/exactalg/polynomial.hpp"

namespace vermalab::exact {

Symbol Symbol::x(int i) {
  if (i < 1 || i > kMaxRank) throw std::out_of_range("x index out of range");
  return {SymbolKind::X, i};
}

Symbol Symbol::q(int l) {
  if (l < 2 || l > kMaxRank) throw std::out_of_range("q index out of range");
  return {SymbolKind::Q, l};
}

Symbol Symbol::from_slot(int slot) {
  if (slot < kHbarSlot) return x(slot + 1);
  if (slot == kHbarSlot) return hbar();
  return q(slot - kHbarSlot + 1);
}

int Symbol::slot() const {
  switch (kind) {
    case SymbolKind::X: return index - 1;
    case SymbolKind::Hbar: return kHbarSlot;
    case SymbolKind::Q: return kHbarSlot + index - 1;
  }
  return 0;
}

std::string Symbol::name() const {
  switch (kind) {
    case SymbolKind::X: return "x" + std::to_string(index);
    case SymbolKind::Hbar: return "hbar";
    case SymbolKind::Q: return "q" + std::to_string(index);
  }
  return {};
}

std::optional<Symbol> Symbol::parse(std::string_view name) {
  if (name == "hbar" || name == "h") return hbar();
  if (name.size() < 2) return std::nullopt;
  int idx = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
  if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
  if (name[0] == 'x' && idx >= 1 && idx <= kMaxRank) return x(idx);
  if (name[0] == 'q' && idx >= 2 && idx <= kMaxRank) return q(idx);
  return std::nullopt;
}

Monomial Monomial::var(int slot, unsigned exponent) {
  Monomial m;
  if (exponent > 255) throw std::overflow_error("monomial exponent overflow");
  m.exps_[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(exponent);
  m.total_ = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    unsigned e = unsigned{exps_[i]} + unsigned{other.exps_[i]};
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.total_ = static_cast<std::uint16_t>(total_ + other.total_);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (total_ > other.total_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::domain_error("monomial does not divide");
    r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  r.total_ = static_cast<std::uint16_t>(total_ - divisor.total_);
  return r;
}

Monomial Monomial::with_exponent(int slot, unsigned exponent) const {
  if (exponent > 255) throw std::overflow_error("monomial exponent overflow");
  Monomial r = *this;
  auto i = static_cast<std::size_t>(slot);
  r.total_ = static_cast<std::uint16_t>(r.total_ - r.exps_[i] + exponent);
  r.exps_[i] = static_cast<std::uint8_t>(exponent);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  unsigned total = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    total += r.exps_[i];
  }
  r.total_ = static_cast<std::uint16_t>(total);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (int s = 0; s < kNumSlots; ++s) {
    unsigned e = m.exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += Symbol::from_slot(s).name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

mpz_class integer_content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::pair<IntPoly, mpz_class> clear_denominators(const MultiPoly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<IntPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff.get_num() * (l / t.coeff.get_den());
    out.push_back({t.mono, c});
  }
  return {IntPoly::from_terms(std::move(out)), l};
}

MultiPoly to_multipoly(const IntPoly& p) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, mpq_class(t.coeff)});
  return MultiPoly::from_terms(std::move(out));
}

}  // namespace vermalab::exact
