#include "vermalab/exactalg/poly_gcd.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <tuple>

namespace vermalab::exact {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if ((e & 1U) != 0) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const mpz_class& c) { return mpz_fdiv_ui(c.get_mpz_t(), kPrime); }

using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image in Z_p[s] after substituting `point` for every other slot.
UPoly project(const IntPoly& p, int slot, const std::array<std::uint64_t, kNumSlots>& point) {
  UPoly out(p.degree(slot) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t v = reduce(t.coeff);
    for (int s = 0; s < kNumSlots && v != 0; ++s) {
      if (s == slot) continue;
      unsigned e = t.mono.exponent(s);
      if (e != 0) v = mulmod(v, powmod(point[static_cast<std::size_t>(s)], e));
    }
    auto& cell = out[t.mono.exponent(slot)];
    cell = (cell + v) % kPrime;
  }
  trim(out);
  return out;
}

UPoly urem(UPoly a, const UPoly& b) {
  std::uint64_t inv = invmod(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t f = mulmod(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + kPrime - mulmod(f, b[i])) % kPrime;
    trim(a);
  }
  return a;
}

std::size_t ugcd_degree(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = urem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

IntPoly positive(IntPoly p) {
  if (!p.is_zero() && sgn(p.leading_coeff()) < 0) return -p;
  return p;
}

Monomial monomial_content(const IntPoly& p) {
  Monomial m = p.terms().back().mono;
  for (const auto& t : p.terms()) m = m.gcd(t.mono);
  return m;
}

// Coefficient polynomials of p grouped by the exponents in `mask`.
std::vector<IntPoly> coefficients_over(const IntPoly& p, std::uint32_t mask) {
  std::map<Monomial, std::vector<IntPoly::Term>> groups;
  for (const auto& t : p.terms()) {
    Monomial key;
    Monomial rest = t.mono;
    for (int s = 0; s < kNumSlots; ++s) {
      if ((mask & (1U << s)) == 0) continue;
      key = key * Monomial::var(s, t.mono.exponent(s));
      rest = rest.with_exponent(s, 0);
    }
    groups[key].push_back({rest, t.coeff});
  }
  std::vector<IntPoly> out;
  out.reserve(groups.size());
  for (auto& [k, terms] : groups) out.push_back(IntPoly::from_terms(std::move(terms)));
  return out;
}

IntPoly content_over(const IntPoly& p, std::uint32_t mask) {
  IntPoly g;
  for (const auto& c : coefficients_over(p, mask)) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

IntPoly coefficient_at(const IntPoly& p, int slot, unsigned e) {
  std::vector<IntPoly::Term> out;
  for (const auto& t : p.terms())
    if (t.mono.exponent(slot) == e) out.push_back({t.mono.with_exponent(slot, 0), t.coeff});
  return IntPoly::from_terms(std::move(out));
}

IntPoly evaluate_slot(const IntPoly& p, int slot, const mpz_class& x) {
  std::vector<IntPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c;
    mpz_pow_ui(c.get_mpz_t(), x.get_mpz_t(), t.mono.exponent(slot));
    out.push_back({t.mono.with_exponent(slot, 0), c * t.coeff});
  }
  return IntPoly::from_terms(std::move(out));
}

mpz_class max_norm(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) m = std::max(m, mpz_class(abs(t.coeff)));
  return m;
}

// Rebuilds a polynomial in `slot` from its image at slot = x (balanced base-x digits).
IntPoly interpolate(IntPoly h, const mpz_class& x, int slot) {
  std::vector<IntPoly::Term> out;
  mpz_class half = x / 2;
  unsigned k = 0;
  while (!h.is_zero()) {
    std::vector<IntPoly::Term> digit;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) digit.push_back({t.mono, r});
    }
    IntPoly g = IntPoly::from_terms(digit);
    for (const auto& t : g.terms()) out.push_back({t.mono * Monomial::var(slot, k), t.coeff});
    h = (h - g).divided_by_coeff(x);
    ++k;
  }
  return positive(IntPoly::from_terms(std::move(out)));
}

using HeuResult = std::tuple<IntPoly, IntPoly, IntPoly>;

std::optional<HeuResult> heuristic(IntPoly f, IntPoly g, std::vector<int> slots) {
  while (!slots.empty() && f.degree(slots.back()) == 0 && g.degree(slots.back()) == 0) slots.pop_back();
  if (slots.empty()) {
    mpz_class a = f.constant_value(), b = g.constant_value();
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return HeuResult{IntPoly(h), IntPoly(mpz_class(a / h)), IntPoly(mpz_class(b / h))};
  }
  const int slot = slots.back();
  std::vector<int> rest(slots.begin(), slots.end() - 1);

  mpz_class c;
  {
    mpz_class cf = integer_content(f), cg = integer_content(g);
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  }
  f = f.divided_by_coeff(c);
  g = g.divided_by_coeff(c);

  mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class bound = 2 * std::min(fn, gn) + 29;
  mpz_class root = sqrt(bound);
  mpz_class x = std::min(bound, mpz_class(99 * root));
  mpz_class alt = 2 * std::min(mpz_class(fn / abs(f.leading_coeff())), mpz_class(gn / abs(g.leading_coeff()))) + 2;
  x = std::max(x, alt);

  for (int attempt = 0; attempt < 6; ++attempt) {
    IntPoly ff = evaluate_slot(f, slot, x);
    IntPoly gg = evaluate_slot(g, slot, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto sub = heuristic(ff, gg, rest)) {
        auto& [hh, cff_img, cfg_img] = *sub;
        IntPoly h = primitive_part(interpolate(hh, x, slot));
        if (auto cf = f.divide_exact(h)) {
          if (auto cg = g.divide_exact(h)) return HeuResult{h.scaled(c), *cf, *cg};
        }
        IntPoly cff = interpolate(cff_img, x, slot);
        if (auto h2 = f.divide_exact(cff)) {
          if (auto cg = g.divide_exact(*h2)) return HeuResult{h2->scaled(c), cff, *cg};
        }
        IntPoly cfg = interpolate(cfg_img, x, slot);
        if (auto h3 = g.divide_exact(cfg)) {
          if (auto cf = f.divide_exact(*h3)) return HeuResult{h3->scaled(c), *cf, cfg};
        }
      }
    }
    mpz_class r4 = sqrt(mpz_class(sqrt(x)));
    x = 73794 * x * r4 / 27011;
  }
  return std::nullopt;
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b, int slot) {
  unsigned db = b.degree(slot);
  IntPoly lcb = coefficient_at(b, slot, db);
  while (!a.is_zero() && a.degree(slot) >= db) {
    unsigned da = a.degree(slot);
    IntPoly lca = coefficient_at(a, slot, da);
    a = a * lcb - (lca * b).times_monomial(Monomial::var(slot, da - db));
  }
  return a;
}

IntPoly prs_gcd(IntPoly a, IntPoly b) {
  std::uint32_t common = a.slot_mask() & b.slot_mask();
  if (common == 0) return IntPoly(1);
  int slot = 31 - __builtin_clz(common);
  std::uint32_t bit = 1U << slot;
  IntPoly ca = content_over(a, bit);
  IntPoly cb = content_over(b, bit);
  IntPoly c = poly_gcd(ca, cb);
  a = *a.divide_exact(ca);
  b = *b.divide_exact(cb);
  if (a.degree(slot) < b.degree(slot)) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b, slot);
    a = std::move(b);
    if (r.is_zero()) break;
    if (r.degree(slot) == 0) {
      a = IntPoly(1);
      break;
    }
    b = *r.divide_exact(content_over(r, bit));
  }
  a = *a.divide_exact(content_over(a, bit));
  return positive(a * c);
}

std::vector<int> slots_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int s = 0; s < kNumSlots; ++s)
    if ((mask & (1U << s)) != 0) out.push_back(s);
  return out;
}

// a, b primitive, positive leading coefficient, free of monomial factors.
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
  if (a.is_constant() || b.is_constant()) return IntPoly(1);
  if (a == b) return a;
  std::uint32_t ma = a.slot_mask(), mb = b.slot_mask();
  if (ma != mb) {
    IntPoly ra = (ma & ~mb) != 0 ? content_over(a, ma & ~mb) : a;
    IntPoly rb = (mb & ~ma) != 0 ? content_over(b, mb & ~ma) : b;
    return poly_gcd(ra, rb);
  }
  if (proven_coprime(a, b)) return IntPoly(1);
  if (a.size() <= b.size()) {
    if (b.divide_exact(a)) return a;
  } else {
    if (a.divide_exact(b)) return b;
  }
  if (auto r = heuristic(a, b, slots_of(ma))) {
    auto& [h, cf, cg] = *r;
    IntPoly hp = positive(h);
    if (!proven_coprime(cf, cg)) {
      IntPoly extra = poly_gcd(cf, cg);
      if (!extra.is_constant()) hp = positive(hp * primitive_part(extra));
    }
    return hp;
  }
  return prs_gcd(a, b);
}

}  // namespace

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = integer_content(p);
  if (sgn(p.leading_coeff()) < 0) c = -c;
  return p.divided_by_coeff(c);
}

std::vector<IntPoly> coefficients_in(const IntPoly& p, int slot) {
  std::vector<IntPoly> out(p.degree(slot) + 1);
  for (unsigned e = 0; e < out.size(); ++e) out[e] = coefficient_at(p, slot, e);
  return out;
}

bool proven_coprime(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  std::uint32_t common = a.slot_mask() & b.slot_mask();
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  for (int slot : slots_of(common)) {
    bool decided = false;
    for (int attempt = 0; attempt < 4 && !decided; ++attempt) {
      std::array<std::uint64_t, kNumSlots> point{};
      for (auto& v : point) v = dist(rng());
      UPoly pa = project(a, slot, point);
      UPoly pb = project(b, slot, point);
      if (pa.size() != a.degree(slot) + 1 || pb.size() != b.degree(slot) + 1) continue;
      if (ugcd_degree(pa, pb) > 0) return false;
      decided = true;
    }
    if (!decided) return false;
  }
  return true;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  mpz_class ca = integer_content(a), cb = integer_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return IntPoly(c);
  Monomial ma = monomial_content(a), mb = monomial_content(b);
  IntPoly pa = primitive_part(a.divided_by_monomial(ma));
  IntPoly pb = primitive_part(b.divided_by_monomial(mb));
  return gcd_primitive(pa, pb).times_monomial(ma.gcd(mb)).scaled(c);
}

}  // namespace vermalab::exact
