#include "vermalab/generators.hpp"

#include <stdexcept>

namespace vermalab {

using exact::Symbol;

Generators Generators::symbolic(int n) {
  if (n < 2 || n > exact::kMaxRank) throw std::invalid_argument("n must lie in [2, 8]");
  Generators g;
  g.n = n;
  for (int i = 1; i <= n; ++i) g.xs.push_back(FieldElem::x(i));
  g.h = FieldElem::hbar();
  for (int l = 2; l <= n - 1; ++l) g.qs.push_back(FieldElem::q(l));
  return g;
}

Generators Generators::specialized(int n, const exact::Assignment& at) {
  Generators g = symbolic(n);
  for (auto& v : g.xs) v = v.substitute(at);
  g.h = g.h.substitute(at);
  for (auto& v : g.qs) v = v.substitute(at);
  if (g.h.is_zero()) throw std::invalid_argument("hbar must be nonzero");
  return g;
}

Generators Generators::random(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-10000, 10000);
  Generators g = symbolic(n);
  for (auto& v : g.xs) v = FieldElem(dist(rng));
  long h = 0;
  while (h == 0) h = dist(rng);
  g.h = FieldElem(h);
  for (auto& v : g.qs) v = FieldElem(dist(rng));
  return g;
}

FieldElem Generators::q(int l) const {
  if (l == n) return FieldElem(1L);
  if (l < 2 || l > n) throw std::out_of_range("q index out of range");
  return qs.at(static_cast<std::size_t>(l - 2));
}

FieldElem Generators::lowest_weight(int i) const { return x(i) / h + FieldElem(static_cast<long>(i - 1)); }

bool Generators::is_symbolic() const {
  for (const auto& v : xs)
    if (v.is_constant()) return false;
  return !h.is_constant();
}

}  // namespace vermalab
