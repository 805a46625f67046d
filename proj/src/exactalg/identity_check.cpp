#include "vermalab/exactalg/identity_check.hpp"

#include <stdexcept>

namespace vermalab::exact {

std::string_view to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Zero: return "zero";
    case IdentityStatus::Nonzero: return "nonzero";
    case IdentityStatus::ProbablyZero: return "probably-zero";
  }
  return "?";
}

IdentityStatus identity_check(const FieldElem& f) {
  return f.is_zero() ? IdentityStatus::Zero : IdentityStatus::Nonzero;
}

Assignment random_point(std::mt19937_64& rng, std::uint32_t mask) {
  std::uniform_int_distribution<long> dist(-10000, 10000);
  Assignment a;
  for (int s = 0; s < kNumSlots; ++s)
    if ((mask & (1U << s)) != 0) a.set(Symbol::from_slot(s), mpq_class(dist(rng)));
  return a;
}

IdentityStatus identity_check(const FieldElem& f, const RandomEval& mode) {
  if (mode.trials < 1) throw std::invalid_argument("random-eval needs at least one trial");
  std::mt19937_64 rng(mode.seed);
  const std::uint32_t mask = f.slot_mask();
  int done = 0;
  int redraws = 0;
  while (done < mode.trials) {
    try {
      if (sgn(f.evaluate(random_point(rng, mask))) != 0) return IdentityStatus::Nonzero;
      ++done;
    } catch (const PoleError&) {
      if (++redraws > 1000 * mode.trials) throw;
    }
  }
  return IdentityStatus::ProbablyZero;
}

}  // namespace vermalab::exact
