#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "vermalab/exactalg/field_elem.hpp"

namespace vermalab::exact {

enum class IdentityStatus { Zero, Nonzero, ProbablyZero };

std::string_view to_string(IdentityStatus s);

struct RandomEval {
  int trials = 20;
  std::uint64_t seed = 1;
};

/// Definitive: canonical forms make zero-testing representational.
IdentityStatus identity_check(const FieldElem& f);

/// Evaluates at integer points drawn from [-10^4, 10^4]; points hitting a pole
/// are redrawn.  ProbablyZero only if every trial vanishes.
IdentityStatus identity_check(const FieldElem& f, const RandomEval& mode);

/// Integer values in [-10^4, 10^4] for every slot in `mask`.
Assignment random_point(std::mt19937_64& rng, std::uint32_t mask);

}  // namespace vermalab::exact
