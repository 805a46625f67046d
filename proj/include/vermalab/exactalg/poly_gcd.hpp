#pragma once

#include <cstdint>
#include <vector>

#include "vermalab/exactalg/polynomial.hpp"

namespace vermalab::exact {

/// Greatest common divisor over Z, normalized to a positive leading coefficient.
/// Integer content is included; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Divides out the integer content and makes the leading coefficient positive.
IntPoly primitive_part(const IntPoly& p);

/// Coefficients of p viewed as a univariate polynomial in the given slot.
std::vector<IntPoly> coefficients_in(const IntPoly& p, int slot);

/// True when the two polynomials are proven to share no factor of positive
/// degree, using images modulo a prime.  False means "not proven".
bool proven_coprime(const IntPoly& a, const IntPoly& b);

}  // namespace vermalab::exact
