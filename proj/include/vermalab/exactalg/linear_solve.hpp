#pragma once

#include <vector>

#include "vermalab/exactalg/sparse_matrix.hpp"

namespace vermalab::exact {

enum class SolveKind { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  /// A particular solution (free variables set to zero) unless inconsistent.
  std::vector<FieldElem> solution;
  /// Kernel basis, each vector scaled so its first nonzero entry is 1.
  std::vector<std::vector<FieldElem>> kernel;
  std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination over the field.
SolveResult solve_linear(const SparseMatrix& a, const std::vector<FieldElem>& rhs);

/// Kernel basis of a, normalized as in SolveResult.
std::vector<std::vector<FieldElem>> kernel_basis(const SparseMatrix& a);

std::size_t rank(const SparseMatrix& a);

}  // namespace vermalab::exact
