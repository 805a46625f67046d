#include "vermalab/exactalg/linear_solve.hpp"

#include <limits>
#include <stdexcept>

namespace vermalab::exact {

namespace {

std::size_t weight(const FieldElem& f) { return f.num().size() + f.den().size(); }

struct Reduced {
  std::vector<std::vector<FieldElem>> rows;  // augmented, reduced row echelon
  std::vector<std::size_t> pivots;           // pivot column of each leading row
};

Reduced reduce(const SparseMatrix& a, const std::vector<FieldElem>* rhs) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t width = n + (rhs != nullptr ? 1 : 0);
  Reduced red;
  red.rows.assign(m, std::vector<FieldElem>(width));
  for (std::size_t r = 0; r < m; ++r) {
    for (const auto& e : a.row(r)) red.rows[r][e.col] = e.value;
    if (rhs != nullptr) red.rows[r][n] = (*rhs)[r];
  }
  std::size_t top = 0;
  for (std::size_t c = 0; c < n && top < m; ++c) {
    std::size_t best = m;
    std::size_t best_w = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = top; r < m; ++r) {
      if (red.rows[r][c].is_zero()) continue;
      std::size_t w = weight(red.rows[r][c]);
      if (w < best_w) {
        best = r;
        best_w = w;
      }
    }
    if (best == m) continue;
    std::swap(red.rows[top], red.rows[best]);
    auto& prow = red.rows[top];
    FieldElem inv = prow[c].inverse();
    for (std::size_t k = c; k < width; ++k)
      if (!prow[k].is_zero()) prow[k] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == top || red.rows[r][c].is_zero()) continue;
      FieldElem f = red.rows[r][c];
      for (std::size_t k = c; k < width; ++k)
        if (!prow[k].is_zero()) red.rows[r][k] -= f * prow[k];
    }
    red.pivots.push_back(c);
    ++top;
  }
  return red;
}

std::vector<std::vector<FieldElem>> kernel_from(const Reduced& red, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(n);
    v[f] = FieldElem(1L);
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.rows[k][f];
    FieldElem lead;
    for (const auto& x : v)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    if (!lead.is_one()) {
      FieldElem inv = lead.inverse();
      for (auto& x : v) x *= inv;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SolveResult solve_linear(const SparseMatrix& a, const std::vector<FieldElem>& rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t n = a.cols();
  Reduced red = reduce(a, &rhs);
  SolveResult res;
  res.rank = red.pivots.size();
  for (std::size_t r = res.rank; r < red.rows.size(); ++r) {
    if (!red.rows[r][n].is_zero()) {
      res.kind = SolveKind::Inconsistent;
      return res;
    }
  }
  res.solution.assign(n, FieldElem());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) res.solution[red.pivots[k]] = red.rows[k][n];
  res.kernel = kernel_from(red, n);
  res.kind = res.kernel.empty() ? SolveKind::Unique : SolveKind::Underdetermined;
  return res;
}

std::vector<std::vector<FieldElem>> kernel_basis(const SparseMatrix& a) {
  return kernel_from(reduce(a, nullptr), a.cols());
}

std::size_t rank(const SparseMatrix& a) { return reduce(a, nullptr).pivots.size(); }

}  // namespace vermalab::exact
