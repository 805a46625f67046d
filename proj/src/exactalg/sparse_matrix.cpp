#include "vermalab/exactalg/sparse_matrix.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace vermalab::exact {

namespace {

SparseMatrix::Row combine_rows(const SparseMatrix::Row& a, const SparseMatrix::Row& b, bool subtract) {
  SparseMatrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, subtract ? -b[j].value : b[j].value});
      ++j;
    } else {
      FieldElem v = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix::Row product_row(const SparseMatrix::Row& ar, const SparseMatrix& b) {
  std::map<std::size_t, std::vector<FieldElem>> acc;
  for (const auto& ea : ar)
    for (const auto& eb : b.row(ea.col)) acc[eb.col].push_back(ea.value * eb.value);
  SparseMatrix::Row out;
  for (auto& [c, terms] : acc) {
    FieldElem v = terms.size() == 1 ? terms[0] : sum(terms);
    if (!v.is_zero()) out.push_back({c, std::move(v)});
  }
  return out;
}

void check_product(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch in product");
}

}  // namespace

int thread_budget() {
  int n = omp_get_max_threads();
  if (const char* cap = std::getenv("VERMALAB_THREADS")) {
    try {
      int c = std::stoi(cap);
      if (c >= 1) n = std::min(n, c);
    } catch (const std::exception&) {
    }
  }
  return std::max(n, 1);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, FieldElem(1L)});
  return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<FieldElem>& d) {
  SparseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) m.data_[i].push_back({i, d[i]});
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < data_.size(); ++r)
    for (const auto& e : data_[r])
      if (e.col != r) return false;
  return true;
}

std::vector<FieldElem> SparseMatrix::diagonal_entries() const {
  std::vector<FieldElem> d(std::min(rows(), cols()));
  for (std::size_t r = 0; r < d.size(); ++r) d[r] = get(r, r);
  return d;
}

void SparseMatrix::set_row(std::size_t r, Row entries) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].col >= cols_) throw std::out_of_range("column index out of range");
    if (k > 0 && entries[k - 1].col >= entries[k].col) throw std::invalid_argument("row entries not sorted");
  }
  data_.at(r) = std::move(entries);
}

FieldElem SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return {};
}

void SparseMatrix::set(std::size_t r, std::size_t c, const FieldElem& v) {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v.is_zero()) {
      row.erase(it);
    } else {
      it->value = v;
    }
  } else if (!v.is_zero()) {
    row.insert(it, {c, v});
  }
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const FieldElem& v) {
  if (v.is_zero()) return;
  set(r, c, get(r, c) + v);
}

SparseMatrix SparseMatrix::operator-() const {
  return map([](const FieldElem& v) { return -v; });
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch in sum");
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.data_[r] = combine_rows(a.data_[r], b.data_[r], false);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch in difference");
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.data_[r] = combine_rows(a.data_[r], b.data_[r], true);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (thread_budget() > 1 && a.rows() >= 8) return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

SparseMatrix SparseMatrix::scaled(const FieldElem& c) const {
  if (c.is_zero()) return SparseMatrix(rows(), cols());
  return map([&c](const FieldElem& v) { return v * c; });
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix out(cols(), rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : data_[r]) out.data_[e.col].push_back({r, e.value});
  return out;
}

std::vector<FieldElem> SparseMatrix::apply(const std::vector<FieldElem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElem> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    std::vector<FieldElem> terms;
    for (const auto& e : data_[r])
      if (!v[e.col].is_zero()) terms.push_back(e.value * v[e.col]);
    out[r] = sum(terms);
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].col != y[k].col || !(x[k].value == y[k].value)) return false;
  }
  return true;
}

SparseMatrix multiply_serial(const SparseMatrix& a, const SparseMatrix& b) {
  check_product(a, b);
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, product_row(a.row(r), b));
  return out;
}

SparseMatrix multiply_parallel(const SparseMatrix& a, const SparseMatrix& b) {
  check_product(a, b);
  std::vector<SparseMatrix::Row> rows(a.rows());
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
  for (long r = 0; r < n; ++r) rows[static_cast<std::size_t>(r)] = product_row(a.row(static_cast<std::size_t>(r)), b);
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.set_row(r, std::move(rows[r]));
  return out;
}

}  // namespace vermalab::exact
