#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vermalab/exactalg/field_elem.hpp"

namespace vermalab::exact {

/// Row-major sparse matrix over the field; each row keeps its entries sorted by
/// column and never stores zeros.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    FieldElem value;
  };
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix diagonal(const std::vector<FieldElem>& d);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  bool is_diagonal() const;
  std::vector<FieldElem> diagonal_entries() const;

  const Row& row(std::size_t r) const { return data_.at(r); }
  /// Replaces a whole row; entries must be sorted by column and nonzero.
  void set_row(std::size_t r, Row entries);
  FieldElem get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElem& v);
  void add_to(std::size_t r, std::size_t c, const FieldElem& v);

  SparseMatrix operator-() const;
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  /// Uses the parallel kernel when threads are available.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix scaled(const FieldElem& c) const;
  SparseMatrix transposed() const;
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;
  /// Applies f to every stored entry, dropping results that become zero.
  template <class F>
  SparseMatrix map(F&& f) const {
    SparseMatrix out(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r) {
      Row row;
      for (const auto& e : data_[r]) {
        FieldElem v = f(e.value);
        if (!v.is_zero()) row.push_back({e.col, std::move(v)});
      }
      out.data_[r] = std::move(row);
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Reference product, one row at a time.
SparseMatrix multiply_serial(const SparseMatrix& a, const SparseMatrix& b);
/// Same product with rows distributed over OpenMP threads.
SparseMatrix multiply_parallel(const SparseMatrix& a, const SparseMatrix& b);

/// Number of worker threads honoring the VERMALAB_THREADS cap.
int thread_budget();

}  // namespace vermalab::exact
