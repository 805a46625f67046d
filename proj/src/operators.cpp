#include "vermalab/operators.hpp"

#include <exception>

namespace vermalab {

Degree shift_of(int n, int i, int j) {
  Degree s(static_cast<std::size_t>(n - 1), 0);
  if (i == j) return s;
  int lo = std::min(i, j), hi = std::max(i, j);
  int sign = i < j ? -1 : 1;
  for (int k = lo; k < hi; ++k) s[static_cast<std::size_t>(k - 1)] = sign;
  return s;
}

Degree operator+(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b.at(k);
  return r;
}

std::size_t OperatorEngine::dim(const Degree& d) const { return is_nonnegative(d) ? seeds_->dim(d) : 0; }

SparseMatrix OperatorEngine::E(int i, int j, const Degree& src) const {
  const int n = rank();
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("E_ij index out of range");
  auto key = std::make_tuple(i, j, src);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  SparseMatrix m = compute(i, j, src);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(m)).first->second;
}

SparseMatrix OperatorEngine::compute(int i, int j, const Degree& src) const {
  const int n = rank();
  Degree dst = src + shift_of(n, i, j);
  std::size_t rows = dim(dst), cols = dim(src);
  if (rows == 0 || cols == 0) return SparseMatrix(rows, cols);
  if (i == j) return seeds_->cartan(i, src);
  if (i == j + 1) return seeds_->raise(j, src);
  if (j == i + 1) return seeds_->lower(i, src);
  if (i < j) return commutator({i, j - 1}, {j - 1, j}, src);
  return commutator({i, i - 1}, {i - 1, j}, src);
}

SparseMatrix OperatorEngine::word(const std::vector<Letter>& letters, const Degree& src) const {
  Degree cur = src;
  SparseMatrix acc = SparseMatrix::identity(dim(src));
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    acc = E(it->first, it->second, cur) * acc;
    cur = cur + shift_of(rank(), it->first, it->second);
  }
  return acc;
}

SparseMatrix OperatorEngine::commutator(Letter a, Letter b, const Degree& src) const {
  return word({a, b}, src) - word({b, a}, src);
}

SparseMatrix GradedOperator::block(const Degree& src) const {
  auto it = blocks_.find(src);
  if (it != blocks_.end()) return it->second;
  if (!is_nonnegative(src) && dim_) {
    Degree dst = src + shift_;
    return SparseMatrix(is_nonnegative(dst) ? dim_(dst) : 0, 0);
  }
  throw UnmaterializedBlock(src);
}

std::vector<Degree> GradedOperator::window() const {
  std::vector<Degree> out;
  for (const auto& [d, m] : blocks_) out.push_back(d);
  return out;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
  if (a.shift_ != b.shift_) throw std::invalid_argument("adding graded operators with different shifts");
  GradedOperator r(a.n_, a.shift_, a.dim_);
  for (const auto& [d, m] : a.blocks_) r.blocks_[d] = m + b.block(d);
  return r;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return a + b.scaled(exact::FieldElem(-1L)); }

GradedOperator GradedOperator::scaled(const exact::FieldElem& c) const {
  GradedOperator r(n_, shift_, dim_);
  for (const auto& [d, m] : blocks_) r.blocks_[d] = m.scaled(c);
  return r;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator r(a.n_, a.shift_ + b.shift_, a.dim_);
  for (const auto& [d, m] : b.blocks_) r.blocks_[d] = a.block(d + b.shift_) * m;
  return r;
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b, const std::vector<Degree>& on) {
  GradedOperator r(a.n_, a.shift_ + b.shift_, a.dim_);
  for (const auto& d : on) r.blocks_[d] = a.block(d + b.shift_) * b.block(d) - b.block(d + a.shift_) * a.block(d);
  return r;
}

nlohmann::json GradedOperator::to_json() const {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [d, m] : blocks_) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r)) entries.push_back({r, e.col, e.value.to_string()});
    blocks.push_back({{"degree", d}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
  }
  return {{"shift", shift_}, {"blocks", blocks}};
}

GradedOperator materialize_serial(const OperatorEngine& eng, int i, int j, const std::vector<Degree>& window) {
  GradedOperator out(eng.rank(), shift_of(eng.rank(), i, j), [&eng](const Degree& d) { return eng.dim(d); });
  for (const auto& d : window) out.set_block(d, eng.E(i, j, d));
  return out;
}

GradedOperator materialize_parallel(const OperatorEngine& eng, int i, int j, const std::vector<Degree>& window) {
  std::vector<SparseMatrix> blocks(window.size());
  std::exception_ptr error;
  const auto count = static_cast<long>(window.size());
#pragma omp parallel for schedule(dynamic) num_threads(exact::thread_budget())
  for (long k = 0; k < count; ++k) {
    try {
      blocks[static_cast<std::size_t>(k)] = eng.E(i, j, window[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  GradedOperator out(eng.rank(), shift_of(eng.rank(), i, j), [&eng](const Degree& d) { return eng.dim(d); });
  for (std::size_t k = 0; k < window.size(); ++k) out.set_block(window[k], std::move(blocks[k]));
  return out;
}

GradedOperator materialize(const OperatorEngine& eng, int i, int j, const std::vector<Degree>& window) {
  if (exact::thread_budget() > 1 && window.size() > 1) return materialize_parallel(eng, i, j, window);
  return materialize_serial(eng, i, j, window);
}

std::string first_nonzero(const SparseMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) {
      const auto& e = m.row(r).front();
      return "(" + std::to_string(r) + "," + std::to_string(e.col) + "): " + e.value.to_string();
    }
  return {};
}

}  // namespace vermalab
