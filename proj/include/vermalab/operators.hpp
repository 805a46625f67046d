#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vermalab/exactalg/sparse_matrix.hpp"
#include "vermalab/patterns.hpp"

namespace vermalab {

using exact::SparseMatrix;

/// Seed generators of a graded gl(n)-module: the Cartan elements E_ii,
/// e_i = E_{i+1,i} (degree +e_i) and f_i = E_{i,i+1} (degree -e_i).
class SeedProvider {
 public:
  virtual ~SeedProvider() = default;
  virtual int rank() const = 0;
  /// Only called for nonnegative degrees.
  virtual std::size_t dim(const Degree& d) const = 0;
  virtual SparseMatrix cartan(int i, const Degree& d) const = 0;
  virtual SparseMatrix raise(int i, const Degree& d) const = 0;
  virtual SparseMatrix lower(int i, const Degree& d) const = 0;
};

/// Adds the seeds of two providers over the same weight spaces.
class SumSeeds : public SeedProvider {
 public:
  SumSeeds(std::shared_ptr<const SeedProvider> a, std::shared_ptr<const SeedProvider> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  int rank() const override { return a_->rank(); }
  std::size_t dim(const Degree& d) const override { return a_->dim(d); }
  SparseMatrix cartan(int i, const Degree& d) const override { return a_->cartan(i, d) + b_->cartan(i, d); }
  SparseMatrix raise(int i, const Degree& d) const override { return a_->raise(i, d) + b_->raise(i, d); }
  SparseMatrix lower(int i, const Degree& d) const override { return a_->lower(i, d) + b_->lower(i, d); }

 private:
  std::shared_ptr<const SeedProvider> a_, b_;
};

/// Degree change of E_ij: -(e_i + ... + e_{j-1}) for i < j, the opposite for i > j.
Degree shift_of(int n, int i, int j);
Degree operator+(const Degree& a, const Degree& b);

using Letter = std::pair<int, int>;

/// Lazily computes blocks of every E_ij, deriving non-simple root vectors by
/// E_ij = [E_{i,j-1}, E_{j-1,j}] and E_ji = [E_{j,j-1}, E_{j-1,i}] (j > i+1).
/// Results are memoized; safe for concurrent use.
class OperatorEngine {
 public:
  explicit OperatorEngine(std::shared_ptr<const SeedProvider> seeds) : seeds_(std::move(seeds)) {}

  int rank() const { return seeds_->rank(); }
  /// Zero for degrees with a negative component.
  std::size_t dim(const Degree& d) const;
  SparseMatrix E(int i, int j, const Degree& src) const;
  /// Composite block; the last letter acts first.
  SparseMatrix word(const std::vector<Letter>& letters, const Degree& src) const;
  SparseMatrix commutator(Letter a, Letter b, const Degree& src) const;

 private:
  SparseMatrix compute(int i, int j, const Degree& src) const;

  std::shared_ptr<const SeedProvider> seeds_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, int, Degree>, SparseMatrix> cache_;
};

struct UnmaterializedBlock : std::out_of_range {
  explicit UnmaterializedBlock(const Degree& d)
      : std::out_of_range("block at degree " + to_string(d) + " is outside the materialized window") {}
};

/// Degree-indexed family of blocks V_d -> V_{d+shift} over a finite window.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(int n, Degree shift) : n_(n), shift_(std::move(shift)) {}
  /// `dim` sizes the empty blocks at degrees with a negative component.
  GradedOperator(int n, Degree shift, std::function<std::size_t(const Degree&)> dim)
      : n_(n), shift_(std::move(shift)), dim_(std::move(dim)) {}

  int n() const { return n_; }
  const Degree& shift() const { return shift_; }
  bool has_block(const Degree& src) const { return blocks_.count(src) != 0; }
  /// Degrees with a negative component give an empty block; other degrees
  /// outside the window throw UnmaterializedBlock.
  SparseMatrix block(const Degree& src) const;
  void set_block(const Degree& src, SparseMatrix m) { blocks_[src] = std::move(m); }
  std::vector<Degree> window() const;

  friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
  friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
  GradedOperator scaled(const exact::FieldElem& c) const;
  /// (a after b) on every degree of b's window; a must hold the needed blocks.
  friend GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
  /// [a, b] on the given source degrees.
  friend GradedOperator commutator(const GradedOperator& a, const GradedOperator& b, const std::vector<Degree>& on);

  /// {"shift": [...], "blocks": [{"degree", "rows", "cols", "entries": [[r, c, "value"], ...]}]}
  nlohmann::json to_json() const;

 private:
  int n_ = 0;
  Degree shift_;
  std::function<std::size_t(const Degree&)> dim_;
  std::map<Degree, SparseMatrix> blocks_;
};

/// Reference assembly, one degree after another.
GradedOperator materialize_serial(const OperatorEngine& eng, int i, int j, const std::vector<Degree>& window);
/// Same blocks with degrees distributed over OpenMP threads.
GradedOperator materialize_parallel(const OperatorEngine& eng, int i, int j, const std::vector<Degree>& window);
GradedOperator materialize(const OperatorEngine& eng, int i, int j, const std::vector<Degree>& window);

/// First nonzero entry of m as "(r,c): value", or empty when m is zero.
std::string first_nonzero(const SparseMatrix& m);

}  // namespace vermalab
