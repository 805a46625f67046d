#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "vermalab/operators.hpp"
#include "vermalab/report.hpp"

namespace vermalab {

/// Fixed-point basis of the universal Verma module with the explicit e_i, f_i
/// matrix coefficients and diagonal Cartan elements.
class VermaSeeds : public SeedProvider {
 public:
  explicit VermaSeeds(Generators g) : g_(std::move(g)) {}

  int rank() const override { return g_.n; }
  std::size_t dim(const Degree& d) const override { return basis(d).size(); }
  SparseMatrix cartan(int i, const Degree& d) const override;
  SparseMatrix raise(int i, const Degree& d) const override;
  SparseMatrix lower(int i, const Degree& d) const override;

  const Generators& generators() const { return g_; }
  /// Canonical basis of V_d (cached).
  const std::vector<Pattern>& basis(const Degree& d) const;

  /// Scalar of E_ii on V_d.
  FieldElem cartan_scalar(int i, const Degree& d) const;
  /// Coefficient of e_i from p to p with d_{ij} raised by one.
  FieldElem raise_coefficient(const Pattern& p, int i, int j) const;
  /// Coefficient of f_i from p to p with d_{ij} lowered by one.
  FieldElem lower_coefficient(const Pattern& p, int i, int j) const;

 private:
  Generators g_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::vector<Pattern>> bases_;
};

/// The local module: seeds plus the derived root vectors.
struct VermaModule {
  std::shared_ptr<const VermaSeeds> seeds;
  OperatorEngine engine;

  explicit VermaModule(const Generators& g);
  int n() const { return seeds->rank(); }
  const Generators& generators() const { return seeds->generators(); }
};

GradedOperator op_cartan(const VermaModule& v, int i, const std::vector<Degree>& window);
GradedOperator op_e(const VermaModule& v, int i, const std::vector<Degree>& window);
GradedOperator op_f(const VermaModule& v, int i, const std::vector<Degree>& window);
GradedOperator op_Eij(const VermaModule& v, int i, int j, const std::vector<Degree>& window);

/// (-hbar)^{-|d|}: the scalar relating fixed-point classes and GT vectors in
/// degree d.  Documented constant, never applied implicitly.
FieldElem fixed_point_to_gt_scalar(const Degree& d, const Generators& g);

/// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb for every pair of generators on
/// every V_d with |d| <= dmax.  One item per unordered pair.
VerificationReport check_gl_relations(const OperatorEngine& eng, int dmax, const std::string& family = "");
VerificationReport check_gl_relations(int n, int dmax, const Generators& g);

}  // namespace vermalab
