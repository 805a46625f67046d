#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vermalab/gtalg.hpp"
#include "vermalab/whittaker.hpp"

namespace vermalab {

/// Family 1 acts on the pattern at zero with coefficients (local)^sigma;
/// family 2 acts on the pattern at infinity with (bar local)^sigma, bar: h -> -h.
enum class GlobalFamily { Zero, Infinity };

/// All permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> permutations(int n);
/// sigma * tau as maps: (sigma tau)(j) = sigma(tau(j)).
std::vector<int> compose_perm(const std::vector<int>& sigma, const std::vector<int>& tau);
/// Generators with x_j replaced by x_{sigma(j)}, and hbar negated when `bar`.
Generators twisted(const Generators& g, const std::vector<int>& sigma, bool bar);
/// f with x_j -> x_{sigma(j)} in every monomial.
FieldElem permute_x(const FieldElem& f, const std::vector<int>& sigma);

class GlobalSeeds : public SeedProvider {
 public:
  GlobalSeeds(const Generators& g, GlobalFamily family);

  int rank() const override { return g_.n; }
  std::size_t dim(const Degree& d) const override { return basis(d).size(); }
  SparseMatrix cartan(int i, const Degree& d) const override;
  SparseMatrix raise(int i, const Degree& d) const override;
  SparseMatrix lower(int i, const Degree& d) const override;

  const std::vector<GlobalFixedPoint>& basis(const Degree& d) const;
  const Generators& generators() const { return g_; }
  GlobalFamily family() const { return family_; }
  /// Local seeds carrying the sigma (and bar) substitution.
  const VermaSeeds& local(const std::vector<int>& sigma) const;

 private:
  SparseMatrix step(int i, const Degree& d, int delta) const;

  Generators g_;
  GlobalFamily family_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::shared_ptr<const VermaSeeds>> locals_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::vector<GlobalFixedPoint>> bases_;
};

std::size_t global_index(const std::vector<GlobalFixedPoint>& basis, const GlobalFixedPoint& fp);

/// The two commuting actions and their sum.
struct GlobalModule {
  std::shared_ptr<const GlobalSeeds> zero;
  std::shared_ptr<const GlobalSeeds> infinity;
  OperatorEngine e1, e2, delta;

  explicit GlobalModule(const Generators& g);
  int n() const { return zero->rank(); }
  const std::vector<GlobalFixedPoint>& basis(const Degree& d) const { return zero->basis(d); }
};

/// Relations of each family and of the sum, cross-commutation of the two
/// families, and E^Delta_ij = E^(1)_ij + E^(2)_ij on every |d| <= dmax.
VerificationReport check_double_relations(int n, int dmax, const Generators& g);

/// sigma'(f [(sigma, p0, pinf)]) = f^{sigma'} [(sigma' sigma, p0, pinf)].  Needs symbolic x.
std::vector<FieldElem> sn_action(const std::vector<int>& sigma, const std::vector<FieldElem>& vec,
                                 const std::vector<GlobalFixedPoint>& basis);

/// Orbit sums sum_sigma [(sigma, p0, pinf)], one per split (p0, pinf).
std::vector<std::vector<FieldElem>> symmetrize(int n, const Degree& d);

/// Identity and composition laws of the S_n action, and preservation of the
/// invariant vectors by e_i, f_i of all three families, for |d| <= dmax.
VerificationReport check_sn_action(int n, int dmax, const Generators& g);

/// b_d with component (v_{d0}[p0] * bar v_{dinf}[pinf])^sigma at (sigma, p0, pinf).
std::vector<FieldElem> global_whittaker(const GlobalModule& m, const Degree& d);
/// f^(1)_i b_d = b_{d-e_i}/h, f^(2)_i b_d = -b_{d-e_i}/h, f^Delta_i b_d = 0 and
/// S_n invariance (symbolic x only).
VerificationReport check_global_whittaker(int n, const Degree& d, const Generators& g);

/// Both deviation sets are sigma-substituted:
/// e^0 = e_j(-x_k + d0_ik h), e^inf = e_j(-x_k + dinf_ik h).
FieldElem eig_global_chern(const GlobalFixedPoint& fp, int i, int j, ChernPart part, const Generators& g);
/// -(x_1 + ... + x_i)^sigma + d_i h with d the total degree.
FieldElem eig_global_c1(const GlobalFixedPoint& fp, int i, const Generators& g);

struct CartanFromChern {
  FieldElem value;     // c1(W_{i-1}) - c1(W_i) - (d_i - d_{i-1}) h
  FieldElem expected;  // x_{sigma(i)}
  bool consistent = false;
};
CartanFromChern cartan_from_chern(const GlobalFixedPoint& fp, int i, const Generators& g);

/// Diagonal Chern part at j = 1 against the first Chern class formula, the
/// Cartan recovery rule, and separation of global fixed points by the joint
/// Chern spectrum.
VerificationReport check_global_chern(int n, const Degree& d, const Generators& g);

}  // namespace vermalab
