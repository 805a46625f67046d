#include "vermalab/gtalg.hpp"

#include <functional>
#include <stdexcept>

namespace vermalab {

namespace {

FieldElem elementary(const std::vector<FieldElem>& vals, int j) {
  std::vector<FieldElem> e(static_cast<std::size_t>(j + 1));
  e[0] = FieldElem(1L);
  for (const auto& v : vals)
    for (int k = j; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * v;
  return e[static_cast<std::size_t>(j)];
}

FieldElem L(long c) { return FieldElem(c); }

std::string nlabel(int n) { return "n=" + std::to_string(n) + " "; }

}  // namespace

SparseMatrix casimir_block(const OperatorEngine& eng, int k, const Degree& d) {
  std::size_t m = eng.dim(d);
  SparseMatrix acc(m, m);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) acc = acc + eng.word({{i, j}, {j, i}}, d);
  return acc;
}

SparseMatrix tilde_casimir_block(const VermaModule& v, int k, const Degree& d) {
  const Generators& g = v.generators();
  SparseMatrix acc = casimir_block(v.engine, k, d);
  std::size_t m = acc.rows();
  FieldElem scalar = L(static_cast<long>(k) * (k - 1) * (k - 2) / 3);
  for (int j = 1; j <= k; ++j) {
    acc = acc + v.engine.E(j, j, d).scaled(L(2 - k));
    FieldElem xh = g.x(j) / g.hbar();
    scalar -= xh * (xh - L(1));
  }
  return acc + SparseMatrix::diagonal(std::vector<FieldElem>(m, scalar));
}

GradedOperator op_casimir(const VermaModule& v, int k, const std::vector<Degree>& window) {
  GradedOperator out(v.n(), Degree(static_cast<std::size_t>(v.n() - 1), 0));
  for (const auto& d : window) out.set_block(d, casimir_block(v.engine, k, d));
  return out;
}

GradedOperator op_tilde_casimir(const VermaModule& v, int k, const std::vector<Degree>& window) {
  GradedOperator out(v.n(), Degree(static_cast<std::size_t>(v.n() - 1), 0));
  for (const auto& d : window) out.set_block(d, tilde_casimir_block(v, k, d));
  return out;
}

FieldElem eig_casimir(const Pattern& p, int k, const Generators& g) {
  GTPattern gt = gt_pattern(p, g);
  FieldElem acc;
  for (int j = 1; j <= k; ++j) {
    const FieldElem& l = gt.at(k, j);
    acc += l * (l + L(k - 2 * j + 1));
  }
  return acc;
}

FieldElem eig_tilde_casimir(const Pattern& p, int k, const Generators& g) {
  FieldElem acc;
  for (int j = 1; j <= k; ++j) {
    long dkj = k < p.n() ? p.at(k, j) : 0;
    acc += L(2 * (1 - dkj)) * g.x(j) / g.hbar() + L(dkj * (dkj - 1));
  }
  return acc;
}

FieldElem eig_det_bundle(const Pattern& p, int k, const Generators& g) {
  FieldElem acc;
  for (int j = 1; j <= k; ++j) {
    long dkj = p.at(k, j);
    acc += L(1 - dkj) * g.x(j) + FieldElem(mpq_class(dkj * (dkj - 1), 2)) * g.hbar();
  }
  return acc;
}

FieldElem chern_at_infinity(int i, int j, const Generators& g) {
  std::vector<FieldElem> vals;
  for (int k = 1; k <= i; ++k) vals.push_back(-g.x(k));
  return elementary(vals, j);
}

FieldElem chern_at_zero(const Pattern& p, int i, int j, const Generators& g) {
  std::vector<FieldElem> vals;
  for (int k = 1; k <= i; ++k) vals.push_back(-g.x(k) + L(p.at(i, k)) * g.hbar());
  return elementary(vals, j);
}

FieldElem eig_chern(const Pattern& p, int i, int j, ChernPart part, const Generators& g) {
  FieldElem inf = chern_at_infinity(i, j, g), zero = chern_at_zero(p, i, j, g);
  if (part == ChernPart::Diag) return (inf + zero) * FieldElem(mpq_class(1, 2));
  return (inf - zero) / (L(2) * g.hbar());
}

std::string to_string(GeneratorSet s) {
  switch (s) {
    case GeneratorSet::TildeCasimir: return "tilde-casimir";
    case GeneratorSet::Casimir: return "casimir";
    case GeneratorSet::DetBundles: return "det-bundles";
    case GeneratorSet::DetBundlesBasis: return "det-bundles-basis";
    case GeneratorSet::Chern: return "chern";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> JointSpectrum::collisions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = a + 1; b < table.size(); ++b) {
      bool same = true;
      for (std::size_t k = 0; k < labels.size() && same; ++k) same = (table[a][k] - table[b][k]).is_zero();
      if (same) out.emplace_back(a, b);
    }
  return out;
}

nlohmann::json JointSpectrum::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : table[a]) vals.push_back(v.to_string());
    rows.push_back({{"pattern", basis[a].to_string()}, {"values", vals}});
  }
  return {{"degree", degree}, {"generators", labels}, {"rows", rows}};
}

std::string JointSpectrum::to_csv() const {
  std::string out = "pattern";
  for (const auto& l : labels) out += "," + l;
  out += "\n";
  for (std::size_t a = 0; a < basis.size(); ++a) {
    out += "\"" + basis[a].to_string() + "\"";
    for (const auto& v : table[a]) out += ",\"" + v.to_string() + "\"";
    out += "\n";
  }
  return out;
}

JointSpectrum joint_spectrum(int n, const Degree& d, GeneratorSet set, const Generators& g, const std::vector<int>& ks) {
  JointSpectrum js;
  js.degree = d;
  js.basis = enumerate_patterns(n, d);
  std::vector<std::function<FieldElem(const Pattern&)>> fns;
  auto range = [&ks](int lo, int hi) {
    if (!ks.empty()) return ks;
    std::vector<int> r;
    for (int k = lo; k <= hi; ++k) r.push_back(k);
    return r;
  };
  switch (set) {
    case GeneratorSet::TildeCasimir:
      for (int k : range(2, n - 1)) {
        js.labels.push_back("tildeCas_" + std::to_string(k));
        fns.emplace_back([k, &g](const Pattern& p) { return eig_tilde_casimir(p, k, g); });
      }
      break;
    case GeneratorSet::Casimir:
      for (int k : range(1, n)) {
        js.labels.push_back("Cas_" + std::to_string(k));
        fns.emplace_back([k, &g](const Pattern& p) { return eig_casimir(p, k, g); });
      }
      break;
    case GeneratorSet::DetBundles:
    case GeneratorSet::DetBundlesBasis:
      for (int k : range(1, n - 1)) {
        if (set == GeneratorSet::DetBundlesBasis &&
            (k < 2 || d[static_cast<std::size_t>(k - 1)] == 0 || d[static_cast<std::size_t>(k - 2)] == 0))
          continue;
        js.labels.push_back("c1(D_" + std::to_string(k) + ")");
        fns.emplace_back([k, &g](const Pattern& p) { return eig_det_bundle(p, k, g); });
      }
      break;
    case GeneratorSet::Chern:
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= i; ++j) {
          std::string tag = std::to_string(j) + "," + std::to_string(i);
          js.labels.push_back("chern_diag(" + tag + ")");
          fns.emplace_back([i, j, &g](const Pattern& p) { return eig_chern(p, i, j, ChernPart::Diag, g); });
          js.labels.push_back("chern_kunneth(" + tag + ")");
          fns.emplace_back([i, j, &g](const Pattern& p) { return eig_chern(p, i, j, ChernPart::Kunneth, g); });
        }
      break;
  }
  for (const auto& p : js.basis) {
    std::vector<FieldElem> row;
    for (const auto& f : fns) row.push_back(f(p));
    js.table.push_back(std::move(row));
  }
  return js;
}

VerificationReport check_spectrum_separation(int n, const Degree& d, GeneratorSet set, const Generators& g,
                                             const std::vector<int>& ks) {
  VerificationReport rep;
  rep.suite = "spectrum-separation";
  JointSpectrum js = joint_spectrum(n, d, set, g, ks);
  std::string label = nlabel(n) + "d=" + to_string(d) + " " + to_string(set) + " separates";
  const std::string anchor = "distinct joint eigenvalues on distinct basis vectors";
  if (js.basis.size() <= 1) {
    rep.add({label, anchor, Status::Vacuous, std::nullopt, {{"dim", js.basis.size()}}});
    return rep;
  }
  if (js.labels.empty()) {
    rep.check(label, anchor, false, "empty generator set on a space of dimension " + std::to_string(js.basis.size()));
    return rep;
  }
  auto col = js.collisions();
  std::string witness;
  if (!col.empty()) witness = js.basis[col[0].first].to_string() + " ~ " + js.basis[col[0].second].to_string();
  rep.check(label, anchor, col.empty(), witness);
  return rep;
}

VerificationReport check_casimirs(int n, int dmax, const Generators& g) {
  VerificationReport rep;
  rep.suite = "casimirs";
  VermaModule v(g);
  const auto degrees = degrees_up_to(n, dmax);
  auto first_failure = [&](auto&& test) {
    for (const auto& d : degrees) {
      std::string w = test(d);
      if (!w.empty()) return "degree " + to_string(d) + " " + w;
    }
    return std::string();
  };
  for (int k = 1; k <= n; ++k) {
    std::string ks = std::to_string(k);
    std::vector<SparseMatrix> cas, tcas;
    for (const auto& d : degrees) {
      cas.push_back(casimir_block(v.engine, k, d));
      tcas.push_back(tilde_casimir_block(v, k, d));
    }
    auto diag_check = [&](const std::vector<SparseMatrix>& blocks) {
      for (std::size_t a = 0; a < degrees.size(); ++a) {
        SparseMatrix off = blocks[a] - SparseMatrix::diagonal(blocks[a].diagonal_entries());
        if (!off.is_zero()) return "degree " + to_string(degrees[a]) + " entry " + first_nonzero(off);
      }
      return std::string();
    };
    auto eig_check = [&](const std::vector<SparseMatrix>& blocks, auto&& closed) {
      for (std::size_t a = 0; a < degrees.size(); ++a) {
        const auto& basis = v.seeds->basis(degrees[a]);
        for (std::size_t r = 0; r < basis.size(); ++r) {
          FieldElem diff = blocks[a].get(r, r) - closed(basis[r]);
          if (!diff.is_zero()) return "pattern " + basis[r].to_string() + " difference " + diff.to_string();
        }
      }
      return std::string();
    };
    std::string w = diag_check(cas);
    rep.check(nlabel(n) + "Cas_" + ks + " diagonal", "Casimir diagonal in the fixed-point basis", w.empty(), w);
    w = eig_check(cas, [&](const Pattern& p) { return eig_casimir(p, k, g); });
    rep.check(nlabel(n) + "Cas_" + ks + " eigenvalue", "Casimir eigenvalue sum_j lambda_kj(lambda_kj+k-2j+1)", w.empty(), w);
    w = diag_check(tcas);
    rep.check(nlabel(n) + "tildeCas_" + ks + " diagonal", "corrected Casimir diagonal in the fixed-point basis", w.empty(), w);
    w = eig_check(tcas, [&](const Pattern& p) { return eig_tilde_casimir(p, k, g); });
    rep.check(nlabel(n) + "tildeCas_" + ks + " eigenvalue", "corrected Casimir eigenvalue closed form", w.empty(), w);
  }
  for (int k = 1; k <= n - 1; ++k) {
    std::string w = first_failure([&](const Degree& d) {
      for (const auto& p : v.seeds->basis(d)) {
        FieldElem diff = eig_det_bundle(p, k, g) - g.hbar() * eig_tilde_casimir(p, k, g) * FieldElem(mpq_class(1, 2));
        if (!diff.is_zero()) return "pattern " + p.to_string() + " difference " + diff.to_string();
      }
      return std::string();
    });
    rep.check(nlabel(n) + "c1(D_" + std::to_string(k) + ") = (h/2) tildeCas_" + std::to_string(k),
              "determinant bundle class equals half h times the corrected Casimir", w.empty(), w);
  }
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      std::string w = first_failure([&](const Degree& d) {
        SparseMatrix a = casimir_block(v.engine, k, d), b = casimir_block(v.engine, l, d);
        SparseMatrix c = a * b - b * a;
        return c.is_zero() ? std::string() : "entry " + first_nonzero(c);
      });
      rep.check(nlabel(n) + "[Cas_" + std::to_string(k) + ",Cas_" + std::to_string(l) + "] = 0", "Casimirs commute",
                w.empty(), w);
    }
  Generators sym = Generators::symbolic(n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      std::string w = first_failure([&](const Degree& d) {
        for (const auto& p : v.seeds->basis(d)) {
          FieldElem q = (chern_at_infinity(i, j, sym) - chern_at_zero(p, i, j, sym)) / sym.hbar();
          if (!q.den().is_one()) return "pattern " + p.to_string() + " quotient " + q.to_string();
        }
        return std::string();
      });
      rep.check(nlabel(n) + "h | e_inf - e_0 (" + std::to_string(j) + "," + std::to_string(i) + ")",
                "Chern difference divisible by h", w.empty(), w);
    }
  return rep;
}

}  // namespace vermalab
