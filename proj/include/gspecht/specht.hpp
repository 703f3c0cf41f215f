#pragma once

// Specht modules S(mu) = H z_mu inside H / K(mu), with the standard basis
// z_T = T_{w_T} z_mu and exact generator matrices in that basis.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gspecht/combinatorics.hpp"
#include "gspecht/errors.hpp"
#include "gspecht/hecke.hpp"
#include "gspecht/linalg.hpp"

namespace gspecht {

/// m_nu and every m_{S,T}, for all shapes of size d; computed once per algebra.
class CellularBasis {
 public:
  explicit CellularBasis(const HeckeAlgebra& h) : h_(&h) {
    shapes_ = multipartitions(h.level(), h.degree());
    for (auto& nu : shapes_) {
      auto m = m_element(h, nu);
      auto ts = standard_tableaux(nu);
      std::vector<Vector> elems;
      elems.reserve(ts.size() * ts.size());
      for (auto& s : ts)
        for (auto& t : ts) elems.push_back(m_element(h, s, t, m));
      m_.push_back(std::move(m));
      elements_.push_back(std::move(elems));
    }
  }

  const HeckeAlgebra& algebra() const { return *h_; }
  const std::vector<Multipartition>& shapes() const { return shapes_; }
  std::size_t shape_index(const Multipartition& mu) const {
    for (std::size_t k = 0; k < shapes_.size(); ++k)
      if (shapes_[k] == mu) return k;
    throw ParameterError("CellularBasis: " + mu.to_string() + " is not a multipartition of " +
                         std::to_string(h_->degree()) + " with " + std::to_string(h_->level()) + " components");
  }
  const Vector& m(const Multipartition& mu) const { return m_[shape_index(mu)]; }
  /// m_{S,T} for the shape, ordered by (S, T) in tableau order.
  const std::vector<Vector>& elements(const Multipartition& mu) const { return elements_[shape_index(mu)]; }

 private:
  const HeckeAlgebra* h_;
  std::vector<Multipartition> shapes_;
  std::vector<Vector> m_;
  std::vector<std::vector<Vector>> elements_;
};

/// Row space of all m_{S,T} with shape nu strictly dominating mu.  With
/// `check`, verifies it is a two-sided ideal and throws ConventionError if not.
inline Echelon<PrimeField> cell_ideal(const CellularBasis& cb, const Multipartition& mu, bool check = true) {
  const auto& h = cb.algebra();
  Echelon<PrimeField> k(h.field(), h.dim());
  for (auto& nu : cb.shapes())
    if (strictly_dominates(nu, mu))
      for (auto& v : cb.elements(nu)) k.insert(v);
  if (check) {
    std::vector<Gen> gens;
    for (int r = 1; r < h.degree(); ++r) gens.push_back(Gen::T(r));
    for (int s = 1; s <= h.degree(); ++s) gens.push_back(Gen::X(s));
    for (auto& row : k.rows())
      for (auto& g : gens)
        if (!k.contains(h.L(g).apply(row)) || !k.contains(h.R(g).apply(row)))
          throw ConventionError("cell_ideal: K(" + mu.to_string() + ") is not stable under " +
                                (g.kind == Gen::Kind::T ? "T" : "X") + std::to_string(g.index));
  }
  return k;
}

/// S(mu) in the z-basis: column j of each matrix is the image of z_{T_j}.
struct ModuleRealization {
  AlgebraParams params;
  Multipartition mu;
  std::vector<Tableau> tableaux;
  std::vector<Mat> X;  // X[s], 1 <= s <= d; X[0] unused
  std::vector<Mat> T;  // T[r], 1 <= r < d; T[0] unused

  PrimeField field() const { return params.field.prime(); }
  std::size_t dim() const { return tableaux.size(); }
  int degree() const { return mu.size(); }
  std::size_t index_of(const Tableau& t) const {
    for (std::size_t k = 0; k < tableaux.size(); ++k)
      if (tableaux[k] == t) return k;
    throw ParameterError("ModuleRealization: " + t.to_string() + " is not a standard tableau of the module");
  }
  /// Position of T^mu, i.e. z_mu.
  std::size_t initial_index() const { return index_of(initial_tableau(mu)); }

  const Mat& gen(Gen g) const {
    if (g.kind == Gen::Kind::T) {
      if (g.index < 1 || g.index >= degree()) throw ParameterError("ModuleRealization: T index out of range");
      return T[static_cast<std::size_t>(g.index)];
    }
    if (g.index < 1 || g.index > degree()) throw ParameterError("ModuleRealization: X index out of range");
    return X[static_cast<std::size_t>(g.index)];
  }
};

/// The construction data behind a module: K(mu), the z_T in H, and their span.
class SpechtConstruction {
 public:
  SpechtConstruction(const CellularBasis& cb, Multipartition mu, bool check_ideal = true)
      : h_(&cb.algebra()), K_(cell_ideal(cb, mu, check_ideal)), Z_(h_->field(), h_->dim()) {
    const auto& h = *h_;
    if (mu.size() != h.degree()) throw ParameterError("specht_module: |mu| does not match d");
    module_.params = h.params();
    module_.mu = mu;
    module_.tableaux = standard_tableaux(mu);
    z_mu_ = K_.reduce(cb.m(mu));
    for (auto& t : module_.tableaux) {
      z_.push_back(K_.reduce(h.left_T(z_mu_, w_of_tableau(t))));
      if (!Z_.insert(z_.back()))
        throw ConventionError("specht_module: z_T for T = " + t.to_string() + " is dependent on earlier z's in S(" +
                              mu.to_string() + ")");
    }
    const std::size_t n = module_.dim();
    const int d = h.degree();
    auto matrix_of = [&](Gen g) {
      Mat m(h.field(), n, n);
      for (std::size_t j = 0; j < n; ++j) {
        auto c = coordinates(h.L(g).apply(z_[j]));
        if (!c)
          throw ConventionError("specht_module: span of the z_T is not closed under " +
                                std::string(g.kind == Gen::Kind::T ? "T" : "X") + std::to_string(g.index));
        m.set_column(j, *c);
      }
      return m;
    };
    module_.X.assign(static_cast<std::size_t>(d + 1), Mat());
    module_.T.assign(static_cast<std::size_t>(std::max(d, 1)), Mat());
    for (int s = 1; s <= d; ++s) module_.X[static_cast<std::size_t>(s)] = matrix_of(Gen::X(s));
    for (int r = 1; r < d; ++r) module_.T[static_cast<std::size_t>(r)] = matrix_of(Gen::T(r));
    check_spin_closure();
  }

  const ModuleRealization& module() const { return module_; }
  const Echelon<PrimeField>& ideal() const { return K_; }
  const std::vector<Vector>& z() const { return z_; }
  const Vector& z_mu() const { return z_mu_; }

  /// Coordinates in the z-basis of the image of x in H / K(mu), if it lies in S(mu).
  std::optional<Vector> coordinates(const Vector& x) const { return Z_.coordinates(K_.reduce(x)); }

  /// For every mu-tableau S (all fillings), T_{w_S} z_mu has support only on
  /// standard T with T below S in the Bruhat order.
  CheckResult check_straightening() const {
    CheckResult res("straightening support");
    const auto& h = *h_;
    const auto& mu = module_.mu;
    for (auto& w : all_permutations(static_cast<std::size_t>(mu.size()))) {
      Tableau s(mu, w.one_line());
      auto c = coordinates(h.left_T(z_mu_, w));
      if (!c) {
        res.ok = false;
        res.detail = "T_w z_mu outside S(mu) for " + s.to_string();
        return res;
      }
      for (std::size_t k = 0; k < c->size(); ++k)
        if ((*c)[k] != 0 && !tableau_bruhat(module_.tableaux[k], s)) {
          res.ok = false;
          res.detail = s.to_string() + " has " + module_.tableaux[k].to_string() + " in its support";
          return res;
        }
    }
    return res;
  }

 private:
  // Breadth-first closure of z_mu under the generators, reduced mod K(mu),
  // must have dimension #T(mu).
  void check_spin_closure() {
    const auto& h = *h_;
    Echelon<PrimeField> span(h.field(), h.dim());
    std::vector<Vector> queue{z_mu_};
    span.insert(z_mu_);
    std::vector<Gen> gens;
    for (int r = 1; r < h.degree(); ++r) gens.push_back(Gen::T(r));
    for (int s = 1; s <= h.degree(); ++s) gens.push_back(Gen::X(s));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto& g : gens) {
        auto v = K_.reduce(h.L(g).apply(queue[head]));
        if (span.insert(v)) queue.push_back(std::move(v));
      }
    if (span.rank() != module_.dim())
      throw ConventionError("specht_module: H z_mu has dimension " + std::to_string(span.rank()) + ", expected #T(" +
                            module_.mu.to_string() + ") = " + std::to_string(module_.dim()));
  }

  const HeckeAlgebra* h_;
  Echelon<PrimeField> K_;
  Echelon<PrimeField> Z_;
  ModuleRealization module_;
  Vector z_mu_;
  std::vector<Vector> z_;
};

inline ModuleRealization specht_module(const CellularBasis& cb, const Multipartition& mu) {
  return SpechtConstruction(cb, mu).module();
}

/// X_r z_mu = xi^{i_r} z_mu, i = i^mu.
inline std::vector<CheckResult> check_initial_eigenvalues(const ModuleRealization& m) {
  std::vector<CheckResult> out;
  const auto f = m.field();
  const auto i = residue_sequence(initial_tableau(m.mu), m.params);
  const std::size_t z = m.initial_index();
  for (int r = 1; r <= m.degree(); ++r) {
    CheckResult res("X" + std::to_string(r) + " z_mu = xi^" + std::to_string(i[static_cast<std::size_t>(r - 1)]) + " z_mu");
    Scalar ev = f.pow(m.params.field.xi, i[static_cast<std::size_t>(r - 1)]);
    auto col = m.X[static_cast<std::size_t>(r)].column(z);
    for (std::size_t k = 0; k < col.size(); ++k) {
      Scalar want = k == z ? ev : 0;
      if (col[k] != want) {
        res.ok = false;
        res.detail = "coefficient of z_" + m.tableaux[k].to_string() + " is " + std::to_string(col[k]);
      }
    }
    out.push_back(res);
  }
  return out;
}

/// Evaluates a relation with module matrices (left action: g_1...g_k is the
/// matrix product in that order).
inline Mat evaluate_terms(const ModuleRealization& m, const std::vector<Term>& terms) {
  const auto f = m.field();
  Mat acc(f, m.dim(), m.dim());
  for (auto& t : terms) {
    Mat prod = Mat::identity(f, m.dim());
    for (auto& g : t.word) prod = prod * m.gen(g);
    acc = acc + prod.scaled(t.c);
  }
  return acc;
}

/// Every Hecke relation as a matrix identity on the module.
inline std::vector<CheckResult> check_module_relations(const ModuleRealization& m) {
  std::vector<CheckResult> out;
  const auto f = m.field();
  for (auto& rel : hecke_relations(f, m.params.field.xi, m.params.charge, m.degree())) {
    bool ok = evaluate_terms(m, rel.lhs) == evaluate_terms(m, rel.rhs);
    out.emplace_back(rel.name, ok, ok ? "" : "nonzero residual");
  }
  return out;
}

}  // namespace gspecht
