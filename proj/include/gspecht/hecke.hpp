#pragma once

// The cyclotomic Hecke algebra H_d over F_p in the basis T_w X_1^{a_1}...X_d^{a_d},
// 0 <= a_r < l.  Right multiplication by generators is computed directly in
// normal form; everything else (left multiplication, products, the cellular
// elements) is assembled from those operators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gspecht/combinatorics.hpp"
#include "gspecht/errors.hpp"
#include "gspecht/linalg.hpp"
#include "gspecht/scalars.hpp"

namespace gspecht {

using Scalar = PrimeField::value_type;
using Vector = Vec<PrimeField>;
using Mat = Matrix<PrimeField>;

/// T_w X^a
struct Monomial {
  Permutation w;
  std::vector<int> a;
};

/// A linear operator stored column by column, each column sparse.
class SparseOperator {
 public:
  using Column = std::vector<std::pair<std::uint32_t, Scalar>>;

  SparseOperator() = default;
  SparseOperator(PrimeField f, std::size_t n) : field_(f), cols_(n) {}

  std::size_t dim() const { return cols_.size(); }
  const Column& column(std::size_t j) const { return cols_[j]; }

  void set_column(std::size_t j, const Vector& v) {
    cols_[j].clear();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) cols_[j].emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }

  Vector apply(const Vector& v) const {
    Vector out(dim(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (auto [i, c] : cols_[j]) out[i] = field_.add(out[i], field_.mul(c, v[j]));
    }
    return out;
  }

  Mat dense() const {
    Mat m(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (auto [i, c] : cols_[j]) m(i, j) = c;
    return m;
  }

 private:
  PrimeField field_;
  std::vector<Column> cols_;
};

/// A generator T_r or X_s.
struct Gen {
  enum class Kind { T, X } kind;
  int index;
  static Gen T(int r) { return {Kind::T, r}; }
  static Gen X(int s) { return {Kind::X, s}; }
};

/// c * g_1 g_2 ... g_k  (an empty word is the identity)
struct Term {
  Scalar c;
  std::vector<Gen> word;
};

/// A relation  sum(lhs) = sum(rhs)  between words in the generators.
struct Relation {
  std::string name;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
};

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
  std::size_t instances = 0;  // how many cases were examined, when counted

  CheckResult() = default;
  explicit CheckResult(std::string n, bool pass = true, std::string why = {})
      : name(std::move(n)), ok(pass), detail(std::move(why)) {}
};

/// The defining relations, the two derived exchange identities and the
/// cyclotomic relation, as words.
inline std::vector<Relation> hecke_relations(const PrimeField& f, Scalar xi, const std::vector<int>& charge, int d) {
  std::vector<Relation> out;
  Scalar one = 1, xim1 = f.sub(xi, 1);
  for (int r = 1; r <= d; ++r)
    for (int s = r + 1; s <= d; ++s)
      out.push_back({"X" + std::to_string(r) + "X" + std::to_string(s) + "=X" + std::to_string(s) + "X" + std::to_string(r),
                     {{one, {Gen::X(r), Gen::X(s)}}}, {{one, {Gen::X(s), Gen::X(r)}}}});
  for (int r = 1; r < d; ++r) {
    std::string rs = std::to_string(r), r1 = std::to_string(r + 1);
    out.push_back({"T" + rs + "X" + rs + "T" + rs + "=xi*X" + r1, {{one, {Gen::T(r), Gen::X(r), Gen::T(r)}}}, {{xi, {Gen::X(r + 1)}}}});
    for (int s = 1; s <= d; ++s)
      if (s != r && s != r + 1)
        out.push_back({"T" + rs + "X" + std::to_string(s) + "=X" + std::to_string(s) + "T" + rs,
                       {{one, {Gen::T(r), Gen::X(s)}}}, {{one, {Gen::X(s), Gen::T(r)}}}});
    out.push_back({"T" + rs + "^2=(xi-1)T" + rs + "+xi", {{one, {Gen::T(r), Gen::T(r)}}}, {{xim1, {Gen::T(r)}}, {xi, {}}}});
    if (r + 1 < d)
      out.push_back({"braid T" + rs + "T" + r1, {{one, {Gen::T(r), Gen::T(r + 1), Gen::T(r)}}},
                     {{one, {Gen::T(r + 1), Gen::T(r), Gen::T(r + 1)}}}});
    for (int s = r + 2; s < d; ++s)
      out.push_back({"T" + rs + "T" + std::to_string(s) + "=T" + std::to_string(s) + "T" + rs,
                     {{one, {Gen::T(r), Gen::T(s)}}}, {{one, {Gen::T(s), Gen::T(r)}}}});
    out.push_back({"X" + r1 + "T" + rs + "=T" + rs + "X" + rs + "+(xi-1)X" + r1, {{one, {Gen::X(r + 1), Gen::T(r)}}},
                   {{one, {Gen::T(r), Gen::X(r)}}, {xim1, {Gen::X(r + 1)}}}});
    out.push_back({"X" + rs + "T" + rs + "=T" + rs + "X" + r1 + "-(xi-1)X" + r1, {{one, {Gen::X(r), Gen::T(r)}}},
                   {{one, {Gen::T(r), Gen::X(r + 1)}}, {f.neg(xim1), {Gen::X(r + 1)}}}});
  }
  if (d >= 1) {
    Poly<PrimeField> p{1};
    for (int k : charge) p = poly_mul(f, p, Poly<PrimeField>{f.neg(f.pow(xi, k)), 1});
    Relation cyc{"cyclotomic", {}, {}};
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) cyc.lhs.push_back({p[j], std::vector<Gen>(j, Gen::X(1))});
    out.push_back(cyc);
  }
  return out;
}

class HeckeAlgebra {
 public:
  /// Dimension bound on l^d d! unless overridden.
  static constexpr std::size_t default_max_dim = 4000;

  HeckeAlgebra(AlgebraParams params, int d, std::size_t max_dim = default_max_dim)
      : params_(std::move(params)), d_(d), l_(params_.level()) {
    if (params_.field.mode != FieldSpec::Mode::prime)
      throw ParameterError("HeckeAlgebra: the algebra engine needs a prime field with e >= 2");
    if (d < 0) throw ParameterError("HeckeAlgebra: negative d");
    field_ = params_.field.prime();
    xi_ = params_.field.xi;
    std::size_t dim = 1;
    for (int k = 1; k <= d; ++k) {
      dim *= static_cast<std::size_t>(k) * static_cast<std::size_t>(l_);
      if (dim > max_dim)
        throw ResourceError("HeckeAlgebra: dimension l^d d! exceeds the bound " + std::to_string(max_dim) +
                            " (l=" + std::to_string(l_) + ", d=" + std::to_string(d) + ")");
    }
    build_basis();
    build_right_operators();
    build_left_operators();
  }

  const AlgebraParams& params() const { return params_; }
  const PrimeField& field() const { return field_; }
  Scalar xi() const { return xi_; }
  int degree() const { return d_; }
  int level() const { return l_; }
  std::size_t dim() const { return basis_.size(); }
  const Monomial& basis(std::size_t k) const { return basis_[k]; }

  std::size_t index_of(const Permutation& w, const std::vector<int>& a) const {
    return lookup_[w.rank() * exp_count_ + exp_code(a)];
  }

  Vector zero() const { return Vector(dim(), 0); }
  Vector basis_vector(std::size_t k) const {
    Vector v = zero();
    v[k] = 1;
    return v;
  }
  Vector unit() const { return basis_vector(index_of(Permutation(static_cast<std::size_t>(d_)), zero_exp())); }
  Vector T_element(const Permutation& w) const { return basis_vector(index_of(w, zero_exp())); }

  const SparseOperator& R(Gen g) const { return g.kind == Gen::Kind::T ? rT_.at(check_T(g.index)) : rX_.at(check_X(g.index)); }
  const SparseOperator& L(Gen g) const { return g.kind == Gen::Kind::T ? lT_.at(check_T(g.index)) : lX_.at(check_X(g.index)); }

  /// Element of H given by a word of generators.
  Vector word_element(const std::vector<Gen>& word) const {
    Vector v = unit();
    for (auto& g : word) v = R(g).apply(v);
    return v;
  }

  /// x * T_w X^a
  Vector right_monomial(Vector x, const Monomial& m) const {
    for (int r : canonical_reduced_word(m.w)) x = rT_[static_cast<std::size_t>(r)].apply(x);
    for (int s = 1; s <= d_; ++s)
      for (int k = 0; k < m.a[static_cast<std::size_t>(s - 1)]; ++k) x = rX_[static_cast<std::size_t>(s)].apply(x);
    return x;
  }

  /// x * T_w
  Vector right_T(Vector x, const Permutation& w) const {
    for (int r : canonical_reduced_word(w)) x = rT_[static_cast<std::size_t>(r)].apply(x);
    return x;
  }

  /// T_w * x
  Vector left_T(Vector x, const Permutation& w) const {
    auto word = canonical_reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = lT_[static_cast<std::size_t>(*it)].apply(x);
    return x;
  }

  Vector mul(const Vector& x, const Vector& y) const {
    Vector out = zero();
    for (std::size_t k = 0; k < dim(); ++k) {
      if (y[k] == 0) continue;
      add_scaled(field_, out, right_monomial(x, basis_[k]), y[k]);
    }
    return out;
  }

  /// The anti-automorphism fixing every T_r and X_s: T_w X^a -> X^a T_{w^{-1}}.
  Vector star(const Vector& x) const {
    Vector out = zero();
    for (std::size_t k = 0; k < dim(); ++k) {
      if (x[k] == 0) continue;
      const auto& m = basis_[k];
      Vector v = basis_vector(index_of(Permutation(static_cast<std::size_t>(d_)), m.a));
      add_scaled(field_, out, right_T(v, m.w.inverse()), x[k]);
    }
    return out;
  }

  /// Coefficients of prod_m (x - xi^{k_m}), low to high, monic of degree l.
  Poly<PrimeField> cyclotomic_polynomial() const {
    Poly<PrimeField> p{1};
    for (int k : params_.charge) p = poly_mul(field_, p, Poly<PrimeField>{field_.neg(field_.pow(xi_, k)), 1});
    return p;
  }

  /// `c * T[w] * X^a + ...` in basis order; "0" for zero.
  std::string to_string(const Vector& x) const {
    std::string out;
    for (std::size_t k = 0; k < dim(); ++k) {
      if (x[k] == 0) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(x[k]) + " * T" + basis_[k].w.to_string() + " * X^(";
      for (std::size_t s = 0; s < basis_[k].a.size(); ++s) out += (s ? "," : "") + std::to_string(basis_[k].a[s]);
      out += ")";
    }
    return out.empty() ? "0" : out;
  }

  std::vector<Relation> relations() const { return hecke_relations(field_, xi_, params_.charge, d_); }

  /// Checks every relation for the left-regular (representation) and the
  /// right-regular (anti-representation) operators, that left and right
  /// multiplications commute, that each X_r is invertible, and that every
  /// basis word evaluates to its own basis vector.
  std::vector<CheckResult> check_relations() const {
    std::vector<CheckResult> out;
    for (auto& rel : relations()) {
      out.push_back(check_relation(rel, true));
      out.push_back(check_relation(rel, false));
    }
    std::vector<Gen> gens;
    for (int r = 1; r < d_; ++r) gens.push_back(Gen::T(r));
    for (int s = 1; s <= d_; ++s) gens.push_back(Gen::X(s));
    CheckResult commute{"left and right multiplications commute"};
    for (auto& g : gens)
      for (auto& h : gens)
        for (std::size_t j = 0; j < dim() && commute.ok; ++j) {
          auto e = basis_vector(j);
          if (L(g).apply(R(h).apply(e)) != R(h).apply(L(g).apply(e))) {
            commute.ok = false;
            commute.detail = "fails on basis element " + std::to_string(j);
          }
        }
    out.push_back(commute);
    CheckResult inv{"X_r invertible"};
    for (int s = 1; s <= d_; ++s)
      if (!try_inverse(L(Gen::X(s)).dense())) {
        inv.ok = false;
        inv.detail += "X" + std::to_string(s) + " singular; ";
      }
    out.push_back(inv);
    CheckResult nf{"normal form: basis words evaluate to basis vectors"};
    for (std::size_t k = 0; k < dim() && nf.ok; ++k)
      if (right_monomial(unit(), basis_[k]) != basis_vector(k)) {
        nf.ok = false;
        nf.detail = "basis element " + std::to_string(k);
      }
    out.push_back(nf);
    CheckResult count{"dimension l^d d!"};
    std::size_t expect = 1;
    for (int k = 1; k <= d_; ++k) expect *= static_cast<std::size_t>(k * l_);
    count.ok = dim() == expect;
    if (!count.ok) count.detail = std::to_string(dim()) + " != " + std::to_string(expect);
    out.push_back(count);
    return out;
  }

  /// Random associativity and anti-automorphism checks.
  std::vector<CheckResult> check_products(int trials, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    auto random_element = [&]() {
      Vector v = zero();
      std::uniform_int_distribution<std::size_t> pick(0, dim() - 1);
      std::uniform_int_distribution<std::uint64_t> coeff(1, field_.modulus() - 1);
      for (int k = 0; k < 3; ++k) v[pick(rng)] = field_.from_int(static_cast<std::int64_t>(coeff(rng)));
      return v;
    };
    CheckResult assoc{"associativity"}, anti{"star is an involutive anti-automorphism"};
    for (int t = 0; t < trials; ++t) {
      auto x = random_element(), y = random_element(), z = random_element();
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
        assoc.ok = false;
        assoc.detail = "trial " + std::to_string(t);
      }
      if (star(mul(x, y)) != mul(star(y), star(x)) || star(star(x)) != x) {
        anti.ok = false;
        anti.detail = "trial " + std::to_string(t);
      }
    }
    return {assoc, anti};
  }

 private:
  std::vector<int> zero_exp() const { return std::vector<int>(static_cast<std::size_t>(d_), 0); }

  std::size_t exp_code(const std::vector<int>& a) const {
    std::size_t c = 0;
    for (int x : a) c = c * static_cast<std::size_t>(l_) + static_cast<std::size_t>(x);
    return c;
  }

  std::size_t check_T(int r) const {
    if (r < 1 || r >= d_) throw ParameterError("HeckeAlgebra: T_" + std::to_string(r) + " out of range");
    return static_cast<std::size_t>(r);
  }
  std::size_t check_X(int s) const {
    if (s < 1 || s > d_) throw ParameterError("HeckeAlgebra: X_" + std::to_string(s) + " out of range");
    return static_cast<std::size_t>(s);
  }

  // Ordering: length, then one-line notation, then exponent vector.
  void build_basis() {
    auto perms = all_permutations(static_cast<std::size_t>(d_));
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& x, const Permutation& y) { return x.length() < y.length(); });
    exp_count_ = 1;
    for (int k = 0; k < d_; ++k) exp_count_ *= static_cast<std::size_t>(l_);
    std::vector<std::vector<int>> exps;
    std::vector<int> a(static_cast<std::size_t>(d_), 0);
    for (std::size_t c = 0; c < exp_count_; ++c) {
      exps.push_back(a);
      for (int k = d_ - 1; k >= 0; --k) {
        if (++a[static_cast<std::size_t>(k)] < l_) break;
        a[static_cast<std::size_t>(k)] = 0;
      }
    }
    std::size_t fact = perms.size();
    lookup_.assign(fact * exp_count_, 0);
    for (auto& w : perms)
      for (auto& e : exps) {
        lookup_[w.rank() * exp_count_ + exp_code(e)] = basis_.size();
        basis_.push_back({w, e});
      }
  }

  // T_w X^a T_r = (T_w T_r) X^{s_r a} + (xi-1) T_w X_{r+1} (X^a - X^{s_r a}) / (X_{r+1} - X_r).
  void build_right_operators() {
    const std::size_t n = dim();
    rT_.assign(static_cast<std::size_t>(std::max(d_, 1)), SparseOperator(field_, n));
    rX_.assign(static_cast<std::size_t>(d_ + 1), SparseOperator(field_, n));
    Scalar xim1 = field_.sub(xi_, 1);
    for (int r = 1; r < d_; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& m = basis_[j];
        Vector v = zero();
        auto sa = m.a;
        std::swap(sa[static_cast<std::size_t>(r - 1)], sa[static_cast<std::size_t>(r)]);
        auto ws = m.w.right_simple(r);
        if (m.w(r) < m.w(r + 1)) {
          v[index_of(ws, sa)] = 1;
        } else {
          v[index_of(m.w, sa)] = field_.add(v[index_of(m.w, sa)], xim1);
          v[index_of(ws, sa)] = field_.add(v[index_of(ws, sa)], xi_);
        }
        int i = m.a[static_cast<std::size_t>(r - 1)], k = m.a[static_cast<std::size_t>(r)];
        if (i != k) {
          int lo = std::min(i, k), gap = std::abs(i - k);
          Scalar sign = i > k ? field_.neg(xim1) : xim1;
          for (int t = 0; t < gap; ++t) {
            auto b = m.a;
            b[static_cast<std::size_t>(r - 1)] = lo + t;
            b[static_cast<std::size_t>(r)] = lo + gap - 1 - t + 1;  // times X_{r+1}
            std::size_t idx = index_of(m.w, b);
            v[idx] = field_.add(v[idx], sign);
          }
        }
        rT_[static_cast<std::size_t>(r)].set_column(j, v);
      }
    }
    if (d_ == 0) return;
    auto cyc = cyclotomic_polynomial();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& m = basis_[j];
      Vector v = zero();
      auto b = m.a;
      if (b[0] + 1 < l_) {
        b[0] += 1;
        v[index_of(m.w, b)] = 1;
      } else {
        for (int t = 0; t < l_; ++t) {
          b[0] = t;
          v[index_of(m.w, b)] = field_.neg(cyc[static_cast<std::size_t>(t)]);
        }
      }
      rX_[1].set_column(j, v);
    }
    // x X_{s} = xi^{-1} x T_{s-1} X_{s-1} T_{s-1}
    Scalar xinv = field_.inv(xi_);
    for (int s = 2; s <= d_; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& m = basis_[j];
        Vector v;
        if (m.a[static_cast<std::size_t>(s - 1)] + 1 < l_) {
          v = zero();
          auto b = m.a;
          b[static_cast<std::size_t>(s - 1)] += 1;
          v[index_of(m.w, b)] = 1;
        } else {
          const auto& t = rT_[static_cast<std::size_t>(s - 1)];
          v = t.apply(rX_[static_cast<std::size_t>(s - 1)].apply(t.apply(basis_vector(j))));
          for (auto& x : v) x = field_.mul(x, xinv);
        }
        rX_[static_cast<std::size_t>(s)].set_column(j, v);
      }
    }
  }

  // Column m of L(g) is g * (T_w X^a) = (g) T_{r_1} ... T_{r_k} X^a.
  void build_left_operators() {
    const std::size_t n = dim();
    lT_.assign(rT_.size(), SparseOperator(field_, n));
    lX_.assign(rX_.size(), SparseOperator(field_, n));
    for (int r = 1; r < d_; ++r) {
      Vector g = T_element(Permutation::simple(static_cast<std::size_t>(d_), r));
      for (std::size_t j = 0; j < n; ++j) lT_[static_cast<std::size_t>(r)].set_column(j, right_monomial(g, basis_[j]));
    }
    for (int s = 1; s <= d_; ++s) {
      Vector g = rX_[static_cast<std::size_t>(s)].apply(unit());
      for (std::size_t j = 0; j < n; ++j) lX_[static_cast<std::size_t>(s)].set_column(j, right_monomial(g, basis_[j]));
    }
  }

  // Applies a word as an operator.  On the left g_1...g_k acts by applying g_k
  // first; on the right g_1 acts first.
  Vector apply_word(const std::vector<Gen>& word, Vector v, bool left) const {
    if (left) {
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = L(*it).apply(v);
    } else {
      for (auto& g : word) v = R(g).apply(v);
    }
    return v;
  }

  CheckResult check_relation(const Relation& rel, bool left) const {
    CheckResult res{rel.name + (left ? " [left]" : " [right]")};
    for (std::size_t j = 0; j < dim(); ++j) {
      Vector diff = zero();
      auto e = basis_vector(j);
      for (auto& t : rel.lhs) add_scaled(field_, diff, apply_word(t.word, e, left), t.c);
      for (auto& t : rel.rhs) add_scaled(field_, diff, apply_word(t.word, e, left), field_.neg(t.c));
      if (!is_zero_vector(field_, diff)) {
        res.ok = false;
        res.detail = "nonzero residual on basis element " + std::to_string(j);
        break;
      }
    }
    return res;
  }

  AlgebraParams params_;
  int d_;
  int l_;
  PrimeField field_;
  Scalar xi_ = 0;
  std::vector<Monomial> basis_;
  std::size_t exp_count_ = 1;
  std::vector<std::size_t> lookup_;
  std::vector<SparseOperator> rT_, rX_, lT_, lX_;
};

/// x_mu: the sum of T_w over the row stabiliser of T^mu.
inline Vector x_element(const HeckeAlgebra& h, const Multipartition& mu) {
  const int d = h.degree();
  std::vector<std::pair<int, int>> blocks;  // [start, end) of each row's entries
  int next = 1;
  for (int m = 1; m <= mu.level(); ++m)
    for (int a = 1; a <= mu.rows(m); ++a) {
      blocks.emplace_back(next, next + mu.part(m, a));
      next += mu.part(m, a);
    }
  Vector out = h.zero();
  std::vector<int> img(static_cast<std::size_t>(d));
  auto rec = [&](auto& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      out[h.index_of(Permutation::from_one_line(img), std::vector<int>(static_cast<std::size_t>(d), 0))] = 1;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::vector<int> vals;
    for (int x = lo; x < hi; ++x) vals.push_back(x);
    do {
      for (int x = lo; x < hi; ++x) img[static_cast<std::size_t>(x - 1)] = vals[static_cast<std::size_t>(x - lo)];
      self(self, b + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  rec(rec, 0);
  return out;
}

/// m_mu = x_mu u_mu with u_mu = prod_{m>=2} prod_{s <= |mu^(1)|+...+|mu^(m-1)|} (X_s - xi^{k_m}).
inline Vector m_element(const HeckeAlgebra& h, const Multipartition& mu) {
  if (mu.size() != h.degree() || mu.level() != h.level())
    throw ParameterError("m_element: shape " + mu.to_string() + " does not match the algebra");
  const auto& f = h.field();
  Vector v = x_element(h, mu);
  for (int m = 2; m <= mu.level(); ++m) {
    int am = 0;
    for (int c = 1; c < m; ++c)
      for (int x : mu.component(c)) am += x;
    Scalar root = f.pow(h.xi(), h.params().charge[static_cast<std::size_t>(m - 1)]);
    for (int s = 1; s <= am; ++s) {
      Vector w = h.R(Gen::X(s)).apply(v);
      add_scaled(f, w, v, f.neg(root));
      v = std::move(w);
    }
  }
  return v;
}

/// m_{S,T} = T_{w_S} m_nu T_{w_T}^*, S and T standard of the same shape nu.
inline Vector m_element(const HeckeAlgebra& h, const Tableau& s, const Tableau& t, const Vector& m_nu) {
  if (s.shape() != t.shape()) throw ParameterError("m_element: tableaux of different shapes");
  Vector v = h.left_T(m_nu, w_of_tableau(s));
  return h.right_T(v, w_of_tableau(t).inverse());
}

inline Vector m_element(const HeckeAlgebra& h, const Tableau& s, const Tableau& t) {
  return m_element(h, s, t, m_element(h, Multipartition(s.shape())));
}

}  // namespace gspecht
