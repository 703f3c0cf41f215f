#pragma once

// Homogeneous generators e(i), y_r, psi_r as matrices on S(mu), the v_T basis
// v_T = psi_{w_T} z_mu, and checks of the graded presentation and of the
// homogeneity of the v-basis.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gspecht/combinatorics.hpp"
#include "gspecht/errors.hpp"
#include "gspecht/linalg.hpp"
#include "gspecht/specht.hpp"

namespace gspecht {

using Weight = std::vector<int>;

inline std::string weight_to_string(const Weight& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
  return s + ")";
}

/// Chooses a reduced word for each w; must return a reduced word of w.
using WordChooser = std::function<std::vector<int>(const Permutation&)>;

/// A uniformly random descent at each step instead of the smallest one.
inline std::vector<int> random_reduced_word(Permutation w, std::mt19937_64& rng) {
  std::vector<int> collected;
  const int n = static_cast<int>(w.size());
  for (;;) {
    std::vector<int> descents;
    for (int r = 1; r < n; ++r)
      if (w.has_right_descent(r)) descents.push_back(r);
    if (descents.empty()) break;
    int r = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    w = w.right_simple(r);
    collected.push_back(r);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

struct GradedSpechtData {
  ModuleRealization module;
  std::vector<Weight> weights;  // sorted; only weights with e(i) != 0
  std::vector<Mat> projectors;  // parallel to weights
  std::vector<Mat> y;           // y[r], 1 <= r <= d
  std::vector<Mat> psi;         // psi[r], 1 <= r < d
  std::vector<std::vector<int>> words;  // reduced word of w_T used for v_T
  Mat V;                        // column T: v_T in the z-basis
  Mat Vinv;
  std::vector<int> degrees;     // deg(T), from combinatorics
  std::vector<Weight> residues; // i^T

  std::size_t dim() const { return module.dim(); }
  int degree() const { return module.degree(); }
  PrimeField field() const { return module.field(); }

  /// e(i), or nullptr when it is zero on the module.
  const Mat* projector(const Weight& i) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), i);
    if (it == weights.end() || *it != i) return nullptr;
    return &projectors[static_cast<std::size_t>(it - weights.begin())];
  }
  Mat projector_or_zero(const Weight& i) const {
    if (auto p = projector(i)) return *p;
    return Mat(field(), dim(), dim());
  }
  /// Coordinates in the v-basis of a vector given in the z-basis.
  Vector v_coordinates(const Vector& z) const { return Vinv.apply(z); }
};

namespace detail {

inline Mat block_inverse(const Mat& d, const Mat& e, const char* what) {
  auto shifted = d * e + (Mat::identity(e.field(), e.rows()) - e);
  auto inv = try_inverse(shifted);
  if (!inv) throw ConventionError(std::string("psi: ") + what + " is not invertible on its weight block");
  return *inv * e;
}

inline Weight swap_entries(Weight i, int r) {
  std::swap(i[static_cast<std::size_t>(r - 1)], i[static_cast<std::size_t>(r)]);
  return i;
}

}  // namespace detail

/// Generalised simultaneous eigenprojections of the X_r.  Throws
/// ConventionError if some X_r has an eigenvalue outside {xi^i}.
inline std::pair<std::vector<Weight>, std::vector<Mat>> weight_projectors(const ModuleRealization& m) {
  const auto f = m.field();
  const int d = m.degree();
  const int e = m.params.e();
  const Scalar xi = m.params.field.xi;
  const std::size_t n = m.dim();
  for (int r = 1; r <= d; ++r)
    for (int s = r + 1; s <= d; ++s)
      if (m.X[static_cast<std::size_t>(r)] * m.X[static_cast<std::size_t>(s)] !=
          m.X[static_cast<std::size_t>(s)] * m.X[static_cast<std::size_t>(r)])
        throw ConventionError("weight_projectors: X" + std::to_string(r) + " and X" + std::to_string(s) + " do not commute");

  // per r: residue -> projector
  std::vector<std::vector<std::pair<int, Mat>>> per(static_cast<std::size_t>(d + 1));
  for (int r = 1; r <= d; ++r) {
    const Mat& x = m.X[static_cast<std::size_t>(r)];
    auto mp = minimal_polynomial(x);
    std::vector<std::pair<int, int>> roots;  // residue, multiplicity
    Poly<PrimeField> rest = mp;
    for (int i = 0; i < e; ++i) {
      Poly<PrimeField> lin{f.neg(f.pow(xi, i)), 1};
      int mult = 0;
      for (;;) {
        auto [q, rem] = poly_divmod(f, rest, lin);
        if (!rem.empty()) break;
        rest = q;
        ++mult;
      }
      if (mult) roots.emplace_back(i, mult);
    }
    if (rest.size() != 1)
      throw ConventionError("weight_projectors: X" + std::to_string(r) + " has an eigenvalue that is not a power of xi");
    for (auto [i, mult] : roots) {
      if (roots.size() == 1) {
        per[static_cast<std::size_t>(r)].emplace_back(i, Mat::identity(f, n));
        continue;
      }
      Poly<PrimeField> power{1};
      for (int k = 0; k < mult; ++k) power = poly_mul(f, power, Poly<PrimeField>{f.neg(f.pow(xi, i)), 1});
      auto g = poly_divmod(f, mp, power).first;
      auto h = poly_inverse_mod(f, g, power);
      auto idem = poly_divmod(f, poly_mul(f, g, h), mp).second;
      per[static_cast<std::size_t>(r)].emplace_back(i, poly_eval(idem, x));
    }
  }
  std::vector<std::pair<Weight, Mat>> acc{{Weight{}, Mat::identity(f, n)}};
  for (int r = 1; r <= d; ++r) {
    std::vector<std::pair<Weight, Mat>> next;
    for (auto& [w, p] : acc)
      for (auto& [i, q] : per[static_cast<std::size_t>(r)]) {
        auto prod = p * q;
        if (prod.is_zero()) continue;
        auto w2 = w;
        w2.push_back(i);
        next.emplace_back(std::move(w2), std::move(prod));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::pair<std::vector<Weight>, std::vector<Mat>> out;
  for (auto& [w, p] : acc) {
    out.first.push_back(w);
    out.second.push_back(std::move(p));
  }
  return out;
}

/// Builds projectors, y_r, psi_r and the v-basis.  `choose` picks the reduced
/// word of w_T used for v_T (canonical by default).
inline GradedSpechtData graded_specht(const ModuleRealization& m, const WordChooser& choose = canonical_reduced_word) {
  GradedSpechtData g;
  g.module = m;
  const auto f = m.field();
  const int d = m.degree();
  const std::size_t n = m.dim();
  const Scalar xi = m.params.field.xi;
  const int e = m.params.e();
  std::tie(g.weights, g.projectors) = weight_projectors(m);
  auto I = Mat::identity(f, n);

  g.y.assign(static_cast<std::size_t>(d + 1), Mat());
  for (int r = 1; r <= d; ++r) {
    Mat y(f, n, n);
    for (std::size_t k = 0; k < g.weights.size(); ++k) {
      Scalar c = f.neg(f.pow(xi, -g.weights[k][static_cast<std::size_t>(r - 1)]));
      y = y + (I + m.X[static_cast<std::size_t>(r)].scaled(c)) * g.projectors[k];
    }
    if (!is_nilpotent(y)) throw ConventionError("y" + std::to_string(r) + " is not nilpotent on S(" + m.mu.to_string() + ")");
    g.y[static_cast<std::size_t>(r)] = std::move(y);
  }

  g.psi.assign(static_cast<std::size_t>(std::max(d, 1)), Mat());
  for (int r = 1; r < d; ++r) {
    const Mat& yr = g.y[static_cast<std::size_t>(r)];
    const Mat& ys = g.y[static_cast<std::size_t>(r + 1)];
    Mat psi(f, n, n);
    for (std::size_t k = 0; k < g.weights.size(); ++k) {
      const auto& i = g.weights[k];
      const Mat& E = g.projectors[k];
      int ir = i[static_cast<std::size_t>(r - 1)], is = i[static_cast<std::size_t>(r)];
      // y_r(i) = xi^{i_r}(1 - y_r), restricted to the block
      Mat Yr = (I - yr).scaled(f.pow(xi, ir)) * E;
      Mat Ys = (I - ys).scaled(f.pow(xi, is)) * E;
      Mat P = E;
      if (ir != is) P = detail::block_inverse(E - Yr * detail::block_inverse(Ys, E, "y_{r+1}(i)"), E, "1 - y_r(i)/y_{r+1}(i)")
                            .scaled(f.sub(1, xi));
      Mat Q;
      switch (arrow(ir, is, e)) {
        case Arrow::equal:
          Q = (E.scaled(f.sub(1, xi)) + (ys * E).scaled(xi)) - yr * E;
          break;
        case Arrow::none:
          Q = (Yr - Ys.scaled(xi)) * detail::block_inverse(Yr - Ys, E, "y_r(i) - y_{r+1}(i)");
          break;
        case Arrow::forward:
          Q = (Yr - Ys.scaled(xi)) * detail::block_inverse((Yr - Ys) * (Yr - Ys), E, "(y_r(i) - y_{r+1}(i))^2");
          break;
        case Arrow::backward:
          Q = E.scaled(f.pow(xi, ir));
          break;
        case Arrow::both:
          Q = detail::block_inverse(Yr - Ys, E, "y_r(i) - y_{r+1}(i)").scaled(f.pow(xi, ir));
          break;
      }
      Mat Qinv = detail::block_inverse(Q, E, "Q_r(i)");
      psi = psi + (m.T[static_cast<std::size_t>(r)] + P) * Qinv;
    }
    g.psi[static_cast<std::size_t>(r)] = std::move(psi);
  }

  g.V = Mat(f, n, n);
  const std::size_t z = m.initial_index();
  for (std::size_t t = 0; t < n; ++t) {
    const auto& tab = m.tableaux[t];
    auto word = choose(w_of_tableau(tab));
    if (Permutation::from_word(static_cast<std::size_t>(d), word) != w_of_tableau(tab) ||
        static_cast<int>(word.size()) != w_of_tableau(tab).length())
      throw ParameterError("graded_specht: chosen word is not a reduced word of w_T");
    Vector v(n, 0);
    v[z] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = g.psi[static_cast<std::size_t>(*it)].apply(v);
    g.V.set_column(t, v);
    g.words.push_back(std::move(word));
    g.degrees.push_back(degree(tab, m.params));
    g.residues.push_back(residue_sequence(tab, m.params));
  }
  auto inv = try_inverse(g.V);
  if (!inv) throw ConventionError("graded_specht: the v_T are not a basis of S(" + m.mu.to_string() + ")");
  g.Vinv = std::move(*inv);
  return g;
}

/// Every relation of the graded presentation as a matrix identity.
inline std::vector<CheckResult> verify_klr_relations(const GradedSpechtData& g) {
  const auto f = g.field();
  const int d = g.degree();
  const int e = g.module.params.e();
  const std::size_t n = g.dim();
  auto I = Mat::identity(f, n);
  auto Z = Mat(f, n, n);
  auto y = [&](int r) -> const Mat& { return g.y[static_cast<std::size_t>(r)]; };
  auto psi = [&](int r) -> const Mat& { return g.psi[static_cast<std::size_t>(r)]; };
  std::map<std::string, CheckResult> res;
  auto record = [&](const std::string& name, bool ok, const std::string& where) {
    auto it = res.try_emplace(name, CheckResult(name)).first;
    ++it->second.instances;
    if (!ok && it->second.ok) {
      it->second.ok = false;
      it->second.detail = "nonzero residual at " + where;
    }
  };
  // support together with its images under each s_r
  std::vector<Weight> wide = g.weights;
  for (auto& i : g.weights)
    for (int r = 1; r < d; ++r) wide.push_back(detail::swap_entries(i, r));
  std::sort(wide.begin(), wide.end());
  wide.erase(std::unique(wide.begin(), wide.end()), wide.end());

  // idempotents
  Mat sum(f, n, n);
  for (std::size_t a = 0; a < g.weights.size(); ++a) {
    sum = sum + g.projectors[a];
    for (std::size_t b = 0; b < g.weights.size(); ++b)
      record("e(i)e(j) = delta e(i)", g.projectors[a] * g.projectors[b] == (a == b ? g.projectors[a] : Z),
             weight_to_string(g.weights[a]) + "," + weight_to_string(g.weights[b]));
  }
  record("sum e(i) = 1", sum == I, "identity");

  for (auto& i : wide) {
    Mat E = g.projector_or_zero(i);
    const std::string at = "i=" + weight_to_string(i);
    if (d >= 1) {
      Mat p = I;
      for (int k = 0; k < g.module.params.lambda_multiplicity(i[0]); ++k) p = p * y(1);
      record("cyclotomic y_1^(Lambda,alpha_i1) e(i) = 0", (p * E).is_zero(), at);
    }
    for (int r = 1; r <= d; ++r) record("y_r e(i) = e(i) y_r", y(r) * E == E * y(r), at + " r=" + std::to_string(r));
    for (int r = 1; r < d; ++r) {
      const std::string atr = at + " r=" + std::to_string(r);
      int ir = i[static_cast<std::size_t>(r - 1)], is = i[static_cast<std::size_t>(r)];
      record("psi_r e(i) = e(s_r i) psi_r", psi(r) * E == g.projector_or_zero(detail::swap_entries(i, r)) * psi(r), atr);
      bool eq = ir == is;
      record("psi_r y_{r+1} e(i)", psi(r) * y(r + 1) * E == (eq ? (y(r) * psi(r) + I) * E : y(r) * psi(r) * E), atr);
      record("y_{r+1} psi_r e(i)", y(r + 1) * psi(r) * E == (eq ? (psi(r) * y(r) + I) * E : psi(r) * y(r) * E), atr);
      Mat rhs;
      switch (arrow(ir, is, e)) {
        case Arrow::equal: rhs = Z; break;
        case Arrow::none: rhs = E; break;
        case Arrow::forward: rhs = (y(r + 1) - y(r)) * E; break;
        case Arrow::backward: rhs = (y(r) - y(r + 1)) * E; break;
        case Arrow::both: rhs = (y(r + 1) - y(r)) * (y(r) - y(r + 1)) * E; break;
      }
      record("psi_r^2 e(i)", psi(r) * psi(r) * E == rhs, atr);
      if (r + 1 < d) {
        int it2 = i[static_cast<std::size_t>(r + 1)];
        Mat braid = psi(r + 1) * psi(r) * psi(r + 1);
        Mat corr = Z;
        if (it2 == ir) switch (arrow(ir, is, e)) {
            case Arrow::forward: corr = I; break;
            case Arrow::backward: corr = I.scaled(f.neg(1)); break;
            case Arrow::both: corr = y(r) + y(r + 2) - y(r + 1).scaled(2); break;
            default: break;
          }
        record("braid psi_r psi_{r+1} psi_r e(i)", psi(r) * psi(r + 1) * psi(r) * E == (braid + corr) * E, atr);
      }
    }
  }
  for (int r = 1; r <= d; ++r)
    for (int s = 1; s <= d; ++s) {
      record("y_r y_s = y_s y_r", y(r) * y(s) == y(s) * y(r), "r=" + std::to_string(r) + " s=" + std::to_string(s));
      if (r < d && s != r && s != r + 1)
        record("psi_r y_s = y_s psi_r", psi(r) * y(s) == y(s) * psi(r), "r=" + std::to_string(r) + " s=" + std::to_string(s));
      if (r < d && s < d && (r > s + 1 || s > r + 1))
        record("psi_r psi_s = psi_s psi_r", psi(r) * psi(s) == psi(s) * psi(r), "r=" + std::to_string(r) + " s=" + std::to_string(s));
    }
  for (int r = 1; r <= d; ++r) record("y_r nilpotent", is_nilpotent(y(r)), "r=" + std::to_string(r));
  std::vector<CheckResult> out;
  for (auto& [k, v] : res) out.push_back(v);
  return out;
}

/// v_T has support only on S below T in the Bruhat order, with nonzero diagonal.
inline CheckResult check_unitriangular(const GradedSpechtData& g) {
  CheckResult res("v/z transition unitriangular");
  const auto& tabs = g.module.tableaux;
  for (std::size_t t = 0; t < g.dim(); ++t) {
    if (g.V(t, t) == 0) {
      res.ok = false;
      res.detail = "zero diagonal at " + tabs[t].to_string();
      return res;
    }
    for (std::size_t s = 0; s < g.dim(); ++s)
      if (g.V(s, t) != 0 && !tableau_bruhat(tabs[s], tabs[t])) {
        res.ok = false;
        res.detail = "v_" + tabs[t].to_string() + " involves z_" + tabs[s].to_string();
        return res;
      }
  }
  if (g.dim() && g.V.column(g.module.initial_index()) != [&] {
        Vector v(g.dim(), 0);
        v[g.module.initial_index()] = 1;
        return v;
      }())
    res = CheckResult(res.name, false, "v_{T^mu} != z_mu");
  return res;
}

/// Homogeneity of the v-basis: weights of v_T, and the supports of y_r v_T
/// and psi_r v_T in the v-basis.
inline std::vector<CheckResult> verify_homogeneity(const GradedSpechtData& g) {
  const int d = g.degree();
  const int e = g.module.params.e();
  const auto& tabs = g.module.tableaux;
  CheckResult weight("e(i) v_T = delta v_T"), ys("y_r v_T: same weight, degree +2, lower"),
      ps("psi_r v_T: weight s_r i^T, degree -a_{i_r,i_{r+1}}");
  for (std::size_t t = 0; t < g.dim(); ++t) {
    Vector v = g.V.column(t);
    for (std::size_t k = 0; k < g.weights.size(); ++k) {
      bool mine = g.weights[k] == g.residues[t];
      if (g.projectors[k].apply(v) != (mine ? v : Vector(g.dim(), 0))) {
        weight.ok = false;
        weight.detail = tabs[t].to_string() + " at " + weight_to_string(g.weights[k]);
      }
    }
    if (!g.projector(g.residues[t])) {
      weight.ok = false;
      weight.detail = "no projector for " + weight_to_string(g.residues[t]);
    }
    for (int r = 1; r <= d; ++r) {
      auto c = g.v_coordinates(g.y[static_cast<std::size_t>(r)].apply(v));
      for (std::size_t s = 0; s < c.size(); ++s)
        if (c[s] != 0 && !(g.residues[s] == g.residues[t] && g.degrees[s] == g.degrees[t] + 2 && s != t &&
                           tableau_bruhat(tabs[s], tabs[t]))) {
          ys.ok = false;
          ys.detail = "y" + std::to_string(r) + " v_" + tabs[t].to_string() + " involves v_" + tabs[s].to_string();
        }
    }
    for (int r = 1; r < d; ++r) {
      auto c = g.v_coordinates(g.psi[static_cast<std::size_t>(r)].apply(v));
      const auto& i = g.residues[t];
      auto target = detail::swap_entries(i, r);
      int jump = -cartan(i[static_cast<std::size_t>(r - 1)], i[static_cast<std::size_t>(r)], e);
      for (std::size_t s = 0; s < c.size(); ++s)
        if (c[s] != 0 && !(g.residues[s] == target && g.degrees[s] == g.degrees[t] + jump)) {
          ps.ok = false;
          ps.detail = "psi" + std::to_string(r) + " v_" + tabs[t].to_string() + " involves v_" + tabs[s].to_string();
        }
    }
  }
  return {weight, ys, ps};
}

/// For each T whose w_T has at most `cap` reduced words, every reduced word
/// gives v_T plus v_S with S strictly below T, i^S = i^T, deg S = deg T.
inline CheckResult verify_reduced_word_independence(const GradedSpechtData& g, std::size_t cap = 60) {
  CheckResult res("reduced-word independence");
  const auto& tabs = g.module.tableaux;
  const std::size_t z = g.module.initial_index();
  std::size_t checked = 0, skipped = 0, words = 0;
  for (std::size_t t = 0; t < g.dim(); ++t) {
    auto all = reduced_words(w_of_tableau(tabs[t]), cap);
    if (!all) {
      ++skipped;
      continue;
    }
    ++checked;
    for (auto& word : *all) {
      ++words;
      Vector v(g.dim(), 0);
      v[z] = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = g.psi[static_cast<std::size_t>(*it)].apply(v);
      auto c = g.v_coordinates(v);
      for (std::size_t s = 0; s < c.size(); ++s) {
        Scalar want = s == t ? 1 : 0;
        if (c[s] == want) continue;
        if (s == t || !(g.residues[s] == g.residues[t] && g.degrees[s] == g.degrees[t] && tableau_bruhat(tabs[s], tabs[t]))) {
          res.ok = false;
          std::string w;
          for (int x : word) w += std::to_string(x);
          res.detail = "word " + w + " for " + tabs[t].to_string() + " involves v_" + tabs[s].to_string();
        }
      }
    }
  }
  if (res.ok)
    res.detail = std::to_string(checked) + " elements, " + std::to_string(words) + " words, " + std::to_string(skipped) +
                 " above cap " + std::to_string(cap);
  return res;
}

/// Per-weight graded dimensions read from the v-basis: each v_T is placed in
/// the weight whose projector fixes it, in degree deg(T).
inline std::map<Weight, LaurentPoly> graded_weight_dimensions(const GradedSpechtData& g) {
  std::map<Weight, LaurentPoly> out;
  for (std::size_t t = 0; t < g.dim(); ++t) {
    Vector v = g.V.column(t);
    std::optional<Weight> found;
    for (std::size_t k = 0; k < g.weights.size(); ++k)
      if (g.projectors[k].apply(v) == v) found = g.weights[k];
    if (!found) throw ConventionError("graded_weight_dimensions: v_" + g.module.tableaux[t].to_string() + " is not a weight vector");
    out[*found] += LaurentPoly::monomial(g.degrees[t]);
  }
  for (std::size_t k = 0; k < g.weights.size(); ++k)
    if (static_cast<long long>(rank(g.projectors[k])) != out[g.weights[k]].at_one())
      throw ConventionError("graded_weight_dimensions: rank of e" + weight_to_string(g.weights[k]) +
                            " differs from the number of v_T in it");
  return out;
}

}  // namespace gspecht
