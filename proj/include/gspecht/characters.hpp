#pragma once

// Graded characters, the graded branching rule (combinatorially and on the
// v-basis), the defect and degree identities over whole ranges of shapes,
// and the combinatorial graded dimension sum over pairs of tableaux.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gspecht/combinatorics.hpp"
#include "gspecht/klr.hpp"

namespace gspecht {

using GradedCharacter = std::map<Weight, LaurentPoly>;

/// ch(mu)[i] = sum of q^{deg T} over standard T with i^T = i.
inline GradedCharacter graded_character(const Multipartition& mu, const AlgebraParams& params) {
  GradedCharacter ch;
  for (auto& t : standard_tableaux(mu)) ch[residue_sequence(t, params)] += LaurentPoly::monomial(degree(t, params));
  return ch;
}

/// Forget the last residue.
inline GradedCharacter restrict_character(const GradedCharacter& ch) {
  GradedCharacter out;
  for (auto& [i, p] : ch) {
    if (i.empty()) throw ParameterError("restrict_character: cannot restrict from d = 0");
    out[Weight(i.begin(), i.end() - 1)] += p;
  }
  return out;
}

inline GradedCharacter shift_character(const GradedCharacter& ch, int m) {
  GradedCharacter out;
  for (auto& [i, p] : ch) out[i] = p.shifted(m);
  return out;
}

inline long long character_total(const GradedCharacter& ch) {
  long long s = 0;
  for (auto& [i, p] : ch) s += p.at_one();
  return s;
}

struct BranchSection {
  Node node;                // A_m
  Multipartition shape;     // mu_{A_m}
  int shift;                // d_{A_m}(mu)
};

/// Removable nodes from bottom to top, with the shapes and degree shifts of the sections.
inline std::vector<BranchSection> branching_table(const Multipartition& mu, const AlgebraParams& params) {
  auto nodes = removable_nodes(mu);
  std::vector<BranchSection> out;
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) out.push_back({*it, remove_node(mu, *it), d_below(mu, *it, params)});
  return out;
}

/// Restriction of ch(mu) equals the sum over sections of q^{d_A} ch(mu_A).
inline CheckResult check_branching_identity(const Multipartition& mu, const AlgebraParams& params) {
  CheckResult res("branching character identity " + mu.to_string());
  if (mu.size() == 0) return res;
  GradedCharacter rhs;
  for (auto& sec : branching_table(mu, params))
    for (auto& [i, p] : shift_character(graded_character(sec.shape, params), sec.shift)) rhs[i] += p;
  res.ok = restrict_character(graded_character(mu, params)) == rhs;
  if (!res.ok) res.detail = "restricted character differs from the sum of shifted sections";
  res.instances = 1;
  return res;
}

/// V_m = span of v_T with d in A_1..A_m (bottom to top) is stable under the
/// embedded generators of the smaller algebra, and V_m / V_{m-1} has the
/// character of S(mu_{A_m}) shifted by d_{A_m}(mu).
inline std::vector<CheckResult> verify_branching_filtration(const GradedSpechtData& g) {
  CheckResult inv("V_m invariant under embedded generators"), sec("section characters");
  const int d = g.degree();
  if (d == 0) return {inv, sec};
  const auto& params = g.module.params;
  const auto& mu = g.module.mu;
  const auto& tabs = g.module.tableaux;
  auto table = branching_table(mu, params);
  std::vector<std::size_t> section_of(tabs.size());
  for (std::size_t t = 0; t < tabs.size(); ++t)
    for (std::size_t m = 0; m < table.size(); ++m)
      if (tabs[t].node_of(d) == table[m].node) section_of[t] = m;

  // embedded generators: y_r (r < d), psi_s (s < d-1), e(j) = sum of e(j, i)
  std::vector<std::pair<std::string, Mat>> gens;
  for (int r = 1; r < d; ++r) gens.emplace_back("y" + std::to_string(r), g.y[static_cast<std::size_t>(r)]);
  for (int s = 1; s + 1 < d; ++s) gens.emplace_back("psi" + std::to_string(s), g.psi[static_cast<std::size_t>(s)]);
  std::map<Weight, Mat> small;
  for (std::size_t k = 0; k < g.weights.size(); ++k) {
    Weight j(g.weights[k].begin(), g.weights[k].end() - 1);
    auto it = small.find(j);
    if (it == small.end()) small.emplace(j, g.projectors[k]);
    else it->second = it->second + g.projectors[k];
  }
  for (auto& [j, p] : small) gens.emplace_back("e" + weight_to_string(j), p);

  for (auto& [name, mat] : gens)
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      auto c = g.v_coordinates(mat.apply(g.V.column(t)));
      ++inv.instances;
      for (std::size_t s = 0; s < c.size(); ++s)
        if (c[s] != 0 && section_of[s] > section_of[t]) {
          inv.ok = false;
          inv.detail = name + " v_" + tabs[t].to_string() + " leaves V_" + std::to_string(section_of[t] + 1);
        }
    }

  for (std::size_t m = 0; m < table.size(); ++m) {
    GradedCharacter got;
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      if (section_of[t] != m) continue;
      Vector v = g.V.column(t);
      // the smaller weight is read off from the embedded projectors
      std::optional<Weight> found;
      for (auto& [j, p] : small)
        if (p.apply(v) == v) found = j;
      if (!found) {
        sec.ok = false;
        sec.detail = "v_" + tabs[t].to_string() + " is not a weight vector for the smaller algebra";
        continue;
      }
      got[*found] += LaurentPoly::monomial(g.degrees[t]);
    }
    ++sec.instances;
    if (got != shift_character(graded_character(table[m].shape, params), table[m].shift)) {
      sec.ok = false;
      sec.detail = "section " + std::to_string(m + 1) + " (" + table[m].node.to_string() + ") has the wrong character";
    }
  }
  return {inv, sec};
}

/// Sum over mu of d and pairs S, T of shape mu with i^S = i, i^T = j of q^{deg S + deg T}.
inline LaurentPoly hecke_graded_dim_sum(const Weight& i, const Weight& j, const AlgebraParams& params, int d) {
  LaurentPoly out;
  for (auto& mu : multipartitions(params.level(), d)) {
    auto ch = graded_character(mu, params);
    auto a = ch.find(i), b = ch.find(j);
    if (a != ch.end() && b != ch.end()) out += a->second * b->second;
  }
  return out;
}

/// The same sum for all pairs at once.
inline std::map<std::pair<Weight, Weight>, LaurentPoly> hecke_graded_dim_table(const AlgebraParams& params, int d) {
  std::map<std::pair<Weight, Weight>, LaurentPoly> out;
  for (auto& mu : multipartitions(params.level(), d)) {
    auto ch = graded_character(mu, params);
    for (auto& [i, p] : ch)
      for (auto& [j, r] : ch) out[{i, j}] += p * r;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps over all shapes of a level.  The catalog holds everything that does
// not depend on the charge; degrees and residues are then filled in per
// charge by walking parent links (T -> T_{<= d-1}).

class TableauCatalog {
 public:
  struct Entry {
    std::size_t shape;
    Tableau tableau;
    std::ptrdiff_t parent;  // -1 for the empty tableau
    Node last;              // node of d
  };
  struct GarnirCase {
    std::size_t tableau;  // the Garnir tableau
    int r;                // its entry at (a,b,n)
    std::vector<std::size_t> below;  // standard S strictly below it
  };

  TableauCatalog(int level, int dmax) : level_(level), dmax_(dmax) {
    for (int d = 0; d <= dmax; ++d)
      for (auto& mu : multipartitions(level, d)) {
        std::size_t id = shapes_.size();
        shape_index_.emplace(mu, id);
        shapes_.push_back(mu);
        by_shape_.emplace_back();
        edges_.emplace_back();
        garnir_.emplace_back();
        auto tabs = standard_tableaux(mu);
        for (auto& t : tabs) {
          std::ptrdiff_t parent = -1;
          Node last{0, 0, 0};
          if (d > 0) {
            last = t.node_of(d);
            parent = static_cast<std::ptrdiff_t>(lookup(t.restrict(d - 1)));
          }
          by_shape_[id].push_back(entries_.size());
          entries_.push_back({id, t, parent, last});
          tableau_index_.emplace(std::make_pair(id, t.reading_word()), entries_.size() - 1);
        }
        for (auto& e : weak_bruhat_graph(mu)) edges_[id].push_back({by_shape_[id][e.from], by_shape_[id][e.to], e.color});
        for (int n = 1; n <= level; ++n)
          for (int a = 1; a < mu.rows(n); ++a)
            for (int b = 1; b <= mu.part(n, a + 1); ++b) {
              auto gt = garnir_tableau(mu, a, b, n);
              GarnirCase gc{lookup(gt), gt.entry({a, b, n}), {}};
              auto wt = w_of_tableau(gt);
              for (std::size_t k : by_shape_[id])
                if (k != gc.tableau && bruhat_leq(w_of_tableau(entries_[k].tableau), wt)) gc.below.push_back(k);
              garnir_[id].push_back(std::move(gc));
            }
      }
  }

  int level() const { return level_; }
  int dmax() const { return dmax_; }
  const std::vector<Multipartition>& shapes() const { return shapes_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::size_t>& tableaux_of(std::size_t shape) const { return by_shape_[shape]; }
  const std::vector<WeakEdge>& edges_of(std::size_t shape) const { return edges_[shape]; }
  const std::vector<GarnirCase>& garnir_of(std::size_t shape) const { return garnir_[shape]; }
  std::size_t shape_id(const Multipartition& mu) const { return shape_index_.at(mu); }

  std::size_t lookup(const Tableau& t) const {
    return tableau_index_.at({shape_id(Multipartition(t.shape())), t.reading_word()});
  }

 private:
  int level_, dmax_;
  std::vector<Multipartition> shapes_;
  std::map<Multipartition, std::size_t> shape_index_;
  std::vector<Entry> entries_;
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> tableau_index_;
  std::vector<std::vector<std::size_t>> by_shape_;
  std::vector<std::vector<WeakEdge>> edges_;
  std::vector<std::vector<GarnirCase>> garnir_;
};

/// Degrees, codegrees and residue sequences of every catalog tableau for one charge.
struct CatalogGrading {
  std::vector<int> deg, codeg;
  std::vector<Weight> res;

  CatalogGrading(const TableauCatalog& cat, const AlgebraParams& params) {
    const auto& es = cat.entries();
    deg.resize(es.size());
    codeg.resize(es.size());
    res.resize(es.size());
    std::map<std::pair<std::size_t, Node>, std::pair<int, int>> memo;  // (shape, node) -> (d_A, d^A(mu_A))
    for (std::size_t k = 0; k < es.size(); ++k) {
      const auto& e = es[k];
      if (e.parent < 0) continue;
      auto p = static_cast<std::size_t>(e.parent);
      auto key = std::make_pair(e.shape, e.last);
      auto it = memo.find(key);
      if (it == memo.end()) {
        const auto& mu = cat.shapes()[e.shape];
        it = memo.emplace(key, std::make_pair(d_below(mu, e.last, params), d_above(remove_node(mu, e.last), e.last, params))).first;
      }
      deg[k] = it->second.first + deg[p];
      codeg[k] = it->second.second + codeg[p];
      res[k] = res[p];
      res[k].push_back(residue(e.last, params));
    }
  }

  GradedCharacter character(const TableauCatalog& cat, std::size_t shape) const {
    GradedCharacter ch;
    for (auto k : cat.tableaux_of(shape)) ch[res[k]] += LaurentPoly::monomial(deg[k]);
    return ch;
  }
};

namespace detail {

inline void fail(CheckResult& r, const std::string& why) {
  if (r.ok) r.detail = why;
  r.ok = false;
}

/// Residues worth testing for d_i identities: all of I when e >= 2, a window
/// around the charge and the content when e = 0.
inline std::vector<int> residue_range(const Multipartition& mu, const AlgebraParams& params) {
  std::vector<int> out;
  if (params.e() >= 2) {
    for (int i = 0; i < params.e(); ++i) out.push_back(i);
    return out;
  }
  int lo = *std::min_element(params.charge.begin(), params.charge.end());
  int hi = *std::max_element(params.charge.begin(), params.charge.end());
  for (auto& n : mu.nodes()) {
    lo = std::min(lo, residue(n, params));
    hi = std::max(hi, residue(n, params));
  }
  for (int i = lo - 2; i <= hi + 2; ++i) out.push_back(i);
  return out;
}

}  // namespace detail

/// Degree and defect identities for one charge over every shape in the catalog:
/// Defect identities (i)-(iii), deg + codeg = def, degree change along weak edges,
/// the Garnir degree law and the branching character identity.
inline std::vector<CheckResult> defect_suite(const TableauCatalog& cat, const AlgebraParams& params) {
  if (params.level() != cat.level()) throw ParameterError("defect_suite: catalog level does not match the charge");
  CatalogGrading gr(cat, params);
  const int e = params.e();
  CheckResult di("d_A(mu) + d^A(mu_A) = d_i(mu) + 1"), dii("d_i(mu) = (Lambda - alpha, alpha_i)"),
      diii("def(alpha) = def(alpha - alpha_i) + d_i(mu) + 1"), dprime("deg(T) + codeg(T) = def(cont mu)"),
      pdeg("deg(s_r T) - deg(T) = -a_{i_r,i_{r+1}} along weak edges"), garnir("Garnir degree law"),
      branch("branching character identity");
  for (std::size_t s = 0; s < cat.shapes().size(); ++s) {
    const auto& mu = cat.shapes()[s];
    auto alpha = content(mu, params);
    long long def = defect(alpha, params);
    for (auto& a : removable_nodes(mu)) {
      int i = residue(a, params);
      auto mua = remove_node(mu, a);
      ++di.instances;
      if (d_below(mu, a, params) + d_above(mua, a, params) != d_residue(mu, i, params) + 1)
        detail::fail(di, mu.to_string() + " at " + a.to_string());
      auto beta = alpha;
      beta.add(i, -1);
      ++diii.instances;
      if (def != defect(beta, params) + d_residue(mu, i, params) + 1) detail::fail(diii, mu.to_string() + " at " + a.to_string());
    }
    for (int i : detail::residue_range(mu, params)) {
      RootVector ai;
      ai.add(params.residue(i));
      ++dii.instances;
      if (d_residue(mu, i, params) != lambda_pairing(params, ai) - pairing(alpha, ai, e))
        detail::fail(dii, mu.to_string() + " at i=" + std::to_string(i));
    }
    for (auto k : cat.tableaux_of(s)) {
      ++dprime.instances;
      if (gr.deg[k] + gr.codeg[k] != def) detail::fail(dprime, cat.entries()[k].tableau.to_string());
    }
    for (auto& edge : cat.edges_of(s)) {
      const auto& i = gr.res[edge.from];
      int r = edge.color;
      ++pdeg.instances;
      if (gr.deg[edge.to] - gr.deg[edge.from] != -cartan(i[static_cast<std::size_t>(r - 1)], i[static_cast<std::size_t>(r)], e))
        detail::fail(pdeg, cat.entries()[edge.from].tableau.to_string() + " r=" + std::to_string(r));
    }
    for (auto& gc : cat.garnir_of(s)) {
      const auto& i = gr.res[gc.tableau];
      auto target = detail::swap_entries(i, gc.r);
      int want = gr.deg[gc.tableau] - cartan(i[static_cast<std::size_t>(gc.r - 1)], i[static_cast<std::size_t>(gc.r)], e);
      for (auto k : gc.below) {
        if (gr.res[k] != target) continue;
        ++garnir.instances;
        if (gr.deg[k] != want)
          detail::fail(garnir, cat.entries()[k].tableau.to_string() + " below " + cat.entries()[gc.tableau].tableau.to_string());
      }
    }
    if (mu.size() > 0) {
      GradedCharacter rhs;
      for (auto& sec : branching_table(mu, params))
        for (auto& [i, p] : shift_character(gr.character(cat, cat.shape_id(sec.shape)), sec.shift)) rhs[i] += p;
      ++branch.instances;
      if (restrict_character(gr.character(cat, s)) != rhs) detail::fail(branch, mu.to_string());
    }
  }
  return {di, dii, diii, dprime, pdeg, garnir, branch};
}

inline std::vector<CheckResult> defect_suite(const AlgebraParams& params, int dmax) {
  return defect_suite(TableauCatalog(params.level(), dmax), params);
}

/// The four alternatives for horizontally adjacent r, r+1 and for vertically
/// adjacent r, r+1: at least one holds for every standard T.  Charge independent.
inline std::vector<CheckResult> adjacency_suite(const TableauCatalog& cat) {
  CheckResult east("alternatives for r -> r+1"), south("alternatives for r over r+1");
  for (auto& e : cat.entries()) {
    const auto& t = e.tableau;
    for (int r = 1; r < t.size(); ++r) {
      if (east_of(t, r, r + 1)) {
        ++east.instances;
        if (!adjacency_alternatives(t, r, Adjacency::east)) detail::fail(east, t.to_string() + " r=" + std::to_string(r));
      }
      if (south_of(t, r, r + 1)) {
        ++south.instances;
        if (!adjacency_alternatives(t, r, Adjacency::south)) detail::fail(south, t.to_string() + " r=" + std::to_string(r));
      }
    }
  }
  return {east, south};
}

/// Bruhat order on tableaux against the partial-shape criterion, over all
/// row-strict fillings of every shape up to dmax.
inline CheckResult bruhat_crosscheck(int level, int dmax) {
  CheckResult res("Bruhat order equals the partial-shape criterion");
  for (int d = 0; d <= dmax; ++d)
    for (auto& mu : multipartitions(level, d)) {
      std::vector<Tableau> rs;
      for (auto& w : all_permutations(static_cast<std::size_t>(d))) {
        Tableau t(mu, w.one_line());
        if (t.is_row_strict()) rs.push_back(std::move(t));
      }
      for (auto& s : rs)
        for (auto& t : rs) {
          ++res.instances;
          if (tableau_bruhat(s, t) != partial_shape_dominance(s, t)) detail::fail(res, s.to_string() + " vs " + t.to_string());
        }
    }
  return res;
}

}  // namespace gspecht
