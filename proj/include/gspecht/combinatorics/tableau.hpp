#pragma once

// Tableaux: fillings of a multicomposition diagram by 1..d.  Standard
// tableaux, residue sequences, w_T, degree and codegree, Bruhat order, the
// weak Bruhat graph and Garnir tableaux.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gspecht/combinatorics/multipartition.hpp"
#include "gspecht/combinatorics/params.hpp"
#include "gspecht/combinatorics/permutation.hpp"
#include "gspecht/errors.hpp"

namespace gspecht {

class Tableau {
 public:
  Tableau() = default;

  /// `word[k]` is the entry at the (k+1)-st node of the shape in T^mu order.
  Tableau(Multicomposition shape, std::vector<int> word) : shape_(std::move(shape)), word_(std::move(word)) {
    nodes_ = shape_.nodes();
    if (word_.size() != nodes_.size())
      throw ParameterError("Tableau: filling has " + std::to_string(word_.size()) + " entries for a shape of size " +
                           std::to_string(nodes_.size()));
    where_.assign(word_.size(), 0);
    std::vector<bool> seen(word_.size() + 1, false);
    for (std::size_t k = 0; k < word_.size(); ++k) {
      int x = word_[k];
      if (x < 1 || x > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(x)])
        throw ParameterError("Tableau: filling is not a bijection onto 1..d");
      seen[static_cast<std::size_t>(x)] = true;
      where_[static_cast<std::size_t>(x - 1)] = k;
    }
  }

  /// From rows: rows[m][a] is row a+1 of component m+1.
  static Tableau from_rows(const std::vector<std::vector<std::vector<int>>>& rows) {
    std::vector<std::vector<int>> comps;
    std::vector<int> word;
    for (auto& comp : rows) {
      std::vector<int> parts;
      for (auto& row : comp) {
        parts.push_back(static_cast<int>(row.size()));
        word.insert(word.end(), row.begin(), row.end());
      }
      comps.push_back(parts);
    }
    return Tableau(Multicomposition(comps), word);
  }

  const Multicomposition& shape() const { return shape_; }
  int size() const { return static_cast<int>(word_.size()); }

  /// Row reading word (entries in T^mu order); equals the one-line notation of w_T.
  const std::vector<int>& reading_word() const { return word_; }

  Node node_of(int r) const { return nodes_[where_[static_cast<std::size_t>(r - 1)]]; }
  /// Position of r in T^mu order, i.e. the T^mu-label of the node holding r.
  std::size_t label_of(int r) const { return where_[static_cast<std::size_t>(r - 1)]; }

  int entry(const Node& n) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
    if (it == nodes_.end() || *it != n) throw ParameterError("Tableau: node " + n.to_string() + " not in the shape");
    return word_[static_cast<std::size_t>(it - nodes_.begin())];
  }

  bool is_row_strict() const {
    for (std::size_t k = 1; k < nodes_.size(); ++k)
      if (same_row(nodes_[k - 1], nodes_[k]) && word_[k - 1] > word_[k]) return false;
    return true;
  }

  bool is_column_strict() const {
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      Node below{nodes_[k].row + 1, nodes_[k].col, nodes_[k].comp};
      if (shape_.contains(below) && entry(below) < word_[k]) return false;
    }
    return true;
  }

  bool is_standard() const { return shape_.is_multipartition() && is_row_strict() && is_column_strict(); }

  /// w T: replaces each entry x by w(x).
  Tableau act(const Permutation& w) const {
    if (static_cast<int>(w.size()) != size()) throw ParameterError("Tableau::act: degree mismatch");
    std::vector<int> word(word_.size());
    for (std::size_t k = 0; k < word_.size(); ++k) word[k] = w(word_[k]);
    return Tableau(shape_, std::move(word));
  }

  /// s_r T: swaps the entries r and r+1.
  Tableau swap(int r) const {
    if (r < 1 || r >= size()) throw ParameterError("Tableau::swap: s_" + std::to_string(r) + " out of range");
    Tableau t = *this;
    std::swap(t.word_[t.where_[static_cast<std::size_t>(r - 1)]], t.word_[t.where_[static_cast<std::size_t>(r)]]);
    std::swap(t.where_[static_cast<std::size_t>(r - 1)], t.where_[static_cast<std::size_t>(r)]);
    return t;
  }

  /// T_{<= a} for a row-strict tableau: keep the entries 1..a.  Its shape is a
  /// multicomposition (a multipartition when T is standard).
  Tableau restrict(int a) const {
    if (!is_row_strict()) throw ParameterError("Tableau::restrict: tableau is not row-strict");
    std::vector<std::vector<int>> comps;
    std::vector<int> word;
    for (int m = 1; m <= shape_.level(); ++m) {
      std::vector<int> parts;
      for (int row = 1; row <= shape_.rows(m); ++row) {
        int len = 0;
        for (int b = 1; b <= shape_.part(m, row); ++b) {
          int x = entry({row, b, m});
          if (x <= a) {
            ++len;
            word.push_back(x);
          }
        }
        parts.push_back(len);
      }
      comps.push_back(parts);
    }
    return Tableau(Multicomposition(comps), word);
  }

  std::string to_string() const {
    std::string out;
    std::size_t k = 0;
    for (int m = 1; m <= shape_.level(); ++m) {
      if (m > 1) out += " | ";
      if (shape_.rows(m) == 0) out += "_";
      for (int a = 1; a <= shape_.rows(m); ++a) {
        if (a > 1) out += " / ";
        for (int b = 1; b <= shape_.part(m, a); ++b) {
          if (b > 1) out += " ";
          out += std::to_string(word_[k++]);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Tableau& x, const Tableau& y) { return x.shape_ == y.shape_ && x.word_ == y.word_; }

 private:
  static bool same_row(const Node& a, const Node& b) { return a.comp == b.comp && a.row == b.row; }

  Multicomposition shape_;
  std::vector<int> word_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> where_;
};

/// T^mu: 1..d along successive rows, top to bottom.
inline Tableau initial_tableau(const Multicomposition& mu) {
  std::vector<int> word(static_cast<std::size_t>(mu.size()));
  for (std::size_t k = 0; k < word.size(); ++k) word[k] = static_cast<int>(k + 1);
  return Tableau(mu, std::move(word));
}

/// All standard mu-tableaux, sorted lexicographically by reading word.
inline std::vector<Tableau> standard_tableaux(const Multipartition& mu) {
  const int d = mu.size();
  std::vector<std::vector<int>> words;
  auto nodes = mu.nodes();
  std::vector<int> word(nodes.size(), 0);
  // place d, d-1, ..., 1 into removable nodes of the shrinking shape
  auto rec = [&](auto& self, const Multipartition& shape, int k) -> void {
    if (k == 0) {
      words.push_back(word);
      return;
    }
    for (auto& a : removable_nodes(shape)) {
      auto pos = std::lower_bound(nodes.begin(), nodes.end(), a) - nodes.begin();
      word[static_cast<std::size_t>(pos)] = k;
      self(self, remove_node(shape, a), k - 1);
    }
  };
  rec(rec, mu, d);
  std::sort(words.begin(), words.end());
  std::vector<Tableau> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(mu, w);
  return out;
}

/// i^T: the residue of the node holding r, for r = 1..d.
inline std::vector<int> residue_sequence(const Tableau& t, const AlgebraParams& params) {
  std::vector<int> out(static_cast<std::size_t>(t.size()));
  for (int r = 1; r <= t.size(); ++r) out[static_cast<std::size_t>(r - 1)] = residue(t.node_of(r), params);
  return out;
}

/// w_T with w_T T^mu = T.
inline Permutation w_of_tableau(const Tableau& t) { return Permutation::from_one_line(t.reading_word()); }

inline int tableau_length(const Tableau& t) { return w_of_tableau(t).length(); }

namespace detail {
inline void require_standard(const Tableau& t, const char* who) {
  if (!t.is_standard()) throw ParameterError(std::string(who) + ": tableau " + t.to_string() + " is not standard");
}
}  // namespace detail

/// deg(T) = d_A(mu) + deg(T_{<= d-1}), A the node of d.
inline int degree(const Tableau& t, const AlgebraParams& params) {
  detail::require_standard(t, "degree");
  Multipartition shape(t.shape());
  int deg = 0;
  for (int k = t.size(); k >= 1; --k) {
    Node a = t.node_of(k);
    deg += d_below(shape, a, params);
    shape = remove_node(shape, a);
  }
  return deg;
}

/// codeg(T) = d^A(mu_A) + codeg(T_{<= d-1}).
inline int codegree(const Tableau& t, const AlgebraParams& params) {
  detail::require_standard(t, "codegree");
  Multipartition shape(t.shape());
  int codeg = 0;
  for (int k = t.size(); k >= 1; --k) {
    Node a = t.node_of(k);
    shape = remove_node(shape, a);
    codeg += d_above(shape, a, params);
  }
  return codeg;
}

/// S <= T in the Bruhat order on tableaux of one shape: w_S <= w_T.
inline bool tableau_bruhat(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw ParameterError("tableau_bruhat: tableaux have different shapes");
  return bruhat_leq(w_of_tableau(s), w_of_tableau(t));
}

/// The partial-shape criterion for row-strict tableaux: sh(S_{<=a}) dominates
/// sh(T_{<=a}) for every a.
inline bool partial_shape_dominance(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw ParameterError("partial_shape_dominance: tableaux have different shapes");
  for (int a = 1; a <= s.size(); ++a)
    if (!dominates(s.restrict(a).shape(), t.restrict(a).shape())) return false;
  return true;
}

// Relative positions of two entries r, s of a tableau.

/// r ->_T s: same row of the same component, s to the right.
inline bool east_of(const Tableau& t, int r, int s) {
  Node a = t.node_of(r), b = t.node_of(s);
  return a.comp == b.comp && a.row == b.row && b.col > a.col;
}

/// r |_T s (r above s in one column).
inline bool south_of(const Tableau& t, int r, int s) {
  Node a = t.node_of(r), b = t.node_of(s);
  return a.comp == b.comp && a.col == b.col && b.row > a.row;
}

/// r ↗_T s: same component, s strictly north-east of r.
inline bool northeast_of(const Tableau& t, int r, int s) {
  Node a = t.node_of(r), b = t.node_of(s);
  return a.comp == b.comp && a.row > b.row && a.col < b.col;
}

/// r occupies an earlier node than s.
inline bool earlier(const Tableau& t, int r, int s) { return t.node_of(r) < t.node_of(s); }

struct WeakEdge {
  std::size_t from;
  std::size_t to;
  int color;
  friend bool operator==(const WeakEdge&, const WeakEdge&) = default;
};

/// Edges T ->r S with S = s_r T standard and r earlier than r+1 in T.  Indices
/// refer to standard_tableaux(mu).
inline std::vector<WeakEdge> weak_bruhat_graph(const Multipartition& mu) {
  auto tabs = standard_tableaux(mu);
  std::vector<WeakEdge> out;
  auto index = [&](const Tableau& s) {
    auto it = std::lower_bound(tabs.begin(), tabs.end(), s,
                               [](const Tableau& x, const Tableau& y) { return x.reading_word() < y.reading_word(); });
    return static_cast<std::size_t>(it - tabs.begin());
  };
  for (std::size_t k = 0; k < tabs.size(); ++k)
    for (int r = 1; r < mu.size(); ++r) {
      const auto& t = tabs[k];
      if (!earlier(t, r, r + 1)) continue;
      auto s = t.swap(r);
      if (s.is_standard()) out.push_back({k, index(s), r});
    }
  return out;
}

/// T is t-terminal: some standard S has S ->t T.
inline bool is_terminal(const Tableau& t, int r) {
  if (r < 1 || r >= t.size()) return false;
  return earlier(t, r + 1, r) && t.swap(r).is_standard();
}

/// If T is (r_1, ..., r_m)-terminal, the start S_1 of the chain
/// S_1 ->r_1 S_2 -> ... ->r_m T.
inline std::optional<Tableau> terminal_chain_start(const Tableau& t, const std::vector<int>& colors) {
  Tableau cur = t;
  for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
    if (!is_terminal(cur, *it)) return std::nullopt;
    cur = cur.swap(*it);
  }
  return cur;
}

/// The (a,b,n)-Garnir belt: (a,c,n) for b <= c <= mu^{(n)}_a, then (a+1,g,n) for g <= b.
inline std::vector<Node> garnir_belt(const Multipartition& mu, int a, int b, int n) {
  if (!mu.contains({a, b, n}) || !mu.contains({a + 1, b, n}))
    throw ParameterError("garnir_belt: (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) +
                         ") needs both it and the node below it in " + mu.to_string());
  std::vector<Node> out;
  for (int c = b; c <= mu.part(n, a); ++c) out.push_back({a, c, n});
  for (int g = 1; g <= b; ++g) out.push_back({a + 1, g, n});
  return out;
}

/// The (a,b,n)-Garnir tableau: T^mu outside the belt; inside, the belt's
/// T^mu-entries in increasing order along columns (left to right, top to
/// bottom within a column).
inline Tableau garnir_tableau(const Multipartition& mu, int a, int b, int n) {
  auto belt = garnir_belt(mu, a, b, n);
  auto base = initial_tableau(mu);
  std::vector<int> entries;
  for (auto& x : belt) entries.push_back(base.entry(x));
  std::sort(entries.begin(), entries.end());
  auto order = belt;
  std::sort(order.begin(), order.end(), [](const Node& x, const Node& y) {
    return x.col != y.col ? x.col < y.col : x.row < y.row;
  });
  auto nodes = mu.nodes();
  std::vector<int> word = base.reading_word();
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto pos = std::lower_bound(nodes.begin(), nodes.end(), order[k]) - nodes.begin();
    word[static_cast<std::size_t>(pos)] = entries[k];
  }
  return Tableau(mu, std::move(word));
}

/// Which of the four alternatives hold for a standard T with r -> r+1
/// (kind = east) or r | r+1 (kind = south).  Bit k-1 set for alternative k.
enum class Adjacency { east, south };

inline unsigned adjacency_alternatives(const Tableau& t, int r, Adjacency kind) {
  auto rel = [&](const Tableau& x, int p, int q) { return kind == Adjacency::east ? east_of(x, p, q) : south_of(x, p, q); };
  const int d = t.size();
  unsigned bits = 0;
  for (int s = 1; s < d; ++s)
    if ((s < r - 1 || s > r + 1) && is_terminal(t, s) && rel(t.swap(s), r, r + 1)) {
      bits |= 1u;
      break;
    }
  if (r + 2 <= d && terminal_chain_start(t, {r, r + 1}) && rel(t.swap(r + 1).swap(r), r + 1, r + 2)) bits |= 2u;
  if (r - 1 >= 1 && terminal_chain_start(t, {r, r - 1}) && rel(t.swap(r - 1).swap(r), r - 1, r)) bits |= 4u;
  if (kind == Adjacency::east) {
    if (t == initial_tableau(t.shape())) bits |= 8u;
  } else {
    Node at = t.node_of(r);
    Multipartition mu(t.shape());
    if (mu.contains({at.row + 1, at.col, at.comp}) && t == garnir_tableau(mu, at.row, at.col, at.comp)) bits |= 8u;
  }
  return bits;
}

}  // namespace gspecht
