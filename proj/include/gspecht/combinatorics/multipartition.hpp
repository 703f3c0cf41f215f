#pragma once

// Multicompositions, multipartitions and their nodes.  Nodes are ordered the
// way T^mu labels them: component, then row, then column.  "Below" compares
// (component, row) only, so nodes in the same row are neither above nor
// below each other.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "gspecht/combinatorics/params.hpp"
#include "gspecht/errors.hpp"

namespace gspecht {

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend bool operator==(const Node&, const Node&) = default;
  friend std::strong_ordering operator<=>(const Node& x, const Node& y) {
    if (auto c = x.comp <=> y.comp; c != 0) return c;
    if (auto c = x.row <=> y.row; c != 0) return c;
    return x.col <=> y.col;
  }

  /// Strictly lower in the diagram (a later row or a later component).
  bool below(const Node& o) const { return comp > o.comp || (comp == o.comp && row > o.row); }
  bool above(const Node& o) const { return o.below(*this); }

  std::string to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + "," + std::to_string(comp) + ")";
  }
};

/// res A = k_m + b - a
inline int residue(const Node& n, const AlgebraParams& params) {
  if (n.comp < 1 || n.comp > params.level())
    throw ParameterError("residue: node " + n.to_string() + " lies outside level " + std::to_string(params.level()));
  return params.residue(params.charge[static_cast<std::size_t>(n.comp - 1)] + n.col - n.row);
}

/// An l-tuple of compositions.  Trailing zero parts are dropped; zero parts in
/// the middle are kept (they occur as shapes of partial row-strict tableaux).
class Multicomposition {
 public:
  Multicomposition() = default;
  explicit Multicomposition(std::vector<std::vector<int>> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw ParameterError("Multicomposition: level must be at least 1");
    for (auto& c : comps_) {
      for (int x : c)
        if (x < 0) throw ParameterError("Multicomposition: negative part");
      while (!c.empty() && c.back() == 0) c.pop_back();
    }
  }
  static Multicomposition empty(int level) {
    return Multicomposition(std::vector<std::vector<int>>(static_cast<std::size_t>(level)));
  }

  int level() const { return static_cast<int>(comps_.size()); }
  const std::vector<std::vector<int>>& components() const { return comps_; }
  const std::vector<int>& component(int m) const { return comps_.at(static_cast<std::size_t>(m - 1)); }

  /// mu^{(m)}_a, zero past the end.
  int part(int m, int a) const {
    const auto& c = component(m);
    return a >= 1 && a <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(a - 1)] : 0;
  }
  int rows(int m) const { return static_cast<int>(component(m).size()); }

  int size() const {
    int s = 0;
    for (auto& c : comps_)
      for (int x : c) s += x;
    return s;
  }

  bool contains(const Node& n) const {
    return n.comp >= 1 && n.comp <= level() && n.row >= 1 && n.col >= 1 && n.col <= part(n.comp, n.row);
  }

  bool is_multipartition() const {
    for (auto& c : comps_)
      for (std::size_t a = 1; a < c.size(); ++a)
        if (c[a] > c[a - 1]) return false;
    return true;
  }

  /// Nodes in T^mu labelling order.
  std::vector<Node> nodes() const {
    std::vector<Node> out;
    for (int m = 1; m <= level(); ++m)
      for (int a = 1; a <= rows(m); ++a)
        for (int b = 1; b <= part(m, a); ++b) out.push_back({a, b, m});
    return out;
  }

  std::string to_string() const;

  friend bool operator==(const Multicomposition&, const Multicomposition&) = default;
  friend auto operator<=>(const Multicomposition&, const Multicomposition&) = default;

 protected:
  std::vector<std::vector<int>> comps_;
};

class Multipartition : public Multicomposition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<std::vector<int>> comps) : Multicomposition(std::move(comps)) {
    if (!is_multipartition()) throw ParameterError("Multipartition: parts must be weakly decreasing: " + to_string());
  }
  explicit Multipartition(const Multicomposition& c) : Multipartition(c.components()) {}
  static Multipartition empty(int level) {
    return Multipartition(std::vector<std::vector<int>>(static_cast<std::size_t>(level)));
  }
};

/// Text format: components separated by '|', parts by ',', '_' for an empty
/// component; the empty string is the empty multipartition.
inline std::string format_multicomposition(const Multicomposition& mu) {
  std::string out;
  for (int m = 1; m <= mu.level(); ++m) {
    if (m > 1) out += "|";
    const auto& c = mu.component(m);
    if (c.empty()) {
      out += "_";
      continue;
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (a) out += ",";
      out += std::to_string(c[a]);
    }
  }
  return out;
}

inline std::string Multicomposition::to_string() const { return format_multicomposition(*this); }

/// Parses the text format.  Missing components up to `level` are empty; more
/// components than `level` is an error.  level <= 0 means "as many as written".
inline Multipartition parse_multipartition(const std::string& text, int level = 0) {
  auto fail = [&](std::size_t pos, const std::string& what) {
    throw ParameterError("multipartition '" + text + "': " + what + " at position " + std::to_string(pos));
  };
  std::vector<std::vector<int>> comps;
  if (!text.empty()) {
    std::size_t start = 0;
    for (;;) {
      std::size_t bar = text.find('|', start);
      std::size_t stop = bar == std::string::npos ? text.size() : bar;
      std::vector<int> comp;
      if (stop == start) fail(start, "empty component (write '_')");
      if (text.compare(start, stop - start, "_") != 0) {
        std::size_t p = start;
        while (p <= stop) {
          std::size_t q = p;
          long long value = 0;
          while (q < stop && text[q] >= '0' && text[q] <= '9') {
            value = value * 10 + (text[q] - '0');
            if (value > 1000000) fail(q, "part too large");
            ++q;
          }
          if (q == p) fail(p, q < stop ? std::string("unexpected character '") + text[q] + "'" : "expected a part");
          if (value == 0) fail(p, "zero part");
          if (q < stop && text[q] != ',') fail(q, std::string("unexpected character '") + text[q] + "'");
          comp.push_back(static_cast<int>(value));
          p = q + 1;
        }
      }
      comps.push_back(std::move(comp));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
  }
  if (level > 0) {
    if (static_cast<int>(comps.size()) > level)
      throw ParameterError("multipartition '" + text + "' has " + std::to_string(comps.size()) +
                           " components but the level is " + std::to_string(level));
    comps.resize(static_cast<std::size_t>(level));
  }
  if (comps.empty()) comps.resize(1);
  return Multipartition(std::move(comps));
}

/// Removable nodes, top to bottom.
inline std::vector<Node> removable_nodes(const Multicomposition& mu) {
  std::vector<Node> out;
  for (int m = 1; m <= mu.level(); ++m)
    for (int a = 1; a <= mu.rows(m); ++a) {
      int b = mu.part(m, a);
      if (b > 0 && mu.part(m, a + 1) < b) out.push_back({a, b, m});
    }
  return out;
}

/// Addable nodes, top to bottom.
inline std::vector<Node> addable_nodes(const Multicomposition& mu) {
  std::vector<Node> out;
  for (int m = 1; m <= mu.level(); ++m)
    for (int a = 1; a <= mu.rows(m) + 1; ++a) {
      int b = mu.part(m, a) + 1;
      if (a == 1 || mu.part(m, a - 1) >= b) out.push_back({a, b, m});
    }
  return out;
}

inline bool is_removable(const Multicomposition& mu, const Node& n) {
  auto r = removable_nodes(mu);
  return std::find(r.begin(), r.end(), n) != r.end();
}

inline bool is_addable(const Multicomposition& mu, const Node& n) {
  auto r = addable_nodes(mu);
  return std::find(r.begin(), r.end(), n) != r.end();
}

/// mu_A
inline Multipartition remove_node(const Multipartition& mu, const Node& a) {
  if (!is_removable(mu, a)) throw ParameterError("remove_node: " + a.to_string() + " is not removable from " + mu.to_string());
  auto comps = mu.components();
  comps[static_cast<std::size_t>(a.comp - 1)][static_cast<std::size_t>(a.row - 1)] -= 1;
  return Multipartition(std::move(comps));
}

/// mu^B
inline Multipartition add_node(const Multipartition& mu, const Node& b) {
  if (!is_addable(mu, b)) throw ParameterError("add_node: " + b.to_string() + " is not addable to " + mu.to_string());
  auto comps = mu.components();
  auto& c = comps[static_cast<std::size_t>(b.comp - 1)];
  if (static_cast<int>(c.size()) < b.row) c.resize(static_cast<std::size_t>(b.row), 0);
  c[static_cast<std::size_t>(b.row - 1)] += 1;
  return Multipartition(std::move(comps));
}

namespace detail {
template <class Pred>
int signed_count(const Multicomposition& mu, int i, const AlgebraParams& params, Pred pred) {
  int n = 0;
  for (auto& b : addable_nodes(mu))
    if (residue(b, params) == i && pred(b)) ++n;
  for (auto& b : removable_nodes(mu))
    if (residue(b, params) == i && pred(b)) --n;
  return n;
}
}  // namespace detail

/// d_A(mu): addable minus removable res(A)-nodes strictly below the removable node A.
inline int d_below(const Multicomposition& mu, const Node& a, const AlgebraParams& params) {
  if (!is_removable(mu, a)) throw ParameterError("d_A: " + a.to_string() + " is not removable for " + mu.to_string());
  return detail::signed_count(mu, residue(a, params), params, [&](const Node& n) { return n.below(a); });
}

/// d^B(mu): addable minus removable res(B)-nodes strictly above the addable node B.
inline int d_above(const Multicomposition& mu, const Node& b, const AlgebraParams& params) {
  if (!is_addable(mu, b)) throw ParameterError("d^B: " + b.to_string() + " is not addable for " + mu.to_string());
  return detail::signed_count(mu, residue(b, params), params, [&](const Node& n) { return n.above(b); });
}

/// d_i(mu): addable minus removable i-nodes.
inline int d_residue(const Multicomposition& mu, int i, const AlgebraParams& params) {
  return detail::signed_count(mu, params.residue(i), params, [](const Node&) { return true; });
}

/// cont(mu) = sum of alpha_{res A} over the nodes.
inline RootVector content(const Multicomposition& mu, const AlgebraParams& params) {
  RootVector a;
  for (auto& n : mu.nodes()) a.add(residue(n, params));
  return a;
}

/// mu dominates nu (both of the same size and level).
inline bool dominates(const Multicomposition& mu, const Multicomposition& nu) {
  if (mu.size() != nu.size() || mu.level() != nu.level())
    throw ParameterError("dominates: shapes " + mu.to_string() + " and " + nu.to_string() + " are not comparable");
  int before_mu = 0, before_nu = 0;
  for (int m = 1; m <= mu.level(); ++m) {
    int rows = std::max(mu.rows(m), nu.rows(m));
    int sm = before_mu, sn = before_nu;
    for (int c = 1; c <= rows; ++c) {
      sm += mu.part(m, c);
      sn += nu.part(m, c);
      if (sm < sn) return false;
    }
    before_mu = sm;
    before_nu = sn;
  }
  return true;
}

inline bool strictly_dominates(const Multicomposition& mu, const Multicomposition& nu) {
  return mu != nu && dominates(mu, nu);
}

/// All partitions of n, parts decreasing, in reverse lexicographic order ((n) first).
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// All l-multipartitions of d: sizes of earlier components largest first,
/// then each component in reverse lexicographic order.
inline std::vector<Multipartition> multipartitions(int level, int d) {
  if (level < 1) throw ParameterError("multipartitions: level must be at least 1");
  if (d < 0) throw ParameterError("multipartitions: negative size");
  std::vector<Multipartition> out;
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(level));
  auto rec = [&](auto& self, int m, int left) -> void {
    if (m == level - 1) {
      for (auto& p : partitions(left)) {
        comps[static_cast<std::size_t>(m)] = p;
        out.emplace_back(comps);
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (auto& p : partitions(k)) {
        comps[static_cast<std::size_t>(m)] = p;
        self(self, m + 1, left - k);
      }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace gspecht
