#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gspecht/combinatorics.hpp"

using namespace gspecht;

namespace {

AlgebraParams params(int e, std::vector<int> charge) { return AlgebraParams::combinatorial(e, std::move(charge)); }

Multipartition mp(const std::string& s, int level = 0) { return parse_multipartition(s, level); }

// Oracle: mu with one extra / one fewer node is still a multipartition.
bool still_multipartition(std::vector<std::vector<int>> comps) {
  for (auto& c : comps)
    for (std::size_t a = 1; a < c.size(); ++a)
      if (c[a] > c[a - 1]) return false;
  return true;
}

std::vector<Node> brute_addable(const Multipartition& mu) {
  std::vector<Node> out;
  for (int m = 1; m <= mu.level(); ++m)
    for (int a = 1; a <= mu.rows(m) + 1; ++a) {
      auto comps = mu.components();
      auto& c = comps[static_cast<std::size_t>(m - 1)];
      if (static_cast<int>(c.size()) < a) c.resize(static_cast<std::size_t>(a), 0);
      c[static_cast<std::size_t>(a - 1)] += 1;
      if (still_multipartition(comps)) out.push_back({a, mu.part(m, a) + 1, m});
    }
  return out;
}

std::vector<Node> brute_removable(const Multipartition& mu) {
  std::vector<Node> out;
  for (auto& n : mu.nodes()) {
    if (n.col != mu.part(n.comp, n.row)) continue;
    auto comps = mu.components();
    comps[static_cast<std::size_t>(n.comp - 1)][static_cast<std::size_t>(n.row - 1)] -= 1;
    auto& c = comps[static_cast<std::size_t>(n.comp - 1)];
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (still_multipartition(comps)) out.push_back(n);
  }
  return out;
}

// Oracle for standardness from scratch on the rows representation.
bool brute_standard(const Multipartition& mu, const std::vector<int>& word) {
  auto nodes = mu.nodes();
  std::map<Node, int> at;
  for (std::size_t k = 0; k < nodes.size(); ++k) at[nodes[k]] = word[k];
  for (auto& [n, x] : at) {
    auto right = at.find({n.row, n.col + 1, n.comp});
    if (right != at.end() && right->second < x) return false;
    auto down = at.find({n.row + 1, n.col, n.comp});
    if (down != at.end() && down->second < x) return false;
  }
  return true;
}

// Oracle for Bruhat: some subword of a fixed reduced word of w multiplies to u.
bool subword_bruhat(const Permutation& u, const Permutation& w) {
  auto word = canonical_reduced_word(w);
  std::size_t m = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    if (Permutation::from_word(u.size(), sub) == u) return true;
  }
  return false;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Cartan, Cases) {
  EXPECT_EQ(cartan(0, 0, 3), 2);
  EXPECT_EQ(cartan(0, 1, 3), -1);
  EXPECT_EQ(cartan(1, 0, 3), -1);
  EXPECT_EQ(cartan(0, 1, 2), -2);
  EXPECT_EQ(cartan(0, 2, 4), 0);
  EXPECT_EQ(cartan(0, 3, 4), -1);
  EXPECT_EQ(cartan(0, 1, 0), -1);
  EXPECT_EQ(cartan(-1, 0, 0), -1);
  EXPECT_EQ(cartan(0, 5, 0), 0);
  EXPECT_EQ(arrow(0, 1, 3), Arrow::forward);
  EXPECT_EQ(arrow(1, 0, 3), Arrow::backward);
  EXPECT_EQ(arrow(0, 1, 2), Arrow::both);
  EXPECT_EQ(arrow(0, 2, 4), Arrow::none);
}

TEST(Residue, Examples) {
  auto p = params(3, {0, 1, 1});
  EXPECT_EQ(residue(Node{1, 1, 3}, p), 1);
  EXPECT_EQ(residue(Node{1, 1, 1}, params(3, {2})), 2);
  EXPECT_EQ(residue(Node{2, 1, 1}, params(3, {0})), 2);
  EXPECT_EQ(residue(Node{2, 1, 1}, params(0, {0})), -1);
}

TEST(Multipartition, ParseAndFormat) {
  auto mu = mp("3,1|_|4,2");
  EXPECT_EQ(mu.level(), 3);
  EXPECT_EQ(mu.size(), 10);
  EXPECT_EQ(format_multicomposition(mu), "3,1|_|4,2");
  EXPECT_EQ(mp("", 2).to_string(), "_|_");
  EXPECT_EQ(mp("2,1", 3).to_string(), "2,1|_|_");
  EXPECT_THROW(mp("1,2"), ParameterError);
  EXPECT_THROW(mp("2,,1"), ParameterError);
  EXPECT_THROW(mp("2|1|1", 2), ParameterError);
  EXPECT_THROW(mp("a"), ParameterError);
  EXPECT_THROW(mp("2||1"), ParameterError);
  try {
    mp("3,x");
    FAIL();
  } catch (const ParameterError& err) {
    EXPECT_NE(std::string(err.what()).find("position 2"), std::string::npos);
  }
}

TEST(Multipartition, WorkedAddableRemovable) {
  auto mu = mp("3,1|_|4,2");
  std::vector<Node> rem{{1, 3, 1}, {2, 1, 1}, {1, 4, 3}, {2, 2, 3}};
  std::vector<Node> add{{1, 4, 1}, {2, 2, 1}, {3, 1, 1}, {1, 1, 2}, {1, 5, 3}, {2, 3, 3}, {3, 1, 3}};
  EXPECT_EQ(removable_nodes(mu), rem);
  EXPECT_EQ(addable_nodes(mu), add);
  auto empty = Multipartition::empty(1);
  EXPECT_TRUE(removable_nodes(empty).empty());
  EXPECT_EQ(addable_nodes(empty), (std::vector<Node>{{1, 1, 1}}));
}

TEST(Multipartition, AddableRemovableAgainstOracle) {
  for (int l = 1; l <= 3; ++l)
    for (int d = 0; d <= 6; ++d)
      for (auto& mu : multipartitions(l, d)) {
        auto a = brute_addable(mu), r = brute_removable(mu);
        std::sort(a.begin(), a.end());
        std::sort(r.begin(), r.end());
        EXPECT_EQ(addable_nodes(mu), a) << mu.to_string();
        EXPECT_EQ(removable_nodes(mu), r) << mu.to_string();
      }
}

TEST(Multipartition, EnumerationCounts) {
  // number of l-multipartitions of d: coefficient of prod_k (1-x^k)^{-l}
  auto count = [](int l, int d) {
    std::vector<long long> c(static_cast<std::size_t>(d + 1), 0);
    c[0] = 1;
    for (int rep = 0; rep < l; ++rep)
      for (int k = 1; k <= d; ++k)
        for (int n = k; n <= d; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - k)];
    return c[static_cast<std::size_t>(d)];
  };
  for (int l = 1; l <= 3; ++l)
    for (int d = 0; d <= 7; ++d) {
      auto all = multipartitions(l, d);
      EXPECT_EQ(static_cast<long long>(all.size()), count(l, d));
      std::set<Multicomposition> distinct(all.begin(), all.end());
      EXPECT_EQ(distinct.size(), all.size());
    }
}

TEST(Degrees, NodeDegreeExamples) {
  auto p = params(3, {0});
  auto mu = mp("2,1");
  EXPECT_EQ(d_below(mu, {1, 2, 1}, p), 1);
  EXPECT_EQ(d_below(mu, {2, 1, 1}, p), 0);
  EXPECT_THROW(d_below(mu, {1, 1, 1}, p), ParameterError);
  EXPECT_THROW(d_above(mu, {1, 1, 1}, p), ParameterError);
  auto empty = Multipartition::empty(1);
  auto pk = params(3, {2});
  EXPECT_EQ(d_residue(empty, 2, pk), 1);
  EXPECT_EQ(d_residue(empty, 0, pk), 0);
  EXPECT_EQ(d_residue(empty, 1, pk), 0);
}

TEST(Degrees, ContentAndDefect) {
  auto p = params(3, {0});
  auto alpha = content(mp("2,1"), p);
  EXPECT_EQ(alpha[0], 1);
  EXPECT_EQ(alpha[1], 1);
  EXPECT_EQ(alpha[2], 1);
  EXPECT_EQ(defect(alpha, p), 1);
  EXPECT_EQ(defect(RootVector{}, p), 0);
  RootVector a1;
  a1.add(0);
  EXPECT_EQ(defect(a1, p), 0);
  // e = 2 pairing of alpha_0 + alpha_1 uses a_01 = -2
  RootVector b;
  b.add(0);
  b.add(1);
  EXPECT_EQ(pairing(b, b, 2), 0);
}

TEST(Tableaux, WorkedInitialTableauAndResidues) {
  auto mu = mp("3,1|_|4,2");
  auto t = initial_tableau(mu);
  EXPECT_EQ(t.to_string(), "1 2 3 / 4 | _ | 5 6 7 8 / 9 10");
  EXPECT_EQ(t.node_of(5), (Node{1, 1, 3}));
  EXPECT_EQ(residue_sequence(t, params(3, {0, 1, 1})), (std::vector<int>{0, 1, 2, 2, 1, 2, 0, 1, 0, 1}));
  EXPECT_EQ(residue_sequence(initial_tableau(mp("2,1")), params(3, {0})), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(residue_sequence(initial_tableau(Multipartition::empty(1)), params(3, {0})).empty());
}

TEST(Tableaux, WorkedPermutation) {
  auto t = Tableau::from_rows({{{2, 5, 6}, {3}}, {}, {{1, 4, 9, 10}, {7, 8}}});
  EXPECT_TRUE(t.is_standard());
  EXPECT_EQ(w_of_tableau(t).cycle_notation(), "(1 2 5)(3 6 4)(7 9)(8 10)");
  // w_T T^mu = T
  EXPECT_EQ(initial_tableau(t.shape()).act(w_of_tableau(t)), t);
  EXPECT_TRUE(w_of_tableau(initial_tableau(t.shape())).is_identity());
}

TEST(Tableaux, CanonicalReducedWord) {
  auto w0 = Permutation::from_one_line({3, 2, 1});
  EXPECT_EQ(canonical_reduced_word(w0), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(Permutation::from_word(3, {1, 2, 1}), w0);
  // s_1 s_2 s_1 = 321 by direct composition of transpositions
  auto s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  EXPECT_EQ(s1 * s2 * s1, w0);
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& w : all_permutations(n)) {
      auto word = canonical_reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(Permutation::from_word(n, word), w);
    }
}

TEST(Tableaux, ReducedWordsEnumeration) {
  auto w0 = Permutation::from_one_line({3, 2, 1});
  auto words = reduced_words(w0, 60);
  ASSERT_TRUE(words.has_value());
  EXPECT_EQ(*words, (std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}}));
  // longest element of S_4 has 16 reduced words
  EXPECT_EQ(count_reduced_words(Permutation::from_one_line({4, 3, 2, 1}), 100), 16u);
  EXPECT_FALSE(reduced_words(Permutation::from_one_line({4, 3, 2, 1}), 10).has_value());
}

TEST(Tableaux, StandardCountsAgainstBruteForce) {
  for (int l = 1; l <= 2; ++l)
    for (int d = 0; d <= 6; ++d)
      for (auto& mu : multipartitions(l, d)) {
        if (l == 2 && d > 5) continue;
        std::set<std::vector<int>> brute;
        for (auto& w : all_permutations(static_cast<std::size_t>(d)))
          if (brute_standard(mu, w.one_line())) brute.insert(w.one_line());
        auto tabs = standard_tableaux(mu);
        ASSERT_EQ(tabs.size(), brute.size()) << mu.to_string();
        std::size_t k = 0;
        for (auto& w : brute) EXPECT_EQ(tabs[k++].reading_word(), w);  // sorted order
      }
  EXPECT_EQ(standard_tableaux(mp("2,1")).size(), 2u);
  EXPECT_EQ(standard_tableaux(mp("1,1,1,1,1")).size(), 1u);
  EXPECT_EQ(standard_tableaux(mp("3,2,1")).size(), 16u);  // hook length formula: 720/45
}

TEST(Tableaux, DegreeExamples) {
  auto p = params(3, {0});
  auto tabs = standard_tableaux(mp("2,1"));
  ASSERT_EQ(tabs.size(), 2u);
  EXPECT_EQ(tabs[0].to_string(), "1 2 / 3");
  EXPECT_EQ(tabs[1].to_string(), "1 3 / 2");
  EXPECT_EQ(degree(tabs[0], p), 0);
  EXPECT_EQ(degree(tabs[1], p), 1);
  EXPECT_EQ(degree(tabs[0], p) + codegree(tabs[0], p), 1);
  EXPECT_EQ(degree(tabs[1], p) + codegree(tabs[1], p), 1);
  EXPECT_EQ(degree(initial_tableau(mp("1,1")), p), 0);
  EXPECT_EQ(degree(initial_tableau(Multipartition::empty(2)), params(3, {0, 1})), 0);
  auto bad = Tableau(mp("2,1"), {2, 1, 3});
  EXPECT_THROW(degree(bad, p), ParameterError);
}

TEST(Bruhat, AgainstSubwordOracle) {
  auto s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  EXPECT_TRUE(bruhat_leq(s1, s1 * s2));
  EXPECT_FALSE(bruhat_leq(s1 * s2, s2 * s1));
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = all_permutations(n);
    for (auto& u : all)
      for (auto& w : all) EXPECT_EQ(bruhat_leq(u, w), subword_bruhat(u, w)) << u.to_string() << " " << w.to_string();
  }
  EXPECT_THROW(bruhat_leq(Permutation(2), Permutation(3)), ParameterError);
}

TEST(Bruhat, Dominance) {
  EXPECT_TRUE(dominates(mp("2"), mp("1,1")));
  EXPECT_FALSE(dominates(mp("1,1"), mp("2")));
  EXPECT_TRUE(dominates(mp("1|_"), mp("_|1")));
  EXPECT_FALSE(dominates(mp("_|2"), mp("1|1")));
  EXPECT_THROW(dominates(mp("2"), mp("1")), ParameterError);
}

// Bruhat order on row-strict tableaux agrees with the partial shape criterion.
TEST(Bruhat, PartialShapeCriterionExhaustive) {
  std::vector<Multicomposition> shapes;
  for (int d = 1; d <= 6; ++d)
    for (auto& mu : multipartitions(1, d)) shapes.push_back(mu);
  for (int d = 1; d <= 4; ++d)
    for (auto& mu : multipartitions(2, d)) shapes.push_back(mu);
  shapes.push_back(Multicomposition({{1, 2}}));
  shapes.push_back(Multicomposition({{2, 0, 1}}));
  shapes.push_back(Multicomposition({{1}, {1, 2}}));
  for (auto& mu : shapes) {
    std::vector<Tableau> rs;
    for (auto& w : all_permutations(static_cast<std::size_t>(mu.size()))) {
      Tableau t(mu, w.one_line());
      if (t.is_row_strict()) rs.push_back(t);
    }
    std::vector<std::vector<Multicomposition>> partial(rs.size());
    std::vector<Permutation> ws;
    for (std::size_t k = 0; k < rs.size(); ++k) {
      for (int a = 1; a <= mu.size(); ++a) partial[k].push_back(rs[k].restrict(a).shape());
      ws.push_back(w_of_tableau(rs[k]));
    }
    for (std::size_t s = 0; s < rs.size(); ++s)
      for (std::size_t t = 0; t < rs.size(); ++t) {
        bool crit = true;
        for (std::size_t a = 0; a < partial[s].size() && crit; ++a) crit = dominates(partial[s][a], partial[t][a]);
        ASSERT_EQ(bruhat_leq(ws[s], ws[t]), crit) << rs[s].to_string() << " vs " << rs[t].to_string();
      }
  }
}

TEST(WeakBruhat, SmallGraphs) {
  auto edges = weak_bruhat_graph(mp("2,1"));
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0], (WeakEdge{0, 1, 2}));
  EXPECT_TRUE(weak_bruhat_graph(mp("1,1,1,1")).empty());
  EXPECT_TRUE(weak_bruhat_graph(mp("4")).empty());
}

TEST(WeakBruhat, ConnectedAndRaisesLength) {
  for (int l = 1; l <= 2; ++l)
    for (int d = 1; d <= 6; ++d)
      for (auto& mu : multipartitions(l, d)) {
        auto tabs = standard_tableaux(mu);
        auto edges = weak_bruhat_graph(mu);
        std::vector<std::size_t> parent(tabs.size());
        for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
        auto find = [&](std::size_t x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        for (auto& e : edges) {
          EXPECT_EQ(tableau_length(tabs[e.to]), tableau_length(tabs[e.from]) + 1);
          parent[find(e.from)] = find(e.to);
        }
        std::set<std::size_t> roots;
        for (std::size_t k = 0; k < tabs.size(); ++k) roots.insert(find(k));
        EXPECT_EQ(roots.size(), 1u) << mu.to_string();
      }
}

TEST(Garnir, WorkedFigure) {
  auto mu = mp("3,1|7,6,5,2");
  auto belt = garnir_belt(mu, 2, 3, 2);
  EXPECT_EQ(belt.size(), 7u);
  auto g = garnir_tableau(mu, 2, 3, 2);
  EXPECT_TRUE(g.is_standard());
  std::vector<int> row2, row3;
  for (int b = 1; b <= 6; ++b) row2.push_back(g.entry({2, b, 2}));
  for (int b = 1; b <= 5; ++b) row3.push_back(g.entry({3, b, 2}));
  EXPECT_EQ(row2, (std::vector<int>{12, 13, 16, 18, 19, 20}));
  EXPECT_EQ(row3, (std::vector<int>{14, 15, 17, 21, 22}));
  EXPECT_THROW(garnir_belt(mu, 2, 3, 1), ParameterError);
}

TEST(Garnir, DegenerateIsInitial) {
  auto mu = mp("1,1");
  EXPECT_EQ(garnir_tableau(mu, 1, 1, 1), initial_tableau(mu));
}

TEST(Garnir, BruhatMaximumAgainstBruteForce) {
  for (int l = 1; l <= 2; ++l)
    for (int d = 2; d <= (l == 1 ? 8 : 6); ++d)
      for (auto& mu : multipartitions(l, d)) {
        std::vector<Tableau> tabs;
        bool have_garnir = false;
        for (auto& n : mu.nodes())
          if (mu.contains({n.row + 1, n.col, n.comp})) have_garnir = true;
        if (!have_garnir) continue;
        tabs = standard_tableaux(mu);
        auto base = initial_tableau(mu);
        for (auto& n : mu.nodes()) {
          if (!mu.contains({n.row + 1, n.col, n.comp})) continue;
          auto belt = garnir_belt(mu, n.row, n.col, n.comp);
          std::set<Node> in_belt(belt.begin(), belt.end());
          std::vector<const Tableau*> agree;
          for (auto& t : tabs) {
            bool ok = true;
            for (auto& x : mu.nodes())
              if (!in_belt.count(x) && t.entry(x) != base.entry(x)) ok = false;
            if (ok) agree.push_back(&t);
          }
          std::vector<const Tableau*> maximal;
          for (auto* t : agree) {
            bool top = true;
            for (auto* s : agree)
              if (s != t && tableau_bruhat(*t, *s)) top = false;
            if (top) maximal.push_back(t);
          }
          ASSERT_EQ(maximal.size(), 1u) << mu.to_string() << " at " << n.to_string();
          EXPECT_EQ(*maximal[0], garnir_tableau(mu, n.row, n.col, n.comp)) << mu.to_string() << " at " << n.to_string();
        }
      }
}

TEST(Adjacency, AlternativesSmall) {
  // T^mu with r -> r+1 satisfies alternative (4)
  auto mu = mp("2,1");
  auto t = initial_tableau(mu);
  EXPECT_TRUE(adjacency_alternatives(t, 1, Adjacency::east) & 8u);
  // [1 3 / 2]: 1 | 2 and it is the (1,1,1)-Garnir tableau
  auto tabs = standard_tableaux(mu);
  EXPECT_TRUE(south_of(tabs[1], 1, 2));
  EXPECT_TRUE(adjacency_alternatives(tabs[1], 1, Adjacency::south) & 8u);
}

TEST(Counts, SumOfSquares) {
  for (int l = 1; l <= 3; ++l)
    for (int d = 0; d <= 5; ++d) {
      long long s = 0;
      for (auto& mu : multipartitions(l, d)) {
        auto n = static_cast<long long>(standard_tableaux(mu).size());
        s += n * n;
      }
      long long expect = factorial(d);
      for (int k = 0; k < d; ++k) expect *= l;
      EXPECT_EQ(s, expect);
    }
}
