#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gspecht/errors.hpp"

namespace gspecht {

/// Element of the symmetric group on {1..n} in one-line notation.
/// Products compose as functions: (u * w)(k) = u(w(k)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

  static Permutation from_one_line(std::vector<int> images) {
    std::vector<bool> seen(images.size() + 1, false);
    for (int x : images) {
      if (x < 1 || x > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(x)])
        throw ParameterError("Permutation: one-line notation is not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  /// s_{w[0]} s_{w[1]} ... as a product of simple transpositions.
  static Permutation from_word(std::size_t n, const std::vector<int>& word) {
    Permutation p(n);
    for (int r : word) p = p.right_simple(r);
    return p;
  }

  static Permutation simple(std::size_t n, int r) { return Permutation(n).right_simple(r); }

  std::size_t size() const { return img_.size(); }
  int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const {
    Permutation q(size());
    for (std::size_t k = 0; k < size(); ++k) q.img_[static_cast<std::size_t>(img_[k] - 1)] = static_cast<int>(k + 1);
    return q;
  }

  friend Permutation operator*(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw ParameterError("Permutation: size mismatch in product");
    Permutation p(u.size());
    for (std::size_t k = 0; k < w.size(); ++k) p.img_[k] = u(w.img_[k]);
    return p;
  }

  /// Number of inversions.
  int length() const {
    int n = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (img_[i] > img_[j]) ++n;
    return n;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < size(); ++k)
      if (img_[k] != static_cast<int>(k + 1)) return false;
    return true;
  }

  /// w * s_r: swaps the entries in positions r and r+1.
  Permutation right_simple(int r) const {
    check_simple(r);
    Permutation p = *this;
    std::swap(p.img_[static_cast<std::size_t>(r - 1)], p.img_[static_cast<std::size_t>(r)]);
    return p;
  }

  /// s_r * w: swaps the values r and r+1.
  Permutation left_simple(int r) const {
    check_simple(r);
    Permutation p = *this;
    for (auto& x : p.img_) {
      if (x == r)
        x = r + 1;
      else if (x == r + 1)
        x = r;
    }
    return p;
  }

  /// l(w s_r) < l(w)
  bool has_right_descent(int r) const { return (*this)(r) > (*this)(r + 1); }

  /// l(s_r w) < l(w)
  bool has_left_descent(int r) const {
    std::size_t pr = 0, pr1 = 0;
    for (std::size_t k = 0; k < size(); ++k) {
      if (img_[k] == r) pr = k;
      if (img_[k] == r + 1) pr1 = k;
    }
    return pr > pr1;
  }

  /// Lexicographic rank of the one-line notation (Lehmer code).
  std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < size(); ++j)
        if (img_[j] < img_[i]) ++smaller;
      r = r * (size() - i) + smaller;
    }
    return r;
  }

  /// Disjoint cycles, smallest element first, fixed points omitted, e.g. "(1 2 5)(3 6 4)".
  std::string cycle_notation() const {
    std::string out;
    std::vector<bool> seen(size() + 1, false);
    for (int start = 1; start <= static_cast<int>(size()); ++start) {
      if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
      out += "(";
      int k = start;
      bool first = true;
      do {
        if (!first) out += " ";
        out += std::to_string(k);
        first = false;
        seen[static_cast<std::size_t>(k)] = true;
        k = (*this)(k);
      } while (k != start);
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < size(); ++k) {
      if (k) out += ",";
      out += std::to_string(img_[k]);
    }
    return out + "]";
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  void check_simple(int r) const {
    if (r < 1 || r >= static_cast<int>(size()))
      throw ParameterError("Permutation: simple transposition s_" + std::to_string(r) + " out of range");
  }

  std::vector<int> img_;
};

/// Canonical reduced word: repeatedly take the smallest r with w(r) > w(r+1),
/// replace w by w s_r and record r; the recorded list reversed is a reduced
/// word (r_1, ..., r_m) with w = s_{r_1} ... s_{r_m}.
inline std::vector<int> canonical_reduced_word(Permutation w) {
  std::vector<int> collected;
  const int n = static_cast<int>(w.size());
  for (;;) {
    int r = 1;
    while (r < n && !w.has_right_descent(r)) ++r;
    if (r >= n) break;
    w = w.right_simple(r);
    collected.push_back(r);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

/// Number of reduced words of w, saturating at cap + 1.
inline std::size_t count_reduced_words(const Permutation& w, std::size_t cap) {
  std::map<Permutation, std::size_t> memo;
  auto rec = [&](auto& self, const Permutation& u) -> std::size_t {
    if (u.is_identity()) return 1;
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (int r = 1; r < static_cast<int>(u.size()); ++r)
      if (u.has_right_descent(r)) {
        total += self(self, u.right_simple(r));
        if (total > cap) {
          total = cap + 1;
          break;
        }
      }
    memo.emplace(u, total);
    return total;
  };
  return rec(rec, w);
}

/// All reduced words of w in lexicographic order, or nullopt if there are more than cap.
inline std::optional<std::vector<std::vector<int>>> reduced_words(const Permutation& w, std::size_t cap) {
  if (count_reduced_words(w, cap) > cap) return std::nullopt;
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  auto rec = [&](auto& self, const Permutation& u) -> void {
    if (u.is_identity()) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int r = 1; r < static_cast<int>(u.size()); ++r)
      if (u.has_right_descent(r)) {
        suffix.push_back(r);
        self(self, u.right_simple(r));
        suffix.pop_back();
      }
  };
  rec(rec, w);
  std::sort(out.begin(), out.end());
  return out;
}

/// Bruhat order u <= w via the subword characterization, evaluated along the
/// canonical reduced word of w with the lifting property: for w = s w' reduced,
/// u <= w iff (s u < u ? s u <= w' : u <= w').
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw ParameterError("bruhat_leq: permutations of different degree");
  if (u.length() > w.length()) return false;
  Permutation x = u;
  for (int r : canonical_reduced_word(w))
    if (x.has_left_descent(r)) x = x.left_simple(r);
  return x.is_identity();
}

/// All permutations of {1..n} in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace gspecht
