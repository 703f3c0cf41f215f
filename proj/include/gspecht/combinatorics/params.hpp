#pragma once

// Residues, the Cartan matrix of the cyclic / linear quiver, the fixed
// dominant weight (the charge), elements of the positive root lattice, and
// Laurent polynomials in q.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gspecht/errors.hpp"
#include "gspecht/scalars.hpp"

namespace gspecht {

/// Canonical representative of x in I = Z/eZ (e >= 2) or Z (e = 0).
inline int reduce_residue(int x, int e) {
  if (e == 0) return x;
  int r = x % e;
  return r < 0 ? r + e : r;
}

/// Cartan integer a_{ij}.  2 on the diagonal; -2 for i != j when e = 2;
/// -1 when j = i +- 1; 0 otherwise.
inline int cartan(int i, int j, int e) {
  i = reduce_residue(i, e);
  j = reduce_residue(j, e);
  if (i == j) return 2;
  if (e == 2) return -2;
  if (reduce_residue(j - i, e) == reduce_residue(1, e) || reduce_residue(i - j, e) == reduce_residue(1, e)) return -1;
  return 0;
}

/// How residue j sits relative to i in the quiver.
enum class Arrow { equal, none, forward, backward, both };

/// forward:  j = i+1 != i-1   (i -> j)
/// backward: j = i-1 != i+1   (i <- j)
/// both:     j = i+1 = i-1    (e = 2)
inline Arrow arrow(int i, int j, int e) {
  i = reduce_residue(i, e);
  j = reduce_residue(j, e);
  if (i == j) return Arrow::equal;
  bool up = reduce_residue(i + 1, e) == j;
  bool down = reduce_residue(i - 1, e) == j;
  if (up && down) return Arrow::both;
  if (up) return Arrow::forward;
  if (down) return Arrow::backward;
  return Arrow::none;
}

/// Ground data for the cyclotomic algebra and its combinatorics: the field
/// (which fixes e and xi) and the charge (k_1, ..., k_l).
struct AlgebraParams {
  FieldSpec field;
  std::vector<int> charge;

  int e() const { return field.e; }
  int level() const { return static_cast<int>(charge.size()); }
  int residue(int x) const { return reduce_residue(x, e()); }

  /// (Lambda, alpha_i) = #{m : k_m = i}
  int lambda_multiplicity(int i) const {
    int n = 0;
    for (int k : charge)
      if (k == residue(i)) ++n;
    return n;
  }

  static AlgebraParams make(FieldSpec field, std::vector<int> charge) {
    field.validate();
    if (charge.empty()) throw ParameterError("AlgebraParams: level must be at least 1");
    AlgebraParams p{std::move(field), std::move(charge)};
    for (int& k : p.charge) k = p.residue(k);
    return p;
  }

  /// Parameters for purely combinatorial work: e >= 2 uses the default prime,
  /// e = 0 the rationals with xi = 2.
  static AlgebraParams combinatorial(int e, std::vector<int> charge) {
    if (e == 0) return make(FieldSpec::rational_field(Rational(2)), std::move(charge));
    if (e < 2) throw ParameterError("AlgebraParams: e=" + std::to_string(e) + " is not allowed (xi != 1)");
    return make(FieldSpec::prime_field(default_prime(e), e), std::move(charge));
  }
};

/// Element of the positive root lattice Q_+, as residue -> multiplicity.
class RootVector {
 public:
  RootVector() = default;

  int operator[](int i) const {
    auto it = coeff_.find(i);
    return it == coeff_.end() ? 0 : it->second;
  }
  void add(int i, int n = 1) {
    int& c = coeff_[i];
    c += n;
    if (c == 0) coeff_.erase(i);
  }
  const std::map<int, int>& terms() const { return coeff_; }
  int height() const {
    int h = 0;
    for (auto& [i, c] : coeff_) h += c;
    return h;
  }
  bool operator==(const RootVector&) const = default;

 private:
  std::map<int, int> coeff_;
};

/// (alpha, beta) = sum a_i b_j a_{ij}
inline long long pairing(const RootVector& a, const RootVector& b, int e) {
  long long s = 0;
  for (auto& [i, x] : a.terms())
    for (auto& [j, y] : b.terms()) s += static_cast<long long>(x) * y * cartan(i, j, e);
  return s;
}

/// (Lambda, alpha)
inline long long lambda_pairing(const AlgebraParams& params, const RootVector& a) {
  long long s = 0;
  for (auto& [i, x] : a.terms()) s += static_cast<long long>(x) * params.lambda_multiplicity(i);
  return s;
}

/// def(alpha) = (Lambda, alpha) - (alpha, alpha)/2
inline long long defect(const RootVector& alpha, const AlgebraParams& params) {
  long long aa = pairing(alpha, alpha, params.e());
  return lambda_pairing(params, alpha) - aa / 2;
}

/// Laurent polynomial in q with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long c = 1) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }

  void add_term(int exponent, long long c) {
    if (c == 0) return;
    long long& x = coeff_[exponent];
    x += c;
    if (x == 0) coeff_.erase(exponent);
  }

  long long coefficient(int exponent) const {
    auto it = coeff_.find(exponent);
    return it == coeff_.end() ? 0 : it->second;
  }

  const std::map<int, long long>& terms() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }

  /// Value at q = 1.
  long long at_one() const {
    long long s = 0;
    for (auto& [k, c] : coeff_) s += c;
    return s;
  }

  /// The grading shift: M<m>_n = M_{n-m}, i.e. multiplication by q^m.
  LaurentPoly shifted(int m) const {
    LaurentPoly p;
    for (auto& [k, c] : coeff_) p.coeff_[k + m] = c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [k, c] : o.coeff_) add_term(k, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (auto& [i, x] : a.coeff_)
      for (auto& [j, y] : b.coeff_) p.add_term(i + j, x * y);
    return p;
  }
  bool operator==(const LaurentPoly&) const = default;

  std::string to_string() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (auto& [k, c] : coeff_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      long long a = c < 0 ? -c : c;
      if (k == 0) {
        out += std::to_string(a);
        continue;
      }
      if (a != 1) out += std::to_string(a) + "*";
      out += k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return out;
  }

 private:
  std::map<int, long long> coeff_;
};

}  // namespace gspecht
