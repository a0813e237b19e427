#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kpieri {

/// A permutation of S_infinity in one-line notation. Only a finite window is
/// stored; w(i) = i beyond it. The window is kept trimmed of trailing fixed
/// points so that equal permutations have identical representations.
/// Positions and values are 1-based throughout.
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `window` is a permutation of 1..m.
  explicit Permutation(std::vector<int> window);
  Permutation(std::initializer_list<int> window)
      : Permutation(std::vector<int>(window)) {}

  static Permutation identity() { return {}; }
  /// The adjacent transposition s_i = (i, i+1).
  static Permutation simple(int i);
  /// The longest element n...21 of S_n.
  static Permutation longest(int n);

  /// Accepts "4,2,6,3,1,5" or, when every value is a single digit, "426315".
  static Permutation parse(std::string_view text);

  /// w(i) for any i >= 1.
  int operator()(int i) const {
    return i <= static_cast<int>(window_.size()) ? window_[i - 1] : i;
  }

  /// Trimmed window; w lies in S_n for every n >= size().
  const std::vector<int>& window() const { return window_; }
  int size() const { return static_cast<int>(window_.size()); }
  bool is_identity() const { return window_.empty(); }

  /// The window extended (with fixed points) to length n >= size().
  std::vector<int> window(int n) const;

  Permutation inverse() const;

  /// Compact text: digits when all values are < 10, else comma separated.
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  /// Lexicographic on trimmed windows; use LengthLexLess for output order.
  std::strong_ordering operator<=>(const Permutation& other) const {
    return window_ <=> other.window_;
  }

private:
  void trim();
  std::vector<int> window_;
};

/// Transposition label (a, b), a < b, of a Bruhat cover.
struct CoverLabel {
  int a = 1;
  int b = 2;

  bool operator==(const CoverLabel&) const = default;
  auto operator<=>(const CoverLabel&) const = default;
};

/// (a,b) < (c,d) iff b > d, or b == d and a < c. The order used by
/// Monk chains and the unmarked covers of Pieri chains.
inline bool precedes(CoverLabel x, CoverLabel y) {
  return x.b > y.b || (x.b == y.b && x.a < y.a);
}

/// (a,b) < (c,d) iff a < c, or a == c and b > d. The image of `precedes`
/// under conjugation by the longest element.
inline bool dual_precedes(CoverLabel x, CoverLabel y) {
  return x.a < y.a || (x.a == y.a && x.b > y.b);
}

/// Orders permutations by (length, trimmed window lexicographic).
struct LengthLexLess {
  bool operator()(const Permutation& x, const Permutation& y) const;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

/// Number of inversions.
int length(const Permutation& w);

/// w with the values at positions t.a and t.b exchanged.
Permutation apply_transposition(const Permutation& w, CoverLabel t);

/// Cover condition: w(a) < w(b) and no position strictly between a and b
/// carries a value strictly between them.
bool is_cover(const Permutation& v, CoverLabel t);

/// All k-Bruhat covers (a, b) of v with a <= k < b <= ambient.
std::vector<CoverLabel> k_covers(const Permutation& v, int k, int ambient);

/// Characterization of v <=_k w by the two position/value conditions.
bool k_bruhat_leq(const Permutation& v, const Permutation& w, int k);

/// omega_0 w omega_0 in S_n, i.e. i -> n+1 - w(n+1-i).
/// Throws std::invalid_argument when w is not in S_n.
Permutation conjugate_by_w0(const Permutation& w, int n);

/// Restriction of w to `positions`, renumbered order-isomorphically.
Permutation flatten(const Permutation& w, std::span<const int> positions);

/// Smallest n >= k with w(i) = i for all i > n.
inline int support_bound(const Permutation& w, int k) {
  return w.size() > k ? w.size() : k;
}

/// All permutations of S_n, in lexicographic order of their windows.
std::vector<Permutation> all_permutations(int n);

} // namespace kpieri
