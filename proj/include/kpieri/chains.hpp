#pragma once

#include "kpieri/permutation.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace kpieri {

struct ChainStep {
  CoverLabel label;
  bool marked = false;

  bool operator==(const ChainStep&) const = default;
};

/// A saturated chain start = v_0 -> v_1 -> ... -> v_q, each step a cover by
/// the transposition in its label, with some steps marked. Intermediate
/// permutations are recomputed on demand.
class MarkedChain {
public:
  MarkedChain() = default;
  MarkedChain(Permutation start, int k, std::vector<ChainStep> steps)
      : start_(std::move(start)), k_(k), steps_(std::move(steps)) {}
  /// Unmarked chain from a label sequence.
  static MarkedChain unmarked(Permutation start, int k, std::span<const CoverLabel> labels);

  const Permutation& start() const { return start_; }
  int k() const { return k_; }
  const std::vector<ChainStep>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int marks() const;
  std::vector<CoverLabel> labels() const;
  /// v_i, with v_0 = start.
  Permutation at(int i) const;
  Permutation end() const { return at(length()); }

  /// Every step is a Bruhat cover of its predecessor.
  bool is_saturated() const;
  /// Saturated and every label has a <= k < b.
  bool is_k_chain() const;

  MarkedChain with_marks(std::span<const bool> marks) const;

  bool operator==(const MarkedChain&) const = default;

private:
  Permutation start_;
  int k_ = 1;
  std::vector<ChainStep> steps_;
};

/// A chain together with the sign it contributes in a product formula.
struct SignedChain {
  MarkedChain chain;
  int sign = 1;
};

/// Covers forced to be marked and prohibited from being marked in every
/// valid Pieri marking of a (P0,P1) chain.
struct ChainClassification {
  int forced = 0;
  int prohibited = 0;
  int free = 0;

  bool operator==(const ChainClassification&) const = default;
};

struct EnumerationOptions {
  /// Largest position a label may use. Unset means the proven default:
  /// n + 1 for the e-type, Monk and x_k chains, where n is the smallest
  /// n >= k with v in S_n; dual chains use the current support + 1.
  std::optional<int> ambient;
  /// Fan the depth-first search out over first covers with OpenMP. Output
  /// order is identical to the serial search.
  bool parallel = false;
};

/// Default ambient bound n + 1.
int default_ambient(const Permutation& v, int k);

/// Pieri chain conditions: b weakly decreasing; a marked step's a is new;
/// an unmarked step precedes its successor; every step of the initial run
/// (equal b, strictly decreasing a) is marked.
bool validate_pieri_chain(const MarkedChain& c);

/// The dual conditions: a weakly increasing; a marked step's b is new; an
/// unmarked step dual-precedes its successor; every step of the initial run
/// (equal a, strictly increasing b) is marked.
bool validate_dual_pieri_chain(const MarkedChain& c);

/// Marks ignored: b weakly decreasing, and a step whose a occurred earlier
/// precedes its successor. Equivalent to admitting some Pieri marking.
bool satisfies_p0_p1(std::span<const CoverLabel> labels);
bool satisfies_p0_p1(const MarkedChain& c);

/// All Pieri chains in the k-Bruhat order from v with exactly p marks, each
/// with sign (-1)^(length - p). Throws std::invalid_argument unless 1<=p<=k.
std::vector<SignedChain> enumerate_pieri_chains(const Permutation& v, int k, int p,
                                                EnumerationOptions options = {});

/// Chains for multiplication by G_(p)(x_1..x_k) under the dual conditions.
/// Throws std::invalid_argument if p < 1.
std::vector<SignedChain> enumerate_dual_pieri_chains(const Permutation& v, int k, int p,
                                                     EnumerationOptions options = {});

/// Strictly increasing (in `precedes`) k-chains of length >= 1, sign
/// (-1)^(length - 1).
std::vector<SignedChain> enumerate_monk_chains(const Permutation& v, int k,
                                               EnumerationOptions options = {});

/// Bruhat chains (a_1,k)..(a_p,k),(k,b_1)..(k,b_q) with
/// a_p < ... < a_1 < k < b_q < ... < b_1 and p + q >= 1, sign (-1)^(q+1).
std::vector<SignedChain> enumerate_xk_chains(const Permutation& v, int k,
                                             EnumerationOptions options = {});

/// k-chains of length exactly p with b weakly decreasing and distinct a.
std::vector<SignedChain> enumerate_cohomology_chains(const Permutation& v, int k, int p,
                                                     EnumerationOptions options = {});

/// Every (P0,P1) k-chain of length >= 1 from v, unmarked.
std::vector<MarkedChain> enumerate_p0p1_chains(const Permutation& v, int k,
                                               EnumerationOptions options = {});

/// The unique (P0,P1) chain from v to w in the k-Bruhat order, built by
/// sweeping positions m from the ambient rank down to k+1; empty chain when
/// v == w, nullopt when none exists.
std::optional<MarkedChain> unique_chain(const Permutation& v, const Permutation& w, int k);

/// Forced/prohibited/free counts. Throws std::invalid_argument unless the
/// chain satisfies (P0,P1).
ChainClassification classify_chain(const MarkedChain& c);

/// All w with v <=_k w whose labels stay within `ambient`.
std::set<Permutation, LengthLexLess> upper_k_interval(const Permutation& v, int k, int ambient);

struct ForbiddenSegment {
  enum class Kind {
    /// (j,m), ..., (i,m), ..., (i,l) with i < j <= k < l < m
    crossing,
    /// (i,l), ..., (h,l), ..., (h,m), ..., (i,k+1), no other step on i between
    quad,
  };
  Kind kind;
  std::vector<std::size_t> indices;  // 0-based step indices of the pattern

  bool operator==(const ForbiddenSegment&) const = default;
};

/// First occurrence of either forbidden pattern in a label sequence of a
/// k-chain, or nullopt. Checks labels only.
std::optional<ForbiddenSegment> find_forbidden_segment(std::span<const CoverLabel> labels, int k);

using LabelPair = std::pair<CoverLabel, CoverLabel>;

/// The other maximal chain of a length-two Bruhat interval, decided from the
/// labels alone: disjoint labels commute, and the four intertwining shapes
///   ((k,l),(j,l)) -> ((j,k),(k,l))    ((j,l),(j,k)) -> ((j,k),(k,l))
///   ((j,l),(k,l)) -> ((k,l),(j,k))    ((j,k),(j,l)) -> ((k,l),(j,k))
/// map as shown. The shapes ((j,k),(k,l)) and ((k,l),(j,k)) intertwine in
/// two ways and need the start permutation; they throw std::invalid_argument.
LabelPair intertwine_pair(CoverLabel first, CoverLabel second);

/// Same, resolving every shape against the chain's start permutation.
/// Throws std::invalid_argument if (first, second) is not a chain from start.
LabelPair intertwine_pair(const Permutation& start, CoverLabel first, CoverLabel second);

/// Image under conjugation by omega_0 in S_n: start -> w0 start w0, label
/// (a,b) -> (n+1-b, n+1-a), k -> n-k, marks kept. Throws
/// std::invalid_argument if the chain leaves S_n.
MarkedChain dualize_chain(const MarkedChain& c, int n);

} // namespace kpieri
