#pragma once

#include "kpieri/arith.hpp"
#include "kpieri/permutation.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpieri {

/// Weakly decreasing sequence of positive parts; the empty sequence is the
/// zero partition.
class Partition {
public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument if the parts
  /// are negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Accepts "[2,1]", "2,1" or "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  /// lambda_i, zero past the last part (1-based).
  int operator[](int i) const { return i <= num_parts() ? parts_[i - 1] : 0; }
  int weight() const;
  /// Componentwise containment lambda <= mu.
  bool contained_in(const Partition& mu) const;
  std::string str() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// Skew shape outer/inner with inner contained in outer.
class SkewShape {
public:
  /// Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition inner, Partition outer);

  const Partition& inner() const { return inner_; }
  const Partition& outer() const { return outer_; }
  int weight() const { return outer_.weight() - inner_.weight(); }

private:
  Partition inner_;
  Partition outer_;
};

/// v(lambda, k): v(i) = lambda_{k+1-i} + i for i <= k, remaining values in
/// increasing order. Throws std::invalid_argument if lambda has > k parts.
Permutation grassmannian_permutation(const Partition& lambda, int k);

/// Inverse of grassmannian_permutation. Throws std::invalid_argument unless
/// w has no descent other than (possibly) at k.
Partition partition_of_permutation(const Permutation& w, int k);

bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

struct StripCounts {
  int rows = 0;
  int cols = 0;

  bool operator==(const StripCounts&) const = default;
};

/// Numbers of nonempty rows and columns of the skew diagram.
StripCounts strip_counts(const SkewShape& s);

using PartitionExpansion = std::map<Partition, Coeff>;

/// G_lambda * G_(p) in K-theory of the Grassmannian, as a sum over
/// horizontal strips of weight >= p.
PartitionExpansion grassmannian_pieri_row(const Partition& lambda, int k, int p);

/// G_lambda * G_(1^p), as a sum over vertical strips of weight >= p.
/// Requires 1 <= p < k; throws std::invalid_argument otherwise.
PartitionExpansion grassmannian_pieri_col(const Partition& lambda, int k, int p);

} // namespace kpieri
