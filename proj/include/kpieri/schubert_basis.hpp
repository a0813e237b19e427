#pragma once

#include "kpieri/arith.hpp"
#include "kpieri/permutation.hpp"
#include "kpieri/polynomial.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

namespace kpieri {

class Partition;

/// Lehmer code: entry i counts j > i with w(j) < w(i). Trailing zeros trimmed.
using LehmerCode = std::vector<int>;

LehmerCode code(const Permutation& w);
/// Inverse of `code`. Every finite sequence of nonnegative integers is the
/// code of exactly one permutation of S_infinity.
Permutation permutation_of_code(const LehmerCode& c);

/// A finite integer combination of basis elements indexed by permutations,
/// iterated in (length, window lex) order. Zero coefficients are never stored.
class BasisExpansion {
public:
  using Map = std::map<Permutation, Coeff, LengthLexLess>;

  BasisExpansion() = default;

  void add(const Permutation& w, Coeff c);
  void add(const BasisExpansion& other, Coeff scale = 1);
  Coeff coefficient(const Permutation& w) const;

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const BasisExpansion&) const = default;

private:
  Map terms_;
};

/// Schubert polynomial S_w, memoized.
const Polynomial& schubert_polynomial(const Permutation& w);
/// Grothendieck polynomial G_w, memoized.
const Polynomial& grothendieck_polynomial(const Permutation& w);

/// Which ascent to climb when building a polynomial from omega_0.
enum class AscentChoice { first, last };

/// Uncached constructions from omega_0 of the minimal S_n containing w,
/// climbing the weak order through the first or last ascent at each step.
/// Used to check that the result does not depend on the chain.
Polynomial compute_schubert(const Permutation& w, AscentChoice choice);
Polynomial compute_grothendieck(const Permutation& w, AscentChoice choice);

/// G_lambda(x_1..x_k) = G_{v(lambda,k)}. Throws std::invalid_argument when
/// lambda has more than k parts.
Polynomial grothendieck_of_partition(const Partition& lambda, int k);
/// G_{(1^p)}(x_1..x_k); zero when p > k.
Polynomial grothendieck_column(int p, int k);
/// G_{(p)}(x_1..x_k).
Polynomial grothendieck_row(int p, int k);

struct ExpansionOptions {
  /// Upper bound on reduction steps before the expansion is declared runaway.
  std::size_t max_steps = 1'000'000;
};

/// Unique finite expansion f = sum c_w G_w by lowest-degree peeling.
/// Throws InternalError if the remainder's lowest degree ever drops or the
/// step limit is hit.
BasisExpansion expand_in_grothendieck_basis(const Polynomial& f, ExpansionOptions options = {});

/// Unique expansion of a homogeneous f in Schubert polynomials. Throws
/// std::invalid_argument on non-homogeneous input.
BasisExpansion expand_in_schubert_basis(const Polynomial& f, ExpansionOptions options = {});

/// Evaluates sum c_w G_w as a polynomial.
Polynomial grothendieck_sum(const BasisExpansion& e);

/// Number of cached polynomials, for diagnostics.
std::size_t grothendieck_cache_size();

} // namespace kpieri
