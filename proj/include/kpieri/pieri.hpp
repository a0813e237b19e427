#pragma once

#include "kpieri/chains.hpp"
#include "kpieri/polynomial.hpp"
#include "kpieri/schubert_basis.hpp"

#include <optional>
#include <vector>

namespace kpieri {

/// Sum of sign * G_end(chain) over the chains.
BasisExpansion collect_chains(const std::vector<SignedChain>& chains);

/// True when all chains ending at the same permutation carry the same sign.
bool sign_coherent(const std::vector<SignedChain>& chains);

/// G_v * G_{s_k}.
BasisExpansion monk_product(const Permutation& v, int k, EnumerationOptions options = {});

/// x_k * G_v.
BasisExpansion xk_product(const Permutation& v, int k, EnumerationOptions options = {});

/// G_v * G_(1^p)(x_1..x_k) by Pieri chains; empty if p > k. Throws
/// std::invalid_argument if p < 1.
BasisExpansion pieri_e_product(const Permutation& v, int k, int p,
                               EnumerationOptions options = {});

/// Same product from one (P0,P1) chain per endpoint of the upper k-interval,
/// weighted by the number of its valid markings; empty if p > k.
BasisExpansion compressed_pieri_product(const Permutation& v, int k, int p,
                                        std::optional<int> ambient = std::nullopt);

/// G_v * G_(p)(x_1..x_k) by dual Pieri chains. Throws if p < 1.
BasisExpansion pieri_h_product(const Permutation& v, int k, int p,
                               EnumerationOptions options = {});

/// G_v * G_(p)(x_1..x_k) truncated to S_n, computed by conjugating with
/// omega_0 in S_n and multiplying by G_(1^p)(x_1..x_{n-k}). Requires v in
/// S_n and 1 <= k < n.
BasisExpansion pieri_h_product_by_conjugation(const Permutation& v, int k, int p, int n);

/// Terms whose permutation lies in S_n.
BasisExpansion restrict_to(const BasisExpansion& e, int n);

/// S_v * e_p(x_1..x_k) in the Schubert basis. Requires 1 <= p <= k.
BasisExpansion cohomology_pieri_product(const Permutation& v, int k, int p,
                                        EnumerationOptions options = {});

/// G_(1^p)(x_1..x_k) - G_(1^p)(x_1..x_{k-1}) - x_k G_(1^{p-1})(x_1..x_{k-1})
///   + x_k G_(1^p)(x_1..x_{k-1}).
/// Requires k >= 2 and p >= 1.
Polynomial transition_residual(int k, int p);

// Brute-force products: multiply the polynomials and expand the result.

BasisExpansion oracle_monk_product(const Permutation& v, int k);
BasisExpansion oracle_xk_product(const Permutation& v, int k);
BasisExpansion oracle_e_product(const Permutation& v, int k, int p);
BasisExpansion oracle_h_product(const Permutation& v, int k, int p);
BasisExpansion oracle_cohomology_product(const Permutation& v, int k, int p);

} // namespace kpieri
