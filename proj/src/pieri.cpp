#include "kpieri/pieri.hpp"

#include <map>
#include <stdexcept>

namespace kpieri {

namespace {

void check_positive(int k, int p) {
  if (k < 1)
    throw std::invalid_argument("k must be positive");
  if (p < 1)
    throw std::invalid_argument("p must be positive");
}

} // namespace

BasisExpansion collect_chains(const std::vector<SignedChain>& chains) {
  BasisExpansion out;
  for (const SignedChain& c : chains)
    out.add(c.chain.end(), c.sign);
  return out;
}

bool sign_coherent(const std::vector<SignedChain>& chains) {
  std::map<Permutation, int, LengthLexLess> seen;
  for (const SignedChain& c : chains) {
    auto [it, inserted] = seen.try_emplace(c.chain.end(), c.sign);
    if (!inserted && it->second != c.sign)
      return false;
  }
  return true;
}

BasisExpansion monk_product(const Permutation& v, int k, EnumerationOptions options) {
  return collect_chains(enumerate_monk_chains(v, k, options));
}

BasisExpansion xk_product(const Permutation& v, int k, EnumerationOptions options) {
  return collect_chains(enumerate_xk_chains(v, k, options));
}

BasisExpansion pieri_e_product(const Permutation& v, int k, int p, EnumerationOptions options) {
  check_positive(k, p);
  if (p > k)
    return {};
  return collect_chains(enumerate_pieri_chains(v, k, p, options));
}

BasisExpansion compressed_pieri_product(const Permutation& v, int k, int p,
                                        std::optional<int> ambient) {
  check_positive(k, p);
  if (p > k)
    return {};
  const int n = ambient.value_or(default_ambient(v, k));
  const int base = length(v);
  BasisExpansion out;
  for (const Permutation& w : upper_k_interval(v, k, n)) {
    const std::optional<MarkedChain> chain = unique_chain(v, w, k);
    // endpoints reached only by chains violating (P0,P1) contribute nothing
    if (!chain)
      continue;
    const ChainClassification c = classify_chain(*chain);
    const int q = length(w) - base;
    out.add(w, sign_of_parity(q - p) * binomial(c.free, p - c.forced));
  }
  return out;
}

BasisExpansion pieri_h_product(const Permutation& v, int k, int p, EnumerationOptions options) {
  check_positive(k, p);
  return collect_chains(enumerate_dual_pieri_chains(v, k, p, options));
}

BasisExpansion pieri_h_product_by_conjugation(const Permutation& v, int k, int p, int n) {
  check_positive(k, p);
  if (k >= n)
    throw std::invalid_argument("conjugation needs k < n");
  const Permutation v_dual = conjugate_by_w0(v, n);
  const int k_dual = n - k;
  BasisExpansion out;
  if (p > k_dual)
    return out;
  EnumerationOptions options;
  options.ambient = n;
  for (const SignedChain& c : enumerate_pieri_chains(v_dual, k_dual, p, options))
    out.add(conjugate_by_w0(c.chain.end(), n), c.sign);
  return out;
}

BasisExpansion restrict_to(const BasisExpansion& e, int n) {
  BasisExpansion out;
  for (const auto& [w, c] : e.terms())
    if (w.size() <= n)
      out.add(w, c);
  return out;
}

BasisExpansion cohomology_pieri_product(const Permutation& v, int k, int p,
                                        EnumerationOptions options) {
  return collect_chains(enumerate_cohomology_chains(v, k, p, options));
}

Polynomial transition_residual(int k, int p) {
  if (k < 2)
    throw std::invalid_argument("transition identity needs k >= 2");
  if (p < 1)
    throw std::invalid_argument("p must be positive");
  const Polynomial xk = Polynomial::variable(k);
  Polynomial r = grothendieck_column(p, k);
  r -= grothendieck_column(p, k - 1);
  r -= mul(xk, grothendieck_column(p - 1, k - 1));
  r += mul(xk, grothendieck_column(p, k - 1));
  return r;
}

BasisExpansion oracle_monk_product(const Permutation& v, int k) {
  return expand_in_grothendieck_basis(
      mul(grothendieck_polynomial(v), grothendieck_polynomial(Permutation::simple(k))));
}

BasisExpansion oracle_xk_product(const Permutation& v, int k) {
  return expand_in_grothendieck_basis(mul(Polynomial::variable(k), grothendieck_polynomial(v)));
}

BasisExpansion oracle_e_product(const Permutation& v, int k, int p) {
  return expand_in_grothendieck_basis(mul(grothendieck_polynomial(v), grothendieck_column(p, k)));
}

BasisExpansion oracle_h_product(const Permutation& v, int k, int p) {
  return expand_in_grothendieck_basis(mul(grothendieck_polynomial(v), grothendieck_row(p, k)));
}

BasisExpansion oracle_cohomology_product(const Permutation& v, int k, int p) {
  return expand_in_schubert_basis(mul(schubert_polynomial(v), elementary_symmetric(p, k)));
}

} // namespace kpieri
