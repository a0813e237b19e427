#include "kpieri/pieri.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>

using namespace kpieri;

namespace {

Polynomial schubert_sum(const BasisExpansion& e) {
  Polynomial f;
  for (const auto& [w, c] : e.terms())
    f.add_scaled(schubert_polynomial(w), c);
  return f;
}

BasisExpansion single(const char* w, Coeff c = 1) {
  BasisExpansion e;
  e.add(Permutation::parse(w), c);
  return e;
}

} // namespace

TEST_CASE("worked example: coefficient 2 at 426315") {
  const Permutation v = Permutation::parse("21543");
  const BasisExpansion chains = pieri_e_product(v, 3, 2);
  CHECK(chains.coefficient(Permutation::parse("426315")) == 2);
  CHECK(chains == compressed_pieri_product(v, 3, 2));
  CHECK(chains == oracle_e_product(v, 3, 2));
}

TEST_CASE("small products") {
  CHECK(pieri_e_product(Permutation(), 1, 1) == single("21"));
  CHECK(pieri_e_product(Permutation(), 3, 2) == single("1342"));
  CHECK(monk_product(Permutation(), 2) == single("132"));
  CHECK(xk_product(Permutation(), 1) == single("21"));
  CHECK(pieri_h_product(Permutation(), 2, 2) == single("1423"));
  CHECK(cohomology_pieri_product(Permutation(), 3, 2) == single("1342"));
  // x_1^2 = G_312
  CHECK(monk_product(Permutation::parse("21"), 1) == single("312"));
}

TEST_CASE("degenerate arguments") {
  CHECK(pieri_e_product(Permutation::parse("21"), 2, 3).empty());
  CHECK(compressed_pieri_product(Permutation::parse("21"), 2, 3).empty());
  CHECK_THROWS_AS(pieri_e_product(Permutation(), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(pieri_h_product(Permutation(), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cohomology_pieri_product(Permutation(), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(pieri_h_product_by_conjugation(Permutation::parse("12354"), 2, 1, 4),
                  std::invalid_argument);
}

TEST_CASE("e-products reproduce the polynomial product on S_4") {
  for (const Permutation& v : all_permutations(4))
    for (int k = 1; k <= 3; ++k)
      for (int p = 1; p <= k; ++p) {
        const BasisExpansion e = pieri_e_product(v, k, p);
        CHECK(grothendieck_sum(e) == mul(grothendieck_polynomial(v), grothendieck_column(p, k)));
        CHECK(e == oracle_e_product(v, k, p));
        CHECK(e == compressed_pieri_product(v, k, p));
      }
}

TEST_CASE("signs alternate with degree and never cancel") {
  for (const Permutation& v : all_permutations(4))
    for (int k = 1; k <= 3; ++k)
      for (int p = 1; p <= k; ++p) {
        const std::vector<SignedChain> chains = enumerate_pieri_chains(v, k, p);
        CHECK(sign_coherent(chains));
        const BasisExpansion e = pieri_e_product(v, k, p);
        for (const auto& [w, c] : e.terms()) {
          const int excess = length(w) - length(v) - p;
          CHECK(excess >= 0);
          CHECK(c * (excess % 2 == 0 ? 1 : -1) > 0);
        }
      }
}

TEST_CASE("sign coherence detects conflicting signs") {
  const Permutation v = Permutation();
  std::vector<SignedChain> chains = enumerate_pieri_chains(v, 1, 1);
  chains.push_back(chains.front());
  CHECK(sign_coherent(chains));
  chains.back().sign = -1;
  CHECK_FALSE(sign_coherent(chains));
}

TEST_CASE("Monk and x_k products on S_4") {
  for (const Permutation& v : all_permutations(4))
    for (int k = 1; k <= 4; ++k) {
      if (k <= 3) {
        const BasisExpansion m = monk_product(v, k);
        CHECK(grothendieck_sum(m) ==
              mul(grothendieck_polynomial(v), grothendieck_polynomial(Permutation::simple(k))));
        CHECK(m == oracle_monk_product(v, k));
      }
      const BasisExpansion x = xk_product(v, k);
      CHECK(grothendieck_sum(x) == mul(Polynomial::variable(k), grothendieck_polynomial(v)));
      CHECK(x == oracle_xk_product(v, k));
    }
}

TEST_CASE("h-products reproduce the polynomial product on S_3 and S_4") {
  for (const Permutation& v : all_permutations(4))
    for (int k = 1; k <= 3; ++k)
      for (int p = 1; p <= 3; ++p) {
        const BasisExpansion h = pieri_h_product(v, k, p);
        CHECK(grothendieck_sum(h) == mul(grothendieck_polynomial(v), grothendieck_row(p, k)));
        CHECK(h == oracle_h_product(v, k, p));
      }
}

TEST_CASE("h-products by conjugation agree with the direct product inside S_n") {
  for (int n = 3; n <= 5; ++n)
    for (const Permutation& v : all_permutations(n - 1))
      for (int k = 1; k < n; ++k)
        for (int p = 1; p <= n - k; ++p)
          CHECK(pieri_h_product_by_conjugation(v, k, p, n) ==
                restrict_to(pieri_h_product(v, k, p), n));
}

TEST_CASE("restrict_to") {
  BasisExpansion e;
  e.add(Permutation::parse("21"), 1);
  e.add(Permutation::parse("1243"), -1);
  CHECK(restrict_to(e, 3) == single("21"));
  CHECK(restrict_to(e, 4) == e);
}

TEST_CASE("cohomology products on S_4") {
  for (const Permutation& v : all_permutations(4))
    for (int k = 1; k <= 3; ++k)
      for (int p = 1; p <= k; ++p) {
        const BasisExpansion s = cohomology_pieri_product(v, k, p);
        CHECK(schubert_sum(s) == mul(schubert_polynomial(v), elementary_symmetric(p, k)));
        CHECK(s == oracle_cohomology_product(v, k, p));
        BasisExpansion lowest;
        const BasisExpansion e = pieri_e_product(v, k, p);
        for (const auto& [w, c] : e.terms()) {
          if (length(w) == length(v) + p)
            lowest.add(w, c);
        }
        CHECK(s == lowest);
        for (const auto& [w, c] : s.terms())
          CHECK(c == 1);
      }
}

TEST_CASE("transition identity for column classes") {
  for (int k = 2; k <= 5; ++k)
    for (int p = 1; p <= k; ++p)
      CHECK(transition_residual(k, p).is_zero());
  CHECK_THROWS_AS(transition_residual(1, 1), std::invalid_argument);
}

TEST_CASE("parallel enumeration gives the same products") {
  EnumerationOptions par;
  par.parallel = true;
  for (const Permutation& v : all_permutations(4))
    for (int k = 1; k <= 3; ++k)
      for (int p = 1; p <= k; ++p) {
        CHECK(pieri_e_product(v, k, p, par) == pieri_e_product(v, k, p));
        CHECK(pieri_h_product(v, k, p, par) == pieri_h_product(v, k, p));
      }
}
