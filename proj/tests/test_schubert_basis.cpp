#include "kpieri/grassmannian.hpp"
#include "kpieri/schubert_basis.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include <map>
#include <random>

using namespace kpieri;
using Rational = boost::multiprecision::cpp_rational;

namespace {

Polynomial mono(std::vector<int> e, Coeff c = 1) { return Polynomial::monomial(Monomial(e), c); }

Polynomial x(int i) { return Polynomial::variable(i); }

/// Degree first, then the exponent of the highest variable decides.
bool leads(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() > b.degree();
  std::vector<int> ea = a.exponents(), eb = b.exponents();
  const std::size_t n = std::max(ea.size(), eb.size());
  ea.resize(n, 0);
  eb.resize(n, 0);
  for (std::size_t i = n; i-- > 0;)
    if (ea[i] != eb[i])
      return ea[i] > eb[i];
  return false;
}

/// Coefficients c_u with sum c_u G_u = f over the given basis, found by
/// exact Gaussian elimination; throws if f is outside their span.
std::map<Permutation, Rational> solve_in_basis(const Polynomial& f,
                                               const std::vector<Permutation>& basis) {
  std::map<Monomial, std::size_t> row_of;
  auto row = [&row_of](const Monomial& m) {
    return row_of.try_emplace(m, row_of.size()).first->second;
  };
  for (const Permutation& u : basis)
    for (const Term& t : grothendieck_polynomial(u).terms())
      row(t.monomial);
  for (const Term& t : f.terms())
    row(t.monomial);

  const std::size_t rows = row_of.size();
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j)
    for (const Term& t : grothendieck_polynomial(basis[j]).terms())
      m[row_of.at(t.monomial)][j] = t.coeff;
  for (const Term& t : f.terms())
    m[row_of.at(t.monomial)][cols] = t.coeff;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= cols; ++j)
      m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j <= cols; ++j)
        m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0)
      throw std::runtime_error("polynomial outside the span");
  REQUIRE(pivot_col.size() == cols);  // the G_u are independent
  std::map<Permutation, Rational> out;
  for (std::size_t i = 0; i < r; ++i)
    if (m[i][cols] != 0)
      out[basis[pivot_col[i]]] = m[i][cols];
  return out;
}

} // namespace

TEST_CASE("Lehmer codes") {
  CHECK(code(Permutation()).empty());
  CHECK(code(Permutation::parse("21543")) == LehmerCode{1, 0, 2, 1});
  CHECK(code(Permutation::parse("426315")) == LehmerCode{3, 1, 3, 1});
  CHECK(permutation_of_code({1, 0, 2, 1}) == Permutation::parse("21543"));
  CHECK(permutation_of_code({}).is_identity());
  CHECK(permutation_of_code({0, 0, 3}) == Permutation::parse("126345"));
  for (const Permutation& w : all_permutations(5)) {
    const LehmerCode c = code(w);
    CHECK(permutation_of_code(c) == w);
    int sum = 0;
    for (int e : c)
      sum += e;
    CHECK(sum == length(w));
  }
}

TEST_CASE("Schubert polynomials") {
  CHECK(schubert_polynomial(Permutation()) == Polynomial(1));
  CHECK(schubert_polynomial(Permutation::parse("321")) == mono({2, 1}));
  CHECK(schubert_polynomial(Permutation::parse("132")) == x(1) + x(2));
  CHECK(schubert_polynomial(Permutation::parse("1342")) == elementary_symmetric(2, 3));
  // dominant permutations (weakly decreasing codes) give single monomials
  CHECK(schubert_polynomial(permutation_of_code({3, 1, 1})) == mono({3, 1, 1}));
}

TEST_CASE("Grothendieck polynomials") {
  CHECK(grothendieck_polynomial(Permutation()) == Polynomial(1));
  CHECK(grothendieck_polynomial(Permutation::parse("21")) == x(1));
  CHECK(grothendieck_polynomial(Permutation::parse("132")) == x(1) + x(2) - mono({1, 1}));
  CHECK(grothendieck_polynomial(Permutation::parse("312")) == mono({2}));
  CHECK(grothendieck_polynomial(Permutation::parse("321")) == mono({2, 1}));
}

TEST_CASE("polynomials do not depend on the chain from the longest element") {
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& w : all_permutations(n)) {
      CHECK(compute_grothendieck(w, AscentChoice::first) ==
            compute_grothendieck(w, AscentChoice::last));
      CHECK(compute_schubert(w, AscentChoice::first) == compute_schubert(w, AscentChoice::last));
      CHECK(compute_grothendieck(w, AscentChoice::last) == grothendieck_polynomial(w));
    }
}

TEST_CASE("polynomials do not depend on the ambient S_n") {
  // climb from w to the longest element of a larger S_n and come back down
  auto build_in = [](const Permutation& w, int n) {
    std::vector<int> window = w.window(n);
    std::vector<int> steps;
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 1; i < n && !moved; ++i)
        if (window[i - 1] < window[i]) {
          std::swap(window[i - 1], window[i]);
          steps.push_back(i);
          moved = true;
        }
    }
    std::vector<int> staircase;
    for (int i = 1; i < n; ++i)
      staircase.push_back(n - i);
    Polynomial f = mono(staircase);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      f = isobaric_difference(f, *it);
    return f;
  };
  for (const Permutation& w : all_permutations(4))
    for (int n : {5, 6})
      CHECK(build_in(w, n) == grothendieck_polynomial(w));
}

TEST_CASE("lowest degree component of G_w is S_w") {
  for (const Permutation& w : all_permutations(5))
    CHECK(lowest_degree_component(grothendieck_polynomial(w)) == schubert_polynomial(w));
}

TEST_CASE("leading monomial of S_w is x^code(w) with coefficient 1") {
  for (const Permutation& w : all_permutations(5)) {
    const Polynomial low = lowest_degree_component(grothendieck_polynomial(w));
    Term best = low.terms().front();
    for (const Term& t : low.terms())
      if (leads(t.monomial, best.monomial))
        best = t;
    CHECK(best.coeff == 1);
    CHECK(best.monomial == Monomial(code(w)));
  }
}

TEST_CASE("partition-indexed Grothendieck polynomials") {
  CHECK(grothendieck_of_partition(Partition(), 3) == Polynomial(1));
  CHECK(grothendieck_of_partition(Partition{1}, 2) == x(1) + x(2) - mono({1, 1}));
  CHECK(grothendieck_of_partition(Partition{1, 1}, 3) ==
        grothendieck_polynomial(Permutation::parse("1342")));
  CHECK(grothendieck_column(4, 3).is_zero());
  CHECK(grothendieck_column(0, 3) == Polynomial(1));
  CHECK(grothendieck_row(2, 2) == grothendieck_polynomial(Permutation::parse("1423")));
  CHECK(lowest_degree_component(grothendieck_row(2, 3)) == complete_homogeneous(2, 3));
  CHECK(lowest_degree_component(grothendieck_column(2, 3)) == elementary_symmetric(2, 3));
  CHECK_THROWS_AS(grothendieck_of_partition(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("Grothendieck expansions") {
  BasisExpansion one;
  one.add(Permutation(), 1);
  CHECK(expand_in_grothendieck_basis(Polynomial(1)) == one);
  BasisExpansion s1;
  s1.add(Permutation::parse("21"), 1);
  CHECK(expand_in_grothendieck_basis(x(1)) == s1);
  CHECK(expand_in_grothendieck_basis(Polynomial()).empty());

  const Polynomial product =
      mul(grothendieck_polynomial(Permutation::parse("21543")), grothendieck_column(2, 3));
  CHECK(expand_in_grothendieck_basis(product).coefficient(Permutation::parse("426315")) == 2);
}

TEST_CASE("expansion round trips on single basis elements") {
  for (const Permutation& w : all_permutations(5)) {
    BasisExpansion expected;
    expected.add(w, 1);
    CHECK(expand_in_grothendieck_basis(grothendieck_polynomial(w)) == expected);
    CHECK(expand_in_schubert_basis(schubert_polynomial(w)) == expected);
  }
}

TEST_CASE("expansion agrees with an exact linear solve over S_5") {
  const std::vector<Permutation> basis = all_permutations(5);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f;
    for (int t = 0; t < 6; ++t)
      f.add_scaled(grothendieck_polynomial(basis[pick(rng)]), coeff(rng));
    const std::map<Permutation, Rational> solved = solve_in_basis(f, basis);
    const BasisExpansion peeled = expand_in_grothendieck_basis(f);
    CHECK(peeled.size() == solved.size());
    for (const auto& [w, c] : peeled.terms()) {
      auto it = solved.find(w);
      REQUIRE(it != solved.end());
      CHECK(it->second == Rational(c));
    }
    CHECK(grothendieck_sum(peeled) == f);
  }
}

TEST_CASE("expansion of products lands back on the product") {
  for (const Permutation& v : all_permutations(4)) {
    const Polynomial f = mul(grothendieck_polynomial(v), grothendieck_column(2, 3));
    CHECK(grothendieck_sum(expand_in_grothendieck_basis(f)) == f);
  }
}

TEST_CASE("Schubert expansions") {
  CHECK(expand_in_schubert_basis(Polynomial()).empty());
  BasisExpansion s2;
  s2.add(Permutation::parse("132"), 1);
  CHECK(expand_in_schubert_basis(x(1) + x(2)) == s2);
  BasisExpansion e2;
  e2.add(grassmannian_permutation(Partition{1, 1}, 3), 1);
  CHECK(expand_in_schubert_basis(elementary_symmetric(2, 3)) == e2);
  CHECK_THROWS_AS(expand_in_schubert_basis(x(1) + mono({1, 1})), std::invalid_argument);
  // x_1^2 = S_312
  BasisExpansion sq;
  sq.add(Permutation::parse("312"), 1);
  CHECK(expand_in_schubert_basis(mono({2})) == sq);
}

TEST_CASE("expansion step limit is enforced") {
  ExpansionOptions tight;
  tight.max_steps = 1;
  CHECK_THROWS_AS(expand_in_grothendieck_basis(x(1) + x(2), tight), InternalError);
}

TEST_CASE("basis expansion arithmetic drops zeros") {
  BasisExpansion e;
  e.add(Permutation::parse("21"), 3);
  e.add(Permutation::parse("21"), -3);
  CHECK(e.empty());
  e.add(Permutation::parse("132"), 2);
  BasisExpansion f;
  f.add(e, -2);
  CHECK(f.coefficient(Permutation::parse("132")) == -4);
  CHECK(f.coefficient(Permutation::parse("21")) == 0);
}
