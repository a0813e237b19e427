#include "kpieri/polynomial.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>
#include <unordered_map>

namespace kpieri {

namespace {

using Accumulator = std::unordered_map<Monomial, Coeff, MonomialHash>;

int byte_at(std::uint64_t word, int j) { return static_cast<int>((word >> (8 * j)) & 0xff); }

Polynomial from_accumulator(const Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0)
      terms.push_back({m, c});
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  return Polynomial(std::move(terms));
}

void accumulate(Accumulator& acc, const Monomial& m, Coeff c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted)
    it->second = checked_add(it->second, c);
}

} // namespace

Monomial::Monomial(std::span<const int> exponents) {
  int last = static_cast<int>(exponents.size());
  while (last > 0 && exponents[last - 1] == 0)
    --last;
  if (last > kMaxVariables)
    throw std::length_error("monomial uses more than 16 variables");
  long degree = 0;
  for (int j = 0; j < last; ++j) {
    const int e = exponents[j];
    if (e < 0)
      throw std::invalid_argument("negative exponent");
    degree += e;
    if (degree > kMaxDegree)
      throw std::length_error("monomial degree exceeds 255");
    if (j < 8)
      lo_ |= static_cast<std::uint64_t>(e) << (8 * j);
    else
      hi_ |= static_cast<std::uint64_t>(e) << (8 * (j - 8));
  }
  degree_ = static_cast<int>(degree);
}

Monomial Monomial::variable(int i, int power) {
  std::vector<int> e(i, 0);
  e[i - 1] = power;
  return Monomial(e);
}

int Monomial::exponent(int i) const {
  if (i < 1 || i > kMaxVariables)
    return 0;
  return i <= 8 ? byte_at(lo_, i - 1) : byte_at(hi_, i - 9);
}

int Monomial::last_variable() const {
  for (int i = kMaxVariables; i >= 1; --i)
    if (exponent(i) != 0)
      return i;
  return 0;
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> e(last_variable());
  for (int i = 1; i <= static_cast<int>(e.size()); ++i)
    e[i - 1] = exponent(i);
  return e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree_ + other.degree_ > kMaxDegree)
    throw OverflowError("monomial degree exceeds 255");
  // no byte can carry because every exponent is bounded by the total degree
  Monomial r;
  r.lo_ = lo_ + other.lo_;
  r.hi_ = hi_ + other.hi_;
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::with_exponent(int i, int e) const {
  if (i < 1 || i > kMaxVariables) {
    if (e == 0)
      return *this;
    throw std::length_error("monomial uses more than 16 variables");
  }
  Monomial r = *this;
  const int old = exponent(i);
  if (r.degree_ - old + e > kMaxDegree)
    throw OverflowError("monomial degree exceeds 255");
  std::uint64_t& word = i <= 8 ? r.lo_ : r.hi_;
  const int shift = 8 * ((i - 1) % 8);
  word &= ~(std::uint64_t{0xff} << shift);
  word |= static_cast<std::uint64_t>(e) << shift;
  r.degree_ += e - old;
  return r;
}

Monomial Monomial::swapped(int i) const {
  const int a = exponent(i);
  const int b = exponent(i + 1);
  if (a == b)
    return *this;
  return with_exponent(i, b).with_exponent(i + 1, a);
}

Polynomial::Polynomial(Coeff constant) {
  if (constant != 0)
    terms_.push_back({Monomial(), constant});
}

Polynomial::Polynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  for (const Term& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial)
      terms_.back().coeff = checked_add(terms_.back().coeff, t.coeff);
    else
      terms_.push_back(t);
    if (terms_.back().coeff == 0)
      terms_.pop_back();
  }
}

Polynomial Polynomial::monomial(const Monomial& m, Coeff c) {
  Polynomial p;
  if (c != 0)
    p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(int i) { return monomial(Monomial::variable(i)); }

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  return (it != terms_.end() && it->monomial == m) ? it->coeff : 0;
}

int Polynomial::min_degree() const {
  if (terms_.empty())
    throw std::invalid_argument("degree of the zero polynomial");
  return terms_.front().monomial.degree();
}

int Polynomial::max_degree() const {
  if (terms_.empty())
    throw std::invalid_argument("degree of the zero polynomial");
  return terms_.back().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || min_degree() == max_degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_)
    t.coeff = checked_neg(t.coeff);
  return r;
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, Coeff c) {
  if (c == 0 || other.is_zero())
    return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto x = terms_.begin();
  auto y = other.terms_.begin();
  while (x != terms_.end() || y != other.terms_.end()) {
    if (y == other.terms_.end() || (x != terms_.end() && x->monomial < y->monomial)) {
      merged.push_back(*x++);
    } else if (x == terms_.end() || y->monomial < x->monomial) {
      merged.push_back({y->monomial, checked_mul(y->coeff, c)});
      ++y;
    } else {
      Coeff sum = checked_add(x->coeff, checked_mul(y->coeff, c));
      if (sum != 0)
        merged.push_back({x->monomial, sum});
      ++x;
      ++y;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return add_scaled(other, 1); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return add_scaled(other, -1); }

Polynomial& Polynomial::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_)
    t.coeff = checked_mul(t.coeff, c);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

std::string Polynomial::str() const {
  if (terms_.empty())
    return "0";
  std::vector<Term> sorted = terms_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Term& x, const Term& y) {
    if (x.monomial.degree() != y.monomial.degree())
      return x.monomial.degree() < y.monomial.degree();
    return x.monomial.exponents() > y.monomial.exponents();
  });
  std::string out;
  for (std::size_t n = 0; n < sorted.size(); ++n) {
    const Term& t = sorted[n];
    Coeff c = t.coeff;
    if (n == 0) {
      if (c < 0)
        out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // magnitude as unsigned so INT64_MIN prints correctly
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    std::string mono;
    std::vector<int> e = t.monomial.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1)
        mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

Polynomial mul_serial(const Polynomial& f, const Polynomial& g) {
  Accumulator acc;
  acc.reserve(f.size() * g.size() / 2 + 1);
  for (const Term& s : f.terms())
    for (const Term& t : g.terms())
      accumulate(acc, s.monomial * t.monomial, checked_mul(s.coeff, t.coeff));
  return from_accumulator(acc);
}

Polynomial mul_parallel(const Polynomial& f, const Polynomial& g) {
  const auto& outer = f.size() >= g.size() ? f.terms() : g.terms();
  const auto& inner = f.size() >= g.size() ? g.terms() : f.terms();
  const long count = static_cast<long>(outer.size());
  std::vector<Accumulator> partial(static_cast<std::size_t>(omp_get_max_threads()));
  bool overflow = false;

#pragma omp parallel
  {
    Accumulator& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    try {
#pragma omp for schedule(static)
      for (long n = 0; n < count; ++n)
        for (const Term& t : inner)
          accumulate(acc, outer[n].monomial * t.monomial, checked_mul(outer[n].coeff, t.coeff));
    } catch (const OverflowError&) {
#pragma omp atomic write
      overflow = true;
    }
  }
  if (overflow)
    throw OverflowError("integer overflow in polynomial multiplication");

  Accumulator& total = partial.front();
  for (std::size_t n = 1; n < partial.size(); ++n)
    for (const auto& [m, c] : partial[n])
      accumulate(total, m, c);
  return from_accumulator(total);
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  constexpr std::size_t kParallelThreshold = 1u << 16;
  if (f.size() * g.size() >= kParallelThreshold && !omp_in_parallel() && omp_get_max_threads() > 1)
    return mul_parallel(f, g);
  return mul_serial(f, g);
}

Polynomial swap_variables(const Polynomial& f, int i) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms())
    terms.push_back({t.monomial.swapped(i), t.coeff});
  return Polynomial(std::move(terms));
}

Polynomial divided_difference(const Polynomial& f, int i) {
  // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
  //   = x_i^b x_{i+1}^b * sum_{j<a-b} x_i^{a-b-1-j} x_{i+1}^j   when a > b
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    const int a = t.monomial.exponent(i);
    const int b = t.monomial.exponent(i + 1);
    if (a == b)
      continue;
    const int lo = std::min(a, b);
    const int span = std::abs(a - b);
    const Coeff c = a > b ? t.coeff : checked_neg(t.coeff);
    for (int j = 0; j < span; ++j) {
      Monomial m = t.monomial.with_exponent(i, lo + span - 1 - j).with_exponent(i + 1, lo + j);
      terms.push_back({m, c});
    }
  }
  return Polynomial(std::move(terms));
}

Polynomial isobaric_difference(const Polynomial& f, int i) {
  Polynomial shifted = f;
  shifted.add_scaled(mul_serial(f, Polynomial::variable(i + 1)), -1);
  return divided_difference(shifted, i);
}

Polynomial isobaric_difference_alt(const Polynomial& f, int i) {
  Polynomial d = divided_difference(f, i);
  Polynomial r = f + d;
  r.add_scaled(mul_serial(d, Polynomial::variable(i)), -1);
  return r;
}

Polynomial lowest_degree_component(const Polynomial& f) {
  if (f.is_zero())
    throw std::invalid_argument("lowest degree component of the zero polynomial");
  const int d = f.min_degree();
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    if (t.monomial.degree() != d)
      break;
    terms.push_back(t);
  }
  return Polynomial(std::move(terms));
}

namespace {

void choose_monomials(int first, int k, int remaining, bool repeat, std::vector<int>& e,
                      std::vector<Term>& out) {
  if (remaining == 0) {
    out.push_back({Monomial(e), 1});
    return;
  }
  for (int i = first; i <= k; ++i) {
    ++e[i - 1];
    choose_monomials(repeat ? i : i + 1, k, remaining - 1, repeat, e, out);
    --e[i - 1];
  }
}

} // namespace

Polynomial elementary_symmetric(int p, int k) {
  if (p < 0 || k < 0)
    throw std::invalid_argument("elementary_symmetric needs p, k >= 0");
  if (p > k)
    return {};
  std::vector<int> e(k, 0);
  std::vector<Term> terms;
  choose_monomials(1, k, p, false, e, terms);
  return Polynomial(std::move(terms));
}

Polynomial complete_homogeneous(int p, int k) {
  if (p < 0 || k < 0)
    throw std::invalid_argument("complete_homogeneous needs p, k >= 0");
  if (k == 0)
    return p == 0 ? Polynomial(1) : Polynomial();
  std::vector<int> e(k, 0);
  std::vector<Term> terms;
  choose_monomials(1, k, p, true, e, terms);
  return Polynomial(std::move(terms));
}

} // namespace kpieri
