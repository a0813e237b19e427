#pragma once

#include "kpieri/arith.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kpieri {

/// Exponent vector of x_1^e_1 x_2^e_2 ... over at most kMaxVariables
/// variables, packed one byte per exponent. Total degree is capped at 255,
/// which bounds every individual exponent as well.
class Monomial {
public:
  static constexpr int kMaxVariables = 16;
  static constexpr int kMaxDegree = 255;

  Monomial() = default;
  /// Throws std::length_error beyond kMaxVariables or kMaxDegree.
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(int i, int power = 1);

  /// Exponent of x_i, 1-based.
  int exponent(int i) const;
  int degree() const { return degree_; }
  /// Index of the last variable with a nonzero exponent, 0 for the constant.
  int last_variable() const;
  /// Trimmed exponent vector (no trailing zeros).
  std::vector<int> exponents() const;

  /// Product of monomials. Throws OverflowError past kMaxDegree.
  Monomial operator*(const Monomial& other) const;
  /// Exchanges the exponents of x_i and x_{i+1}.
  Monomial swapped(int i) const;
  Monomial with_exponent(int i, int e) const;

  bool operator==(const Monomial&) const = default;

  /// Term order: total degree first; within a degree compare exponents from
  /// the highest-index variable down, larger exponent is greater. Under this
  /// order the Schubert polynomial of w has leading monomial x^code(w).
  friend bool operator<(const Monomial& x, const Monomial& y) {
    if (x.degree_ != y.degree_)
      return x.degree_ < y.degree_;
    if (x.hi_ != y.hi_)
      return x.hi_ < y.hi_;
    return x.lo_ < y.lo_;
  }

  std::size_t hash() const noexcept {
    return static_cast<std::size_t>(lo_ * 0x9e3779b97f4a7c15ULL ^ (hi_ + 0x632be59bd9b4e019ULL));
  }

private:
  // byte j of lo_ holds x_{j+1}, byte j of hi_ holds x_{j+9}
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial in Z[x_1, x_2, ...]. Terms are kept sorted ascending in
/// the Monomial term order with no zero coefficients, so equality is plain
/// vector equality.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Coeff constant);  // NOLINT: integers embed as constants
  explicit Polynomial(std::vector<Term> terms);

  static Polynomial monomial(const Monomial& m, Coeff c = 1);
  /// x_i
  static Polynomial variable(int i);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(const Monomial& m) const;
  int min_degree() const;
  int max_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Coeff c);
  /// this += c * other, without materializing c * other.
  Polynomial& add_scaled(const Polynomial& other, Coeff c);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, Coeff c) { return f *= c; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  bool operator==(const Polynomial&) const = default;

  /// "x1 + x2 - x1*x2": ascending degree, lexicographic (x1 first) within
  /// a degree. Zero prints as "0".
  std::string str() const;

private:
  std::vector<Term> terms_;
};

/// Product kernels. `mul` dispatches to the OpenMP kernel for large inputs;
/// the serial one is the reference the parallel one is tested against.
Polynomial mul_serial(const Polynomial& f, const Polynomial& g);
Polynomial mul_parallel(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

/// s_i f: exchange x_i and x_{i+1}.
Polynomial swap_variables(const Polynomial& f, int i);

/// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
Polynomial divided_difference(const Polynomial& f, int i);

/// pi_i f = d_i((1 - x_{i+1}) f).
Polynomial isobaric_difference(const Polynomial& f, int i);
/// pi_i f = f + (1 - x_i) d_i f; the second form of the same operator.
Polynomial isobaric_difference_alt(const Polynomial& f, int i);

/// Sum of the terms of minimal total degree. Throws std::invalid_argument on 0.
Polynomial lowest_degree_component(const Polynomial& f);

/// e_p(x_1..x_k); zero when p > k.
Polynomial elementary_symmetric(int p, int k);
/// h_p(x_1..x_k).
Polynomial complete_homogeneous(int p, int k);

} // namespace kpieri
