#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangleinv {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1] stored as a sparse term list.
///
/// Terms are kept sorted by increasing exponent and never hold a zero
/// coefficient, so structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Integer coeff, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }
  /// -q^2 - q^-2, the value of a closed loop.
  static const LaurentPoly& delta();

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly pow(unsigned exponent) const;
  /// Adds coeff * q^exponent in place.
  void add_term(const Integer& coeff, int exponent);

 private:
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Multiply, Negate };

/// Ring operation dispatcher; `b` is ignored for Negate.
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// q <-> q^-1.
LaurentPoly lp_bar(const LaurentPoly& a);

/// Index k of the evaluation point q = exp(k*pi*i/12).
class RootIndex {
 public:
  static constexpr std::array<int, 8> kAdmissible = {1, 5, 7, 11, 13, 17, 19, 23};

  /// Throws DomainError("root index not in admissible set") for other k.
  explicit RootIndex(int k);
  int value() const noexcept { return k_; }

  static std::vector<RootIndex> all();

 private:
  int k_;
};

std::complex<double> lp_eval_root(const LaurentPoly& a, RootIndex k);

/// Canonical text: decreasing exponents, `q^n`, `q^-n`, `q`, bare constants.
std::string to_string(const LaurentPoly& a);

/// Inverse of to_string; accepts the canonical form plus `*` and spacing.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace tangleinv
