#ifndef BRAUER_LAURENT_HPP
#define BRAUER_LAURENT_HPP

#include <map>
#include <string>

namespace brauer {

/// Integer Laurent polynomial in v, stored sparsely (no zero coefficients).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, long long c = 1);

  const std::map<int, long long>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long long coefficient(int exponent) const;
  long long constant_term() const { return coefficient(0); }
  long long at_one() const;
  int min_exponent() const;  // 0 for the zero polynomial
  int max_exponent() const;

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(long long c, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "0", "1", "v", "v^2", "2v^3+v^-1", ... (ascending exponents).
  std::string to_string() const;
  /// Inverse of to_string; also accepts "." for zero.
  static LaurentPoly parse(const std::string& text);

 private:
  void add_term(int exponent, long long c);
  std::map<int, long long> coeffs_;
};

}  // namespace brauer

#endif  // BRAUER_LAURENT_HPP
