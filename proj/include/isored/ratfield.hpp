#pragma once

// Exact scalars, polynomials and rational functions over the Gaussian
// rationals Q(i).
//
// Every value is normalised on construction, so structural equality (==) is
// mathematical equality:
//   - Gauss: real and imaginary parts are canonical GMP rationals.
//   - Poly: ascending coefficients with a nonzero leading coefficient; the
//     zero polynomial has no coefficients.
//   - RatFunc: numerator and denominator are coprime and the denominator is
//     monic. Zero is 0/1.

#include <complex>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace isored {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Default lower bound on |q(z)| accepted by numeric evaluation.
inline constexpr double kDefaultPoleTolerance = 1e-10;

class Gauss {
 public:
  Gauss() = default;
  template <std::integral I>
  Gauss(I value) : re_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Gauss(Rational re, Rational im = Rational(0));

  static Gauss imag_unit() { return Gauss(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gauss conj() const { return Gauss(re_, -im_); }
  /// |z|^2
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
  /// Throws Error(DivisionByZeroFunction) for zero.
  Gauss inverse() const;
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Gauss operator-() const { return Gauss(-re_, -im_); }
  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o);

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Square root in Q(i) when one exists (principal branch: Re > 0, or Re = 0
/// and Im >= 0).
std::optional<Gauss> exact_sqrt(const Gauss& z);

/// Literal form, e.g. "3/4", "-i", "1/2+3/4i".
std::string to_string(const Gauss& z);

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Gauss> ascending);
  Poly(const Gauss& constant);  // NOLINT(implicit)
  template <std::integral I>
  Poly(I constant) : Poly(Gauss(constant)) {}  // NOLINT(implicit)

  /// The indeterminate λ.
  static Poly lambda();
  static Poly monomial(const Gauss& coeff, std::size_t degree);
  /// (λ - root)
  static Poly linear_factor(const Gauss& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Gauss>& coeffs() const { return coeffs_; }
  Gauss coeff(std::size_t k) const;
  const Gauss& leading() const;

  Gauss operator()(const Gauss& z) const;
  Complex operator()(Complex z) const;

  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Gauss> coeffs_;
};

/// Euclidean division; throws Error(DivisionByZeroFunction) when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd. gcd(0, 0) is 0.
Poly gcd(Poly a, Poly b);
/// Yun's algorithm: returns (f_k, k) with p = lc * prod f_k^k, each f_k monic,
/// square-free, pairwise coprime and non-constant.
std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& p);

std::string to_string(const Poly& p);

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Gauss& constant);  // NOLINT(implicit)
  RatFunc(const Poly& p);          // NOLINT(implicit)
  template <std::integral I>
  RatFunc(I constant) : RatFunc(Gauss(constant)) {}  // NOLINT(implicit)
  /// Throws Error(DivisionByZeroFunction) when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc lambda() { return RatFunc(Poly::lambda()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// deg(num) <= deg(den); the zero function is proper.
  bool is_proper() const { return num_.degree() <= den_.degree(); }
  std::size_t total_degree() const;

  /// Exact value; throws Error(PoleError) when den(z) = 0.
  Gauss operator()(const Gauss& z) const;
  /// Double-precision value; throws Error(NearPoleError) when
  /// |den(z)| < pole_tolerance.
  Complex eval(Complex z, double pole_tolerance = kDefaultPoleTolerance) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Poly num_;
  Poly den_{Poly(1)};
};

inline bool is_proper(const RatFunc& f) { return f.is_proper(); }

/// Literal form accepted by parse_ratfunc, e.g. "-2/l", "(l^2 + 1)/l^2".
std::string to_string(const RatFunc& f);

// Literal grammar (λ is spelled "l"):
//   ratfunc := side | side "/" side
//   side    := poly | "(" poly ")"
//   poly    := ["+"|"-"] term (("+"|"-") term)*
//   term    := coeff | coeff "*" mono | mono
//   mono    := "l" | "l^" uint
//   coeff   := gauss | "(" gauss ")"
//   gauss   := frac | frac ("+"|"-") frac "i" | frac "i" | "i"
//   frac    := int | int "/" uint
// Whitespace is ignored. Errors throw Error(ParseError) with the offset.
RatFunc parse_ratfunc(std::string_view text);
Poly parse_poly(std::string_view text);
/// A constant literal; rejects anything that depends on l.
Gauss parse_gauss(std::string_view text);

}  // namespace isored
