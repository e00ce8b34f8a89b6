#include "isored/ratfield.hpp"

#include <algorithm>
#include <cmath>

#include "isored/error.hpp"

namespace isored {

// ---------------------------------------------------------------------------
// Gauss

Gauss::Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Gauss& Gauss::operator+=(const Gauss& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gauss Gauss::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "division by zero scalar");
  if (sgn(im_) == 0) return Gauss(Rational(1 / re_));
  Rational n = norm();
  return Gauss(Rational(re_ / n), Rational(-im_ / n));
}

Gauss& Gauss::operator/=(const Gauss& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<Gauss> exact_sqrt(const Gauss& z) {
  if (z.is_zero()) return Gauss();
  if (z.is_real()) {
    if (sgn(z.re()) > 0) {
      auto r = rational_sqrt(z.re());
      if (!r) return std::nullopt;
      return Gauss(*r);
    }
    auto r = rational_sqrt(Rational(-z.re()));
    if (!r) return std::nullopt;
    return Gauss(Rational(0), *r);
  }
  // (x + yi)^2 = a + bi  =>  x^2 = (a + |z|) / 2,  y = b / (2x).
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt(Rational((z.re() + *modulus) / 2));
  if (!x || sgn(*x) == 0) return std::nullopt;
  Rational y = z.im() / (2 * *x);
  return Gauss(*x, y);
}

std::string to_string(const Gauss& z) {
  if (z.is_real()) return z.re().get_str();
  std::string im;
  if (z.im() == 1) {
    im = "i";
  } else if (z.im() == -1) {
    im = "-i";
  } else {
    im = z.im().get_str() + "i";
  }
  if (sgn(z.re()) == 0) return im;
  std::string out = z.re().get_str();
  if (im.front() != '-') out += '+';
  return out + im;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Gauss> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly::Poly(const Gauss& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::lambda() { return monomial(Gauss(1), 1); }

Poly Poly::monomial(const Gauss& coeff, std::size_t degree) {
  if (coeff.is_zero()) return Poly();
  std::vector<Gauss> c(degree + 1);
  c[degree] = coeff;
  return Poly(std::move(c));
}

Poly Poly::linear_factor(const Gauss& root) { return Poly({-root, Gauss(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Gauss Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Gauss(); }

const Gauss& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Gauss Poly::operator()(const Gauss& z) const {
  Gauss acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Complex Poly::operator()(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Gauss> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Gauss(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Gauss inv = leading().inverse();
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Gauss> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Gauss> rem = a.coeffs();
  std::vector<Gauss> quot(rem.size() - b.coeffs().size() + 1);
  const Gauss inv_lead = b.leading().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Gauss q = rem[k + db] * inv_lead;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& p) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = divmod(f, a).first;
  Poly c = divmod(d, a).first;
  Poly e = c - b.derivative();
  unsigned k = 1;
  while (b.degree() >= 1) {
    Poly g = gcd(b, e);
    if (g.degree() >= 1) out.emplace_back(g, k);
    Poly b_next = divmod(b, g).first;
    Poly c_next = divmod(e, g).first;
    e = c_next - b_next.derivative();
    b = std::move(b_next);
    ++k;
  }
  return out;
}

namespace {

bool needs_parens(const Gauss& c) { return !c.is_real() && sgn(c.re()) != 0; }

std::string mono(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "l";
  return "l^" + std::to_string(k);
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string coeff;
    bool negative = false;
    if (needs_parens(c[k])) {
      coeff = "(" + to_string(c[k]) + ")";
    } else {
      Gauss mag = c[k];
      const Rational& lead = c[k].is_real() ? c[k].re() : c[k].im();
      if (sgn(lead) < 0) {
        negative = true;
        mag = -mag;
      }
      coeff = to_string(mag);
      if (k > 0 && mag.is_one()) coeff.clear();
    }
    std::string term = coeff;
    if (k > 0) term += (coeff.empty() ? "" : "*") + mono(k);
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Gauss& constant) : num_(constant) {}

RatFunc::RatFunc(const Poly& p) : num_(p) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (!den_.leading().is_one()) {
    Gauss inv = den_.leading().inverse();
    num_ = num_ * Poly(inv);
    den_ = den_ * Poly(inv);
  }
}

std::size_t RatFunc::total_degree() const {
  return static_cast<std::size_t>(std::max(num_.degree(), 0) + den_.degree());
}

Gauss RatFunc::operator()(const Gauss& z) const {
  Gauss q = den_(z);
  if (q.is_zero()) throw Error(ErrorCode::PoleError, "pole at " + to_string(z) + " of " + to_string(*this));
  return num_(z) / q;
}

Complex RatFunc::eval(Complex z, double pole_tolerance) const {
  Complex q = den_(z);
  if (!(std::abs(q) >= pole_tolerance)) {
    throw Error(ErrorCode::NearPoleError, "evaluation too close to a pole of " + to_string(*this));
  }
  Complex v = num_(z) / q;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorCode::NearPoleError, "non-finite value of " + to_string(*this));
  }
  return v;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "division by the zero function");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

std::string to_string(const RatFunc& f) {
  std::string num = to_string(f.num());
  if (f.den().degree() == 0) return num;
  auto multi_term = [](const Poly& p) {
    return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Gauss& c) { return !c.is_zero(); }) > 1;
  };
  if (multi_term(f.num())) num = "(" + num + ")";
  std::string den = to_string(f.den());
  if (multi_term(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace isored
