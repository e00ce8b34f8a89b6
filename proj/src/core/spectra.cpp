#include "isored/spectra.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "isored/error.hpp"

namespace isored {

RatFunc char_function(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "characteristic function needs a square matrix");
  return determinant(minus_lambda_identity(m));
}

Complex Eigenvalue::approx() const {
  return exact() ? exact_value().to_complex() : std::get<Complex>(value);
}

// ---------------------------------------------------------------- multisets

namespace {

bool approx_less(const Eigenvalue& a, const Eigenvalue& b) {
  const Complex x = a.approx();
  const Complex y = b.approx();
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

SpectrumMultiset::SpectrumMultiset(std::vector<Eigenvalue> entries, double tolerance) : tolerance_(tolerance) {
  for (auto& e : entries) add(std::move(e));
}

bool SpectrumMultiset::matches(const Eigenvalue& a, const Eigenvalue& b) const {
  if (a.exact() && b.exact()) return a.exact_value() == b.exact_value();
  return std::abs(a.approx() - b.approx()) <= tolerance_;
}

void SpectrumMultiset::add(Eigenvalue e) {
  if (e.multiplicity == 0) return;
  for (auto& x : entries_) {
    if (x.exact() == e.exact() && matches(x, e)) {
      x.multiplicity += e.multiplicity;
      x.residual = std::max(x.residual, e.residual);
      return;
    }
  }
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), e, approx_less);
  entries_.insert(pos, std::move(e));
}

std::size_t SpectrumMultiset::size() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

bool SpectrumMultiset::all_exact() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Eigenvalue& e) { return e.exact(); });
}

bool SpectrumMultiset::any_exact() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Eigenvalue& e) { return e.exact(); });
}

unsigned SpectrumMultiset::multiplicity(const Eigenvalue& z) const {
  unsigned m = 0;
  for (const auto& e : entries_)
    if (matches(e, z)) m += e.multiplicity;
  return m;
}

unsigned SpectrumMultiset::multiplicity(const Gauss& z) const { return multiplicity(Eigenvalue{z, 1, 0.0}); }

namespace {

// Greedy matching: each entry of `a` draws from the remaining multiplicities
// of matching entries of `b`, in sorted order. Returns what each entry of a
// obtained.
std::vector<unsigned> greedy_match(const SpectrumMultiset& a, const SpectrumMultiset& b,
                                   const std::function<bool(const Eigenvalue&, const Eigenvalue&)>& match) {
  std::vector<unsigned> left;
  for (const auto& e : b.entries()) left.push_back(e.multiplicity);
  std::vector<unsigned> got;
  for (const auto& x : a.entries()) {
    unsigned want = x.multiplicity;
    unsigned have = 0;
    for (std::size_t k = 0; k < left.size() && have < want; ++k) {
      if (left[k] == 0 || !match(x, b.entries()[k])) continue;
      const unsigned take = std::min(left[k], want - have);
      left[k] -= take;
      have += take;
    }
    got.push_back(have);
  }
  return got;
}

}  // namespace

SpectrumMultiset multiset_union(const SpectrumMultiset& a, const SpectrumMultiset& b) {
  SpectrumMultiset out({}, std::max(a.tolerance_, b.tolerance_));
  for (const auto& e : a.entries_) out.add(e);
  for (const auto& e : b.entries_) out.add(e);
  return out;
}

SpectrumMultiset multiset_difference(const SpectrumMultiset& a, const SpectrumMultiset& b) {
  const auto got = greedy_match(a, b, [&](const Eigenvalue& x, const Eigenvalue& y) { return a.matches(x, y); });
  SpectrumMultiset out({}, a.tolerance_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    Eigenvalue e = a.entries_[k];
    e.multiplicity -= got[k];
    out.add(std::move(e));
  }
  return out;
}

SpectrumMultiset multiset_intersection(const SpectrumMultiset& a, const SpectrumMultiset& b) {
  const auto got = greedy_match(a, b, [&](const Eigenvalue& x, const Eigenvalue& y) { return a.matches(x, y); });
  SpectrumMultiset out({}, a.tolerance_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    Eigenvalue e = a.entries_[k];
    e.multiplicity = got[k];
    out.add(std::move(e));
  }
  return out;
}

bool multiset_subset(const SpectrumMultiset& a, const SpectrumMultiset& b) {
  const auto got = greedy_match(a, b, [&](const Eigenvalue& x, const Eigenvalue& y) { return a.matches(x, y); });
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (got[k] < a.entries_[k].multiplicity) return false;
  return true;
}

// ------------------------------------------------------------ root finding

namespace {

using LComplex = std::complex<long double>;

std::vector<LComplex> long_coeffs(const Poly& f) {
  std::vector<LComplex> c;
  for (const auto& g : f.coeffs()) c.emplace_back(g.re().get_d(), g.im().get_d());
  return c;
}

LComplex horner(const std::vector<LComplex>& c, LComplex z) {
  LComplex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double relative_residual(const std::vector<LComplex>& c, LComplex z) {
  long double scale = 0;
  long double zp = 1;
  for (const auto& ck : c) {
    scale += std::abs(ck) * zp;
    zp *= std::abs(z);
  }
  if (scale == 0) return 0.0;
  return static_cast<double>(std::abs(horner(c, z)) / scale);
}

// Newton iteration on a square-free polynomial.
LComplex polish(const std::vector<LComplex>& c, LComplex z) {
  std::vector<LComplex> dc;
  for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * static_cast<long double>(k));
  for (int it = 0; it < 100; ++it) {
    const LComplex d = horner(dc, z);
    if (d == LComplex(0)) break;
    const LComplex step = horner(c, z) / d;
    z -= step;
    if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
  }
  return z;
}

std::vector<Complex> companion_roots(const Poly& f) {
  const int d = f.degree();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  const Complex lead = f.leading().to_complex();
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(static_cast<std::size_t>(i)).to_complex() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NumericFailure, "companion eigensolver did not converge");
  std::vector<Complex> out;
  for (int i = 0; i < d; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// A Gaussian rational with denominator <= 64 that is an exact root of f and
// lies near z.
std::optional<Gauss> snap(const Poly& f, Complex z) {
  for (long den = 1; den <= 64; ++den) {
    const double re = std::round(z.real() * static_cast<double>(den));
    const double im = std::round(z.imag() * static_cast<double>(den));
    if (std::abs(re) > 1e15 || std::abs(im) > 1e15) return std::nullopt;
    const Gauss g(Rational(static_cast<long>(re), den), Rational(static_cast<long>(im), den));
    if (std::abs(g.to_complex() - z) > 1e-6 * std::max(1.0, std::abs(z))) continue;
    if (f(g).is_zero()) return g;
  }
  return std::nullopt;
}

// Roots of a square-free polynomial.
void squarefree_roots(Poly f, unsigned multiplicity, SpectrumMultiset& out) {
  while (f.degree() >= 1) {
    if (f.degree() == 1) {
      out.add(Eigenvalue{-f.coeff(0) / f.coeff(1), multiplicity, 0.0});
      return;
    }
    if (f.degree() == 2) {
      const Gauss a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
      if (auto s = exact_sqrt(b * b - Gauss(4) * a * c)) {
        const Gauss two_a = Gauss(2) * a;
        out.add(Eigenvalue{(-b + *s) / two_a, multiplicity, 0.0});
        out.add(Eigenvalue{(-b - *s) / two_a, multiplicity, 0.0});
        return;
      }
    }
    const auto approx = companion_roots(f);
    std::optional<Gauss> found;
    for (const auto& z : approx) {
      if ((found = snap(f, z))) break;
    }
    if (found) {
      out.add(Eigenvalue{*found, multiplicity, 0.0});
      f = divmod(f, Poly::linear_factor(*found)).first;
      continue;
    }
    const auto c = long_coeffs(f);
    for (const auto& z : approx) {
      const LComplex p = polish(c, LComplex(z.real(), z.imag()));
      const double res = relative_residual(c, p);
      if (!(res <= kRootResidual)) {
        throw Error(ErrorCode::NumericFailure,
                    "numeric root residual " + std::to_string(res) + " exceeds tolerance");
      }
      out.add(Eigenvalue{Complex(static_cast<double>(p.real()), static_cast<double>(p.imag())), multiplicity, res});
    }
    return;
  }
}

}  // namespace

SpectrumMultiset polynomial_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "every value is a root of the zero polynomial");
  SpectrumMultiset out;
  for (const auto& [factor, k] : squarefree_factorization(p)) squarefree_roots(factor, k, out);
  return out;
}

SpectrumMultiset spectrum(const RatMatrix& m) { return polynomial_roots(char_function(m).num()); }

unsigned root_multiplicity(const Poly& p, const Gauss& z) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity in the zero polynomial");
  unsigned k = 0;
  Poly q = p;
  const Poly factor = Poly::linear_factor(z);
  while (q.degree() >= 1) {
    auto [quot, rem] = divmod(q, factor);
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++k;
  }
  return k;
}

// ------------------------------------------------------------ eigenvectors

std::vector<GaussVector> canonical_basis(const std::vector<GaussVector>& vectors) {
  if (vectors.empty()) return {};
  GaussMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  const auto ech = row_echelon(std::move(m));
  std::vector<GaussVector> out;
  for (std::size_t r = 0; r < ech.rank(); ++r) out.push_back(ech.reduced.row(r));
  return out;
}

namespace {

GaussMatrix shifted_at(const RatMatrix& m, const Gauss& lambda0) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "eigenvectors need a square matrix");
  return shifted(evaluate(m, lambda0), lambda0);
}

GaussMatrix power(const GaussMatrix& n, std::size_t k) {
  GaussMatrix out = GaussMatrix::identity(n.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * n;
  return out;
}

}  // namespace

std::vector<GaussVector> eigenvectors_at(const RatMatrix& m, const Gauss& lambda0) {
  auto basis = nullspace(shifted_at(m, lambda0));
  if (basis.empty()) {
    throw Error(ErrorCode::NotAnEigenvalue, to_string(lambda0) + " is not an eigenvalue of the evaluated matrix");
  }
  return canonical_basis(basis);
}

std::vector<std::vector<Complex>> eigenvectors_numeric(const RatMatrix& m, Complex lambda0, double tol) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "eigenvectors need a square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).eval(lambda0) - (i == j ? lambda0 : 0.0);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  lu.setThreshold(tol);
  if (lu.dimensionOfKernel() == 0) throw Error(ErrorCode::NotAnEigenvalue, "numeric kernel is trivial");
  const Eigen::MatrixXcd k = lu.kernel();
  std::vector<std::vector<Complex>> out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    std::vector<Complex> v(static_cast<std::size_t>(n));
    Complex scale = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (scale == Complex(0) && std::abs(k(i, c)) > tol) scale = k(i, c);
    }
    for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = k(i, c) / scale;
    out.push_back(std::move(v));
  }
  return out;
}

// ----------------------------------------------------------------- chains

ChainData generalized_chain(const RatMatrix& m, const Gauss& lambda0, std::size_t depth,
                            const std::optional<GaussVector>& start) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "chain depth must be at least 1");
  const GaussMatrix n = shifted_at(m, lambda0);
  const GaussMatrix top = power(n, depth - 1);
  GaussVector x;
  if (start) {
    if (start->size() != n.rows()) throw Error(ErrorCode::InvalidArgument, "start vector has the wrong length");
    if (is_zero_vector(*start)) throw Error(ErrorCode::ZeroVectorInput, "start vector is zero");
    if (!is_zero_vector(n * *start)) {
      throw Error(ErrorCode::NotAnEigenvalue, "start vector is not an eigenvector at " + to_string(lambda0));
    }
    auto sol = solve_particular(top, *start);
    if (!sol) {
      throw Error(ErrorCode::ChainTerminated,
                  "no generalized eigenvector of rank " + std::to_string(depth) + " above the start vector");
    }
    x = std::move(*sol);
  } else {
    if (rank(n) == n.rows()) {
      throw Error(ErrorCode::NotAnEigenvalue, to_string(lambda0) + " is not an eigenvalue of the evaluated matrix");
    }
    bool found = false;
    for (auto& b : nullspace(top * n)) {
      if (!is_zero_vector(top * b)) {
        x = std::move(b);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::ChainTerminated,
                  "no generalized eigenvector of rank " + std::to_string(depth) + " at " + to_string(lambda0));
    }
  }
  ChainData chain{lambda0, std::vector<GaussVector>(depth)};
  chain.vectors[depth - 1] = x;
  for (std::size_t k = depth - 1; k > 0; --k) chain.vectors[k - 1] = n * chain.vectors[k];
  return chain;
}

ChainData maximal_chain(const RatMatrix& m, const Gauss& lambda0) {
  const GaussMatrix n = shifted_at(m, lambda0);
  std::size_t prev = n.rows();
  std::size_t depth = 0;
  GaussMatrix p = n;
  for (std::size_t r = rank(p); r < prev; r = rank(p)) {
    prev = r;
    ++depth;
    p = p * n;
  }
  if (depth == 0) {
    throw Error(ErrorCode::NotAnEigenvalue, to_string(lambda0) + " is not an eigenvalue of the evaluated matrix");
  }
  return generalized_chain(m, lambda0, depth);
}

ChainData canonical_chain(ChainData chain) {
  auto& v = chain.vectors;
  if (v.empty()) return chain;
  const auto lead = std::find_if(v[0].begin(), v[0].end(), [](const Gauss& x) { return !x.is_zero(); });
  if (lead == v[0].end()) throw Error(ErrorCode::ZeroVectorInput, "chain starts with the zero vector");
  const std::size_t p = static_cast<std::size_t>(lead - v[0].begin());
  const Gauss inv = v[0][p].inverse();
  for (auto& vec : v)
    for (auto& x : vec) x *= inv;
  // Subtracting α·(shifted chain) keeps every link N v_j = v_{j-1}.
  for (std::size_t k = 1; k < v.size(); ++k) {
    const Gauss alpha = v[k][p];
    if (alpha.is_zero()) continue;
    for (std::size_t j = k; j < v.size(); ++j)
      for (std::size_t e = 0; e < v[j].size(); ++e) v[j][e] -= alpha * v[j - k][e];
  }
  return chain;
}

bool is_chain(const RatMatrix& m, const ChainData& chain) {
  if (chain.vectors.empty() || is_zero_vector(chain.vectors[0])) return false;
  const GaussMatrix n = shifted_at(m, chain.lambda0);
  if (!is_zero_vector(n * chain.vectors[0])) return false;
  for (std::size_t k = 1; k < chain.vectors.size(); ++k)
    if (n * chain.vectors[k] != chain.vectors[k - 1]) return false;
  return true;
}

// ------------------------------------------------------------ multiplicity

MultiplicityReport multiplicities(const RatMatrix& m, const Gauss& lambda0) {
  MultiplicityReport r;
  r.lambda0 = lambda0;
  r.algebraic = root_multiplicity(char_function(m).num(), lambda0);
  const GaussMatrix n = shifted_at(m, lambda0);
  r.geometric = static_cast<unsigned>(n.rows() - rank(n));
  if (is_constant(m) && r.algebraic >= r.geometric) r.defect = r.algebraic - r.geometric;
  return r;
}

std::vector<std::size_t> jordan_block_sizes(const GaussMatrix& a, const Gauss& lambda0) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "Jordan structure needs a square matrix");
  const GaussMatrix n = shifted(a, lambda0);
  std::vector<std::size_t> ranks{a.rows()};
  GaussMatrix p = n;
  for (;;) {
    const std::size_t r = rank(p);
    if (r == ranks.back()) break;
    ranks.push_back(r);
    p = p * n;
  }
  // at_least[k] = number of blocks of size >= k+1.
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least - longer; ++c) sizes.push_back(k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<Complex> numeric_eigenvalues(const GaussMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "eigenvalues need a square matrix");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NumericFailure, "eigensolver did not converge");
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

}  // namespace isored
