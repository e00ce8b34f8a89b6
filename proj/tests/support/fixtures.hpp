#pragma once

// Shared fixtures and hand-rolled random generators for the test suites.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/netgraph.hpp"
#include "isored/ratfield.hpp"

namespace fixtures {

using namespace isored;

inline Gauss I() { return Gauss::imag_unit(); }

inline Gauss q(long num, long den = 1) { return Gauss(Rational(num, den)); }

inline Gauss gi(long re, long im) { return Gauss(Rational(re), Rational(im)); }

/// The four-vertex example: cycles (1 2 3 4) and (3 4).
inline Network example_network() {
  Network n(4);
  n.set_edge(1, 2, 1);
  n.set_edge(2, 3, 1);
  n.set_edge(3, 4, 1);
  n.set_edge(4, 3, -2);
  n.set_edge(4, 1, -1);
  return n;
}

inline GaussVector u_plus() { return {I(), -1, -I(), 1}; }
inline GaussVector v_plus() { return {-3, gi(0, -2), 1, 0}; }
inline GaussVector u_minus() { return {-1, I(), 1, -I()}; }
inline GaussVector v_minus() { return {gi(0, 2), 1, 0, 1}; }

inline GaussMatrix matrix_a() {
  return {{q(148, 17), q(206, 17), q(256, 17)}, {q(-13, 17), q(-5, 17), q(-28, 17)}, {q(-33, 17), q(-48, 17), q(-41, 17)}};
}

inline GaussMatrix matrix_b() {
  return {{q(1, 27), q(-39, 27), q(-10, 27)}, {q(52, 27), q(105, 27), q(20, 27)}, {q(43, 27), q(24, 27), q(56, 27)}};
}

inline GaussMatrix jordan_pairs() { return {{5, 1, 0, 0}, {0, 5, 0, 0}, {0, 0, 5, 1}, {0, 0, 0, 5}}; }
inline GaussMatrix jordan_single_triple() { return {{5, 0, 0, 0}, {0, 5, 0, 1}, {0, 1, 5, 0}, {0, 0, 0, 5}}; }

/// Deterministic source of small random exact objects.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  Rational rational(long range = 6, long max_den = 5) {
    return Rational(integer(-range, range), integer(1, max_den));
  }

  Gauss gauss(long range = 6, long max_den = 5) {
    Rational re = rational(range, max_den);
    return Gauss(re, coin(0.6) ? rational(range, max_den) : Rational(0));
  }

  Gauss nonzero_gauss(long range = 6, long max_den = 5) {
    Gauss z;
    do z = gauss(range, max_den);
    while (z.is_zero());
    return z;
  }

  /// Gaussian rational whose parts are exact doubles (dyadic denominators).
  Gauss dyadic_gauss(long range = 8) {
    const long den = 1L << integer(0, 3);
    return Gauss(Rational(integer(-range, range), den), Rational(integer(-range, range), den));
  }

  Poly poly(int max_degree, long range = 4) {
    std::vector<Gauss> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int k = 0; k <= d; ++k) c.push_back(gauss(range, 3));
    return Poly(std::move(c));
  }

  Poly nonzero_poly(int max_degree, long range = 4) {
    Poly p;
    do p = poly(max_degree, range);
    while (p.is_zero());
    return p;
  }

  RatFunc ratfunc(int max_degree = 2) { return RatFunc(poly(max_degree), nonzero_poly(max_degree)); }

  RatFunc nonzero_ratfunc(int max_degree = 2) { return RatFunc(nonzero_poly(max_degree), nonzero_poly(max_degree)); }

  /// Proper weight with no pole at 0: constant, or a/(l - b) with b away from 0.
  RatFunc weight() {
    if (coin(0.7)) return RatFunc(nonzero_gauss(4, 2));
    Gauss b = nonzero_gauss(3, 1);
    return RatFunc(Poly(nonzero_gauss(3, 2)), Poly::linear_factor(b));
  }

  /// Random network on n vertices with the given edge density and loop chance.
  Network network(std::size_t n, double density = 0.35, double loops = 0.2) {
    Network net(n);
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = 1; j <= n; ++j) {
        const double p = i == j ? loops : density;
        if (coin(p)) net.set_edge(i, j, weight());
      }
    return net;
  }

  /// A random subset of 1..n that validates as structural, or empty.
  VertexSet structural_subset(const Network& net, int attempts = 50) {
    const std::size_t n = net.size();
    for (int a = 0; a < attempts; ++a) {
      VertexSet s;
      for (Vertex v = 1; v <= n; ++v)
        if (coin(0.5)) s.push_back(v);
      if (s.empty() || s.size() == n) continue;
      try {
        validate_structural(net, s);
        return s;
      } catch (const Error&) {
      }
    }
    return {};
  }

  GaussMatrix gauss_matrix(std::size_t n, long range = 4, long max_den = 3) {
    GaussMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gauss(range, max_den);
    return m;
  }

  /// Unimodular-ish invertible matrix: unit lower times unit upper triangular.
  GaussMatrix invertible(std::size_t n, long range = 2) {
    GaussMatrix l = GaussMatrix::identity(n), u = GaussMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = Gauss(Rational(integer(-range, range)), Rational(integer(-1, 1)));
        u(j, i) = Gauss(Rational(integer(-range, range)), Rational(integer(-1, 1)));
      }
    return l * u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Complex to_c(const Gauss& z) { return z.to_complex(); }

/// Relative closeness used for numeric-versus-exact comparisons.
inline bool close(Complex a, Complex b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace fixtures
