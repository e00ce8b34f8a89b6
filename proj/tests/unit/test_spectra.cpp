#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "fixtures.hpp"
#include "isored/error.hpp"
#include "isored/reduction.hpp"
#include "isored/spectra.hpp"

using namespace isored;
using fixtures::Gen;
using fixtures::I;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Eigenvalue exact(Gauss z, unsigned m = 1) { return Eigenvalue{z, m, 0.0}; }
Eigenvalue approx(Complex z, unsigned m = 1) { return Eigenvalue{z, m, 0.0}; }

RatMatrix reduced_at(const Network& n, VertexSet keep, const Gauss& z) {
  return to_ratmatrix(evaluate(adjacency(reduce_graph(n, validate_structural(n, keep))), z));
}

// Eigen's dense solver on the complex image of an exact matrix.
std::vector<Complex> eigen_oracle(const GaussMatrix& m) {
  Eigen::MatrixXcd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  std::vector<Complex> out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) out.push_back(solver.eigenvalues()(k));
  return out;
}

}  // namespace

TEST_CASE("spectrum of the example network") {
  const RatMatrix a = adjacency(fixtures::example_network());
  const SpectrumMultiset s = spectrum(a);
  CHECK(s.all_exact());
  CHECK(s.size() == 4);
  CHECK(s.multiplicity(I()) == 2);
  CHECK(s.multiplicity(-I()) == 2);
  CHECK(s == SpectrumMultiset({exact(I(), 2), exact(-I(), 2)}));

  const MultiplicityReport r = multiplicities(a, I());
  CHECK(r.algebraic == 2);
  CHECK(r.geometric == 1);
  CHECK(r.defect == 1u);
  CHECK(code_of([&] { eigenvectors_at(a, Gauss(1)); }) == ErrorCode::NotAnEigenvalue);
}

TEST_CASE("a 1x1 matrix can have two eigenvalues") {
  RatMatrix m(1, 1);
  m(0, 0) = parse_ratfunc("1/l");
  const SpectrumMultiset s = spectrum(m);
  CHECK(s.size() == 2);
  CHECK(s == SpectrumMultiset({exact(1), exact(-1)}));
}

TEST_CASE("evaluating a reduction changes its spectrum") {
  const Network n = fixtures::example_network();
  const RatMatrix rs = reduced_at(n, {1, 2, 4}, I());
  const SpectrumMultiset s = spectrum(rs);
  CHECK(s.size() == 3);
  CHECK(s.multiplicity(I()) == 1);
  const double r5 = std::sqrt(5.0);
  CHECK(s.multiplicity(approx({0, (1 + r5) / 2})) == 1);
  CHECK(s.multiplicity(approx({0, (1 - r5) / 2})) == 1);
  for (const auto& e : s.entries())
    if (!e.exact()) CHECK(e.residual <= kRootResidual);
  CHECK(code_of([&] { generalized_chain(rs, I(), 2); }) == ErrorCode::ChainTerminated);

  const RatMatrix rs2 = reduced_at(n, {1, 4}, I());
  CHECK(spectrum(rs2) == SpectrumMultiset({exact(I(), 2)}));
  const ChainData c = generalized_chain(rs2, I(), 2);
  CHECK(c.vectors.size() == 2);
  CHECK(is_chain(rs2, c));
}

TEST_CASE("canonical chains of the example") {
  const RatMatrix a = adjacency(fixtures::example_network());
  for (const auto& [z, u, v] : {std::tuple{I(), fixtures::u_plus(), fixtures::v_plus()},
                                std::tuple{-I(), fixtures::u_minus(), fixtures::v_minus()}}) {
    const ChainData given{z, {u, v}};
    REQUIRE(is_chain(a, given));
    const ChainData computed = canonical_chain(generalized_chain(a, z, 2));
    CHECK(computed.vectors == canonical_chain(given).vectors);
    CHECK(canonical_chain(computed).vectors == computed.vectors);
    CHECK(canonical_chain(maximal_chain(a, z)).vectors == computed.vectors);
  }
  CHECK(code_of([&] { generalized_chain(a, I(), 3); }) == ErrorCode::ChainTerminated);
}

TEST_CASE("exact roots are recovered with multiplicity") {
  Gen g(41);
  for (int k = 0; k < 100; ++k) {
    std::vector<Eigenvalue> roots;
    Poly p(g.nonzero_gauss(3, 2));
    const int distinct = 1 + static_cast<int>(g.index(3));
    for (int r = 0; r < distinct; ++r) {
      const Gauss z = g.gauss(5, 3);
      bool seen = false;
      for (const auto& e : roots) seen = seen || e.exact_value() == z;
      if (seen) continue;
      const unsigned mult = 1 + static_cast<unsigned>(g.index(3));
      for (unsigned m = 0; m < mult; ++m) p *= Poly::linear_factor(z);
      roots.push_back(exact(z, mult));
      CHECK(root_multiplicity(p, z) >= mult);
    }
    const SpectrumMultiset s = polynomial_roots(p);
    CHECK(s.all_exact());
    CHECK(s == SpectrumMultiset(roots));
  }
}

TEST_CASE("numeric roots satisfy Vieta and small residuals") {
  Gen g(42);
  for (int k = 0; k < 100; ++k) {
    std::vector<Gauss> c;
    const int d = 3 + static_cast<int>(g.index(4));
    for (int j = 0; j < d; ++j) c.push_back(g.gauss(7, 3));
    c.push_back(g.nonzero_gauss(3, 1));
    const Poly p(c);
    const SpectrumMultiset s = polynomial_roots(p);
    CHECK(s.size() == static_cast<std::size_t>(d));
    Complex sum = 0;
    for (const auto& e : s.entries()) {
      sum += static_cast<double>(e.multiplicity) * e.approx();
      if (e.exact()) {
        CHECK(p(e.exact_value()).is_zero());
      } else {
        CHECK(e.residual <= kRootResidual);
      }
    }
    const Complex expected = -(p.coeff(d - 1) / p.leading()).to_complex();
    CHECK(fixtures::close(sum, expected, 1e-8));
  }
}

TEST_CASE("spectrum matches an independent dense eigensolver") {
  Gen g(43);
  for (int k = 0; k < 40; ++k) {
    const GaussMatrix m = g.gauss_matrix(5);
    std::vector<Eigenvalue> oracle;
    for (Complex z : eigen_oracle(m)) oracle.push_back(approx(z));
    // Eigen's accuracy near clustered roots is the limiting factor.
    CHECK(SpectrumMultiset(oracle, 1e-6) == SpectrumMultiset(spectrum(to_ratmatrix(m)).entries(), 1e-6));
  }
}

TEST_CASE("multiset operations") {
  const SpectrumMultiset a({exact(1, 2), exact(I()), approx({0.5, 0.25})});
  const SpectrumMultiset b({exact(1), approx({0.5 + 1e-9, 0.25})});
  CHECK(a.size() == 4);
  CHECK(multiset_subset(b, a));
  CHECK_FALSE(multiset_subset(a, b));
  CHECK(multiset_difference(a, b) == SpectrumMultiset({exact(1), exact(I())}));
  CHECK(multiset_intersection(a, b) == b);
  CHECK(multiset_union(multiset_difference(a, b), b) == a);
  CHECK(multiset_difference(b, a).empty());
  CHECK(a.multiplicity(approx({1.0 + 1e-9, 0.0})) == 2);
  CHECK(a.multiplicity(approx({1.0 + 1e-5, 0.0})) == 0);
}

TEST_CASE("Jordan block sizes") {
  CHECK(jordan_block_sizes(fixtures::jordan_pairs(), 5) == std::vector<std::size_t>{2, 2});
  CHECK(jordan_block_sizes(fixtures::jordan_single_triple(), 5) == std::vector<std::size_t>{3, 1});
  const RatMatrix a1 = to_ratmatrix(fixtures::jordan_pairs());
  const RatMatrix a2 = to_ratmatrix(fixtures::jordan_single_triple());
  CHECK(multiplicities(a1, 5).algebraic == 4);
  CHECK(multiplicities(a1, 5).geometric == 2);
  CHECK(multiplicities(a2, 5).algebraic == 4);
  CHECK(multiplicities(a2, 5).geometric == 2);
  const std::vector<GaussVector> expected{{1, 0, 0, 0}, {0, 0, 1, 0}};
  CHECK(eigenvectors_at(a1, 5) == expected);
  CHECK(eigenvectors_at(a2, 5) == expected);
}

TEST_CASE("numeric eigenvectors") {
  const RatMatrix rs = reduced_at(fixtures::example_network(), {1, 2, 4}, I());
  const Complex z(0, (1 + std::sqrt(5.0)) / 2);
  const auto vs = eigenvectors_numeric(rs, z);
  REQUIRE(vs.size() == 1);
  const GaussMatrix m = evaluate(rs, Gauss());
  for (std::size_t i = 0; i < 3; ++i) {
    Complex acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc += m(i, j).to_complex() * vs[0][j];
    CHECK(std::abs(acc - z * vs[0][i]) < 1e-9);
  }
}
