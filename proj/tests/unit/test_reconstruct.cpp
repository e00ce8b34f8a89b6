#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "isored/error.hpp"
#include "isored/reconstruct.hpp"
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

GaussVector restrict_to(const GaussVector& v, const VertexSet& keep) {
  GaussVector out;
  for (Vertex k : keep) out.push_back(v[k - 1]);
  return out;
}

std::vector<std::size_t> sizes(const JordanData& jd) {
  std::vector<std::size_t> out;
  for (const auto& b : jd.blocks) out.push_back(b.size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("depths of the example") {
  const Network n = fixtures::example_network();
  const DepthMap d = vertex_depths(n, validate_structural(n, {1, 4}));
  CHECK(d.depth[1] == 0);
  CHECK(d.depth[2] == 2);
  CHECK(d.depth[3] == 1);
  CHECK(d.depth[4] == 0);
  CHECK(d.max_depth == 2);
  CHECK(d.stratum(0) == VertexSet{1, 4});
  CHECK(d.stratum(1) == VertexSet{3});
  CHECK(d.stratum(2) == VertexSet{2});

  // Loops do not raise the depth of their vertex.
  Network looped = n;
  looped.set_edge(3, 3, 7);
  CHECK(vertex_depths(looped, validate_structural(looped, {1, 4})).depth[3] == 1);
}

TEST_CASE("eigenvector and rank-2 reconstruction of the example") {
  const Network n = fixtures::example_network();
  const StructuralSet s = validate_structural(n, {1, 4});
  const GaussVector u = fixtures::u_plus(), v = fixtures::v_plus();
  CHECK(reconstruct_vector(n, s, I(), restrict_to(u, s.keep)) == u);
  CHECK(reconstruct_vector(n, s, I(), restrict_to(u, s.keep), GaussVector(4)) == u);
  CHECK(reconstruct_vector(n, s, I(), restrict_to(v, s.keep), u) == v);

  const RatMatrix r = adjacency(reduce_graph(n, s));
  CHECK(reduced_chain_constant(r, I(), restrict_to(v, s.keep), restrict_to(u, s.keep)) == Gauss(2));
  CHECK(reduced_chain_constant(r, I(), restrict_to(u, s.keep), GaussVector(2)) == Gauss(0));
  CHECK_FALSE(reduced_chain_constant(r, I(), {1, 1}, {1, 0}).has_value());

  CHECK(code_of([&] { reconstruct_vector(n, s, I(), {1, 1}, u); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([&] { reconstruct_vector(n, s, I(), {1}, u); }) == ErrorCode::InvalidArgument);

  Network looped = n;
  looped.set_edge(2, 2, I());
  CHECK(code_of([&] { reconstruct_vector(looped, validate_structural(looped, {1, 4}), I(), {I(), 1}); }) ==
        ErrorCode::LoopWeightEqualsLambda0);
}

TEST_CASE("random eigenvectors are rebuilt from their restriction") {
  Gen g(61);
  int checked = 0;
  for (int k = 0; k < 200 && checked < 60; ++k) {
    const std::size_t n = 3 + g.index(4);
    Network net(n);
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = 1; j <= n; ++j)
        if (i != j && g.coin(0.35)) net.set_edge(i, j, g.nonzero_gauss(3, 2));
    const VertexSet keep = g.structural_subset(net);
    if (keep.empty()) continue;

    // Adjust the loops so that u is an eigenvector for z.
    const Gauss z = g.gauss(3, 2);
    GaussVector u(n);
    for (auto& x : u) x = g.nonzero_gauss(3, 2);
    const GaussVector mu = evaluate(adjacency(net), Gauss()) * u;
    for (Vertex i = 1; i <= n; ++i) net.set_edge(i, i, (z * u[i - 1] - mu[i - 1]) / u[i - 1]);

    const StructuralSet s = validate_structural(net, keep);
    if (!validate_lambda0(net, s, z)) continue;
    CHECK(reconstruct_vector(net, s, z, restrict_to(u, s.keep)) == u);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("Jordan data of the paired and triple examples") {
  const JordanData a1 = jordan_of(fixtures::jordan_pairs());
  const JordanData a2 = jordan_of(fixtures::jordan_single_triple());
  CHECK(sizes(a1) == std::vector<std::size_t>{2, 2});
  CHECK(sizes(a2) == std::vector<std::size_t>{1, 3});
  CHECK(rebuild_matrix(a1) == fixtures::jordan_pairs());
  CHECK(rebuild_matrix(a2) == fixtures::jordan_single_triple());
  CHECK(jordan_matrix({{5, 2}}) == GaussMatrix{{5, 1}, {0, 5}});

  const JordanData f = jordan_of(evaluate(adjacency(fixtures::example_network()), Gauss()));
  CHECK(sizes(f) == std::vector<std::size_t>{2, 2});
  CHECK(rebuild_matrix(f) == evaluate(adjacency(fixtures::example_network()), Gauss()));

  JordanData bad = a1;
  bad.basis = GaussMatrix(4, 4);
  CHECK(code_of([&] { rebuild_matrix(bad); }) == ErrorCode::SingularBasis);
  CHECK(code_of([] { jordan_of(GaussMatrix{{0, 1}, {2, 0}}); }) == ErrorCode::NumericFailure);
}

TEST_CASE("Jordan data of random similarity transforms") {
  Gen g(62);
  for (int k = 0; k < 40; ++k) {
    std::vector<JordanBlock> blocks;
    std::size_t total = 0;
    while (total < 5) {
      const std::size_t fit = std::min<std::size_t>(1 + g.index(3), 5 - total);
      blocks.push_back({g.gauss(2, 1), fit});
      total += fit;
    }
    const GaussMatrix p = g.invertible(5);
    const GaussMatrix m = p * jordan_matrix(blocks) * *inverse(p);
    const JordanData jd = jordan_of(m);
    CHECK(rebuild_matrix(jd) == m);

    // Block sizes per eigenvalue match the construction.
    for (const auto& b : jd.blocks) {
      std::vector<std::size_t> want, got;
      for (const auto& c : blocks)
        if (c.eigenvalue == b.eigenvalue) want.push_back(c.size);
      for (const auto& c : jd.blocks)
        if (c.eigenvalue == b.eigenvalue) got.push_back(c.size);
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }
}
