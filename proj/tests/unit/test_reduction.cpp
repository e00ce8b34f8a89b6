#include <doctest.h>

#include "fixtures.hpp"
#include "isored/error.hpp"
#include "isored/reduction.hpp"
#include "isored/spectra.hpp"

using namespace isored;
using fixtures::Gen;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

RatMatrix literal(std::initializer_list<std::initializer_list<const char*>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const char* s : r) m(i, j++) = parse_ratfunc(s);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("partitions") {
  const Partition p = make_partition(4, {3, 0});
  CHECK(p.keep == std::vector<std::size_t>{0, 3});
  CHECK(p.complement == std::vector<std::size_t>{1, 2});
  CHECK(code_of([] { make_partition(3, {}); }) == ErrorCode::EmptySet);
  CHECK(code_of([] { make_partition(3, {3}); }) == ErrorCode::BadVertexIndex);

  const GaussMatrix m{{1, 2}, {3, 4}};
  const auto b = split(m, make_partition(2, {1}));
  CHECK(b.ss(0, 0) == Gauss(4));
  CHECK(b.sc(0, 0) == Gauss(3));
  CHECK(b.cs(0, 0) == Gauss(2));
  CHECK(b.cc(0, 0) == Gauss(1));
}

TEST_CASE("graph reductions of the example") {
  const Network n = fixtures::example_network();
  const Network r124 = reduce_graph(n, validate_structural(n, {1, 2, 4}));
  CHECK(adjacency(r124) == literal({{"0", "1", "0"}, {"0", "0", "1/l"}, {"-1", "0", "-2/l"}}));
  CHECK(r124.labels() == std::vector<std::size_t>{1, 2, 4});
  CHECK(char_function(adjacency(r124)) == parse_ratfunc("(-l^4 - 2*l^2 - 1)/l"));

  const Network r14 = reduce_graph(n, validate_structural(n, {1, 4}));
  CHECK(adjacency(r14) == literal({{"0", "1/l^2"}, {"-1", "-2/l"}}));
  CHECK(char_function(adjacency(r14)) == parse_ratfunc("(l^4 + 2*l^2 + 1)/l^2"));

  for (std::size_t size : {2, 3})
    for (const auto& s : structural_sets_of_size(n, size)) CHECK(cross_validate(n, s));
}

TEST_CASE("sequential reductions agree with the direct one") {
  const Network n = fixtures::example_network();
  const Network direct = reduce_graph(n, validate_structural(n, {1, 4}));
  CHECK(reduce_sequence(n, {{1, 2, 4}, {1, 4}}) == direct);
  CHECK(reduce_sequence(n, {{1, 3, 4}, {1, 4}}) == direct);
  CHECK(reduce_stepwise(n, {1, 4}) == direct);
  CHECK(code_of([&] { reduce_sequence(n, {{1, 2, 4}, {1, 3}}); }) == ErrorCode::BadVertexIndex);
}

TEST_CASE("block reduction") {
  // Complement block l - l is identically singular.
  const RatMatrix m = literal({{"1", "1"}, {"1", "l"}});
  CHECK(code_of([&] { reduce_matrix(m, make_partition(2, {0})); }) == ErrorCode::SingularComplement);

  const RatMatrix a = to_ratmatrix(fixtures::matrix_a());
  const RatMatrix r12 = reduce_matrix(a, make_partition(3, {0, 1}));
  CHECK(r12 == literal({{"(148*l - 140)/(17*l + 41)", "(206*l - 226)/(17*l + 41)"},
                        {"(23 - 13*l)/(17*l + 41)", "(67 - 5*l)/(17*l + 41)"}}));

  // {1} misses the cycle (3 4), yet the complement block is invertible.
  const Network n = fixtures::example_network();
  const Network one = reduce_network_block(n, {1});
  CHECK(one.size() == 1);
  CHECK(one.labels() == std::vector<std::size_t>{1});
  CHECK(char_function(adjacency(one)).num().monic() == char_function(adjacency(n)).num().monic());
}

TEST_CASE("random networks: graph and block agree, determinant factorizes") {
  Gen g(31);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 3 + g.index(3);
    const Network net = g.network(n);
    const VertexSet keep = g.structural_subset(net);
    if (keep.empty()) continue;
    const StructuralSet s = validate_structural(net, keep);
    CHECK(cross_validate(net, s));

    // det(M - l I) = det(R - l I) det(M_cc - l I).
    const RatMatrix m = adjacency(net);
    const Partition p = partition_of(s);
    const RatMatrix r = adjacency(reduce_graph(net, s));
    const auto blocks = split(m, p);
    CHECK(determinant(minus_lambda_identity(m)) ==
          determinant(minus_lambda_identity(r)) * determinant(minus_lambda_identity(blocks.cc)));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("random chains of block reductions compose") {
  Gen g(32);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 4 + g.index(2);
    const RatMatrix m = to_ratmatrix(g.gauss_matrix(n, 3, 2));
    std::vector<std::size_t> mid, last;
    for (std::size_t v = 0; v < n; ++v)
      if (v == 0 || g.coin(0.6)) mid.push_back(v);
    if (mid.size() == n) mid.pop_back();
    for (std::size_t a = 0; a < mid.size(); ++a)
      if (a == 0 || g.coin(0.5)) last.push_back(a);
    std::vector<std::size_t> last_global;
    for (auto a : last) last_global.push_back(mid[a]);

    const RatMatrix step = reduce_matrix(reduce_matrix(m, make_partition(n, mid)), make_partition(mid.size(), last));
    CHECK(step == reduce_matrix(m, make_partition(n, last_global)));
  }
}

TEST_CASE("labels resolve to vertices") {
  Network n = fixtures::example_network();
  const Network r = reduce_graph(n, validate_structural(n, {1, 2, 4}));
  CHECK(vertices_for_labels(r, {4, 1}) == VertexSet{3, 1});
  CHECK(code_of([&] { vertices_for_labels(r, {3}); }) == ErrorCode::BadVertexIndex);
}
