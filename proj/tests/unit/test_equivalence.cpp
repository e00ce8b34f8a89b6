#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "isored/equivalence.hpp"
#include "isored/error.hpp"
#include "isored/reduction.hpp"

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

// h has an edge perm[i] -> perm[j] for each edge i -> j of g (1-based perm).
Network permuted(const Network& g, const std::vector<Vertex>& perm) {
  Network h(g.size());
  for (const auto& [edge, w] : g.edges()) h.set_edge(perm[edge.first - 1], perm[edge.second - 1], w);
  return h;
}

bool maps_edges(const Network& g, const Network& h, const Isomorphism& iso) {
  if (g.edges().size() != h.edges().size()) return false;
  for (const auto& [edge, w] : g.edges())
    if (h.weight(iso[edge.first - 1], iso[edge.second - 1]) != w) return false;
  return true;
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

TEST_CASE("isomorphism of weighted digraphs") {
  const Network g = fixtures::example_network();
  const Network h = permuted(g, {3, 1, 4, 2});
  const auto iso = isomorphic(g, h);
  REQUIRE(iso.has_value());
  CHECK(*iso == Isomorphism{3, 1, 4, 2});

  Network changed = h;
  changed.set_edge(2, 4, -3);
  CHECK_FALSE(isomorphic(g, changed).has_value());
  CHECK_FALSE(isomorphic(g, Network(4)).has_value());
  CHECK_FALSE(isomorphic(g, Network(3)).has_value());

  Network relabelled = g;
  relabelled.set_labels({5, 6, 7, 8});
  CHECK(isomorphic(g, relabelled).has_value());
}

TEST_CASE("random permutations are recognised") {
  Gen g(71);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + g.index(6);
    const Network a = g.network(n, 0.4, 0.3);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), g.engine());
    const Network b = permuted(a, perm);
    const auto iso = isomorphic(a, b);
    REQUIRE(iso.has_value());
    CHECK(maps_edges(a, b, *iso));
    CHECK(isomorphic(b, a).has_value());
  }
}

TEST_CASE("proper weights") {
  CHECK(in_G_pi(fixtures::example_network()));
  Network n = fixtures::example_network();
  n.set_edge(1, 1, RatFunc::lambda());
  CHECK_FALSE(in_G_pi(n));
  Network bad = fixtures::example_network();
  bad.set_edge(2, 2, parse_ratfunc("l^2/(l + 1)"));
  CHECK(code_of([&] { spectrally_equivalent(bad, bad, keep_loops_rule(), 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reduction rules") {
  const Network n = fixtures::example_network();
  CHECK(parse_rule("keep:1,4").selector(n) == VertexSet{1, 4});
  CHECK(parse_rule("loops").name == "loops");
  CHECK(parse_rule("min-cycle-cover").selector(n) == VertexSet{1, 3});
  CHECK(code_of([] { parse_rule("keep:"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rule("largest"); }) == ErrorCode::ParseError);

  CHECK(apply_rule(n, parse_rule("keep:1,4")) == reduce_graph(n, validate_structural(n, {1, 4})));
  CHECK(apply_rule(n, parse_rule("keep:1,2,3,4")) == n);
  CHECK(code_of([&] { apply_rule(n, parse_rule("keep:1")); }) == ErrorCode::RuleInapplicable);
  // {1,2} is not structural; the reduction still exists stepwise.
  CHECK(apply_rule(n, parse_rule("keep:1,2")) == reduce_stepwise(n, {1, 2}));

  Network looped = n;
  looped.set_edge(2, 2, 3);
  looped.set_edge(4, 4, 1);
  CHECK(keep_loops_rule().selector(looped) == VertexSet{2, 4});
  CHECK(code_of([&] { apply_rule(n, keep_loops_rule()); }) == ErrorCode::RuleInapplicable);
}

TEST_CASE("generalized spectral equivalence of networks") {
  const Network g = fixtures::example_network();
  const ReductionRule tau = parse_rule("keep:1,4");
  const Network h = apply_rule(g, tau);

  const auto w = spectrally_equivalent(g, h, tau, 3, 3);
  REQUIRE(w.has_value());
  CHECK(w->m == 1);
  CHECK(w->k == 0);

  const auto positive = spectrally_equivalent(g, h, tau, 3, 3, false);
  REQUIRE(positive.has_value());
  CHECK(positive->m == 1);
  CHECK(positive->k == 1);

  const auto self = spectrally_equivalent(g, permuted(g, {3, 1, 4, 2}), min_cycle_cover_rule(), 2, 2);
  REQUIRE(self.has_value());
  CHECK(self->m + self->k == 0);

  Network other = g;
  other.set_edge(4, 1, -2);
  CHECK_FALSE(spectrally_equivalent(g, other, tau, 3, 3).has_value());
}

TEST_CASE("matrix reductions of A and B") {
  const RatMatrix a = to_ratmatrix(fixtures::matrix_a());
  const RatMatrix b = to_ratmatrix(fixtures::matrix_b());
  const MatrixEquivalence e = matrix_spectrally_equivalent(a, b, 2);
  CHECK_FALSE(e.equivalent);
  REQUIRE(e.a.size() == 3);
  REQUIRE(e.b.size() == 3);
  CHECK(e.a[0].reduced == literal({{"(148*l - 140)/(17*l + 41)", "(206*l - 226)/(17*l + 41)"},
                                   {"(23 - 13*l)/(17*l + 41)", "(67 - 5*l)/(17*l + 41)"}}));
  CHECK(e.a[1].reduced == literal({{"(148*l - 114)/(17*l + 5)", "(256*l - 264)/(17*l + 5)"},
                                   {"(27 - 33*l)/(17*l + 5)", "(67 - 41*l)/(17*l + 5)"}}));
  CHECK(e.a[2].reduced == literal({{"(-5*l - 114)/(17*l - 148)", "(48 - 28*l)/(17*l - 148)"},
                                   {"(18 - 48*l)/(17*l - 148)", "(-41*l - 140)/(17*l - 148)"}}));
  CHECK(e.b[0].reduced == literal({{"(l - 18)/(27*l - 56)", "(72 - 39*l)/(27*l - 56)"},
                                   {"(52*l - 76)/(27*l - 56)", "(105*l - 200)/(27*l - 56)"}}));
  CHECK(e.b[1].reduced == literal({{"(l - 79)/(27*l - 105)", "(10 - 10*l)/(27*l - 105)"},
                                   {"(43*l - 121)/(27*l - 105)", "(56*l - 200)/(27*l - 105)"}}));
  CHECK(e.b[2].reduced == literal({{"(105*l - 79)/(27*l - 1)", "(20*l - 20)/(27*l - 1)"},
                                   {"(24*l - 63)/(27*l - 1)", "(56*l - 18)/(27*l - 1)"}}));

  // A permuted copy of A is equivalent to A.
  const GaussMatrix pa = fixtures::matrix_a();
  GaussMatrix swapped(3, 3);
  const std::size_t perm[3] = {2, 0, 1};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) swapped(perm[i], perm[j]) = pa(i, j);
  const MatrixEquivalence same = matrix_spectrally_equivalent(a, to_ratmatrix(swapped), 2);
  CHECK(same.equivalent);
  CHECK(same.a_index.has_value());
  CHECK(same.perm.size() == 2);

  CHECK(code_of([&] { matrix_spectrally_equivalent(a, b, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { matrix_spectrally_equivalent(a, b, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("spectral disjointness condition") {
  const GaussMatrix a = fixtures::matrix_a();
  for (std::size_t drop = 0; drop < 3; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != drop) keep.push_back(j);
    CHECK(seq_condition(a, make_partition(3, keep)));
  }
  CHECK_FALSE(seq_condition(fixtures::jordan_pairs(), make_partition(4, {0, 1})));
}
