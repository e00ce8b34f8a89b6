#pragma once

// Weighted isomorphism, spectral equivalence of networks under a reduction
// rule, and spectral equivalence of constant matrices.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/netgraph.hpp"
#include "isored/reduction.hpp"

namespace isored {

/// iso[v-1] is the vertex of h matched with vertex v of g; weights agree on
/// every ordered pair, loops included. Labels are ignored.
using Isomorphism = std::vector<Vertex>;

std::optional<Isomorphism> isomorphic(const Network& g, const Network& h);

/// Every edge weight has deg(num) <= deg(den).
bool in_G_pi(const Network& net);

struct ReductionRule {
  std::string name;
  /// Vertices (1-based, current numbering) to keep.
  std::function<VertexSet(const Network&)> selector;
};

/// Keeps the vertices whose labels appear in `labels`.
ReductionRule keep_listed_rule(VertexSet labels);
/// Keeps the vertices carrying a loop.
ReductionRule keep_loops_rule();
/// Keeps a smallest structural set with at least two vertices: exhaustive
/// search in lexicographic order up to 16 vertices, greedy removal above.
ReductionRule min_cycle_cover_rule();

/// "keep:1,4", "loops" or "min-cycle-cover". Throws Error(ParseError).
ReductionRule parse_rule(std::string_view text);

/// Reduction onto the rule's selection, through single-vertex steps when the
/// selection is not structural. A selection of every vertex returns the
/// network unchanged. Throws Error(RuleInapplicable) when the selection has
/// at most one vertex.
Network apply_rule(const Network& net, const ReductionRule& rule);

struct EquivalenceWitness {
  std::size_t m = 0;
  std::size_t k = 0;
  Isomorphism iso;
};

/// First (m, k), by increasing m + k then m, with R^m(g) isomorphic to
/// R^k(h). Exponent 0 is skipped unless `allow_zero`. Throws
/// Error(InvalidArgument) when an input has an improper weight and
/// Error(RuleInapplicable) when the rule runs out before a witness is found.
std::optional<EquivalenceWitness> spectrally_equivalent(const Network& g, const Network& h,
                                                        const ReductionRule& rule, std::size_t max_m,
                                                        std::size_t max_k, bool allow_zero = true);

struct MatrixReduction {
  std::vector<std::size_t> keep;  // 0-based
  RatMatrix reduced;
};

struct MatrixEquivalence {
  bool equivalent = false;
  std::vector<MatrixReduction> a;
  std::vector<MatrixReduction> b;
  /// Indices into a and b, and perm with a.reduced(i,j) = b.reduced(perm[i], perm[j]).
  std::optional<std::size_t> a_index;
  std::optional<std::size_t> b_index;
  std::vector<std::size_t> perm;
};

/// Reduces both matrices onto every index set of size dim whose complement
/// block is invertible over the function field, and looks for two equal
/// reductions up to a simultaneous permutation. Throws
/// Error(InvalidArgument) unless 2 <= dim <= size.
MatrixEquivalence matrix_spectrally_equivalent(const RatMatrix& a, const RatMatrix& b, std::size_t dim);

/// σ(M) ∩ σ(M_S'S') = ∅, decided exactly as gcd of characteristic
/// polynomials. When it holds, the characteristic numerator of the reduction
/// is checked to be proportional to that of M (Error(Internal) otherwise).
bool seq_condition(const GaussMatrix& m, const Partition& p);

}  // namespace isored
