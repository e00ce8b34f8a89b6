#pragma once

// Isospectral reduction in two independent forms:
//   - graph form: reduced weights are sums of branch weights;
//   - block form: R = M_SS - M_SS' (M_S'S' - λI)^-1 M_S'S over the field of
//     rational functions, where S' is the complement of S.
// The two agree whenever both are defined; cross_validate checks that.

#include <cstddef>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/netgraph.hpp"

namespace isored {

/// 0-based index partition of {0..n-1}.
struct Partition {
  std::vector<std::size_t> keep;
  std::vector<std::size_t> complement;
};

/// Throws Error(EmptySet) or Error(BadVertexIndex).
Partition make_partition(std::size_t n, std::vector<std::size_t> keep);
Partition partition_of(const StructuralSet& s);

/// The four blocks of M under a partition.
template <class T>
struct Blocks {
  Matrix<T> ss;    // kept rows, kept columns
  Matrix<T> sc;    // kept rows, complement columns
  Matrix<T> cs;    // complement rows, kept columns
  Matrix<T> cc;    // complement rows, complement columns
};

template <class T>
Blocks<T> split(const Matrix<T>& m, const Partition& p) {
  return {m.submatrix(p.keep, p.keep), m.submatrix(p.keep, p.complement),
          m.submatrix(p.complement, p.keep), m.submatrix(p.complement, p.complement)};
}

/// Graph reduction onto a structural set; the result keeps the original
/// labels of the surviving vertices.
Network reduce_graph(const Network& net, const StructuralSet& s);

/// Block reduction; throws Error(SingularComplement) when det(M_S'S' - λI) is
/// the zero function.
RatMatrix reduce_matrix(const RatMatrix& m, const Partition& p);

/// Block reduction of a network onto any vertex set whose complement block is
/// invertible (no structural requirement).
Network reduce_network_block(const Network& net, VertexSet keep);

/// Successive graph reductions; each set is given in original labels and must
/// be structural for the network produced by the previous step.
Network reduce_sequence(const Network& net, const std::vector<VertexSet>& label_sets);

/// Reduction onto any vertex set by removing complement vertices one at a time
/// (each single-vertex removal is a structural reduction).
Network reduce_stepwise(const Network& net, VertexSet keep);

/// True iff graph and block reductions agree entrywise.
bool cross_validate(const Network& net, const StructuralSet& s);

/// Translates original labels into current vertices; throws
/// Error(BadVertexIndex) for unknown labels.
VertexSet vertices_for_labels(const Network& net, const VertexSet& labels);

}  // namespace isored
