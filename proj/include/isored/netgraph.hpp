#pragma once

// λ-weighted directed networks, structural sets and branches.
//
// Vertices are 1-based, matching the file format. Each vertex also carries a
// label: the index it had in the network a chain of reductions started from,
// so reduced networks can still be addressed by original vertex numbers.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/ratfield.hpp"

namespace isored {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;

class Network {
 public:
  using EdgeMap = std::map<std::pair<Vertex, Vertex>, RatFunc>;

  explicit Network(std::size_t n = 0);

  std::size_t size() const { return n_; }
  const EdgeMap& edges() const { return edges_; }

  /// Setting a zero weight removes the edge. Throws Error(BadVertexIndex).
  void set_edge(Vertex from, Vertex to, RatFunc weight);
  /// The zero function when (from, to) is not an edge.
  const RatFunc& weight(Vertex from, Vertex to) const;
  bool has_edge(Vertex from, Vertex to) const { return edges_.contains({from, to}); }
  /// Out-neighbours in increasing order, including `v` itself if it has a loop.
  std::vector<Vertex> successors(Vertex v) const;

  std::size_t label(Vertex v) const { return labels_.at(v - 1); }
  const std::vector<std::size_t>& labels() const { return labels_; }
  /// Throws Error(InvalidArgument) unless labels are distinct and one per vertex.
  void set_labels(std::vector<std::size_t> labels);
  std::optional<Vertex> vertex_with_label(std::size_t label) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  EdgeMap edges_;
  std::vector<std::size_t> labels_;
};

/// Weighted adjacency matrix (row = source).
RatMatrix adjacency(const Network& net);
Network network_from_matrix(const RatMatrix& m);

/// A validated structural set with a topological order of its complement.
struct StructuralSet {
  VertexSet keep;
  VertexSet complement;
  /// Complement vertices ordered so every non-loop edge inside the complement
  /// goes forward.
  std::vector<Vertex> topo_order;

  bool in_complement(Vertex v) const;
};

/// Sorts and deduplicates; throws Error(BadVertexIndex) for out-of-range
/// vertices and Error(EmptySet) for an empty set.
VertexSet normalize_vertex_set(const Network& net, VertexSet s);

/// Throws Error(EmptySet), Error(BadVertexIndex), Error(CycleInComplement) or
/// Error(LoopWeightIsLambda).
StructuralSet validate_structural(const Network& net, VertexSet s);

/// w(i,i)(λ0) != λ0 for every complement vertex. Throws Error(PoleError)
/// when a complement loop weight has a pole at λ0.
bool validate_lambda0(const Network& net, const StructuralSet& s, const Gauss& lambda0);

/// Every structural set of the given size, in lexicographic order.
std::vector<StructuralSet> structural_sets_of_size(const Network& net, std::size_t size);

struct Branch {
  std::vector<Vertex> path;
  std::size_t length() const { return path.size() - 1; }
};

/// All branches from i to j: paths whose interior vertices are distinct and
/// lie in the complement. i == j yields cycle-branches (including the loop).
std::vector<Branch> branches(const Network& net, const StructuralSet& s, Vertex i, Vertex j);

/// w(i0,i1) * prod over interior vertices of w(il,il+1) / (λ - w(il,il)).
RatFunc branch_weight(const Branch& b, const Network& net);

/// Sum of branch weights from i to j, computed by a memoised sweep over the
/// complement DAG rather than by enumerating branches.
RatFunc reduced_entry(const Network& net, const StructuralSet& s, Vertex i, Vertex j);

/// Sum of weights of the branches of exact length p.
RatFunc branches_by_length(const Network& net, const StructuralSet& s, Vertex i, Vertex j, std::size_t p);

}  // namespace isored
