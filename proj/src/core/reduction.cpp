#include "isored/reduction.hpp"

#include <algorithm>
#include <string>

#include "isored/error.hpp"

namespace isored {

Partition make_partition(std::size_t n, std::vector<std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptySet, "kept index set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= n) {
    throw Error(ErrorCode::BadVertexIndex, "index " + std::to_string(keep.back() + 1) + " out of range");
  }
  Partition p;
  p.keep = std::move(keep);
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::binary_search(p.keep.begin(), p.keep.end(), k)) p.complement.push_back(k);
  }
  return p;
}

Partition partition_of(const StructuralSet& s) {
  Partition p;
  for (Vertex v : s.keep) p.keep.push_back(v - 1);
  for (Vertex v : s.complement) p.complement.push_back(v - 1);
  return p;
}

namespace {

Network relabelled(const Network& net, const VertexSet& keep, const RatMatrix& reduced) {
  Network out = network_from_matrix(reduced);
  std::vector<std::size_t> labels;
  for (Vertex v : keep) labels.push_back(net.label(v));
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace

Network reduce_graph(const Network& net, const StructuralSet& s) {
  const std::size_t k = s.keep.size();
  RatMatrix r(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) r(a, b) = reduced_entry(net, s, s.keep[a], s.keep[b]);
  return relabelled(net, s.keep, r);
}

RatMatrix reduce_matrix(const RatMatrix& m, const Partition& p) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "reduction needs a square matrix");
  if (p.keep.size() + p.complement.size() != m.rows()) {
    throw Error(ErrorCode::InvalidArgument, "partition does not match matrix dimension");
  }
  auto blocks = split(m, p);
  if (p.complement.empty()) return blocks.ss;
  auto x = solve(minus_lambda_identity(blocks.cc), blocks.cs);
  if (!x) {
    throw Error(ErrorCode::SingularComplement, "complement block minus l*I is singular over the function field");
  }
  return blocks.ss - blocks.sc * *x;
}

Network reduce_network_block(const Network& net, VertexSet keep) {
  keep = normalize_vertex_set(net, std::move(keep));
  std::vector<std::size_t> idx;
  for (Vertex v : keep) idx.push_back(v - 1);
  return relabelled(net, keep, reduce_matrix(adjacency(net), make_partition(net.size(), idx)));
}

VertexSet vertices_for_labels(const Network& net, const VertexSet& labels) {
  VertexSet out;
  for (std::size_t label : labels) {
    auto v = net.vertex_with_label(label);
    if (!v) throw Error(ErrorCode::BadVertexIndex, "no vertex with label " + std::to_string(label));
    out.push_back(*v);
  }
  return out;
}

Network reduce_sequence(const Network& net, const std::vector<VertexSet>& label_sets) {
  if (label_sets.empty()) throw Error(ErrorCode::InvalidArgument, "empty reduction chain");
  Network current = net;
  for (const auto& labels : label_sets) {
    current = reduce_graph(current, validate_structural(current, vertices_for_labels(current, labels)));
  }
  return current;
}

Network reduce_stepwise(const Network& net, VertexSet keep) {
  keep = normalize_vertex_set(net, std::move(keep));
  std::vector<std::size_t> wanted;
  for (Vertex v : keep) wanted.push_back(net.label(v));
  Network current = net;
  while (current.size() > wanted.size()) {
    // Drop the highest-numbered vertex that is not wanted.
    Vertex drop = 0;
    for (Vertex v = current.size(); v >= 1; --v) {
      if (std::find(wanted.begin(), wanted.end(), current.label(v)) == wanted.end()) {
        drop = v;
        break;
      }
    }
    VertexSet rest;
    for (Vertex v = 1; v <= current.size(); ++v)
      if (v != drop) rest.push_back(v);
    current = reduce_graph(current, validate_structural(current, rest));
  }
  return current;
}

bool cross_validate(const Network& net, const StructuralSet& s) {
  const RatMatrix by_graph = adjacency(reduce_graph(net, s));
  const RatMatrix by_block = reduce_matrix(adjacency(net), partition_of(s));
  return by_graph == by_block;
}

}  // namespace isored
