#include "isored/netgraph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "isored/error.hpp"

namespace isored {

Network::Network(std::size_t n) : n_(n), labels_(n) {
  for (std::size_t k = 0; k < n; ++k) labels_[k] = k + 1;
}

void Network::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::BadVertexIndex,
                "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  }
}

void Network::set_edge(Vertex from, Vertex to, RatFunc weight) {
  check_vertex(from);
  check_vertex(to);
  if (weight.is_zero()) {
    edges_.erase({from, to});
  } else {
    edges_.insert_or_assign({from, to}, std::move(weight));
  }
}

const RatFunc& Network::weight(Vertex from, Vertex to) const {
  static const RatFunc zero;
  auto it = edges_.find({from, to});
  return it == edges_.end() ? zero : it->second;
}

std::vector<Vertex> Network::successors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first.first == v; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

void Network::set_labels(std::vector<std::size_t> labels) {
  if (labels.size() != n_) throw Error(ErrorCode::InvalidArgument, "one label per vertex required");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "vertex labels must be distinct");
  }
  labels_ = std::move(labels);
}

std::optional<Vertex> Network::vertex_with_label(std::size_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin()) + 1;
}

RatMatrix adjacency(const Network& net) {
  RatMatrix m(net.size(), net.size());
  for (const auto& [edge, w] : net.edges()) m(edge.first - 1, edge.second - 1) = w;
  return m;
}

Network network_from_matrix(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "adjacency matrix must be square");
  Network net(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) net.set_edge(i + 1, j + 1, m(i, j));
  return net;
}

bool StructuralSet::in_complement(Vertex v) const {
  return std::binary_search(complement.begin(), complement.end(), v);
}

VertexSet normalize_vertex_set(const Network& net, VertexSet s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "vertex set is empty");
  for (Vertex v : s) net.check_vertex(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

StructuralSet validate_structural(const Network& net, VertexSet s) {
  StructuralSet out;
  out.keep = normalize_vertex_set(net, std::move(s));
  for (Vertex v = 1; v <= net.size(); ++v) {
    if (!std::binary_search(out.keep.begin(), out.keep.end(), v)) out.complement.push_back(v);
  }

  const RatFunc lambda = RatFunc::lambda();
  for (Vertex v : out.complement) {
    if (net.weight(v, v) == lambda) {
      throw Error(ErrorCode::LoopWeightIsLambda,
                  "complement vertex " + std::to_string(v) + " has loop weight identically l");
    }
  }

  // DFS over the complement with loops ignored; a back edge is a cycle that
  // avoids the kept set.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(net.size() + 1, Mark::White);
  std::vector<Vertex> postorder;
  std::function<void(Vertex)> visit = [&](Vertex v) {
    mark[v] = Mark::Grey;
    for (Vertex w : net.successors(v)) {
      if (w == v || !out.in_complement(w)) continue;
      if (mark[w] == Mark::Grey) {
        throw Error(ErrorCode::CycleInComplement,
                    "a cycle through vertices " + std::to_string(v) + " and " + std::to_string(w) +
                        " avoids the kept set");
      }
      if (mark[w] == Mark::White) visit(w);
    }
    mark[v] = Mark::Black;
    postorder.push_back(v);
  };
  for (Vertex v : out.complement) {
    if (mark[v] == Mark::White) visit(v);
  }
  out.topo_order.assign(postorder.rbegin(), postorder.rend());
  return out;
}

bool validate_lambda0(const Network& net, const StructuralSet& s, const Gauss& lambda0) {
  for (Vertex v : s.complement) {
    if (net.weight(v, v)(lambda0) == lambda0) return false;
  }
  return true;
}

std::vector<StructuralSet> structural_sets_of_size(const Network& net, std::size_t size) {
  std::vector<StructuralSet> out;
  const std::size_t n = net.size();
  if (size == 0 || size > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    VertexSet s;
    for (std::size_t k = 0; k < n; ++k)
      if (pick[k]) s.push_back(k + 1);
    try {
      out.push_back(validate_structural(net, std::move(s)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CycleInComplement && e.code() != ErrorCode::LoopWeightIsLambda) throw;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Branch> branches(const Network& net, const StructuralSet& s, Vertex i, Vertex j) {
  net.check_vertex(i);
  net.check_vertex(j);
  std::vector<Branch> out;
  std::vector<Vertex> path{i};
  std::function<void(Vertex)> extend = [&](Vertex at) {
    for (Vertex next : net.successors(at)) {
      if (next == j) {
        path.push_back(next);
        out.push_back(Branch{path});
        path.pop_back();
        continue;
      }
      if (!s.in_complement(next)) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      extend(next);
      path.pop_back();
    }
  };
  extend(i);
  return out;
}

RatFunc branch_weight(const Branch& b, const Network& net) {
  if (b.path.size() < 2) throw Error(ErrorCode::InvalidArgument, "a branch has length at least 1");
  RatFunc w = net.weight(b.path[0], b.path[1]);
  const RatFunc lambda = RatFunc::lambda();
  for (std::size_t l = 1; l + 1 < b.path.size(); ++l) {
    const Vertex v = b.path[l];
    w *= net.weight(v, b.path[l + 1]) / (lambda - net.weight(v, v));
  }
  return w;
}

namespace {

// Sum over branch tails starting at a complement vertex x and ending at a
// fixed target, including the 1 / (λ - w(x,x)) factor for x. Complement
// vertices are visited in reverse topological order so each tail sum is
// computed once.
std::vector<RatFunc> tail_sums(const Network& net, const StructuralSet& s, Vertex target) {
  std::vector<RatFunc> tail(net.size() + 1);
  const RatFunc lambda = RatFunc::lambda();
  for (auto it = s.topo_order.rbegin(); it != s.topo_order.rend(); ++it) {
    const Vertex x = *it;
    if (x == target) continue;
    RatFunc acc;
    for (Vertex y : net.successors(x)) {
      if (y == x) continue;
      if (y == target) {
        acc += net.weight(x, y);
      } else if (s.in_complement(y)) {
        acc += net.weight(x, y) * tail[y];
      }
    }
    if (!acc.is_zero()) tail[x] = acc / (lambda - net.weight(x, x));
  }
  return tail;
}

}  // namespace

RatFunc reduced_entry(const Network& net, const StructuralSet& s, Vertex i, Vertex j) {
  net.check_vertex(i);
  net.check_vertex(j);
  const auto tail = tail_sums(net, s, j);
  RatFunc sum;
  for (Vertex x : net.successors(i)) {
    if (x == j) {
      sum += net.weight(i, x);
    } else if (x != i && s.in_complement(x)) {
      sum += net.weight(i, x) * tail[x];
    }
  }
  return sum;
}

RatFunc branches_by_length(const Network& net, const StructuralSet& s, Vertex i, Vertex j, std::size_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "branch length must be at least 1");
  RatFunc sum;
  for (const auto& b : branches(net, s, i, j)) {
    if (b.length() == p) sum += branch_weight(b, net);
  }
  return sum;
}

}  // namespace isored
