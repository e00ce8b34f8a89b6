#include "isored/reconstruct.hpp"

#include <algorithm>
#include <string>

#include "isored/error.hpp"
#include "isored/spectra.hpp"

namespace isored {

std::vector<Vertex> DepthMap::stratum(std::size_t k) const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v < depth.size(); ++v)
    if (depth[v] == k) out.push_back(v);
  return out;
}

DepthMap vertex_depths(const Network& net, const StructuralSet& s) {
  DepthMap d;
  d.depth.assign(net.size() + 1, 0);
  for (auto it = s.topo_order.rbegin(); it != s.topo_order.rend(); ++it) {
    const Vertex x = *it;
    std::size_t deepest = 0;
    for (Vertex y : net.successors(x))
      if (y != x) deepest = std::max(deepest, d.depth[y]);
    d.depth[x] = deepest + 1;
    d.max_depth = std::max(d.max_depth, d.depth[x]);
  }
  return d;
}

GaussVector reconstruct_vector(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                               const GaussVector& known, const std::optional<GaussVector>& prev) {
  if (known.size() != s.keep.size()) {
    throw Error(ErrorCode::InvalidArgument, "reduced vector has length " + std::to_string(known.size()) +
                                                ", expected " + std::to_string(s.keep.size()));
  }
  const GaussVector u = prev ? *prev : GaussVector(net.size());
  if (u.size() != net.size()) throw Error(ErrorCode::InvalidArgument, "previous vector has the wrong length");

  GaussVector v(net.size());
  for (std::size_t a = 0; a < s.keep.size(); ++a) v[s.keep[a] - 1] = known[a];
  const DepthMap depths = vertex_depths(net, s);
  for (std::size_t k = 1; k <= depths.max_depth; ++k) {
    for (Vertex l : depths.stratum(k)) {
      const Gauss denom = lambda0 - net.weight(l, l)(lambda0);
      if (denom.is_zero()) {
        throw Error(ErrorCode::LoopWeightEqualsLambda0,
                    "loop weight at vertex " + std::to_string(l) + " equals " + to_string(lambda0));
      }
      Gauss sum = -u[l - 1];
      for (Vertex j : net.successors(l))
        if (j != l) sum += net.weight(l, j)(lambda0) * v[j - 1];
      v[l - 1] = sum / denom;
    }
  }
  if (shifted(evaluate(adjacency(net), lambda0), lambda0) * v != u) {
    throw Error(ErrorCode::HypothesisViolated,
                "reconstructed vector does not satisfy the chain relation on the full network; the reduced "
                "vector is not a chain partner of the given lower-rank vector");
  }
  return v;
}

std::optional<Gauss> reduced_chain_constant(const RatMatrix& r, const Gauss& lambda0, const GaussVector& v_s,
                                            const GaussVector& u_s) {
  const GaussVector y = shifted(evaluate(r, lambda0), lambda0) * v_s;
  if (u_s.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "reduced vectors have mismatched lengths");
  if (is_zero_vector(u_s)) {
    if (is_zero_vector(y)) return Gauss();
    return std::nullopt;
  }
  std::optional<Gauss> f;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (u_s[k].is_zero()) {
      if (!y[k].is_zero()) return std::nullopt;
      continue;
    }
    const Gauss ratio = y[k] / u_s[k];
    if (f && *f != ratio) return std::nullopt;
    f = ratio;
  }
  return *f - Gauss(1);
}

GaussMatrix jordan_matrix(const std::vector<JordanBlock>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size;
  GaussMatrix j(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.size; ++k) {
      j(at + k, at + k) = b.eigenvalue;
      if (k + 1 < b.size) j(at + k, at + k + 1) = Gauss(1);
    }
    at += b.size;
  }
  return j;
}

GaussMatrix rebuild_matrix(const JordanData& jd) {
  const GaussMatrix j = jordan_matrix(jd.blocks);
  if (!jd.basis.is_square() || jd.basis.rows() != j.rows()) {
    throw Error(ErrorCode::InvalidArgument, "basis size does not match the Jordan blocks");
  }
  auto b_inv = inverse(jd.basis);
  if (!b_inv) throw Error(ErrorCode::SingularBasis, "Jordan basis is singular");
  return jd.basis * j * *b_inv;
}

namespace {

std::size_t span_rank(const std::vector<GaussVector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  GaussMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = vs[i][k];
  return rank(m);
}

}  // namespace

JordanData jordan_of(const GaussMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "Jordan data needs a square matrix");
  const std::size_t n = a.rows();
  const auto spec = spectrum(to_ratmatrix(a));
  if (!spec.all_exact()) throw Error(ErrorCode::NumericFailure, "Jordan data needs exact eigenvalues");

  JordanData jd;
  std::vector<GaussVector> columns;
  for (const auto& e : spec.entries()) {
    const Gauss lambda0 = e.exact_value();
    const GaussMatrix nil = shifted(a, lambda0);
    const auto sizes = jordan_block_sizes(a, lambda0);
    const std::size_t index = sizes.front();

    // kernels[k] = basis of ker N^k.
    std::vector<std::vector<GaussVector>> kernels(index + 1);
    GaussMatrix p = GaussMatrix::identity(n);
    for (std::size_t k = 1; k <= index; ++k) {
      p = p * nil;
      kernels[k] = nullspace(p);
    }

    // Chain tops are chosen longest first; at level k a candidate must be
    // independent of ker N^(k-1) and of the longer chains pushed down to k.
    std::vector<std::pair<GaussVector, std::size_t>> chosen;  // (top, length)
    for (std::size_t k = index; k >= 1; --k) {
      const auto wanted = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), k));
      std::vector<GaussVector> level = k >= 2 ? kernels[k - 1] : std::vector<GaussVector>{};
      for (const auto& [top, len] : chosen) {
        GaussVector x = top;
        for (std::size_t s = 0; s < len - k; ++s) x = nil * x;
        level.push_back(std::move(x));
      }
      std::size_t r = span_rank(level, n);
      std::size_t got = 0;
      for (const auto& b : kernels[k]) {
        if (got == wanted) break;
        level.push_back(b);
        const std::size_t r2 = span_rank(level, n);
        if (r2 > r) {
          r = r2;
          chosen.emplace_back(b, k);
          ++got;
        } else {
          level.pop_back();
        }
      }
      if (got != wanted) throw Error(ErrorCode::Internal, "Jordan chain construction failed");
    }
    for (const auto& [top, len] : chosen) {
      std::vector<GaussVector> chain(len);
      chain[len - 1] = top;
      for (std::size_t k = len - 1; k > 0; --k) chain[k - 1] = nil * chain[k];
      for (auto& c : chain) columns.push_back(std::move(c));
      jd.blocks.push_back({lambda0, len});
    }
  }
  jd.basis = GaussMatrix(n, n);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) jd.basis(r, c) = columns[c][r];
  return jd;
}

}  // namespace isored
