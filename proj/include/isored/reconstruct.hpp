#pragma once

// Recovery of full-network vectors from reduced ones, and of a constant
// matrix from its Jordan data.

#include <cstddef>
#include <optional>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/netgraph.hpp"

namespace isored {

/// depth[v] for v in 1..n (index 0 unused). Kept vertices have depth 0; a
/// complement vertex has depth 1 + the largest depth among its non-loop
/// out-neighbours (1 for a complement sink).
struct DepthMap {
  std::vector<std::size_t> depth;
  std::size_t max_depth = 0;

  /// Vertices of depth exactly k, increasing.
  std::vector<Vertex> stratum(std::size_t k) const;
};

DepthMap vertex_depths(const Network& net, const StructuralSet& s);

/// Fills complement entries stratum by stratum:
///   v_l = (sum_j w(l,j)(λ0) v_j - prev_l) / (λ0 - w(l,l)(λ0)).
/// `known` is indexed like s.keep; `prev` is the full lower-rank vector (zero
/// for an eigenvector). The result satisfies (M(λ0) - λ0 I) v = prev, else
/// Error(HypothesisViolated). Throws Error(LoopWeightEqualsLambda0).
GaussVector reconstruct_vector(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                               const GaussVector& known, const std::optional<GaussVector>& prev = std::nullopt);

/// f with (R(λ0) - λ0 I) v_S = f u_S, reported as c = f - 1. Absent when the
/// left side is not a multiple of u_S. With u_S = 0 (eigenvector case) the
/// left side must vanish and c = 0 is reported.
std::optional<Gauss> reduced_chain_constant(const RatMatrix& r, const Gauss& lambda0, const GaussVector& v_s,
                                            const GaussVector& u_s);

struct JordanBlock {
  Gauss eigenvalue;
  std::size_t size = 1;
};

/// Columns of `basis` list each block's chain eigenvector first, so that
/// A = B J B^-1 with ones on the superdiagonal of J.
struct JordanData {
  std::vector<JordanBlock> blocks;
  GaussMatrix basis;
};

GaussMatrix jordan_matrix(const std::vector<JordanBlock>& blocks);

/// B J B^-1; throws Error(SingularBasis) or Error(InvalidArgument) on a size
/// mismatch.
GaussMatrix rebuild_matrix(const JordanData& jd);

/// Jordan data of a constant matrix whose eigenvalues are all Gaussian
/// rationals; throws Error(NumericFailure) otherwise.
JordanData jordan_of(const GaussMatrix& a);

}  // namespace isored
