#pragma once

// Criteria deciding whether a generalized eigenvector pair (u, v) with
// (M(λ0) - λ0 I) v = u survives reduction onto S, in the sense that
// (R_S(λ0) - λ0 I) v_S = (1 + c) u_S for a constant c != -1.
//
// All verdicts report c in the entry-wise convention:
//   sum over l in S' of R_il(λ0) / (λ0 - w(l,l)) u_l = c u_i   for i in S,
// where R_il sums branch weights from i to the complement vertex l.
// The block form M_SS'(λ0) (M_S'S'(λ0) - λ0 I)^-1 u_S' = c_b u_S satisfies
// c_b = -c.

#include <optional>
#include <string>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/netgraph.hpp"
#include "isored/reduction.hpp"
#include "isored/spectra.hpp"

namespace isored {

enum class Outcome { Preserved, NotPreserved, DegenerateMinusOne };
enum class Criterion { EntryWise, SingleVertex, Disconnected, Block };

const char* to_string(Outcome o) noexcept;
const char* to_string(Criterion c) noexcept;

/// One row i of the criterion: lhs = c u_i is required.
struct CriterionRow {
  Vertex vertex;  // 1-based position in the full vector
  Gauss lhs;
  Gauss u;
};

struct PreservationVerdict {
  Outcome outcome = Outcome::NotPreserved;
  Criterion criterion = Criterion::EntryWise;
  /// Entry-wise constant; present unless the rows are inconsistent.
  std::optional<Gauss> c;
  /// Block-form constant (block criterion only).
  std::optional<Gauss> block_c;
  /// Whether u_S is an eigenvector of M_SS'(λ0) K^-2 M_S'S(λ0) with
  /// eigenvalue c, K = M_S'S'(λ0) - λ0 I (block criterion, u an eigenvector).
  std::optional<bool> squared_form_agrees;
  /// (R_S(λ0) - λ0 I) v_S = (1 + c) u_S, when a chain partner v was supplied.
  std::optional<bool> chain_verified;
  std::vector<CriterionRow> rows;
  /// Human-readable reason when not preserved.
  std::string witness;

  bool preserved() const { return outcome == Outcome::Preserved; }
};

/// Entry-wise criterion. `u` and `v` are full-length vectors.
/// Throws Error(ZeroVectorInput) or Error(NotLambda0Structural).
PreservationVerdict check_entrywise(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                                    const GaussVector& u, const std::optional<GaussVector>& v = std::nullopt);

/// Single-vertex complement: the column (w(i,j))_{i in S} must be
/// proportional to u_S, or u_j = 0. Throws Error(ComplementNotSingleton).
PreservationVerdict check_single_vertex(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                                        const GaussVector& u);

/// Edgeless complement: only direct edges enter the sums. Throws
/// Error(ComplementNotDisconnected).
PreservationVerdict check_disconnected(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                                       const GaussVector& u);

/// Block form on a matrix. Throws Error(SingularComplementAtLambda0).
PreservationVerdict check_block(const RatMatrix& m, const Partition& p, const Gauss& lambda0, const GaussVector& u,
                                const std::optional<GaussVector>& v = std::nullopt);

struct CriteriaReport {
  std::vector<PreservationVerdict> verdicts;  // entry-wise first
  /// Every applicable criterion gave the same outcome and c.
  bool agree = true;
};

/// Runs every criterion whose precondition holds.
CriteriaReport check_all(const Network& net, const StructuralSet& s, const Gauss& lambda0, const GaussVector& u,
                         const std::optional<GaussVector>& v = std::nullopt);

GaussVector project_eigenvector(const GaussVector& u, const Partition& p);

/// u_S' = -(M_S'S'(λ0) - λ0 I)^-1 M_S'S(λ0) u_S. Throws
/// Error(SingularComplementAtLambda0), or Error(InvalidArgument) when the
/// result is not an eigenvector of M(λ0).
GaussVector lift_eigenvector(const GaussVector& u_s, const RatMatrix& m, const Partition& p, const Gauss& lambda0);

struct SufficientReport {
  bool outgoing_zero = false;  // M_SS'(λ0) = 0
  bool incoming_zero = false;  // M_S'S(λ0) = 0
  /// R(λ0) == M_SS(λ0); absent when R has a pole at λ0.
  std::optional<bool> reduced_equals_block;

  bool sufficient() const { return outgoing_zero || incoming_zero; }
};

SufficientReport check_sufficient(const RatMatrix& m, const Partition& p, const Gauss& lambda0);

struct MultiplicityPreservation {
  MultiplicityReport before;
  MultiplicityReport after;
  /// σ(M) ∩ σ(M_S'S'): eigenvalues the reduction loses.
  SpectrumMultiset lost;
  bool preserved() const {
    return before.algebraic == after.algebraic && before.geometric == after.geometric;
  }
};

/// For a constant matrix and λ0 outside σ(M_S'S').
MultiplicityPreservation multiplicity_preservation_report(const GaussMatrix& m, const Partition& p,
                                                          const Gauss& lambda0);

}  // namespace isored
