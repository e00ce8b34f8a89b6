#pragma once

// Characteristic functions, eigenvalue multisets, eigenvectors and
// generalized-eigenvector chains at a fixed λ0.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "isored/linalg.hpp"
#include "isored/ratfield.hpp"

namespace isored {

/// Tolerance for matching numeric eigenvalues between multisets.
inline constexpr double kMultisetTolerance = 1e-7;
/// Bound on |f(z)| / sum_k |c_k| |z|^k accepted for a numeric root.
inline constexpr double kRootResidual = 1e-9;

/// det(M - λI), reduced.
RatFunc char_function(const RatMatrix& m);

struct Eigenvalue {
  std::variant<Gauss, Complex> value;
  unsigned multiplicity = 1;
  /// Relative residual of a numeric root; 0 for exact roots.
  double residual = 0.0;

  bool exact() const { return std::holds_alternative<Gauss>(value); }
  const Gauss& exact_value() const { return std::get<Gauss>(value); }
  Complex approx() const;
};

/// Eigenvalues with multiplicities, kept sorted by (re, im) of the
/// approximate value. Exact roots match exactly; any comparison involving a
/// numeric root matches within `tolerance`.
class SpectrumMultiset {
 public:
  SpectrumMultiset() = default;
  explicit SpectrumMultiset(std::vector<Eigenvalue> entries, double tolerance = kMultisetTolerance);

  const std::vector<Eigenvalue>& entries() const { return entries_; }
  double tolerance() const { return tolerance_; }
  std::size_t size() const;  // counted with multiplicity
  bool empty() const { return entries_.empty(); }
  bool all_exact() const;
  bool any_exact() const;

  /// Multiplicity of z (0 if absent).
  unsigned multiplicity(const Eigenvalue& z) const;
  unsigned multiplicity(const Gauss& z) const;

  void add(Eigenvalue e);

  friend SpectrumMultiset multiset_union(const SpectrumMultiset& a, const SpectrumMultiset& b);
  /// Multiplicities subtract, clamped at zero.
  friend SpectrumMultiset multiset_difference(const SpectrumMultiset& a, const SpectrumMultiset& b);
  friend SpectrumMultiset multiset_intersection(const SpectrumMultiset& a, const SpectrumMultiset& b);
  /// Every element of a occurs in b at least as often.
  friend bool multiset_subset(const SpectrumMultiset& a, const SpectrumMultiset& b);
  friend bool operator==(const SpectrumMultiset& a, const SpectrumMultiset& b) {
    return multiset_subset(a, b) && multiset_subset(b, a);
  }

 private:
  bool matches(const Eigenvalue& a, const Eigenvalue& b) const;
  std::vector<Eigenvalue> entries_;
  double tolerance_ = kMultisetTolerance;
};

/// Roots of p with multiplicity. Exact roots are only reported after exact
/// verification; the rest are numeric with residual <= kRootResidual.
/// Throws Error(InvalidArgument) for the zero polynomial and
/// Error(NumericFailure) when a numeric root cannot be polished.
SpectrumMultiset polynomial_roots(const Poly& p);

/// Roots of the numerator of char_function(m).
SpectrumMultiset spectrum(const RatMatrix& m);

/// Multiplicity of z as a root of p.
unsigned root_multiplicity(const Poly& p, const Gauss& z);

/// Reduced echelon basis of span(vectors): each vector's first nonzero entry
/// is 1 and sits where every other vector is 0.
std::vector<GaussVector> canonical_basis(const std::vector<GaussVector>& vectors);

/// Canonical basis of ker(M(λ0) - λ0 I). Throws Error(PoleError) or
/// Error(NotAnEigenvalue).
std::vector<GaussVector> eigenvectors_at(const RatMatrix& m, const Gauss& lambda0);

/// Numeric kernel basis at an approximate eigenvalue, each scaled so its
/// first entry above `tol` in modulus is 1. Throws Error(NearPoleError) or
/// Error(NotAnEigenvalue).
std::vector<std::vector<Complex>> eigenvectors_numeric(const RatMatrix& m, Complex lambda0, double tol = 1e-8);

/// vectors[0] = u is an eigenvector and N vectors[k+1] = vectors[k] for
/// N = M(λ0) - λ0 I.
struct ChainData {
  Gauss lambda0;
  std::vector<GaussVector> vectors;
};

/// A chain of the given length (>= 1). Without `start`, any chain of that
/// length; with `start`, the chain must begin at that eigenvector. Throws
/// Error(ChainTerminated) when none exists.
ChainData generalized_chain(const RatMatrix& m, const Gauss& lambda0, std::size_t depth,
                            const std::optional<GaussVector>& start = std::nullopt);

/// Longest chain at λ0. Throws Error(NotAnEigenvalue).
ChainData maximal_chain(const RatMatrix& m, const Gauss& lambda0);

/// Unique representative of a chain over a one-dimensional eigenspace: u is
/// scaled so its first nonzero entry (index p) is 1 and every later vector
/// has entry p equal to 0.
ChainData canonical_chain(ChainData chain);

/// True iff N vectors[0] = 0, vectors[0] != 0 and N vectors[k+1] = vectors[k].
bool is_chain(const RatMatrix& m, const ChainData& chain);

struct MultiplicityReport {
  Gauss lambda0;
  unsigned algebraic = 0;
  unsigned geometric = 0;
  /// a - g; only defined for constant matrices.
  std::optional<unsigned> defect;
};

MultiplicityReport multiplicities(const RatMatrix& m, const Gauss& lambda0);

/// Jordan block sizes at λ0 of a constant matrix, in decreasing order,
/// from the rank sequence of (A - λ0 I)^k.
std::vector<std::size_t> jordan_block_sizes(const GaussMatrix& a, const Gauss& lambda0);

/// Numeric eigenvalues of a constant matrix (double precision oracle).
std::vector<Complex> numeric_eigenvalues(const GaussMatrix& a);

}  // namespace isored
