#include "isored/preservation.hpp"

#include <string>

#include "isored/error.hpp"

namespace isored {

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Preserved: return "preserved";
    case Outcome::NotPreserved: return "not-preserved";
    case Outcome::DegenerateMinusOne: return "degenerate-c-minus-one";
  }
  return "unknown";
}

const char* to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::EntryWise: return "entry-wise";
    case Criterion::SingleVertex: return "single-vertex";
    case Criterion::Disconnected: return "disconnected";
    case Criterion::Block: return "block";
  }
  return "unknown";
}

namespace {

void check_length(const GaussVector& u, std::size_t n, const char* what) {
  if (u.size() != n) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has length " + std::to_string(u.size()) +
                                                ", expected " + std::to_string(n));
  }
}

void check_inputs(const Network& net, const StructuralSet& s, const Gauss& lambda0, const GaussVector& u) {
  check_length(u, net.size(), "u");
  if (is_zero_vector(u)) throw Error(ErrorCode::ZeroVectorInput, "u is the zero vector");
  if (!validate_lambda0(net, s, lambda0)) {
    throw Error(ErrorCode::NotLambda0Structural,
                "a complement loop weight equals " + to_string(lambda0) + " at " + to_string(lambda0));
  }
}

// Fits lhs_i = c u_i. Rows with u_i != 0 determine c; rows with u_i = 0
// only constrain lhs_i = 0.
PreservationVerdict fit(std::vector<CriterionRow> rows, Criterion criterion) {
  PreservationVerdict out;
  out.criterion = criterion;
  std::optional<Vertex> first;
  bool any_nonzero = false;
  for (const auto& r : rows) {
    if (r.u.is_zero()) continue;
    any_nonzero = true;
    const Gauss ratio = r.lhs / r.u;
    if (!out.c) {
      out.c = ratio;
      first = r.vertex;
    } else if (*out.c != ratio) {
      out.witness = "row " + std::to_string(*first) + " gives c = " + to_string(*out.c) + ", row " +
                    std::to_string(r.vertex) + " gives c = " + to_string(ratio);
      out.c.reset();
      break;
    }
  }
  if (!any_nonzero) throw Error(ErrorCode::InvalidArgument, "restriction of u to the kept set is zero");
  if (out.c) {
    for (const auto& r : rows) {
      if (r.u.is_zero() && !r.lhs.is_zero()) {
        out.witness = "row " + std::to_string(r.vertex) + " has u = 0 but left side " + to_string(r.lhs);
        out.c.reset();
        break;
      }
    }
  }
  out.rows = std::move(rows);
  if (!out.c) {
    out.outcome = Outcome::NotPreserved;
  } else if (*out.c == Gauss(-1)) {
    out.outcome = Outcome::DegenerateMinusOne;
    out.witness = "c = -1 makes the reduced right side vanish";
  } else {
    out.outcome = Outcome::Preserved;
  }
  return out;
}

GaussVector restrict(const GaussVector& x, const std::vector<std::size_t>& idx) {
  GaussVector out;
  for (auto k : idx) out.push_back(x[k]);
  return out;
}

// (R(λ0) - λ0 I) v_S = (1 + c) u_S
bool verify_chain(const GaussMatrix& r_at, const Partition& p, const Gauss& lambda0, const Gauss& c,
                  const GaussVector& u, const GaussVector& v) {
  const GaussVector lhs = shifted(r_at, lambda0) * restrict(v, p.keep);
  GaussVector rhs = restrict(u, p.keep);
  for (auto& x : rhs) x *= Gauss(1) + c;
  return lhs == rhs;
}


}  // namespace

PreservationVerdict check_entrywise(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                                    const GaussVector& u, const std::optional<GaussVector>& v) {
  check_inputs(net, s, lambda0, u);
  std::vector<CriterionRow> rows;
  for (Vertex i : s.keep) {
    Gauss lhs;
    for (Vertex l : s.complement) {
      if (u[l - 1].is_zero()) continue;
      const RatFunc r_il = reduced_entry(net, s, i, l);
      if (r_il.is_zero()) continue;
      lhs += r_il(lambda0) / (lambda0 - net.weight(l, l)(lambda0)) * u[l - 1];
    }
    rows.push_back({i, lhs, u[i - 1]});
  }
  auto out = fit(std::move(rows), Criterion::EntryWise);
  if (v && out.c) {
    check_length(*v, net.size(), "v");
    const GaussMatrix r_at = evaluate(adjacency(reduce_graph(net, s)), lambda0);
    out.chain_verified = verify_chain(r_at, partition_of(s), lambda0, *out.c, u, *v);
  }
  return out;
}

PreservationVerdict check_single_vertex(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                                        const GaussVector& u) {
  if (s.complement.size() != 1) {
    throw Error(ErrorCode::ComplementNotSingleton,
                "complement has " + std::to_string(s.complement.size()) + " vertices, expected 1");
  }
  check_inputs(net, s, lambda0, u);
  const Vertex j = s.complement.front();
  const Gauss scale = u[j - 1] / (lambda0 - net.weight(j, j)(lambda0));
  std::vector<CriterionRow> rows;
  for (Vertex i : s.keep) rows.push_back({i, net.weight(i, j)(lambda0), u[i - 1]});
  if (scale.is_zero()) {
    // u_j = 0: every left side vanishes, whatever the column.
    for (auto& r : rows) r.lhs = Gauss();
  }
  auto out = fit(std::move(rows), Criterion::SingleVertex);
  // The fit found the proportionality constant c' of the column; the
  // criterion constant is c' u_j / (λ0 - w(j,j)).
  if (out.c) {
    out.c = *out.c * scale;
    for (auto& r : out.rows) r.lhs *= scale;
    out.outcome = *out.c == Gauss(-1) ? Outcome::DegenerateMinusOne : Outcome::Preserved;
    out.witness = out.outcome == Outcome::Preserved ? "" : "c = -1 makes the reduced right side vanish";
  }
  return out;
}

PreservationVerdict check_disconnected(const Network& net, const StructuralSet& s, const Gauss& lambda0,
                                       const GaussVector& u) {
  for (Vertex a : s.complement)
    for (Vertex b : s.complement)
      if (a != b && net.has_edge(a, b)) {
        throw Error(ErrorCode::ComplementNotDisconnected, "complement contains the edge " + std::to_string(a) +
                                                              " -> " + std::to_string(b));
      }
  check_inputs(net, s, lambda0, u);
  std::vector<CriterionRow> rows;
  for (Vertex i : s.keep) {
    Gauss lhs;
    for (Vertex l : s.complement) {
      if (!net.has_edge(i, l)) continue;
      lhs += net.weight(i, l)(lambda0) / (lambda0 - net.weight(l, l)(lambda0)) * u[l - 1];
    }
    rows.push_back({i, lhs, u[i - 1]});
  }
  return fit(std::move(rows), Criterion::Disconnected);
}

PreservationVerdict check_block(const RatMatrix& m, const Partition& p, const Gauss& lambda0, const GaussVector& u,
                                const std::optional<GaussVector>& v) {
  check_length(u, m.rows(), "u");
  if (is_zero_vector(u)) throw Error(ErrorCode::ZeroVectorInput, "u is the zero vector");
  const GaussMatrix m_at = evaluate(m, lambda0);
  const auto blocks = split(m_at, p);
  const GaussMatrix k = shifted(blocks.cc, lambda0);
  auto k_inv = inverse(k);
  if (!k_inv) {
    throw Error(ErrorCode::SingularComplementAtLambda0,
                "complement block minus " + to_string(lambda0) + "*I is singular");
  }
  const GaussVector u_s = restrict(u, p.keep);
  const GaussVector lhs_block = blocks.sc * (*k_inv * restrict(u, p.complement));

  std::vector<CriterionRow> rows;
  for (std::size_t a = 0; a < p.keep.size(); ++a) rows.push_back({p.keep[a] + 1, -lhs_block[a], u_s[a]});
  auto out = fit(std::move(rows), Criterion::Block);
  if (out.c) {
    out.block_c = -*out.c;
    // The squared form restates the criterion only for eigenvectors, whose
    // complement part is determined by u_S.
    if (is_zero_vector(shifted(m_at, lambda0) * u)) {
      const GaussVector squared = blocks.sc * (*k_inv * (*k_inv * (blocks.cs * u_s)));
      GaussVector expect = u_s;
      for (auto& x : expect) x *= *out.c;
      out.squared_form_agrees = squared == expect;
    }
    if (v) {
      check_length(*v, m.rows(), "v");
      const GaussMatrix r_at = blocks.ss - blocks.sc * (*k_inv * blocks.cs);
      out.chain_verified = verify_chain(r_at, p, lambda0, *out.c, u, *v);
    }
  }
  return out;
}

CriteriaReport check_all(const Network& net, const StructuralSet& s, const Gauss& lambda0, const GaussVector& u,
                         const std::optional<GaussVector>& v) {
  CriteriaReport report;
  report.verdicts.push_back(check_entrywise(net, s, lambda0, u, v));
  report.verdicts.push_back(check_block(adjacency(net), partition_of(s), lambda0, u, v));
  if (s.complement.size() == 1) report.verdicts.push_back(check_single_vertex(net, s, lambda0, u));
  try {
    report.verdicts.push_back(check_disconnected(net, s, lambda0, u));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ComplementNotDisconnected) throw;
  }
  const auto& ref = report.verdicts.front();
  for (const auto& verdict : report.verdicts) {
    if (verdict.outcome != ref.outcome || verdict.c != ref.c) report.agree = false;
    if (verdict.squared_form_agrees == false) report.agree = false;
  }
  return report;
}

GaussVector project_eigenvector(const GaussVector& u, const Partition& p) {
  check_length(u, p.keep.size() + p.complement.size(), "eigenvector");
  return restrict(u, p.keep);
}

GaussVector lift_eigenvector(const GaussVector& u_s, const RatMatrix& m, const Partition& p, const Gauss& lambda0) {
  check_length(u_s, p.keep.size(), "reduced eigenvector");
  if (is_zero_vector(u_s)) throw Error(ErrorCode::ZeroVectorInput, "reduced eigenvector is zero");
  const GaussMatrix m_at = evaluate(m, lambda0);
  const auto blocks = split(m_at, p);
  GaussMatrix rhs(p.complement.size(), 1);
  const GaussVector coupled = blocks.cs * u_s;
  for (std::size_t a = 0; a < coupled.size(); ++a) rhs(a, 0) = -coupled[a];
  auto x = solve(shifted(blocks.cc, lambda0), rhs);
  if (!x) {
    throw Error(ErrorCode::SingularComplementAtLambda0,
                "complement block minus " + to_string(lambda0) + "*I is singular");
  }
  GaussVector full(m.rows());
  for (std::size_t a = 0; a < p.keep.size(); ++a) full[p.keep[a]] = u_s[a];
  for (std::size_t a = 0; a < p.complement.size(); ++a) full[p.complement[a]] = (*x)(a, 0);
  if (!is_zero_vector(shifted(m_at, lambda0) * full)) {
    throw Error(ErrorCode::InvalidArgument, "vector is not an eigenvector of the reduced matrix at " +
                                                to_string(lambda0));
  }
  return full;
}

SufficientReport check_sufficient(const RatMatrix& m, const Partition& p, const Gauss& lambda0) {
  SufficientReport out;
  const auto blocks = split(evaluate(m, lambda0), p);
  out.outgoing_zero = blocks.sc.is_zero();
  out.incoming_zero = blocks.cs.is_zero();
  try {
    out.reduced_equals_block = evaluate(reduce_matrix(m, p), lambda0) == blocks.ss;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PoleError && e.code() != ErrorCode::SingularComplement) throw;
  }
  return out;
}

MultiplicityPreservation multiplicity_preservation_report(const GaussMatrix& m, const Partition& p,
                                                          const Gauss& lambda0) {
  const RatMatrix full = to_ratmatrix(m);
  MultiplicityPreservation out;
  out.before = multiplicities(full, lambda0);
  const GaussMatrix cc = m.submatrix(p.complement, p.complement);
  if (!p.complement.empty()) {
    if (!inverse(shifted(cc, lambda0))) {
      throw Error(ErrorCode::SingularComplementAtLambda0,
                  to_string(lambda0) + " is an eigenvalue of the complement block");
    }
    out.lost = multiset_intersection(spectrum(full), spectrum(to_ratmatrix(cc)));
  }
  out.after = multiplicities(reduce_matrix(full, p), lambda0);
  return out;
}

}  // namespace isored
