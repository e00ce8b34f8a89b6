#include "isored/equivalence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "isored/error.hpp"
#include "isored/spectra.hpp"

namespace isored {

// ------------------------------------------------------------ isomorphism

namespace {

struct Signature {
  std::string loop;
  std::vector<std::string> out;
  std::vector<std::string> in;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const Network& net) {
  std::vector<Signature> sig(net.size() + 1);
  for (const auto& [edge, w] : net.edges()) {
    const auto [from, to] = edge;
    if (from == to) {
      sig[from].loop = to_string(w);
    } else {
      sig[from].out.push_back(to_string(w));
      sig[to].in.push_back(to_string(w));
    }
  }
  for (auto& s : sig) {
    std::sort(s.out.begin(), s.out.end());
    std::sort(s.in.begin(), s.in.end());
  }
  return sig;
}

}  // namespace

std::optional<Isomorphism> isomorphic(const Network& g, const Network& h) {
  const std::size_t n = g.size();
  if (h.size() != n || g.edges().size() != h.edges().size()) return std::nullopt;
  const auto sg = signatures(g);
  const auto sh = signatures(h);

  std::vector<std::vector<Vertex>> candidates(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w = 1; w <= n; ++w)
      if (sg[v] == sh[w]) candidates[v].push_back(w);
    if (candidates[v].empty()) return std::nullopt;
  }

  Isomorphism iso(n, 0);
  std::vector<bool> used(n + 1, false);
  std::function<bool(Vertex)> place = [&](Vertex v) {
    if (v > n) return true;
    for (Vertex w : candidates[v]) {
      if (used[w]) continue;
      bool ok = true;
      for (Vertex a = 1; a < v && ok; ++a) {
        const Vertex b = iso[a - 1];
        ok = g.weight(v, a) == h.weight(w, b) && g.weight(a, v) == h.weight(b, w);
      }
      if (!ok) continue;
      iso[v - 1] = w;
      used[w] = true;
      if (place(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!place(1)) return std::nullopt;
  return iso;
}

bool in_G_pi(const Network& net) {
  return std::all_of(net.edges().begin(), net.edges().end(), [](const auto& e) { return e.second.is_proper(); });
}

// ------------------------------------------------------------------ rules

ReductionRule keep_listed_rule(VertexSet labels) {
  std::string name = "keep:";
  for (std::size_t k = 0; k < labels.size(); ++k) name += (k ? "," : "") + std::to_string(labels[k]);
  return {name, [labels = std::move(labels)](const Network& net) {
            VertexSet out;
            for (std::size_t label : labels)
              if (auto v = net.vertex_with_label(label)) out.push_back(*v);
            std::sort(out.begin(), out.end());
            return out;
          }};
}

ReductionRule keep_loops_rule() {
  return {"loops", [](const Network& net) {
            VertexSet out;
            for (Vertex v = 1; v <= net.size(); ++v)
              if (net.has_edge(v, v)) out.push_back(v);
            return out;
          }};
}

ReductionRule min_cycle_cover_rule() {
  return {"min-cycle-cover", [](const Network& net) {
            const std::size_t n = net.size();
            if (n <= 2) {
              VertexSet all(n);
              std::iota(all.begin(), all.end(), Vertex{1});
              return all;
            }
            if (n <= 16) {
              for (std::size_t size = 2; size <= n; ++size) {
                auto sets = structural_sets_of_size(net, size);
                if (!sets.empty()) return sets.front().keep;
              }
            }
            VertexSet keep(n);
            std::iota(keep.begin(), keep.end(), Vertex{1});
            for (Vertex v = 1; v <= n && keep.size() > 2; ++v) {
              VertexSet trial;
              for (Vertex x : keep)
                if (x != v) trial.push_back(x);
              try {
                validate_structural(net, trial);
                keep = std::move(trial);
              } catch (const Error& e) {
                if (e.code() != ErrorCode::CycleInComplement && e.code() != ErrorCode::LoopWeightIsLambda) throw;
              }
            }
            return keep;
          }};
}

ReductionRule parse_rule(std::string_view text) {
  if (text == "loops") return keep_loops_rule();
  if (text == "min-cycle-cover") return min_cycle_cover_rule();
  constexpr std::string_view prefix = "keep:";
  if (text.substr(0, prefix.size()) == prefix) {
    VertexSet labels;
    std::string_view rest = text.substr(prefix.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || value == 0) {
        throw Error(ErrorCode::ParseError, "bad vertex label '" + std::string(item) + "' in rule");
      }
      labels.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (labels.empty()) throw Error(ErrorCode::ParseError, "keep rule lists no vertices");
    return keep_listed_rule(std::move(labels));
  }
  throw Error(ErrorCode::ParseError,
              "unknown rule '" + std::string(text) + "'; expected keep:<labels>, loops or min-cycle-cover");
}

Network apply_rule(const Network& net, const ReductionRule& rule) {
  VertexSet keep = rule.selector(net);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.size() <= 1) {
    throw Error(ErrorCode::RuleInapplicable,
                "rule " + rule.name + " selects " + std::to_string(keep.size()) + " vertices; at least 2 are needed");
  }
  if (keep.size() == net.size()) return net;
  try {
    return reduce_graph(net, validate_structural(net, keep));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CycleInComplement && e.code() != ErrorCode::LoopWeightIsLambda) throw;
  }
  return reduce_stepwise(net, keep);
}

std::optional<EquivalenceWitness> spectrally_equivalent(const Network& g, const Network& h,
                                                        const ReductionRule& rule, std::size_t max_m,
                                                        std::size_t max_k, bool allow_zero) {
  if (!in_G_pi(g) || !in_G_pi(h)) {
    throw Error(ErrorCode::InvalidArgument, "every edge weight must satisfy deg(num) <= deg(den)");
  }
  // powers[t] = R^t(x), truncated where the rule stops applying.
  auto powers = [&](const Network& x, std::size_t max, bool& ran_out) {
    std::vector<Network> out{x};
    while (out.size() <= max) {
      try {
        out.push_back(apply_rule(out.back(), rule));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RuleInapplicable) throw;
        ran_out = true;
        break;
      }
    }
    return out;
  };
  bool ran_out = false;
  const auto gs = powers(g, max_m, ran_out);
  const auto hs = powers(h, max_k, ran_out);
  const std::size_t lo = allow_zero ? 0 : 1;
  for (std::size_t total = 2 * lo; total <= max_m + max_k; ++total) {
    for (std::size_t m = lo; m <= std::min(total, max_m); ++m) {
      const std::size_t k = total - m;
      if (k < lo || k > max_k || m >= gs.size() || k >= hs.size()) continue;
      if (auto iso = isomorphic(gs[m], hs[k])) return EquivalenceWitness{m, k, std::move(*iso)};
    }
  }
  if (ran_out) {
    throw Error(ErrorCode::RuleInapplicable,
                "rule " + rule.name + " reached a network of at most one vertex before a witness was found");
  }
  return std::nullopt;
}

// ------------------------------------------------------ matrix equivalence

namespace {

std::vector<MatrixReduction> all_reductions(const RatMatrix& m, std::size_t dim) {
  const std::size_t n = m.rows();
  std::vector<MatrixReduction> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim), true);
  do {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
      if (pick[k]) keep.push_back(k);
    try {
      RatMatrix r = reduce_matrix(m, make_partition(n, keep));
      out.push_back({std::move(keep), std::move(r)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularComplement) throw;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

MatrixEquivalence matrix_spectrally_equivalent(const RatMatrix& a, const RatMatrix& b, std::size_t dim) {
  if (!a.is_square() || !b.is_square()) throw Error(ErrorCode::InvalidArgument, "matrices must be square");
  if (dim < 2 || dim > a.rows() || dim > b.rows()) {
    throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2 and at most the matrix size");
  }
  MatrixEquivalence out;
  out.a = all_reductions(a, dim);
  out.b = all_reductions(b, dim);
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    for (std::size_t j = 0; j < out.b.size(); ++j) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        bool same = true;
        for (std::size_t r = 0; r < dim && same; ++r)
          for (std::size_t c = 0; c < dim && same; ++c)
            same = out.a[i].reduced(r, c) == out.b[j].reduced(perm[r], perm[c]);
        if (same) {
          out.equivalent = true;
          out.a_index = i;
          out.b_index = j;
          out.perm = perm;
          return out;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

bool seq_condition(const GaussMatrix& m, const Partition& p) {
  const RatMatrix full = to_ratmatrix(m);
  const Poly char_m = char_function(full).num();
  if (p.complement.empty()) return true;
  const Poly char_c = char_function(to_ratmatrix(m.submatrix(p.complement, p.complement))).num();
  if (gcd(char_m, char_c).degree() > 0) return false;
  const Poly char_r = char_function(reduce_matrix(full, p)).num();
  if (char_r.monic() != char_m.monic()) {
    throw Error(ErrorCode::Internal, "reduction changed the spectrum although the complement spectrum is disjoint");
  }
  return true;
}

}  // namespace isored
