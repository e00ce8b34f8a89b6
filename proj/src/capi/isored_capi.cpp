#include "isored/isored.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "isored/equivalence.hpp"
#include "isored/error.hpp"
#include "isored/io.hpp"
#include "isored/preservation.hpp"
#include "isored/reconstruct.hpp"
#include "isored/reduction.hpp"
#include "isored/spectra.hpp"

struct isored_network {
  isored::Network net;
};

struct isored_matrix {
  isored::RatMatrix m;
};

namespace {

using namespace isored;

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

template <class F>
isored_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ISORED_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<isored_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return ISORED_INTERNAL;
}

void emit(const Json& doc, char** out) {
  require(out, "report");
  *out = duplicate(doc.dump());
}

VertexSet resolve(const Network& net, const char* list) {
  require(list, "vertex list");
  return vertices_for_labels(net, parse_vertex_list(list));
}

Json labels_of(const Network& net, const VertexSet& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(net.label(v));
  return out;
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

Json eigenvalue_json(const Eigenvalue& e) {
  Json out;
  if (e.exact()) {
    out["value"] = to_string(e.exact_value());
    out["exact"] = true;
  } else {
    const Complex z = e.approx();
    out["value"] = format_complex(z);
    out["exact"] = false;
    out["re"] = z.real();
    out["im"] = z.imag();
    out["residual"] = e.residual;
  }
  out["multiplicity"] = e.multiplicity;
  return out;
}

Json spectrum_json(const SpectrumMultiset& s) {
  Json out = Json::array();
  for (const auto& e : s.entries()) out.push_back(eigenvalue_json(e));
  return out;
}

Json chain_json(const ChainData& c) {
  Json vectors = Json::array();
  for (const auto& v : c.vectors) vectors.push_back(vector_to_json(v));
  return vectors;
}

Json verdict_json(const PreservationVerdict& v) {
  Json out;
  out["criterion"] = to_string(v.criterion);
  out["outcome"] = to_string(v.outcome);
  out["c"] = v.c ? Json(to_string(*v.c)) : Json();
  if (v.block_c) out["block_c"] = to_string(*v.block_c);
  if (v.squared_form_agrees) out["squared_form_agrees"] = *v.squared_form_agrees;
  if (v.chain_verified) out["chain_verified"] = *v.chain_verified;
  Json rows = Json::array();
  for (const auto& r : v.rows) rows.push_back({{"vertex", r.vertex}, {"lhs", to_string(r.lhs)}, {"u", to_string(r.u)}});
  out["rows"] = std::move(rows);
  if (!v.witness.empty()) out["witness"] = v.witness;
  return out;
}

// Reduction onto `keep` with the chosen method; both methods must agree for
// ISORED_METHOD_BOTH, recorded in `agreed`.
Network reduce_step(const Network& net, const VertexSet& keep, isored_method method, bool nonstructural,
                    std::optional<bool>& agreed) {
  switch (method) {
    case ISORED_METHOD_GRAPH:
      return reduce_graph(net, validate_structural(net, keep));
    case ISORED_METHOD_BLOCK:
      if (!nonstructural) validate_structural(net, keep);
      return reduce_network_block(net, keep);
    case ISORED_METHOD_BOTH: {
      const StructuralSet s = validate_structural(net, keep);
      const Network by_graph = reduce_graph(net, s);
      const bool same = by_graph == reduce_network_block(net, keep);
      agreed = agreed.value_or(true) && same;
      return by_graph;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown reduction method");
}

}  // namespace

extern "C" {

const char* isored_version(void) { return "1.0.0"; }

const char* isored_status_name(isored_status status) {
  if (status == ISORED_OK) return "Ok";
  if (status < ISORED_INVALID_ARGUMENT || status > ISORED_INTERNAL) return "Unknown";
  return to_string(static_cast<ErrorCode>(status));
}

const char* isored_last_error(void) { return last_error.c_str(); }

void isored_string_free(char* s) { std::free(s); }

isored_status isored_network_parse(const char* json, isored_network** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new isored_network{parse_network(json)};
  });
}

void isored_network_free(isored_network* net) { delete net; }

size_t isored_network_size(const isored_network* net) { return net ? net->net.size() : 0; }

isored_status isored_network_to_json(const isored_network* net, char** out) {
  return guarded([&] {
    require(net, "network");
    emit(network_to_json(net->net), out);
  });
}

isored_status isored_matrix_parse(const char* json, isored_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    RatMatrix m = parse_matrix(json);
    if (!m.is_square()) throw Error(ErrorCode::ParseError, "matrix must be square");
    *out = new isored_matrix{std::move(m)};
  });
}

void isored_matrix_free(isored_matrix* m) { delete m; }

isored_status isored_validate_set(const isored_network* handle, const char* keep, const char* lambda0,
                                  char** report) {
  return guarded([&] {
    require(handle, "network");
    const Network& net = handle->net;
    const VertexSet s = resolve(net, keep);
    Json doc;
    doc["keep"] = labels_of(net, normalize_vertex_set(net, s));
    try {
      const StructuralSet cert = validate_structural(net, s);
      doc["valid"] = true;
      doc["complement"] = labels_of(net, cert.complement);
      doc["topo_order"] = labels_of(net, cert.topo_order);
      if (lambda0) {
        const Gauss z = parse_gauss(lambda0);
        doc["lambda0"] = to_string(z);
        doc["lambda0_structural"] = validate_lambda0(net, cert, z);
        doc["valid"] = doc["lambda0_structural"];
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CycleInComplement && e.code() != ErrorCode::LoopWeightIsLambda) throw;
      doc["valid"] = false;
      doc["reason"] = to_string(e.code());
      doc["message"] = e.what();
    }
    emit(doc, report);
  });
}

isored_status isored_reduce(const isored_network* handle, const char* keep, const char* via, isored_method method,
                            int allow_nonstructural, char** report) {
  return guarded([&] {
    require(handle, "network");
    require(keep, "keep");
    const Network& net = handle->net;
    std::vector<VertexSet> steps;
    if (via && *via) {
      std::string_view rest = via;
      while (true) {
        const auto semi = rest.find(';');
        steps.push_back(parse_vertex_list(rest.substr(0, semi)));
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
      }
    }
    steps.push_back(parse_vertex_list(keep));

    std::optional<bool> agreed;
    Network current = net;
    Json path = Json::array();
    for (const auto& labels : steps) {
      const VertexSet vs = vertices_for_labels(current, labels);
      current = reduce_step(current, vs, method, allow_nonstructural != 0, agreed);
      path.push_back(current.labels());
    }
    const RatMatrix r = adjacency(current);
    Json doc;
    doc["method"] = method == ISORED_METHOD_GRAPH ? "graph" : method == ISORED_METHOD_BLOCK ? "block" : "both";
    doc["steps"] = std::move(path);
    doc["keep"] = current.labels();
    doc["network"] = network_to_json(current);
    doc["matrix"] = matrix_to_json(r)["rows"];
    doc["char_function"] = to_string(char_function(r));
    if (agreed) doc["cross_validated"] = *agreed;
    emit(doc, report);
  });
}

isored_status isored_spectrum(const isored_network* handle, const char* at, unsigned depth, char** report) {
  return guarded([&] {
    require(handle, "network");
    const RatMatrix m = adjacency(handle->net);
    const RatFunc chi = char_function(m);
    const SpectrumMultiset s = polynomial_roots(chi.num());
    Json doc;
    doc["char_function"] = to_string(chi);
    doc["eigenvalues"] = spectrum_json(s);
    doc["exact"] = s.all_exact();
    doc["count"] = s.size();

    auto chain_entry = [&](const Gauss& z) {
      Json c;
      c["lambda0"] = to_string(z);
      try {
        c["vectors"] = chain_json(canonical_chain(generalized_chain(m, z, depth)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ChainTerminated) throw;
        c["terminated"] = true;
        c["message"] = e.what();
      }
      return c;
    };

    if (at) {
      const Gauss z = parse_gauss(at);
      const MultiplicityReport mr = multiplicities(m, z);
      Json a;
      a["lambda0"] = to_string(z);
      a["algebraic"] = mr.algebraic;
      a["geometric"] = mr.geometric;
      a["defect"] = mr.defect ? Json(*mr.defect) : Json();
      Json ev = Json::array();
      for (const auto& v : eigenvectors_at(m, z)) ev.push_back(vector_to_json(v));
      a["eigenvectors"] = std::move(ev);
      if (depth > 0) a["chain"] = chain_entry(z);
      doc["at"] = std::move(a);
    } else if (depth > 0) {
      Json chains = Json::array();
      for (const auto& e : s.entries())
        if (e.exact()) chains.push_back(chain_entry(e.exact_value()));
      doc["chains"] = std::move(chains);
    }
    emit(doc, report);
  });
}

isored_status isored_check_preserve(const isored_network* handle, const char* keep, const char* lambda0,
                                    unsigned chain_depth, size_t all_sets_size, char** report) {
  return guarded([&] {
    require(handle, "network");
    require(lambda0, "lambda0");
    if (chain_depth == 0) throw Error(ErrorCode::InvalidArgument, "chain depth must be at least 1");
    const Network& net = handle->net;
    const Gauss z = parse_gauss(lambda0);
    const ChainData chain = canonical_chain(generalized_chain(adjacency(net), z, chain_depth));

    std::vector<StructuralSet> sets;
    if (all_sets_size > 0) {
      sets = structural_sets_of_size(net, all_sets_size);
    } else {
      sets.push_back(validate_structural(net, resolve(net, keep)));
    }

    Json results = Json::array();
    bool all_preserved = true;
    for (const auto& s : sets) {
      Json r;
      r["keep"] = labels_of(net, s.keep);
      if (!validate_lambda0(net, s, z)) {
        if (all_sets_size == 0) {
          throw Error(ErrorCode::NotLambda0Structural, "a complement loop weight equals " + to_string(z) + " there");
        }
        r["lambda0_structural"] = false;
        r["preserved"] = false;
        all_preserved = false;
        results.push_back(std::move(r));
        continue;
      }
      r["lambda0_structural"] = true;
      Json links = Json::array();
      bool preserved = true;
      bool agree = true;
      const std::size_t n_links = chain.vectors.size() == 1 ? 1 : chain.vectors.size() - 1;
      for (std::size_t k = 0; k < n_links; ++k) {
        std::optional<GaussVector> partner;
        if (k + 1 < chain.vectors.size()) partner = chain.vectors[k + 1];
        const CriteriaReport cr = check_all(net, s, z, chain.vectors[k], partner);
        Json link;
        link["rank"] = k + 1;
        link["agree"] = cr.agree;
        Json verdicts = Json::array();
        for (const auto& v : cr.verdicts) verdicts.push_back(verdict_json(v));
        link["verdicts"] = std::move(verdicts);
        links.push_back(std::move(link));
        preserved = preserved && cr.verdicts.front().preserved();
        agree = agree && cr.agree;
      }
      r["preserved"] = preserved;
      r["criteria_agree"] = agree;
      r["c"] = links[0]["verdicts"][0]["c"];
      r["links"] = std::move(links);
      all_preserved = all_preserved && preserved;
      results.push_back(std::move(r));
    }

    Json doc;
    doc["lambda0"] = to_string(z);
    doc["chain"] = chain_json(chain);
    doc["mode"] = all_sets_size > 0 ? "all-sets" : "single";
    if (all_sets_size > 0) doc["size"] = all_sets_size;
    doc["results"] = std::move(results);
    doc["preserved"] = all_preserved;
    emit(doc, report);
  });
}

isored_status isored_reconstruct(const isored_network* original, const isored_network* reduced, const char* keep,
                                 const char* lambda0, const char* vector, const char* prev, char** report) {
  return guarded([&] {
    require(original, "original network");
    require(reduced, "reduced network");
    require(lambda0, "lambda0");
    require(vector, "vector");
    const Network& net = original->net;
    const Gauss z = parse_gauss(lambda0);

    VertexSet keep_vs = keep ? resolve(net, keep) : vertices_for_labels(net, reduced->net.labels());
    if (keep_vs.size() != reduced->net.size()) {
      throw Error(ErrorCode::InvalidArgument, "kept set and reduced network differ in size");
    }
    const StructuralSet s = validate_structural(net, keep_vs);
    if (!validate_lambda0(net, s, z)) {
      throw Error(ErrorCode::NotLambda0Structural, "a complement loop weight equals " + to_string(z) + " there");
    }
    // Reduced vectors follow the reduced network's vertex order; reorder to s.keep.
    const GaussVector given = parse_gauss_list(vector);
    if (given.size() != reduced->net.size()) {
      throw Error(ErrorCode::InvalidArgument, "vector length does not match the reduced network");
    }
    GaussVector known(s.keep.size());
    for (std::size_t a = 0; a < keep_vs.size(); ++a) {
      const auto pos = std::lower_bound(s.keep.begin(), s.keep.end(), keep_vs[a]) - s.keep.begin();
      known[static_cast<std::size_t>(pos)] = given[a];
    }
    std::optional<GaussVector> prev_v;
    if (prev && *prev) prev_v = parse_gauss_list(prev);

    const Network expected = reduce_graph(net, s);
    const RatMatrix r = adjacency(expected);
    GaussVector u_s(s.keep.size());
    if (prev_v) {
      if (prev_v->size() != net.size()) throw Error(ErrorCode::InvalidArgument, "prev must have full length");
      for (std::size_t a = 0; a < s.keep.size(); ++a) u_s[a] = (*prev_v)[s.keep[a] - 1];
    }
    const auto c = reduced_chain_constant(r, z, known, u_s);
    if (!c || (prev_v && *c == Gauss(-1))) {
      throw Error(ErrorCode::HypothesisViolated,
                  prev_v ? "(R(l0) - l0 I) v_S is not (1 + c) u_S with c != -1"
                         : "the reduced vector is not an eigenvector of R(l0)");
    }
    const GaussVector v = reconstruct_vector(net, s, z, known, prev_v);
    const DepthMap d = vertex_depths(net, s);

    Json depths = Json::object();
    for (Vertex x = 1; x <= net.size(); ++x) depths[std::to_string(net.label(x))] = d.depth[x];
    Json doc;
    doc["lambda0"] = to_string(z);
    doc["keep"] = labels_of(net, s.keep);
    doc["depths"] = std::move(depths);
    doc["max_depth"] = d.max_depth;
    if (prev_v) doc["c"] = to_string(*c);
    doc["reduced_consistent"] = adjacency(reduced->net) == r;
    doc["vector"] = vector_to_json(v);
    emit(doc, report);
  });
}

isored_status isored_equiv(const isored_network* a, const isored_network* b, const char* rule, size_t max_steps,
                           int allow_zero, char** report) {
  return guarded([&] {
    require(a, "network a");
    require(b, "network b");
    require(rule, "rule");
    const ReductionRule tau = parse_rule(rule);
    const auto w = spectrally_equivalent(a->net, b->net, tau, max_steps, max_steps, allow_zero != 0);
    Json doc;
    doc["rule"] = tau.name;
    doc["max_steps"] = max_steps;
    doc["allow_zero"] = allow_zero != 0;
    doc["equivalent"] = w.has_value();
    if (w) {
      doc["m"] = w->m;
      doc["k"] = w->k;
      doc["iso"] = w->iso;
    }
    emit(doc, report);
  });
}

isored_status isored_equiv_matrix(const isored_matrix* a, const isored_matrix* b, size_t dim, char** report) {
  return guarded([&] {
    require(a, "matrix a");
    require(b, "matrix b");
    const MatrixEquivalence ev = matrix_spectrally_equivalent(a->m, b->m, dim);
    auto list = [](const std::vector<MatrixReduction>& rs) {
      Json out = Json::array();
      for (const auto& r : rs) {
        Json keep = Json::array();
        for (auto k : r.keep) keep.push_back(k + 1);
        out.push_back({{"keep", std::move(keep)}, {"matrix", matrix_to_json(r.reduced)["rows"]}});
      }
      return out;
    };
    Json doc;
    doc["dim"] = dim;
    doc["equivalent"] = ev.equivalent;
    doc["a"] = list(ev.a);
    doc["b"] = list(ev.b);
    if (ev.equivalent) {
      Json perm = Json::array();
      for (auto p : ev.perm) perm.push_back(p + 1);
      doc["match"] = {{"a", *ev.a_index}, {"b", *ev.b_index}, {"perm", std::move(perm)}};
    }
    emit(doc, report);
  });
}

}  // extern "C"
