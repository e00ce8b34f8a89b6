#include <doctest.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "isored/isored.h"

namespace {

using Json = nlohmann::json;

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(ISORED_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Net {
  isored_network* h = nullptr;
  explicit Net(const std::string& file) {
    REQUIRE(isored_network_parse(read_data(file).c_str(), &h) == ISORED_OK);
  }
  ~Net() { isored_network_free(h); }
  Net(const Net&) = delete;
  Net& operator=(const Net&) = delete;
};

// The report pointer is read only after the call has filled it.
Json report(isored_status s, char** raw) {
  REQUIRE_MESSAGE(s == ISORED_OK, isored_last_error());
  Json out = Json::parse(*raw);
  isored_string_free(*raw);
  *raw = nullptr;
  return out;
}

}  // namespace

TEST_CASE("handles and status names") {
  CHECK(std::string(isored_version()).size() > 0);
  CHECK(std::string(isored_status_name(ISORED_OK)) == "Ok");
  CHECK(std::string(isored_status_name(ISORED_CYCLE_IN_COMPLEMENT)) == "CycleInComplement");
  CHECK(std::string(isored_status_name(static_cast<isored_status>(99))) == "Unknown");

  Net example("example.json");
  CHECK(isored_network_size(example.h) == 4);
  CHECK(isored_network_size(nullptr) == 0);
  char* raw = nullptr;
  const Json doc = report(isored_network_to_json(example.h, &raw), &raw);
  CHECK(doc["n"] == 4);
  CHECK(doc["edges"].size() == 5);

  isored_network* bad = nullptr;
  CHECK(isored_network_parse(read_data("duplicate_edge.json").c_str(), &bad) == ISORED_DUPLICATE_EDGE);
  CHECK(bad == nullptr);
  CHECK(std::string(isored_last_error()).find("duplicate") != std::string::npos);
  CHECK(isored_network_parse(read_data("malformed.json").c_str(), &bad) == ISORED_PARSE_ERROR);
  CHECK(std::string(isored_last_error()).find("line 2") != std::string::npos);
  CHECK(isored_network_parse(nullptr, &bad) == ISORED_INVALID_ARGUMENT);
  isored_network_free(nullptr);
  isored_matrix_free(nullptr);
  isored_string_free(nullptr);
}

TEST_CASE("reduce through the C interface") {
  Net example("example.json");
  char* raw = nullptr;
  const Json d = report(isored_reduce(example.h, "1,4", "1,2,4", ISORED_METHOD_BOTH, 0, &raw), &raw);
  CHECK(d["keep"] == Json::array({1, 4}));
  CHECK(d["matrix"] == Json::parse(R"([["0","1/l^2"],["-1","-2/l"]])"));
  CHECK(d["char_function"] == "(l^4 + 2*l^2 + 1)/l^2");
  CHECK(d["cross_validated"] == true);
  CHECK(d["steps"].size() == 2);

  CHECK(isored_reduce(example.h, "9", nullptr, ISORED_METHOD_GRAPH, 0, &raw) == ISORED_BAD_VERTEX_INDEX);
  CHECK(isored_reduce(example.h, "1,2", nullptr, ISORED_METHOD_GRAPH, 0, &raw) == ISORED_CYCLE_IN_COMPLEMENT);
  CHECK(isored_reduce(example.h, "1,2", nullptr, ISORED_METHOD_BLOCK, 0, &raw) == ISORED_CYCLE_IN_COMPLEMENT);
  const Json nonstructural = report(isored_reduce(example.h, "1,2", nullptr, ISORED_METHOD_BLOCK, 1, &raw), &raw);
  CHECK(nonstructural["keep"] == Json::array({1, 2}));
}

TEST_CASE("spectrum through the C interface") {
  Net example("example.json");
  char* raw = nullptr;
  const Json d = report(isored_spectrum(example.h, "i", 2, &raw), &raw);
  CHECK(d["exact"] == true);
  CHECK(d["count"] == 4);
  CHECK(d["at"]["algebraic"] == 2);
  CHECK(d["at"]["geometric"] == 1);
  CHECK(d["at"]["chain"]["vectors"].size() == 2);

  const Json all = report(isored_spectrum(example.h, nullptr, 2, &raw), &raw);
  CHECK(all["chains"].size() == 2);
  const Json deep = report(isored_spectrum(example.h, nullptr, 3, &raw), &raw);
  CHECK(deep["chains"][0]["terminated"] == true);
  CHECK(isored_spectrum(example.h, "1", 0, &raw) == ISORED_NOT_AN_EIGENVALUE);
  CHECK(isored_spectrum(example.h, "q", 0, &raw) == ISORED_PARSE_ERROR);
}

TEST_CASE("preservation through the C interface") {
  Net example("example.json");
  char* raw = nullptr;
  const Json one = report(isored_check_preserve(example.h, "1,4", "i", 2, 0, &raw), &raw);
  CHECK(one["preserved"] == true);
  CHECK(one["results"][0]["c"] == "2");
  CHECK(one["results"][0]["criteria_agree"] == true);

  const Json sweep = report(isored_check_preserve(example.h, nullptr, "i", 2, 2, &raw), &raw);
  REQUIRE(sweep["results"].size() == 5);
  for (const auto& r : sweep["results"]) {
    const bool expected = r["keep"] != Json::array({3, 4});
    CHECK(r["preserved"] == expected);
  }
  CHECK(isored_check_preserve(example.h, "1,4", "i", 3, 0, &raw) == ISORED_CHAIN_TERMINATED);
  CHECK(isored_check_preserve(example.h, "1,4", "i", 0, 0, &raw) == ISORED_INVALID_ARGUMENT);
}

TEST_CASE("reconstruction through the C interface") {
  Net example("example.json");
  char* raw = nullptr;
  const Json red = report(isored_reduce(example.h, "1,4", nullptr, ISORED_METHOD_GRAPH, 0, &raw), &raw);
  isored_network* reduced = nullptr;
  REQUIRE(isored_network_parse(red["network"].dump().c_str(), &reduced) == ISORED_OK);

  const Json u = report(isored_reconstruct(example.h, reduced, nullptr, "i", "i,1", nullptr, &raw), &raw);
  CHECK(u["vector"] == Json::parse(R"(["i","-1","-i","1"])"));
  CHECK(u["reduced_consistent"] == true);
  const Json v = report(isored_reconstruct(example.h, reduced, "1,4", "i", "-3,0", "i,-1,-i,1", &raw), &raw);
  CHECK(v["vector"] == Json::parse(R"(["-3","-2i","1","0"])"));
  CHECK(v["c"] == "2");
  CHECK(v["depths"]["2"] == 2);
  CHECK(isored_reconstruct(example.h, reduced, nullptr, "i", "1,1", nullptr, &raw) == ISORED_HYPOTHESIS_VIOLATED);
  CHECK(isored_reconstruct(example.h, reduced, nullptr, "i", "1", nullptr, &raw) == ISORED_INVALID_ARGUMENT);
  isored_network_free(reduced);
}

TEST_CASE("equivalence through the C interface") {
  Net a("example.json");
  Net b("example_relabelled.json");
  char* raw = nullptr;
  const Json d = report(isored_equiv(a.h, b.h, "keep:1,4", 3, 1, &raw), &raw);
  CHECK(d["equivalent"] == true);
  CHECK(d["m"] == 0);
  CHECK(d["k"] == 0);
  const Json positive = report(isored_equiv(a.h, b.h, "min-cycle-cover", 2, 0, &raw), &raw);
  CHECK(positive["equivalent"] == true);
  CHECK(positive["m"] == 1);
  CHECK(isored_equiv(a.h, b.h, "bogus", 2, 1, &raw) == ISORED_PARSE_ERROR);

  isored_matrix* ma = nullptr;
  isored_matrix* mb = nullptr;
  REQUIRE(isored_matrix_parse(read_data("matrix_a.json").c_str(), &ma) == ISORED_OK);
  REQUIRE(isored_matrix_parse(read_data("matrix_b.json").c_str(), &mb) == ISORED_OK);
  const Json m = report(isored_equiv_matrix(ma, mb, 2, &raw), &raw);
  CHECK(m["equivalent"] == false);
  CHECK(m["a"].size() == 3);
  CHECK(m["a"][0]["keep"] == Json::array({1, 2}));
  const Json self = report(isored_equiv_matrix(ma, ma, 2, &raw), &raw);
  CHECK(self["equivalent"] == true);
  isored_matrix* ragged = nullptr;
  CHECK(isored_matrix_parse(R"({"rows": [["1", "2"]]})", &ragged) == ISORED_PARSE_ERROR);
  isored_matrix_free(ma);
  isored_matrix_free(mb);
}

TEST_CASE("structural-set certificates through the C interface") {
  Net example("example.json");
  char* raw = nullptr;
  const Json ok = report(isored_validate_set(example.h, "4,1", "i", &raw), &raw);
  CHECK(ok["valid"] == true);
  CHECK(ok["keep"] == Json::array({1, 4}));
  CHECK(ok["topo_order"] == Json::array({2, 3}));
  const Json bad = report(isored_validate_set(example.h, "1,2", nullptr, &raw), &raw);
  CHECK(bad["valid"] == false);
  CHECK(bad["reason"] == "CycleInComplement");
  CHECK(isored_validate_set(example.h, "", nullptr, &raw) == ISORED_PARSE_ERROR);
  CHECK(isored_validate_set(nullptr, "1", nullptr, &raw) == ISORED_INVALID_ARGUMENT);
}
