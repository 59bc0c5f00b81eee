#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = flagtutte::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FLAGTUTTE_FIXTURES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("flagtutte_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("ktutte on the flag example, in every input form") {
  const auto a = run({"ktutte", fixture("flag_example.json")});
  REQUIRE(a.code == 0);
  CHECK(a.doc()["ktutte"]["text"] == "x^2*y^2 + x^2*y + x*y^2 + x^2 + x*y");
  CHECK(a.doc()["ktutte"]["vars"] == json({"x", "y"}));
  CHECK(a.doc()["ktutte"]["terms"].size() == 5);
  CHECK(run({"ktutte", fixture("flag_example_constituents.json")}).out == a.out);
  CHECK(run({"ktutte", fixture("flag_example_matrix.json")}).out == a.out);
}

TEST_CASE("tutte --method=all on K4") {
  const auto r = run({"tutte", fixture("k4.json"), "--method=all"});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["agree"] == true);
  CHECK(d["methods"].size() == 3);
  for (const auto& [name, poly] : d["methods"].items())
    CHECK(poly["text"] == "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");
  for (const std::string m : {"corank-nullity", "deletion-contraction", "activity"})
    CHECK(run({"tutte", fixture("k4.json"), "--method", m}).doc()["tutte"] == d["methods"][m]);
}

TEST_CASE("indexing key translates on load") {
  const auto one = run({"tutte", fixture("k4.json")});
  const auto zero = run({"tutte", temp_file("k4_zero.json",
                                            R"({"type":"graph","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})")});
  CHECK(one.out == zero.out);
}

TEST_CASE("check") {
  const auto bad = run({"check", fixture("bad_mixed_sizes.json")});
  CHECK(bad.code == 1);
  CHECK(bad.doc()["error"]["kind"] == "UnequalCardinality");

  const auto np = run({"check", fixture("non_pappus.json")});
  REQUIRE(np.code == 0);
  CHECK(np.doc()["bases"] == 76);
  CHECK(np.doc()["rank"] == 3);

  for (const auto& entry : fs::directory_iterator(FLAGTUTTE_FIXTURES_DIR)) {
    const std::string name = entry.path().filename().string();
    const auto r = run({"check", entry.path().string()});
    CAPTURE(name);
    CHECK(r.code == (name.rfind("bad_", 0) == 0 && name != "bad_not_quotient.json" ? 1 : 0));
  }

  const auto fl = run({"check", fixture("flag_example.json")}).doc();
  CHECK(fl["flags"] == 4);
  CHECK(fl["gale_unique_maximum"] == true);
  const auto poly = run({"check", fixture("rep_polymatroid.json")}).doc();
  CHECK(poly["bases"] == 5);
}

TEST_CASE("flag lists that are not flag matroids") {
  // 0 < 01 and 1 < 12 alone: the projections give back more chains than listed
  const auto r = run({"check", temp_file("not_flag.json",
                                         R"({"type":"flag_matroid","n":3,"flags":[[[0],[0,1]],[[1],[1,2]]]})")});
  CHECK(r.code == 1);
  CHECK(r.doc()["error"]["kind"] == "AxiomViolation");
  const auto chain = run({"check", temp_file("not_chain.json", R"({"type":"flag_matroid","n":3,"flags":[[[2],[0,1]]]})")});
  CHECK(chain.doc()["error"]["kind"] == "NotNested");
}

TEST_CASE("parse and schema errors carry a location") {
  const auto parse = run({"check", temp_file("broken.json", R"({"type": "matroid", )")});
  CHECK(parse.code == 1);
  CHECK(parse.doc()["error"]["kind"] == "ParseError");
  const auto schema = run({"check", temp_file("schema.json", R"({"type":"matroid","n":3,"bases":[[0,1],["a",2]]})")});
  CHECK(schema.code == 1);
  CHECK(schema.doc()["error"]["kind"] == "SchemaError");
  CHECK(schema.doc()["error"]["location"] == "/bases/1/0");
  const auto type = run({"check", temp_file("type.json", R"({"type":"hypergraph"})")});
  CHECK(type.doc()["error"]["location"] == "/type");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", fixture("k4.json")}).code == 2);
  CHECK(run({"tutte"}).code == 2);
  CHECK(run({"tutte", fixture("k4.json"), "--method", "magic"}).code == 2);
  CHECK(run({"tutte", fixture("k4.json"), "--output", "xml"}).code == 2);
  CHECK(run({"ktutte", fixture("flag_example.json"), "--threads", "0"}).code == 2);
  CHECK(run({"check", fixture("does_not_exist.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("byte-identical output across threads and weights") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"flag_example.json", "0,2,5"}, {"uniform_flag_23_5.json", "0,1,3,7,12"}, {"k4.json", "0,1,3,7,12,20"}};
  for (const auto& [f, weights] : cases) {
    const auto base = run({"ktutte", fixture(f)});
    REQUIRE(base.code == 0);
    CHECK(run({"ktutte", fixture(f), "--threads", "2"}).out == base.out);
    CHECK(run({"ktutte", fixture(f), "--threads", "4"}).out == base.out);
    CHECK(run({"ktutte", fixture(f), "--weights", weights, "--threads", "3"}).out == base.out);
    const auto y = run({"yclass", fixture(f)});
    CHECK(run({"yclass", fixture(f), "--threads", "4"}).out == y.out);
  }
  const auto bad = run({"ktutte", fixture("flag_example.json"), "--weights", "1,1,2"});
  CHECK(bad.code == 1);
  CHECK(bad.doc()["error"]["kind"] == "BadWeights");
}

TEST_CASE("yclass") {
  const auto all = run({"yclass", fixture("flag_example.json")}).doc();
  CHECK(all["gkm"] == true);
  CHECK(all["class"].size() == 6);
  // fixed points are read in the file's indexing and printed 0-based
  const auto one = run({"yclass", fixture("flag_example.json"), "--fixed-point", "2|12"}).doc();
  REQUIRE(one["class"].size() == 1);
  CHECK(one["class"][0]["fixed_point"] == "1|01");
  CHECK(one["class"][0]["value"]["text"] == "1 - t0^(-1)*t2");
  const auto notfixed = run({"yclass", fixture("flag_example.json"), "--fixed-point", "2|13"});
  CHECK(notfixed.code == 1);
}

TEST_CASE("charpoly") {
  const auto a = run({"charpoly", fixture("flag_example.json")}).doc();
  CHECK(a["characteristic_polynomial"]["text"] == "-lambda^2 + 2*lambda - 1");
  CHECK(a["log_concave"] == true);
  const auto b = run({"charpoly", fixture("uniform_flag_23_5.json"), "--threads", "4"}).doc();
  CHECK(b["characteristic_polynomial"]["text"] == "4*lambda^3 - 14*lambda^2 + 16*lambda - 6");
  CHECK(b["log_concave"] == true);
  const auto k4 = run({"charpoly", fixture("k4.json")}).doc();
  // chromatic polynomial of K4 divided by lambda
  CHECK(k4["characteristic_polynomial"]["text"] == "lambda^3 - 6*lambda^2 + 11*lambda - 6");
}

TEST_CASE("qprime") {
  const auto u12 = run({"qprime", fixture("u12.json"), "--element", "0"}).doc();
  CHECK(u12["qprime"]["text"] == "x + y");
  CHECK(u12["ttoq"] == true);
  CHECK(u12["deletion_contraction"]["holds"] == true);
  const auto p = run({"qprime", fixture("rep_polymatroid.json"), "--element", "2"}).doc();
  CHECK(p["deletion_contraction"]["holds"] == true);
  CHECK_FALSE(p.contains("ttoq"));
}

TEST_CASE("polytope") {
  const auto d = run({"polytope", fixture("flag_example.json"), "--kmax", "3"}).doc();
  CHECK(d["vertices"] == json({{1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}));
  CHECK(d["lattice_points"].size() == 5);
  CHECK(d["edges"].size() == 4);
  CHECK(d["normality"]["normal"] == true);
  const auto rp = run({"polytope", fixture("rep_polymatroid.json")}).doc();
  CHECK(rp["lattice_points"] == d["lattice_points"]);
}

TEST_CASE("quotient and union") {
  const auto q = run({"quotient", fixture("nonrep_quotient_pair.json")});
  REQUIRE(q.code == 0);
  CHECK(q.doc()["quotient"] == true);
  const auto nq = run({"quotient", fixture("bad_not_quotient.json")}).doc();
  CHECK(nq["quotient"] == false);
  CHECK(nq["witness"] == json({json::array(), {1}}));

  const auto u = run({"union", temp_file("union.json", R"({"type":"matroid_list","matroids":[
      {"type":"uniform","k":1,"n":2},{"type":"uniform","k":1,"n":2}]})")})
                     .doc();
  CHECK(u["union_rank"] == 2);
  CHECK(u["partition"].size() == 2);
  const auto none = run({"union", fixture("nonrep_quotient_pair.json")}).doc();
  CHECK(none["union_rank"] == 5);
  CHECK(none["partition"].is_null());
}

TEST_CASE("text output") {
  const auto r = run({"ktutte", fixture("flag_example.json"), "--output", "text"});
  CHECK(r.out == "K-Tutte = x^2*y^2 + x^2*y + x*y^2 + x^2 + x*y\n");
  const auto e = run({"check", fixture("bad_mixed_sizes.json"), "--output", "text"});
  CHECK(e.code == 1);
  CHECK(e.out.rfind("error: UnequalCardinality", 0) == 0);
}
