#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "djk/char_classes.hpp"
#include "djk/json_io.hpp"
#include "support.hpp"

using namespace djk;
using djk::testing::data_path;
using json_io::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "djk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = djk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("djk_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("structures on the square") {
  const auto r = run({"structures", data_path("square.json"), "--omega", "-,+,+,+"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"realizable\":false,\"count\":0}\n");
  const auto ok = run({"structures", data_path("square.json"), "--omega", "-,-,+,+"});
  CHECK(ok.status == 0);
  CHECK(ok.out == "{\"realizable\":true,\"count\":2,\"epsilon\":1,\"f\":\"+,-,-,-\"}\n");
  const auto viaf = run({"structures", data_path("square.json"), "--f", "+,-,+,-"});
  CHECK(viaf.json()["realizable"] == true);
  const auto un = run({"structures", data_path("square.json"), "--omega", "+,+,+,+", "--unoriented"});
  CHECK(un.json()["count"] == 4);
  const auto ex = run({"structures", data_path("square.json"), "--omega", "+,+,+,+", "--explain"});
  CHECK(ex.json()["top_faces"].dump() == "[[1,2],[1,4],[2,3],[3,4]]");
}

TEST_CASE("color") {
  const auto r = run({"color", data_path("square.json"), "-r", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"colors\":[1,2,1,2]}\n");
  const auto none = run({"color", data_path("triangle.json"), "-r", "2"});
  CHECK(none.status == 1);
  CHECK(none.json()["colors"].is_null());
  CHECK(none.err.find("no regular 2-coloring") != std::string::npos);
  const auto chi = run({"color", data_path("triangle.json")});
  CHECK(chi.status == 0);
  CHECK(chi.json()["chromatic_number"] == 3);
}

TEST_CASE("classes") {
  const auto r = run({"classes", data_path("triangle.json")});
  CHECK(r.status == 0);
  const auto j = r.json();
  const auto t = djk::testing::triangle();
  CHECK(j["chern"] == json_io::polynomial_to_json(total_chern(t)));
  CHECK(j["pontrjagin"] == json_io::polynomial_to_json(total_pontrjagin(t)));
  CHECK(json_io::polynomial_from_json(t, j["chern"]) == total_chern(t));
  CHECK_FALSE(j.contains("warnings"));
  const auto f = run({"classes", data_path("triangle.json"), "--f", "-,+,+"});
  CHECK(json_io::polynomial_from_json(t, f.json()["chern_f"]) == chern_f(t, VertexSign({-1, 1, 1})));
  CHECK(f.json()["pontrjagin_of_chern_f"] == j["pontrjagin"]);
  const auto np = run({"classes", data_path("nonpure.json")});
  CHECK(np.status == 0);
  CHECK(np.json()["warnings"].size() == 1);
}

TEST_CASE("sqrt-enum is deterministic across thread counts") {
  const auto one = run({"sqrt-enum", data_path("square.json")});
  const auto four = run({"sqrt-enum", data_path("square.json"), "--threads", "4"});
  CHECK(one.status == 0);
  CHECK(one.out == four.out);
  CHECK(one.json()["count"] == 16);
  CHECK(one.json()["classes"][0]["omega"] == "+,+,+,+");
  CHECK(run({"sqrt-enum", data_path("triangle.json")}).json()["count"] == 8);
  CHECK(run({"sqrt-enum", data_path("square.json"), "--threads", "0"}).status == 2);
}

TEST_CASE("identical inputs give byte-identical outputs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classes", data_path("boundary_simplex_3.json")},
           {"sqrt-enum", data_path("boundary_simplex_3.json")},
           {"limits", data_path("square_atomic_vertex.json")},
           {"quasitoric", data_path("cp2_pair.json")}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("stable-count, vandermonde and admissible") {
  CHECK(run({"stable-count", data_path("square.json"), "-s", "3"}).out == "{\"count\":16}\n");
  CHECK(run({"stable-count", data_path("square.json"), "-s", "2"}).status == 2);
  const auto v = run({"vandermonde", "-m", "4", "-n", "2"});
  CHECK(v.out == "[[\"1\",\"1\",\"1\",\"1\"],[\"2\",\"4\",\"8\",\"16\"]]\n");
  CHECK(run({"vandermonde", "-m", "2", "-n", "3"}).status == 2);
  CHECK(run({"admissible", data_path("square.json"), data_path("vandermonde_4_2.json")}).out ==
        "{\"admissible\":true}\n");
  const auto bad = temp_file("bad_matrix.json", R"([["1", "1", "1", "1"], ["0", "1", "2", "2"]])");
  const auto r = run({"admissible", data_path("square.json"), bad, "--all-faces"});
  CHECK(r.status == 0);
  CHECK(r.json()["admissible"] == false);
  CHECK(r.json()["witness"].dump() == "[1,2]");
}

TEST_CASE("limits and link cohomology") {
  const auto r = run({"limits", data_path("square_atomic_vertex.json")});
  CHECK(r.status == 0);
  const auto lim = r.json()["lim"];
  CHECK(lim.size() == 4);
  CHECK(lim[1]["rank"] == 1);
  CHECK(lim[0]["rank"] == 0);
  const auto l = run({"link-cohomology", data_path("triangle.json"), "--face", ""});
  CHECK(l.status == 0);
  const auto h = l.json()["reduced_cohomology"];
  CHECK(h.size() == 3);
  CHECK(h[2]["degree"] == 1);
  CHECK(h[2]["rank"] == 1);
  CHECK(json_io::complex_from_json(l.json()["link"]) == djk::testing::triangle());
  const auto f2 = run({"link-cohomology", data_path("triangle.json"), "--face", "1", "--ring", "2"});
  CHECK(f2.json()["reduced_cohomology"][1]["torsion"].dump() == "[2]");
  CHECK(run({"link-cohomology", data_path("triangle.json"), "--face", "1,2,3"}).status == 2);
  CHECK(run({"link-cohomology", data_path("triangle.json"), "--face", "1", "--ring", "4"}).status == 2);
}

TEST_CASE("quasitoric pairs") {
  const auto cp2 = run({"quasitoric", data_path("cp2_pair.json")});
  CHECK(cp2.status == 0);
  CHECK(cp2.json()["complex_structure"] == true);
  CHECK(cp2.json()["signs"] == "+,+,+");
  const auto odd = run({"quasitoric", data_path("square_odd_pair.json")});
  CHECK(odd.status == 0);
  CHECK(odd.json()["complex_structure"] == false);
  CHECK(odd.json()["signs"] == "+,-,-,-");
  const auto bad = temp_file("bad_pair.json", R"({"complex": {"m": 3, "facets": [[1, 2], [2, 3], [1, 3]]},
      "oriented_facets": [[1, 2], [2, 3], [3, 1]], "lambda": [[1, 0, 1], [0, 1, 2]]})");
  const auto r = run({"quasitoric", bad});
  CHECK(r.status == 1);
  CHECK(r.json()["face"].dump() == "[1,3]");
  CHECK(r.json()["determinant"] == -2);
}

TEST_CASE("input errors exit with status 2 and name the field") {
  const auto missing = run({"classes", "/nonexistent/file.json"});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  const auto malformed = run({"classes", temp_file("malformed.json", "{\"m\": 3, ")});
  CHECK(malformed.status == 2);
  CHECK(malformed.err.find("malformed JSON") != std::string::npos);
  const auto schema = run({"classes", temp_file("schema.json", R"({"m": 3, "facets": [[1, 7]]})")});
  CHECK(schema.status == 2);
  CHECK(schema.err.find("facets[0]") != std::string::npos);
  const auto conflict = run({"structures", data_path("square.json"), "--omega", "+,+,+,+", "--f", "+,+,+,+"});
  CHECK(conflict.status == 2);
  const auto neither = run({"structures", data_path("square.json")});
  CHECK(neither.status == 2);
  const auto length = run({"structures", data_path("square.json"), "--omega", "+,+"});
  CHECK(length.status == 2);
  CHECK(length.err.find("--omega") != std::string::npos);
  const auto token = run({"structures", data_path("square.json"), "--omega", "+,x,+,+"});
  CHECK(token.status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"classes", data_path("triangle.json"), "--f", "+,+"}).status == 2);
  const auto pair = run({"quasitoric", temp_file("pair_shape.json", R"({"complex": {"m": 3, "facets": [[1, 2], [2, 3], [1, 3]]},
      "oriented_facets": [[1, 2], [2, 3], [3, 1]], "lambda": [[1, 0], [0, 1]]})")});
  CHECK(pair.status == 2);
  const auto functor = run({"limits", temp_file("functor.json", R"({"complex": {"m": 2, "facets": [[1, 2]]},
      "values": [{"face": [1], "rank": "one"}]})")});
  CHECK(functor.status == 2);
  CHECK(functor.err.find("values[0].rank") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("structures") != std::string::npos);
}
