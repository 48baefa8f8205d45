#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qlsmodcat/cli.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/serialize.hpp"
#include "support.hpp"

using namespace qlsmodcat;
namespace fs = std::filesystem;

namespace {

const std::string kData = QLSMODCAT_DATA_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qlsmodcat-test-" + std::to_string(fnv1a(std::to_string(std::rand()))));
    fs::create_directories(path);
    setenv("QLSMODCAT_CACHE_DIR", (path / "cache").c_str(), 1);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("scalars round-trip through JSON") {
  for (const CycloNumber& x : {CycloNumber(0L), CycloNumber(-7L), CycloNumber(Rational(3, 4)), root_of_unity(3, 1),
                               root_of_unity(12, 5) * CycloNumber(Rational(-2, 9))}) {
    CHECK(scalar_from_json(scalar_to_json(x)) == x);
  }
  CHECK(scalar_from_json(Json(5)) == CycloNumber(5L));
  CHECK(scalar_from_json(Json("-1/2")) == CycloNumber(Rational(-1, 2)));
}

TEST_CASE("input files round-trip") {
  for (const auto& entry : fs::directory_iterator(kData)) {
    const auto doc = parse_input(slurp(entry.path().string()));
    const Json j = input_to_json(doc);
    const auto again = parse_input(j.dump());
    CHECK(input_to_json(again) == j);
    CHECK(validate_datum(again.datum).ok);
  }
}

TEST_CASE("artifacts round-trip") {
  const QlsDatum d = fixtures::z2z2_pair();
  const auto H = build_lifting(d, fixtures::z2z2_lambda_lifting());
  const Json hj = hopf_to_json(H);
  const auto H2 = hopf_from_json(Json::parse(hj.dump()));
  CHECK(H2.alg.mult == H.alg.mult);
  CHECK(H2.comult == H.comult);
  CHECK(hopf_to_json(H2) == hj);

  const auto A = build_A(d, testsupport::full_datum(d));
  const auto A2 = comodule_from_json(comodule_to_json(A));
  CHECK(A2.coaction == A.coaction);
  CHECK(verify_comodule_algebra(A2).ok());

  const auto B = build_bigalois(d, fixtures::z2z2_lambda_lifting());
  const auto B2 = bigalois_from_json(bigalois_to_json(B));
  CHECK(B2.right_coaction == B.right_coaction);
  CHECK(verify_bigalois(B2).ok());
}

TEST_CASE("schema errors carry a location") {
  CHECK(parse_error_kind("{\"group\": ") == ErrorKind::ParseError);
  try {
    parse_input("{\n  \"group\": {\"orders\": [2]},\n  \"g\": [[1]],\n  \"chi\": [[1]],,\n}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  try {
    parse_input(R"({"group": {"orders": [2]}, "g": [[1]], "chi": [["x"]]})");
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("/chi/0/0") != std::string::npos);
  }
  CHECK(parse_error_kind(R"({"group": {"orders": [2]}, "g": [[1]]})") == ErrorKind::ParseError);
  CHECK(parse_error_kind(R"({"group": {"orders": [0]}, "g": [], "chi": []})") == ErrorKind::ParseError);
}

TEST_CASE("the embedded schema is the shipped one") {
  const Json shipped = Json::parse(slurp(kData + "/../schemas/input.schema.json"));
  CHECK(input_schema() == shipped);
  for (const auto& entry : fs::directory_iterator(kData))
    CHECK_FALSE(validate_schema(Json::parse(slurp(entry.path().string())), shipped));
}

TEST_CASE("sample parsing") {
  const auto s = parse_sample("0, 1,-1/2,z4^1,-z3");
  REQUIRE(s.size() == 5);
  CHECK(s[2] == CycloNumber(Rational(-1, 2)));
  CHECK(s[3] == root_of_unity(4, 1));
  CHECK(s[4] == -root_of_unity(3, 1));
  CHECK_THROWS_AS(parse_sample("q"), Error);
}

TEST_CASE("CLI exit codes") {
  TempDir tmp;
  SUBCASE("valid input") {
    const auto r = run({"validate", kData + "/sweedler.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("valid, N=[2]") != std::string::npos);
  }
  SUBCASE("malformed JSON") {
    const auto r = run({"validate", tmp.write("bad.json", "{\"group\":")});
    CHECK(r.code == 1);
    CHECK(r.err.find("line") != std::string::npos);
  }
  SUBCASE("invalid datum") {
    CHECK(run({"validate", tmp.write("q1.json", R"({"group":{"orders":[2]},"g":[[1]],"chi":[[0]]})")}).code == 1);
    CHECK(run({"build-hopf", tmp.file("q1.json")}).code == 1);
  }
  SUBCASE("missing sections") {
    CHECK(run({"build-lifting", kData + "/sweedler.json"}).code == 1);
    CHECK(run({"build-algebra", kData + "/sweedler.json"}).code == 1);
  }
  SUBCASE("unknown option") { CHECK(run({"validate", "--bogus", kData + "/sweedler.json"}).code == 1); }
  SUBCASE("build, dump, verify") {
    const std::string out = tmp.file("h.json");
    CHECK(run({"build-lifting", kData + "/z4_mu.json", "-o", out}).code == 0);
    CHECK(run({"verify", out}).code == 0);
    Json j = Json::parse(slurp(out));
    j["comult"][1] = Json::array({Json::array({9, Json{{"L", 1}, {"c", Json::array({"2"})}}})});
    tmp.write("corrupt.json", j.dump());
    const auto r = run({"verify", tmp.file("corrupt.json")});
    CHECK(r.code == 2);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("coassociativity fails on") != std::string::npos);
  }
  SUBCASE("json format") {
    const auto r = run({"build-hopf", kData + "/clifford.json", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["command"] == "build-hopf");
    CHECK(j["dim"] == 8);
  }
}

TEST_CASE("the cache is content-addressed and checksum-verified") {
  TempDir tmp;
  const fs::path cache = tmp.path / "cache";
  CHECK(run({"build-hopf", kData + "/clifford.json"}).code == 0);
  REQUIRE(fs::exists(cache));
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(cache)) {
    ++entries;
    // Corrupt the payload: the checksum no longer matches and the entry is rebuilt.
    std::string text = slurp(e.path().string());
    const auto pos = text.find("\"c\":[\"1\"]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "\"c\":[\"7\"]");
    std::ofstream(e.path()) << text;
  }
  CHECK(entries == 1);
  const auto r = run({"build-hopf", kData + "/clifford.json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"build-hopf", kData + "/clifford.json", "--no-cache"}).out == r.out);
}

TEST_CASE("classify artifacts are byte-identical across runs") {
  TempDir tmp;
  const std::string a = tmp.file("a.json"), b = tmp.file("b.json");
  CHECK(run({"classify", kData + "/clifford.json", "--seed", "7", "-o", a}).code == 0);
  CHECK(run({"classify", kData + "/clifford.json", "--seed", "7", "--no-cache", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run({"verify", a}).code == 0);
  const Json j = Json::parse(slurp(a));
  CHECK(j.at("totals").at("representatives") == 26);
}

TEST_CASE("transport through the CLI") {
  TempDir tmp;
  const auto r = run({"transport", kData + "/z2z2_lambda.json", "-o", tmp.file("t.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", tmp.file("t.json")}).code == 0);
}
