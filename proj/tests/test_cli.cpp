#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pca/cli.hpp"
#include "pca/io.hpp"

using namespace pca;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "pca_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string t2q() {
  return write("t2q.alg", io::dump(io::algebra_to_json(upper_triangular(2, Field::rationals()))));
}

io::Json json_of(const Result& r) { return io::parse_document(r.out); }

}  // namespace

TEST_CASE("radical command") {
  Result r = run({"radical", t2q(), "--json"});
  CHECK(r.code == 0);
  io::Json j = json_of(r);
  CHECK(j["command"] == "radical");
  CHECK(j["results"]["dim"] == 1);
  CHECK(j["results"]["nilpotency_index"] == 2);
  CHECK(j["verified"]["postconditions"] == true);
  CHECK(j["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);

  std::string f2 = write("f2c4.alg", io::dump(io::algebra_to_json(group_algebra(4, Field::prime(2)))));
  io::Json o = json_of(run({"radical", f2, "--oracle", "--json"}));
  CHECK(o["results"]["dim"] == 3);
  CHECK(o["verified"]["oracle_agrees"] == true);

  Result text = run({"radical", t2q()});
  CHECK(text.out.find("results.dim: 1\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  std::string insep = write("insep.alg", io::dump(io::algebra_to_json(
                                             field_extension_algebra(io::parse_field("GF(2)(t)[x]/(x^2+t)")))));
  Result s = run({"septest", insep, "--json"});
  CHECK(s.code == 2);
  CHECK(json_of(s)["results"]["separable"] == false);
  CHECK(run({"radical", (scratch() / "nosuchfile").string()}).code == 1);
  CHECK(run({"wedderburn", t2q()}).code == 2);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"radical"}).code == 1);
  CHECK(run({"radical", write("garbage.alg", "not json")}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("wedderburn and separability commands") {
  std::string c3 = write("qc3.alg", io::dump(io::algebra_to_json(group_algebra(3, Field::rationals()))));
  io::Json w = json_of(run({"wedderburn", c3, "--json", "--verify"}));
  CHECK(w["results"]["blocks"].size() == 2);
  CHECK(w["results"]["blocks"][1]["dim"] == 2);
  CHECK(w["verified"]["central_orthogonal_complete"] == true);
  io::Json p = json_of(run({"sepidem", c3, "--json", "--verify"}));
  CHECK(p["verified"]["idempotent"] == true);
  CHECK(!p["results"]["coefficients"].empty());
  io::Json n = json_of(run({"nilpotent", t2q(), "--element", R"(["0", "5", "0"])", "--json"}));
  CHECK(n["results"]["nilpotent"] == true);
  CHECK(n["results"]["index"] == 2);
  CHECK(run({"nilpotent", t2q(), "--element", "[1, 0]"}).code == 1);
}

TEST_CASE("split and conjugate") {
  std::string alg = t2q();
  Result a = run({"split", alg, "--json"});
  Result b = run({"split", alg, "--json", "--seed", "7"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  std::string s0 = write("s0.json", a.out), s7 = write("s7.json", b.out);
  Result c = run({"conjugate", alg, "--s1", s7, "--s2", s0, "--json", "--verify"});
  CHECK(c.code == 0);
  io::Json j = json_of(c);
  CHECK(j["verified"]["conjugation"] == true);
  CHECK(j["verified"]["omega_in_radical"] == true);
}

TEST_CASE("tower commands") {
  std::string quiver = write("kron.quiver", R"({"vertices": ["v1", "v2"],
    "arrows": [{"name": "a", "src": "v1", "tgt": "v2"}, {"name": "b", "src": "v1", "tgt": "v2"}]})");
  std::string tower = (scratch() / "kron.tower").string();
  Result b = run({"tower", "build", "--kind", "path", "--field", "QQ", "--depth", "3", "--quiver", quiver, "-o", tower});
  CHECK(b.code == 0);
  io::Json c = json_of(run({"tower", "check", tower, "--json"}));
  CHECK(c["results"]["radical_dims"] == io::Json({0, 2, 2}));
  CHECK(c["verified"]["radical_is_arrow_ideal"] == true);

  Result inline_tower = run({"tower", "build", "--kind", "powerseries", "--field", "GF(5)", "--depth", "3"});
  CHECK(inline_tower.code == 0);
  CHECK(io::tower_from_json(io::parse_document(inline_tower.out)).depth() == 3);
  CHECK(run({"tower", "build", "--kind", "path", "--field", "QQ", "--depth", "2"}).code == 1);
  CHECK(run({"tower", "build", "--kind", "moebius", "--field", "QQ", "--depth", "2"}).code == 1);
}

#ifdef PCA_BINARY
TEST_CASE("repeated invocations are byte-identical") {
  std::string alg = t2q();
  auto capture = [](const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
  };
  const std::string bin = PCA_BINARY;
  for (const std::string& args : {"radical " + alg + " --json", "split " + alg + " --seed 3", "wedderburn " + alg}) {
    std::string first = capture(bin + " " + args);
    CHECK(!first.empty());
    CHECK(first == capture(bin + " " + args));
  }
}
#endif
