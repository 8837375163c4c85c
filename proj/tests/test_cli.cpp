#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "torsim/torsim.hpp"

using namespace torsim;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::string kZ8 = R"({"ring":{"kind":"Z"},"generators":1,"relations":[[8]]})";
const std::string kCounter = R"({"ring":{"kind":"BiPolyMonomialQuot","p":5,"rels":["xy"]},"ideal":["x"]})";

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("check on a cyclic module", "[cli]") {
  auto o = call({"--json", "check", "--module", kZ8});
  REQUIRE(o.code == 0);
  auto j = o.json();
  CHECK(j["status"] == "ok");
  CHECK(j["anchor"] == cli::anchors::kAss);
  CHECK(j["result"]["verdict"] == true);
  CHECK(j["result"]["type"] == "(2)");
  CHECK(j["job"]["command"] == "check");
  auto t = call({"check", "--module", kZ8});
  CHECK(t.code == 0);
  CHECK(t.out.find("verdict") != std::string::npos);
}

TEST_CASE("check on a representation reports both methods", "[cli]") {
  auto o = call({"--json", "check", "--rep", R"({"quiver":{"vertices":2,"arrows":[[0,1]]},"p":2,"dims":[1,1],"maps":[[[1]]]})"});
  REQUIRE(o.code == 0);
  auto r = o.json()["result"];
  CHECK(r["verdict"] == false);
  CHECK(r["single_vertex_criterion"] == false);
  CHECK(r["witness"]["dims"] == Json::array({0, 1}));
}

TEST_CASE("torsion-parts and ass", "[cli]") {
  auto o = call({"--json", "torsion-parts", R"({"module":{"ring":{"kind":"Z"},"generators":1,"relations":[[6]]}})"});
  REQUIRE(o.code == 0);
  CHECK(o.json()["result"]["count"] == 4);
  auto a = call({"--json", "ass", R"({"module":{"ring":{"kind":"Z"},"generators":2,"relations":[[6],[0]]}})"});
  REQUIRE(a.code == 0);
  CHECK(a.json()["result"]["singleton"] == false);
}

TEST_CASE("radical generated and coradical cogenerated", "[cli]") {
  auto o = call({"--json", "radical",
                 R"({"module":{"ring":{"kind":"Z"},"generators":1,"relations":[[12]]},"set":[{"ring":{"kind":"Z"},"generators":1,"relations":[[2]]}]})"});
  REQUIRE(o.code == 0);
  CHECK(o.json()["result"]["iterations"] == 2);
  CHECK(o.json()["result"]["radical"]["order"] == 4);
  auto c = call({"--json", "radical",
                 R"({"mode":"cogenerated","module":{"ring":{"kind":"Z"},"generators":1,"relations":[[12]]},"set":[{"ring":{"kind":"Z"},"generators":1,"relations":[[3]]}]})"});
  REQUIRE(c.code == 0);
  CHECK(c.json()["result"]["coradical"]["invariant_factors"] == Json::array({3}));
}

TEST_CASE("mccoy rank and nullvector", "[cli]") {
  auto r = call({"--json", "mccoy", "rank", R"({"ring":{"kind":"Zmod","n":4},"matrix":[[2]]})"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["mccoy_rank"] == 0);
  auto n = call({"--json", "mccoy", "nullvector", R"({"ring":{"kind":"Zmod","n":4},"matrix":[[2]]})"});
  REQUIRE(n.code == 0);
  CHECK(n.json()["result"]["exists"] == true);
  CHECK(n.json()["result"]["agree"] == true);
  CHECK(call({"mccoy", "nullvector", R"({"ring":{"kind":"Z"},"matrix":[[2]],"method":"exhaustive"})"}).code == 2);
}

TEST_CASE("hom-conormal counterexample", "[cli]") {
  auto o = call({"--json", "hom-conormal", kCounter});
  REQUIRE(o.code == 0);
  auto r = o.json()["result"];
  CHECK(r["verdict"] == false);
  CHECK(r["matrix"] == Json::parse(R"([["y"]])"));
  CHECK(r["domain"] == false);
  auto l = call({"--json", "radical-lemma", R"({"ring":{"kind":"BiPolyMonomialQuot","p":5,"rels":["xy"]},"ideal":["x"],"d":"x + y"})"});
  REQUIRE(l.code == 0);
  CHECK(l.json()["result"]["premise"] == true);
  CHECK(l.json()["result"]["conclusion"] == false);
}

TEST_CASE("input errors and unsupported rings", "[cli]") {
  CHECK(call({"check", "--module", R"({"ring":{"kind":"Z"},"generators":1,"relations":[[8]],"extra":1})"}).code == 2);
  CHECK(call({"check", "--module", "{not json"}).code == 2);
  CHECK(call({"check"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check", "--module", R"({"ring":{"kind":"Fp","p":3},"generators":1,"relations":[[1]]})"}).code == 3);
  auto h = call({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("payloads from stdin and files", "[cli]") {
  auto s = call({"--json", "check", "-"}, R"({"module":)" + kZ8 + "}");
  REQUIRE(s.code == 0);
  auto path = temp_file("torsim_cli_payload.json");
  std::ofstream(path) << kCounter;
  auto f = call({"--json", "hom-conormal", "@" + path.string()});
  CHECK(f.code == 0);
  CHECK(call({"hom-conormal", "@/nonexistent/payload.json"}).code == 2);
}

TEST_CASE("replay round trip and tamper detection", "[cli]") {
  auto report = temp_file("torsim_cli_report.json");
  auto o = call({"--json", "--out", report.string(), "hom-conormal", kCounter});
  REQUIRE(o.code == 0);
  std::ifstream in(report);
  Json saved = Json::parse(in);
  CHECK(saved == o.json());
  CHECK(call({"replay", "@" + report.string()}).code == 0);
  saved["result"]["verdict"] = true;
  CHECK(call({"replay", saved.dump()}).code == 1);
  auto bad = saved;
  bad.erase("anchor");
  CHECK(call({"replay", bad.dump()}).code == 2);
}

TEST_CASE("reports do not depend on the thread count", "[cli][determinism]") {
  auto with_threads = [](const char* n) {
    ::setenv("TORSIM_THREADS", n, 1);
    auto o = call({"--json", "--seed", "7", "--count", "30", "verify", "mccoy"});
    ::unsetenv("TORSIM_THREADS");
    return o;
  };
  auto a = with_threads("1"), b = with_threads("2");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  ::setenv("TORSIM_THREADS", "zero", 1);
  CHECK(call({"check", "--module", kZ8}).code == 2);
  ::unsetenv("TORSIM_THREADS");
}

TEST_CASE("options travel inside the job", "[cli]") {
  auto o = call({"--json", "--max-order", "10", "check", "--module", R"({"ring":{"kind":"Z"},"generators":1,"relations":[[16]]})"});
  REQUIRE(o.code == 0);
  auto j = o.json();
  CHECK(j["job"]["options"]["max_order"] == 10);
  CHECK(j["result"]["method"] == "ass-criterion");
  auto job = j["job"];
  CHECK(cli::execute(job).to_json() == j);
}

#ifdef TORSIM_BINARY
TEST_CASE("the installed binary reports exit codes", "[cli][binary]") {
  auto quiet = [](const std::string& args) {
    int s = std::system((std::string(TORSIM_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(quiet("check --module '" + kZ8 + "'") == 0);
  CHECK(quiet("check --module '{}'") == 2);
  CHECK(quiet("replay '{\"job\":1}'") == 2);
}
#endif
