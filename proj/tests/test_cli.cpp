#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cyclequiv/cli.hpp"

using namespace cyclequiv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclequiv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("equiv subcommand") {
  auto r = invoke({"equiv", "--q", "2", "--n", "14", "--a", "{1,2,4}^2", "--b", "{3,5,6}^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent e=5 b=0\n");
  r = invoke({"equiv", "--q", "3", "--n", "8", "--a", "{0,1,3,4}", "--b", "{1,2,3,6}"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("unknown none", 0) == 0);
  r = invoke({"equiv", "--q", "2", "--n", "7", "--a", "{0}", "--b", "{1}"});
  CHECK(r.code == 2);
  r = invoke({"equiv", "--q", "2", "--n", "14", "--a", "{1,2,4}^2", "--b", "{3,5,6}^2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "equivalent");
  CHECK(j["witness"]["e"] == 5);
}

TEST_CASE("usage and input errors") {
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"equiv", "--q", "2"}).code == 64);
  CHECK(invoke({"equiv", "--help"}).code == 0);
  const auto r = invoke({"mindist", "--q", "3", "--n", "4", "--gen", "[1031]"});
  CHECK(r.code == 3);
  CHECK(r.err.find("position 3") != std::string::npos);
}

TEST_CASE("cosets and mindist subcommands") {
  auto r = invoke({"cosets", "--q", "2", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{1,2,4}") != std::string::npos);
  r = invoke({"mindist", "--q", "2", "--n", "7", "--gen", "[1101]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[7,4]_2 d=3 exact", 0) == 0);
  r = invoke({"mindist", "--q", "3", "--qc", "20,3", "--gen", "[21]", "--f2", "[2200021200110200111]", "--f3",
              "[0012002212221102101]", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 19);
  CHECK(j["certificate"]["upper"] == 22);
  CHECK(j["certificate"]["exact"] == true);
}

TEST_CASE("partition output is reproducible") {
  const auto dir = std::filesystem::temp_directory_path() / "cyclequiv_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.txt", b = dir / "b.txt";
  CHECK(invoke({"partition", "--q", "3", "--n", "13", "--out", a.string(), "--quiet"}).code == 0);
  CHECK(invoke({"partition", "--q", "3", "--n", "13", "--out", b.string(), "--quiet"}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("cyclequiv-partition 1", 0) == 0);
  const auto r = invoke({"partition", "--q", "2", "--n", "7", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 7);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify a small manifest") {
  const auto dir = std::filesystem::temp_directory_path() / "cyclequiv_cli_verify";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.manifest";
  {
    std::ofstream m(path);
    m << "ham 2 7 4 3 exact cyclic:n=7 [1101]\n"
      << "ext 2 8 4 4 exact cyclic:n=7>extend [1101]\n"
      << "bad 2 7 4 4 exact cyclic:n=7 [1101]\n";
  }
  auto r = invoke({"verify", "--manifest", path.string(), "--only", "ext"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/1 entries passed") != std::string::npos);
  r = invoke({"verify", "--manifest", path.string()});
  CHECK(r.code != 0);
  CHECK(r.out.find("2/3 entries passed") != std::string::npos);

  std::istringstream dup("x 2 7 4 3 exact cyclic:n=7 [1101]\nx 2 7 4 3 exact cyclic:n=7 [1101]\n");
  CHECK_THROWS(read_manifest(dup));
  std::filesystem::remove_all(dir);
}
