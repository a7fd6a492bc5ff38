#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef LH_CLI_PATH
#error "LH_CLI_PATH must name the lh executable"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

Run lh(const std::vector<std::string>& args) {
  std::string cmd = quote(LH_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("lh_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("gamma output") {
  auto r = lh({"gamma", "s1", "-n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["basis_order"] == nlohmann::json::parse("[[1],[2],[3],[1,2],[1,3],[2,3],[1,2,3],[1,3,2]]"));
  CHECK(j["rows"][3] == nlohmann::json::parse("[0,1,0,-1,0,0,0,0]"));
  CHECK(j["rows"][6] == nlohmann::json::parse("[0,0,0,0,0,1,-1,-1]"));
  for (const char* route : {"series", "words", "closed-form"}) {
    CHECK(lh({"gamma", "s2 s1^-1", "-n", "4", "--route", route, "--format", "json"}).out ==
          lh({"gamma", "s2 s1^-1", "-n", "4", "--format", "json"}).out);
  }
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> cmds{
      {"basis", "-n", "4"},
      {"magnus", "x1 x2 x1^-1", "--format", "json"},
      {"nf", "x2 x1", "--format", "json"},
      {"act", "s1", "x2"},
      {"clasp", "a1,3 a2,3 a1,2^-1", "--format", "json"},
      {"tables", "--format", "json"},
  };
  for (const auto& c : cmds) {
    auto a = lh(c), b = lh(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("individual subcommands") {
  CHECK(lh({"basis", "-n", "3"}).out == "(1)\n(2)\n(3)\n(1.2)\n(1.3)\n(2.3)\n(1.2.3)\n(1.3.2)\n");
  CHECK(lh({"act", "s1", "x2"}).out == "x2^-1 x1 x2\n");
  auto nf = nlohmann::json::parse(lh({"nf", "x2 x1", "--format", "json"}).out);
  CHECK(nf["order"] == "weight-lex");
  CHECK(nf["exponents"] == nlohmann::json::parse(R"({"1": 1, "2": 1, "1.2": -1})"));
  auto clasp = nlohmann::json::parse(lh({"clasp", "a1,3", "--format", "json"}).out);
  CHECK(clasp["nu"]["1.3"] == 1);
  CHECK(clasp["nu"]["1.2.3"] == 0);
  TempFile v(R"({"n":3,"nu":{"1.3":1}})");
  auto pc = nlohmann::json::parse(lh({"pc", v.path(), "--strand", "1", "--by", "2", "--format", "json"}).out);
  CHECK(pc["nu"]["1.2.3"] == 1);
  auto built = lh({"build", v.path()});
  CHECK(built.code == 0);
  CHECK(nlohmann::json::parse(lh({"clasp", built.out.substr(0, built.out.size() - 1), "-n", "3", "--format",
                                  "json"}).out)["nu"] == nlohmann::json::parse(R"({"1.2":0,"1.3":1,"2.3":0,"1.2.3":0})"));
  auto rows = nlohmann::json::parse(lh({"tables", "--table", "generating-4", "--format", "json"}).out);
  CHECK(rows.size() == 8);
}

TEST_CASE("exit codes") {
  CHECK(lh({"braid-eq", "", "", "-n", "3"}).code == 0);
  CHECK(lh({"braid-eq", "s1 s2 s1", "s2 s1 s2"}).code == 0);
  CHECK(lh({"braid-eq", "s1", "s1^-1"}).code == 1);

  TempFile a(R"({"n":3,"nu":{"1.3":1,"1.2.3":5}})");
  TempFile b(R"({"n":3,"nu":{"1.3":1}})");
  TempFile c(R"({"n":3,"nu":{"1.2.3":1}})");
  TempFile z(R"({"n":3})");
  TempFile f1(R"({"n":5,"nu":{"1.2":1}})");
  TempFile f2(R"({"n":5,"nu":{"1.2":1,"1.2.3":1}})");
  TempFile bad(R"({"n":3,"nu":{"2.1":1}})");
  TempFile broken("{\"n\": 3,");
  auto eq = lh({"closure-eq", a.path(), b.path(), "--format", "json"});
  CHECK(eq.code == 0);
  auto verdict = nlohmann::json::parse(eq.out);
  CHECK(verdict["status"] == "Equivalent");
  CHECK(verdict["witness"].size() >= 1);
  CHECK(lh({"closure-eq", c.path(), z.path()}).code == 1);
  CHECK(lh({"closure-eq", f1.path(), f2.path()}).code == 2);
  CHECK(lh({"closure-eq", a.path(), b.path(), "--strategy", "bfs"}).code == 0);

  CHECK(lh({}).code == 64);
  CHECK(lh({"frobnicate"}).code == 64);
  CHECK(lh({"gamma"}).code == 64);
  CHECK(lh({"basis"}).code == 64);
  CHECK(lh({"gamma", "s1", "--route", "telepathy"}).code == 64);
  CHECK(lh({"gamma", "s7", "-n", "3"}).code == 65);
  CHECK(lh({"magnus", "x1 y2"}).code == 65);
  CHECK(lh({"closure-eq", bad.path(), z.path()}).code == 65);
  CHECK(lh({"closure-eq", broken.path(), z.path()}).code == 65);
  CHECK(lh({"closure-eq", "/nonexistent/vector.json", z.path()}).code == 65);
  CHECK(lh({"pc", z.path(), "--strand", "1", "--by", "1"}).code == 65);
  CHECK(lh({"tables", "--table", "nope"}).code == 65);
}
