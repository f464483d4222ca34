#include <array>
#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

std::string bin() {
  const char* b = std::getenv("KANCALC_BIN");
  REQUIRE(b != nullptr);
  return b;
}

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = ::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = ::pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct Fixtures {
  std::filesystem::path dir;
  Fixtures() {
    dir = std::filesystem::temp_directory_path() /
          ("kancalc_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    put("P.fc", "category P\nobjects: x\nmor p : x -> x\ncompose p p = p\n");
    put("disc2.fc", "category disc2\nobjects: a b\n");
    put("pt.fc", "category pt\nobjects: *\n");
    put("prod.fc", "category prod\nobjects: (a,a) (a,b) (b,a) (b,b)\n");
    put("const.psh", "setfun const\nbase: prod.fc\nvariance: covariant\n"
                     "at (a,a): *\nat (a,b): *\nat (b,a): *\nat (b,b): *\n");
    put("D.fun", "functor D\ndom: P.fc\ncod: disc2.fc\nobj x -> a\nmor p -> id_a\n");
    put("J.pos", "poset J\nelements: o a\nle: o<=a\n");
    put("F.fun", "functor F\ndom: P.fc\ncod: pt.fc\nobj x -> *\nmor p -> id_*\n");
    put("D.diag", "diagram D\nindex: J.pos\nat o: pt.fc\nat a: P.fc\nact o a: F.fun\n");
    put("Y.psh", "setfun Y\nbase: P.fc\nvariance: contravariant\n"
                 "at x: e\nact p: e -> e\n");
  }
  ~Fixtures() { std::filesystem::remove_all(dir); }
  void put(const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
  }
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("exit code contract and witnesses") {
  Fixtures f;
  auto ok = run("check filtered " + f.at("P.fc"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("identity cone at x") != std::string::npos);
  CHECK(ok.out.find("leg x = p") != std::string::npos);

  auto no = run("check filtered " + f.at("disc2.fc"));
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("filtered: false") != std::string::npos);

  auto bad = run("check filtered /nonexistent.fc");
  CHECK(bad.exit_code == 2);

  auto over = run("harness p-le --budget 5");
  CHECK(over.exit_code == 3);
}

TEST_CASE("colim prints the vertex of a terminal-index diagram") {
  Fixtures f;
  auto r = run("colim -d " + f.at("D.fun"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("colim: a") != std::string::npos);
}

TEST_CASE("commute mismatch witness on the discrete square") {
  Fixtures f;
  auto r = run("check commute -I " + f.at("disc2.fc") + " -J " + f.at("disc2.fc") +
               " -X " + f.at("const.psh"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("lhs |colim lim| = 2") != std::string::npos);
  CHECK(r.out.find("rhs |lim colim| = 4") != std::string::npos);
}

TEST_CASE("json reports carry the schema header") {
  Fixtures f;
  auto r = run("check filtered " + f.at("P.fc") + " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"schema\": 1") != std::string::npos);
  CHECK(r.out.find("\"kind\": \"check.filtered\"") != std::string::npos);
  CHECK(r.out.find("\"ok\": true") != std::string::npos);
  CHECK(r.out.find("\"witness\"") != std::string::npos);

  // identical invocations are byte-identical
  auto again = run("check filtered " + f.at("P.fc") + " --json");
  CHECK(again.out == r.out);
}

TEST_CASE("dot output") {
  Fixtures f;
  auto r = run("vc " + f.at("P.fc") + " --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("structure commands") {
  Fixtures f;
  auto n = run("nerve " + f.at("P.fc") + " --max-dim 3");
  CHECK(n.exit_code == 0);
  CHECK(n.out.find("dim 3: 8 chains, 1 non-degenerate") != std::string::npos);

  auto l = run("lax-limit -d " + f.at("D.diag"));
  CHECK(l.exit_code == 0);
  CHECK(l.out.find("sections: 1") != std::string::npos);

  auto t = run("tw " + f.at("P.fc"));
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("objects: id_x p") != std::string::npos);
}

TEST_CASE("ind commands") {
  Fixtures f;
  auto rec = run("ind recognize -X " + f.at("Y.psh"));
  CHECK(rec.exit_code == 0);
  CHECK(rec.out.find("ind object: true") != std::string::npos);

  auto ka = run("ind karoubi-id " + f.at("P.fc"));
  CHECK(ka.exit_code == 0);
  CHECK(ka.out.find("image classes: 2") != std::string::npos);

  auto demo = run("ind prod-demo -n 3");
  CHECK(demo.exit_code == 0);
  CHECK(demo.out.find("odd embedding cofinal: true") != std::string::npos);
}

TEST_CASE("harness suites pass at the default sizes") {
  for (auto s : {"p-le", "con-le", "cof-le", "dim1-le"}) {
    auto r = run(std::string("harness ") + s);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
  }
}
