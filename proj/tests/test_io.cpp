#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "kancalc/io.hpp"

using namespace kancalc;

namespace {

struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("kancalc_io_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  std::string put(const std::string& name, const std::string& text) {
    auto p = (dir / name).string();
    std::ofstream(p) << text;
    return p;
  }
};

} // namespace

TEST_CASE("category text round trip") {
  auto P = parse_category("category P\n"
                          "objects: x\n"
                          "mor p : x -> x\n"
                          "compose p p = p\n");
  CHECK(P.name == "P");
  CHECK(*P.cat == *walking_idempotent());

  auto s = serialize_category(P.name, *P.cat);
  auto again = parse_category(s);
  CHECK(*again.cat == *P.cat);
  CHECK(serialize_category(again.name, *again.cat) == s);

  // comments and identity references
  auto A = parse_category("# the arrow\n"
                          "category A\n"
                          "objects: a b  # two objects\n"
                          "mor f : a -> b\n");
  CHECK(iso_check(A.cat, chain_cat(1)));
  auto inv = parse_category("category Z\n"
                            "objects: x\n"
                            "mor s : x -> x\n"
                            "compose s s = id_x\n");
  CHECK(inv.cat->is_invertible(inv.cat->mor_index("s")));
}

TEST_CASE("malformed input carries a location") {
  try {
    parse_category("category P\nobjects: x\nmor p : x -> x\ncompose p p p\n", "P.fc");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind == Error::Kind::ParseError);
    CHECK(std::string(e.what()).find("P.fc:4:1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_category("poset P\n"), Error);
  CHECK_THROWS_AS(parse_category("category P\nobjects: x\nmor p : x => x\n"), Error);
  // law violations are not parse errors
  try {
    parse_category("category B\nobjects: x\nmor p : x -> x\nmor q : x -> x\n"
                   "compose p p = p\ncompose p q = q\ncompose q p = p\n");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind != Error::Kind::ParseError);
  }
}

TEST_CASE("poset text round trip") {
  auto V = parse_poset("poset V\nelements: o a b\nle: o<=a o<=b\n");
  CHECK(V.name == "V");
  CHECK(poset_iso(V.poset, v_poset()));
  auto s = serialize_poset(V.name, V.poset);
  auto again = parse_poset(s);
  CHECK(serialize_poset(again.name, again.poset) == s);

  // transitive closure of generators
  auto C = parse_poset("poset C\nelements: a b c\nle: a<=b b<=c\n");
  CHECK(C.poset.le(0, 2));
  // the serialization lists only covering pairs
  CHECK(serialize_poset(C.name, C.poset).find("a<=c") == std::string::npos);

  CHECK_THROWS_AS(parse_poset("poset X\nelements: a\nle: a<=b\n"), Error);
  CHECK_THROWS_AS(parse_poset("poset X\nelements: a b\nle: a<=b b<=a\n"), Error);
}

TEST_CASE("setfun files resolve their base") {
  TempDir t;
  t.put("P.fc", "category P\nobjects: x\nmor p : x -> x\ncompose p p = p\n");
  auto path = t.put("X.psh",
                    "setfun X\n"
                    "base: P.fc\n"
                    "variance: contravariant\n"
                    "at x: u w\n"
                    "act p: u -> u w -> u\n");
  auto X = load_setfun(path);
  CHECK(X.name == "X");
  CHECK(X.fun.contravariant);
  CHECK(X.fun.size_at(0) == 2);
  CHECK(X.fun.act[X.fun.base->mor_index("p")] == std::vector<int>{0, 0});

  auto s = serialize_setfun(X);
  auto path2 = t.put("X2.psh", s);
  auto X2 = load_setfun(path2);
  CHECK(serialize_setfun({X2.name, X2.fun, X2.base_ref}) == s);

  // a missing act line for a populated morphism is rejected
  auto bad = t.put("bad.psh", "setfun B\nbase: P.fc\nat x: u\n");
  CHECK_THROWS_AS(load_setfun(bad), Error);
}

TEST_CASE("functor files resolve both ends") {
  TempDir t;
  t.put("A.fc", "category A\nobjects: a b\nmor f : a -> b\n");
  t.put("P.fc", "category P\nobjects: x\nmor p : x -> x\ncompose p p = p\n");
  auto path = t.put("F.fun",
                    "functor F\n"
                    "dom: A.fc\n"
                    "cod: P.fc\n"
                    "obj a -> x\n"
                    "obj b -> x\n"
                    "mor f -> p\n");
  auto F = load_functor(path);
  CHECK(F.fun.dom->nobj() == 2);
  CHECK(F.fun.on_mor(F.fun.dom->mor_index("f")) == F.fun.cod->mor_index("p"));

  auto s = serialize_functor(F);
  auto path2 = t.put("F2.fun", s);
  auto F2 = load_functor(path2);
  CHECK(serialize_functor(F2) == s);

  // non-functorial maps are rejected by validation, not parsing
  auto bad = t.put("bad.fun",
                   "functor B\ndom: P.fc\ncod: A.fc\nobj x -> a\nmor p -> f\n");
  CHECK_THROWS_AS(load_functor(bad), Error);
}

TEST_CASE("diagram files assemble a strict diagram") {
  TempDir t;
  t.put("J.pos", "poset J\nelements: o a\nle: o<=a\n");
  t.put("P.fc", "category P\nobjects: x\nmor p : x -> x\ncompose p p = p\n");
  t.put("pt.fc", "category pt\nobjects: *\n");
  t.put("F.fun", "functor F\ndom: P.fc\ncod: pt.fc\nobj x -> *\nmor p -> id_*\n");
  auto path = t.put("D.diag",
                    "diagram D\n"
                    "index: J.pos\n"
                    "at o: pt.fc\n"
                    "at a: P.fc\n"
                    "act o a: F.fun\n");
  auto D = load_diagram(path);
  CHECK(D.diag.index.n() == 2);
  CHECK(D.diag.at[D.diag.index.index("a")]->nmor() == 2);
  auto s = serialize_diagram(D);
  auto path2 = t.put("D2.diag", s);
  CHECK(serialize_diagram(load_diagram(path2)) == s);

  // the wrong transition direction is rejected
  t.put("G.fun", "functor G\ndom: pt.fc\ncod: P.fc\nobj * -> x\n");
  auto bad = t.put("bad.diag",
                   "diagram B\nindex: J.pos\nat o: pt.fc\nat a: P.fc\nact o a: G.fun\n");
  CHECK_THROWS_AS(load_diagram(bad), Error);
}

TEST_CASE("dot export") {
  auto d = dot_category("P", *walking_idempotent());
  CHECK(d.find("digraph \"P\"") != std::string::npos);
  CHECK(d.find("\"x\" -> \"x\" [label=\"p\"]") != std::string::npos);
  CHECK(d.find("id_x") == std::string::npos);

  auto h = dot_poset("C", chain_poset(2));
  CHECK(h.find("\"0\" -> \"1\"") != std::string::npos);
  CHECK(h.find("\"0\" -> \"2\"") == std::string::npos);  // Hasse only

  auto e = dot_elements("E", elements(yoneda_at(walking_idempotent(), 0)));
  CHECK(e.find("label=\"p\"") != std::string::npos);
}
