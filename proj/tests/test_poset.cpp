#include "doctest.h"
#include "kancalc/poset.hpp"

using namespace kancalc;

TEST_CASE("poset validation") {
  auto j = chain_poset(2);
  CHECK(j.n() == 3);
  CHECK(j.le(0, 2));
  CHECK_FALSE(j.le(2, 0));
  CHECK_THROWS_AS(Poset::from_generators({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  auto v = v_poset();
  CHECK(v.le(v.index("o"), v.index("1")));
  CHECK_FALSE(v.le(v.index("0"), v.index("1")));
}

TEST_CASE("as_category and round trip") {
  auto c = as_category(chain_poset(2));
  CHECK(c->nmor() == 6);
  auto back = try_as_poset(c);
  REQUIRE(back.has_value());
  CHECK(poset_iso(*back, chain_poset(2)));
  CHECK(as_category(discrete_poset({"a", "b"}))->nmor() == 2);
  CHECK_FALSE(try_as_poset(walking_idempotent()).has_value());
}

TEST_CASE("chain counts") {
  auto counts = chain_count(*walking_idempotent(), 3);
  CHECK(counts == std::vector<long long>{1, 1, 1, 1});
  CHECK(chain_count(*as_category(chain_poset(2)), 2) ==
        std::vector<long long>{3, 3, 1});
}

TEST_CASE("dimension and height") {
  CHECK(dimension(chain_poset(3)) == 3);
  CHECK(height_map(chain_poset(3)) == std::vector<int>{0, 1, 2, 3});
  auto vo = opposite(v_poset());  // two minimal points under a top
  CHECK(dimension(vo) == 1);
  auto ht = height_map(vo);
  CHECK(ht[vo.index("o")] == 1);
  CHECK(ht[vo.index("0")] == 0);
  CHECK(dimension(discrete_poset({"a"})) == 0);
  CHECK(dimension(Poset::validated({}, {})) == -1);
}

TEST_CASE("left-closed sets and lambda") {
  auto j = chain_poset(1);
  auto L = left_closed_sets(j);
  CHECK(L.lattice.n() == 3);  // {}, {0}, {0,1}
  std::vector<char> just_top = {0, 1};
  CHECK(lambda_closure(j, just_top) == std::vector<char>{1, 1});
  CHECK(lambda_closure(j, {0, 0}) == std::vector<char>{0, 0});
  // adjunction: Λ(S) ⊆ T ⟺ S ⊆ T for left-closed T
  for (unsigned bits = 0; bits < 4; ++bits) {
    std::vector<char> s = {static_cast<char>(bits & 1), static_cast<char>((bits >> 1) & 1)};
    auto lam = lambda_closure(j, s);
    for (auto& t : L.masks) {
      bool lhs = true, rhs = true;
      for (int e = 0; e < 2; ++e) {
        if (lam[e] && !t[e]) lhs = false;
        if (s[e] && !t[e]) rhs = false;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("glue and split round trip") {
  GluingDatum d;
  d.j0 = discrete_poset({"a"});
  d.j1 = discrete_poset({"b"});
  d.lambda = {{1}};
  auto g = glue(d);
  CHECK(poset_iso(g.glued, chain_poset(1)));

  auto d2 = split(chain_poset(2), {1, 1, 0});
  CHECK(d2.lambda.size() == 1);
  CHECK(d2.lambda[0] == std::vector<char>{1, 1});
  CHECK(poset_iso(glue(d2).glued, chain_poset(2)));

  GluingDatum d3;
  d3.j0 = chain_poset(1);
  d3.j1 = discrete_poset({"u", "v"});
  d3.lambda = {{1, 0}, {1, 1}};
  auto g3 = glue(d3);
  CHECK(g3.glued.n() == 4);
  CHECK(dimension(g3.glued) == 2);
}

TEST_CASE("glue rejects a non-monotone lambda") {
  GluingDatum d;
  d.j0 = chain_poset(1);
  d.j1 = chain_poset(1);
  d.lambda = {{1, 1}, {1, 0}};  // shrinks upward
  try {
    glue(d);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind == Error::Kind::NonMonotoneLambda);
  }
}

TEST_CASE("height decomposition") {
  auto d = height_decomposition(chain_poset(1));
  CHECK(d.j0.n() == 1);
  CHECK(d.j1.n() == 1);
  CHECK(d.lambda[0] == std::vector<char>{1});

  auto dv = height_decomposition(opposite(v_poset()));
  CHECK(dv.j0.n() == 2);
  CHECK(dimension(dv.j0) == 0);
  CHECK(dv.j1.n() == 1);
  CHECK(dv.lambda[0] == std::vector<char>{1, 1});
}

TEST_CASE("pushout square is cocartesian against small targets") {
  std::vector<CatPtr> targets = {point_cat(), chain_cat(1), discrete_cat({"a", "b"}),
                                 walking_idempotent(), chain_cat(2)};
  CHECK(check_cocartesian(pushout_square(chain_poset(1)), targets));
  CHECK(check_cocartesian(pushout_square(opposite(v_poset())), targets));
  CHECK(check_cocartesian(pushout_square(v_poset()), targets));
  CHECK(check_cocartesian(pushout_square(chain_poset(2)), targets));
}

TEST_CASE("directedness") {
  auto r = is_directed(chain_poset(3));
  CHECK(r.directed);
  CHECK(r.greatest == 3);
  auto d = is_directed(discrete_poset({"a", "b"}));
  CHECK_FALSE(d.directed);
  CHECK(d.witness == std::make_pair(0, 1));
  // L([2]) ordered by inclusion is directed with union as the bound
  auto L = left_closed_sets(chain_poset(2));
  CHECK(is_directed(L.lattice).directed);
  CHECK(is_directed(Poset::validated({}, {})).directed == false);
}

TEST_CASE("dimension grows by one under add_terminal on posets") {
  for (auto& j : {chain_poset(1), opposite(v_poset()), chain_poset(2)}) {
    auto t = add_terminal(as_category(j));
    auto p = try_as_poset(t.cat);
    REQUIRE(p.has_value());
    CHECK(dimension(*p) == dimension(j) + 1);
  }
}

TEST_CASE("coproduct") {
  auto co = coproduct({chain_cat(1), point_cat()});
  CHECK(co.cat->nobj() == 3);
  CHECK(co.cat->nmor() == 4);
  co.inj[0].validate();
  co.inj[1].validate();
  CHECK(pi0(*co.cat).size() == 2);
}
