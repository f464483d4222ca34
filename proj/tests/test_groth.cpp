#include "doctest.h"
#include "kancalc/groth.hpp"

using namespace kancalc;

TEST_CASE("constant diagrams give product Grothendieck constructions") {
  auto d = constant_diagram(chain_poset(1), walking_idempotent());
  d.validate();
  auto ga = groth_arrow(d);
  auto gc = groth_colax(d);
  auto prod = product(as_category(chain_poset(1)), walking_idempotent());
  CHECK(ga.cat->nobj() == prod.cat->nobj());
  CHECK(ga.cat->nmor() == prod.cat->nmor());
  CHECK(iso_check(ga.cat, prod.cat));
  CHECK(iso_check(gc.cat, prod.cat));
  ga.proj.validate();
  gc.proj.validate();
}

TEST_CASE("single-arrow diagrams give comma categories") {
  std::vector<FinFunctor> gammas = {
      thin_functor(chain_cat(1), chain_cat(2), {0, 2}),
      identity_functor(walking_idempotent()),
      constant_functor(point_cat(), chain_cat(1), 1),
  };
  for (auto& gamma : gammas) {
    auto d = gamma_diagram(gamma);
    d.validate();
    auto lax = lax_limit(d);
    auto colax = colax_limit(d);
    CHECK(iso_check(lax.cat, right_comma(gamma).cat));
    CHECK(iso_check(colax.cat, left_comma(gamma).cat));
  }
}

TEST_CASE("constant diagram over a discrete index gives a power") {
  auto d = constant_diagram(discrete_poset({"a", "b"}), chain_cat(1));
  auto lax = lax_limit(d);
  CHECK(lax.sections.size() == 4);
  auto prod = product(chain_cat(1), chain_cat(1));
  CHECK(iso_check(lax.cat, prod.cat));
  CHECK(iso_check(colax_limit(d).cat, prod.cat));
}

TEST_CASE("twisted arrows basics") {
  auto tpt = twisted_arrows(point_cat());
  CHECK(tpt.cat->nobj() == 1);
  CHECK(tpt.cat->nmor() == 1);
  auto t1 = twisted_arrows(chain_cat(1));
  CHECK(t1.cat->nobj() == 3);
  int nonid = 0;
  for (int m = 0; m < t1.cat->nmor(); ++m)
    if (!t1.cat->is_id(m)) ++nonid;
  CHECK(nonid == 2);
  // the non-identity maps go from the arrow to the two identities
  int f = t1.obj_of(chain_cat(1)->mor_index("(0<=1)"));
  for (int m = 0; m < t1.cat->nmor(); ++m)
    if (!t1.cat->is_id(m)) CHECK(t1.cat->src(m) == f);
  // object count always equals the morphism count of the base
  for (auto& c : {chain_cat(2), walking_idempotent(), discrete_cat({"a", "b"})}) {
    auto tw = twisted_arrows(c);
    CHECK(tw.cat->nobj() == c->nmor());
    tw.iso.validate();
  }
}

TEST_CASE("relative yoneda over the point is the ordinary yoneda presheaf") {
  auto C = chain_cat(2);
  auto d = constant_diagram(chain_poset(0), C);
  auto arrow = groth_arrow(d);
  auto tw = twisted_arrows(as_category(d.index));
  auto colax = colax_limit(d);
  REQUIRE(colax.sections.size() == 3);
  for (auto& s : colax.sections) {
    auto y = relative_yoneda(d, arrow, tw, s);
    CHECK(y.pointwise_hom_ok);
    auto yo = yoneda_at(C, s.obj[0]);
    for (int o = 0; o < arrow.cat->nobj(); ++o)
      CHECK(y.fun.at[o].size() == yo.at[arrow.objs[o].second].size());
  }
}

TEST_CASE("relative yoneda two-path equality with a nontrivial transition") {
  auto gamma = thin_functor(chain_cat(1), chain_cat(2), {0, 2});
  auto d = gamma_diagram(gamma);
  auto arrow = groth_arrow(d);
  auto tw = twisted_arrows(as_category(d.index));
  auto colax = colax_limit(d);
  CHECK(colax.sections.size() == 4);
  for (auto& s : colax.sections)
    CHECK(relative_yoneda(d, arrow, tw, s).pointwise_hom_ok);

  auto dp = constant_diagram(chain_poset(1), walking_idempotent());
  auto arrowp = groth_arrow(dp);
  auto twp = twisted_arrows(as_category(dp.index));
  for (auto& s : colax_limit(dp).sections)
    CHECK(relative_yoneda(dp, arrowp, twp, s).pointwise_hom_ok);
}

TEST_CASE("set-valued diagrams degenerate to elements categories") {
  auto j1 = chain_poset(1);
  SetFunctor x;
  x.base = as_category(j1);
  x.contravariant = true;
  x.at = {{"a"}, {"b", "c"}};
  x.act.assign(x.base->nmor(), {});
  x.act[x.base->idm[0]] = {0};
  x.act[x.base->idm[1]] = {0, 1};
  x.act[x.base->mor_index("(0<=1)")] = {0, 0};
  x.validate();
  CHECK(set_degeneration_check(j1, x));

  auto v = v_poset();
  int o = v.index("o"), e0 = v.index("0"), e1 = v.index("1");
  auto vc = as_category(v);
  SetFunctor y;
  y.base = vc;
  y.contravariant = true;
  y.at.resize(3);
  y.at[o] = {"u", "w"};
  y.at[e0] = {"x"};
  y.at[e1] = {"y", "z"};
  y.act.assign(vc->nmor(), {});
  y.act[vc->idm[o]] = {0, 1};
  y.act[vc->idm[e0]] = {0};
  y.act[vc->idm[e1]] = {0, 1};
  y.act[vc->mor_index("(" + v.elements[o] + "<=" + v.elements[e0] + ")")] = {0};
  y.act[vc->mor_index("(" + v.elements[o] + "<=" + v.elements[e1] + ")")] = {0, 1};
  y.validate();
  CHECK(set_degeneration_check(v, y));
}

TEST_CASE("co-lax limits of filtered fibers are filtered") {
  auto d = constant_diagram(chain_poset(1), walking_idempotent());
  auto rep = check_dim1_le(d);
  CHECK(rep.fibers_ok);
  CHECK(rep.filtered);

  auto d2 = constant_diagram(discrete_poset({"a", "b"}), walking_idempotent());
  CHECK(check_dim1_le(d2).filtered);

  // fibers with terminal objects over the co-span
  auto d3 = constant_diagram(opposite(v_poset()), chain_cat(1));
  CHECK(check_dim1_le(d3).filtered);

  auto bad = constant_diagram(chain_poset(0), discrete_cat({"a", "b"}));
  CHECK_THROWS_AS(check_dim1_le(bad), Error);
}

TEST_CASE("relative yoneda is fully faithful on small diagrams") {
  auto d1 = constant_diagram(chain_poset(0), walking_idempotent());
  auto r1 = check_lax_ind_shadow(d1);
  CHECK(r1.ok);
  CHECK(r1.sections == 1);

  auto d2 = gamma_diagram(identity_functor(chain_cat(1)));
  auto r2 = check_lax_ind_shadow(d2);
  CHECK(r2.ok);
  CHECK(r2.sections == 3);  // objects of the comma category of id

  auto d3 = gamma_diagram(thin_functor(chain_cat(1), chain_cat(2), {0, 2}));
  auto r3 = check_lax_ind_shadow(d3);
  CHECK(r3.ok);
  CHECK(r3.sections == 4);
}

TEST_CASE("lax products of filtered presheaves stay filtered") {
  auto pt = point_cat();
  auto one = constant_set(pt, true, {"*"});
  auto rpt = check_lax_product_shadow(identity_functor(pt), identity_functor(pt), one, one);
  CHECK(rpt.applicable);
  CHECK(rpt.ok);
  CHECK(rpt.alphas == 1);

  auto P = walking_idempotent();
  SetFunctor x;  // two points collapsed by the idempotent
  x.base = P;
  x.contravariant = true;
  x.at = {{"a", "b"}};
  x.act.assign(P->nmor(), {});
  x.act[P->idm[0]] = {0, 1};
  x.act[P->mor_index("p")] = {0, 0};
  x.validate();
  auto rp = check_lax_product_shadow(identity_functor(P), identity_functor(P), x, x);
  CHECK(rp.applicable);
  CHECK(rp.ok);
  CHECK(rp.alphas > 0);
}
