#include "doctest.h"
#include "kancalc/constructions.hpp"

using namespace kancalc;

TEST_CASE("opposite is involutive and self-dual on P") {
  auto P = walking_idempotent();
  CHECK(iso_check(opposite(P), P));
  auto C = chain_cat(2);
  CHECK(*opposite(opposite(C)) == *C);
  auto I = chain_cat(1);
  auto Iop = opposite(I);
  int f = Iop->mor_index("(0<=1)");
  CHECK(Iop->src(f) == Iop->obj_index("1"));
  CHECK(Iop->tgt(f) == Iop->obj_index("0"));
}

TEST_CASE("product counts and projections") {
  auto I = chain_cat(1);
  auto sq = product(I, I);
  CHECK(sq.cat->nobj() == 4);
  CHECK(sq.cat->nmor() == 9);
  sq.p0.validate();
  sq.p1.validate();
  CHECK(product(point_cat(), I).cat->nmor() == 3);
  CHECK(iso_check(product(point_cat(), I).cat, I));
  CHECK(product(empty_cat(), I).cat->nobj() == 0);
}

TEST_CASE("left comma fiber C/1 for C = I = [1]") {
  auto I = chain_cat(1);
  auto fib = comma_fiber_left(identity_functor(I), I->obj_index("1"));
  CHECK(fib.cat->nobj() == 2);
  CHECK(fib.cat->nmor() == 3);  // two identities and one arrow
  auto term = fib.cat->terminal_object();
  REQUIRE(term.has_value());
  CHECK(std::get<2>(fib.objs[*term]) == I->idm[I->obj_index("1")]);
  fib.sigma.validate();
  fib.tau.validate();
}

TEST_CASE("comma over the point recovers C via eta") {
  auto C = chain_cat(2);
  FinFunctor to_pt = constant_functor(C, point_cat(), 0);
  auto cc = left_comma(to_pt);
  auto eta = comma_eta(to_pt, cc);
  CHECK(is_fully_faithful(eta));
  CHECK(cc.cat->nobj() == C->nobj());
  CHECK(iso_check(cc.cat, C));
}

TEST_CASE("empty right comma fiber") {
  auto D = discrete_cat({"a", "b"});
  FinFunctor pt_to_a = constant_functor(point_cat(), D, D->obj_index("a"));
  auto fib = comma_fiber_right(pt_to_a, D->obj_index("b"));
  CHECK(fib.cat->nobj() == 0);
}

TEST_CASE("lax and strict fiber product with identity legs") {
  auto I = chain_cat(1);
  auto idf = identity_functor(I);
  auto lax = lax_fiber_product(idf, idf);
  CHECK(lax.cat->nobj() == 3);  // the arrow category of [1]
  CHECK(lax.cat->nmor() == 6);
  auto strict = fiber_product(idf, idf);
  CHECK(strict.cat->nobj() == 2);  // isomorphism category of [1]
  CHECK(iso_check(strict.cat, I));
}

TEST_CASE("pi0") {
  CHECK(pi0(*discrete_cat({"a", "b"})).size() == 2);
  CHECK(pi0(*chain_cat(1)).size() == 1);
  CHECK(pi0(*empty_cat()).empty());
  CHECK(is_connected(*chain_cat(1)));
  CHECK_FALSE(is_connected(*empty_cat()));
}

TEST_CASE("colimit via terminal index object") {
  auto I = chain_cat(2);
  auto E = identity_functor(I);
  auto col = colimit(E);
  REQUIRE(col.has_value());
  CHECK(col->vertex == I->obj_index("2"));
  col->validate();
}

TEST_CASE("colimit of two middle objects in the square") {
  auto I = chain_cat(1);
  auto sq = product(I, I);
  auto D = discrete_cat({"a", "b"});
  FinFunctor E;
  E.dom = D;
  E.cod = sq.cat;
  E.obj_map = {sq.obj_of(0, 1), sq.obj_of(1, 0)};
  E.mor_map = {sq.cat->idm[sq.obj_of(0, 1)], sq.cat->idm[sq.obj_of(1, 0)]};
  E.validate();
  auto col = colimit(E);
  REQUIRE(col.has_value());
  CHECK(col->vertex == sq.obj_of(1, 1));
}

TEST_CASE("limit via initial index object") {
  auto I = chain_cat(2);
  auto lim = limit(identity_functor(I));
  REQUIRE(lim.has_value());
  CHECK(lim->vertex == I->obj_index("0"));
}

TEST_CASE("karoubi closure of P") {
  auto P = walking_idempotent();
  auto K = karoubi_closure(P);
  CHECK(K.cat->nobj() == 2);
  CHECK(K.cat->nmor() == 5);
  K.eps.validate();
  CHECK(is_full(K.eps));
  int split = K.obj_of(0, P->mor_index("p"));
  REQUIRE(split >= 0);
  CHECK(K.cat->terminal_object() == split);
  CHECK(K.cat->initial_object() == split);
  // every projector in the closure has an image there
  for (int a = 0; a < K.cat->nobj(); ++a)
    for (int p = 0; p < K.cat->nmor(); ++p)
      if (K.cat->src(p) == a && K.cat->tgt(p) == a && K.cat->is_idempotent(p))
        CHECK(image_of_projector(*K.cat, Projector{a, p}).has_value());
}

TEST_CASE("id-cone search") {
  auto P = walking_idempotent();
  auto cone = find_id_cone(P);
  REQUIRE(cone.has_value());
  CHECK(cone->vertex == 0);
  CHECK(cone->legs[0] == P->mor_index("p"));  // the identity leg is not a cone
  CHECK_FALSE(find_id_cone(discrete_cat({"a", "b"})).has_value());
  auto I = chain_cat(1);
  auto ic = find_id_cone(I);
  REQUIRE(ic.has_value());
  CHECK(ic->vertex == I->obj_index("1"));
}

TEST_CASE("cone category over id_P: a cone exists but is not universal in P") {
  auto P = walking_idempotent();
  auto cc = cone_category(identity_functor(P));
  CHECK(cc.cat->nobj() == 1);               // only the cone (x, p)
  CHECK(cc.cat->hom(0, 0).size() == 2);     // both id and p commute with the leg
  CHECK_FALSE(colimit(identity_functor(P)).has_value());
}

TEST_CASE("the tautological embedding of P into its closure has a colimit") {
  auto P = walking_idempotent();
  auto K = karoubi_closure(P);
  auto col = colimit(K.eps);
  REQUIRE(col.has_value());
  CHECK(col->vertex == K.obj_of(0, P->mor_index("p")));  // the split image
  col->validate();
  // the non-universal cone with vertex (x, id) is also enumerated
  auto cc = cone_category(K.eps);
  bool found = false;
  for (auto& c : cc.cones)
    if (c.vertex == K.obj_of(0, P->idm[0])) found = true;
  CHECK(found);
}

TEST_CASE("add_terminal, add_initial, join") {
  auto t = add_terminal(empty_cat());
  CHECK(t.cat->nobj() == 1);
  auto I = chain_cat(1);
  auto ti = add_terminal(I);
  CHECK(ti.cat->nobj() == 3);
  CHECK(ti.cat->terminal_object() == ti.tip);
  ti.incl.validate();
  auto ii = add_initial(I);
  CHECK(ii.cat->initial_object() == ii.tip);
  auto j = join(point_cat(), point_cat());
  CHECK(j->nobj() == 3);
  CHECK(j->nmor() == 5);
  CHECK(j->initial_object().has_value());
  CHECK_FALSE(j->terminal_object().has_value());
}

TEST_CASE("join satisfies the cone identity") {
  auto I = chain_cat(1);
  auto j = join(I, point_cat());
  auto rhs = add_terminal(product(I, point_cat()).cat);
  CHECK(iso_check(add_terminal(j).cat,
                  product(add_terminal(I).cat, add_terminal(point_cat()).cat).cat));
  (void)rhs;
}

TEST_CASE("bicone collapse is a functor sending tips to the tip") {
  auto I = chain_cat(1);
  auto F = bicone_collapse(I, point_cat());
  F.validate();  // also checked inside, but assert here for clarity
  // count objects hitting the new cone point: (o,c), (c,o), (o,o)
  int tip_hits = 0;
  for (int a : F.obj_map)
    if (a == *F.cod->terminal_object()) ++tip_hits;
  CHECK(tip_hits == 4);  // (o,pt^>-tip) pairs: (0,o),(1,o),(o,pt),(o,o)
}

TEST_CASE("full subcategory") {
  auto C = chain_cat(2);
  auto sub = full_subcat(C, {C->obj_index("0"), C->obj_index("2")});
  CHECK(sub.cat->nobj() == 2);
  CHECK(sub.cat->nmor() == 3);
  sub.incl.validate();
  CHECK(is_fully_faithful(sub.incl));
}
