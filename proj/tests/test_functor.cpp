#include "doctest.h"
#include "kancalc/functor.hpp"

using namespace kancalc;

namespace {

CatPtr iso_pair() {
  // two objects with a pair of mutually inverse arrows
  CatBuilder b;
  b.add_object("a");
  b.add_object("b");
  b.add_mor("f", "a", "b");
  b.add_mor("g", "b", "a");
  b.set_compose("g", "f", "id_a");
  b.set_compose("f", "g", "id_b");
  return b.build_ptr();
}

} // namespace

TEST_CASE("identity functor validates, constant functor validates") {
  auto C = chain_cat(2);
  identity_functor(C).validate();
  constant_functor(C, point_cat(), 0).validate();
  constant_functor(C, C, 1).validate();
}

TEST_CASE("functor counting: [1] -> [1]") {
  auto I = chain_cat(1);
  // monotone maps [1] -> [1]: 00, 01, 11
  CHECK(all_functors(I, I).size() == 3);
  for (auto& f : all_functors(I, I)) f.validate();
}

TEST_CASE("functor counting: point and empty") {
  CHECK(all_functors(empty_cat(), chain_cat(2)).size() == 1);
  CHECK(all_functors(point_cat(), empty_cat()).empty());
  CHECK(all_functors(point_cat(), chain_cat(2)).size() == 3);
}

TEST_CASE("functors P -> P") {
  auto P = walking_idempotent();
  // p can go to p or to id
  CHECK(all_functors(P, P).size() == 2);
}

TEST_CASE("functors [1] -> P") {
  auto I = chain_cat(1);
  auto P = walking_idempotent();
  // both endpoints go to x; the generator can go to id or p
  CHECK(all_functors(I, P).size() == 2);
}

TEST_CASE("natural transformations id_[1] => id_[1]") {
  auto I = chain_cat(1);
  auto F = identity_functor(I);
  auto ts = all_nat_transforms(F, F);
  CHECK(ts.size() == 1);  // only the identity transformation
  NatTransform n{F, F, ts[0]};
  n.validate();
}

TEST_CASE("natural transformations between constants in [1]") {
  auto I = chain_cat(1);
  auto c0 = constant_functor(point_cat(), I, I->obj_index("0"));
  auto c1 = constant_functor(point_cat(), I, I->obj_index("1"));
  CHECK(all_nat_transforms(c0, c1).size() == 1);
  CHECK(all_nat_transforms(c1, c0).empty());
}

TEST_CASE("fullness / faithfulness") {
  auto I = chain_cat(1);
  auto P = walking_idempotent();
  auto e = constant_functor(I, point_cat(), 0);
  CHECK_FALSE(is_full(e));  // hom(1,0) is empty upstairs
  CHECK(is_faithful(e));
  // Z/2 -> pt is full but not faithful
  CatBuilder z;
  z.add_object("x");
  z.add_mor("s", "x", "x");
  z.set_compose("s", "s", "id_x");
  auto Z2 = z.build_ptr();
  auto cz = constant_functor(Z2, point_cat(), 0);
  CHECK(is_full(cz));
  CHECK_FALSE(is_faithful(cz));
  auto id = identity_functor(P);
  CHECK(is_fully_faithful(id));
  CHECK(is_essentially_surjective(id));
  CHECK(is_conservative(id));
  // [1] -> P sending the generator to p is faithful but not full
  FinFunctor F;
  F.dom = I;
  F.cod = P;
  F.obj_map = {0, 0};
  F.mor_map.assign(I->nmor(), -1);
  F.mor_map[I->idm[0]] = P->idm[0];
  F.mor_map[I->idm[1]] = P->idm[0];
  F.mor_map[I->mor_index("(0<=1)")] = P->mor_index("p");
  F.validate();
  CHECK(is_faithful(F));
  CHECK_FALSE(is_full(F));
}

TEST_CASE("iso_check and equivalence_check") {
  auto I = chain_cat(1);
  auto P = walking_idempotent();
  CHECK(iso_check(I, I));
  CHECK_FALSE(iso_check(I, P));
  CHECK(equivalence_check(iso_pair(), point_cat()));
  CHECK(equivalence_check(point_cat(), iso_pair()));
  CHECK_FALSE(iso_check(iso_pair(), point_cat()));
  CHECK_FALSE(equivalence_check(I, point_cat()));
}

TEST_CASE("conservativity detects collapsed isomorphisms") {
  auto I = chain_cat(1);
  auto e = constant_functor(I, point_cat(), 0);
  CHECK_FALSE(is_conservative(e));  // (0<=1) maps to an identity
}

TEST_CASE("left adjoint existence") {
  auto I = chain_cat(1);
  // inclusion of {1} into [1] has a left adjoint (reflective: everything maps to 1)
  FinFunctor inc;
  inc.dom = point_cat();
  inc.cod = I;
  inc.obj_map = {I->obj_index("1")};
  inc.mor_map = {I->idm[I->obj_index("1")]};
  inc.validate();
  CHECK(has_left_adjoint(inc));
  // inclusion of {0} has no left adjoint (no arrow 1 -> 0)
  FinFunctor inc0;
  inc0.dom = point_cat();
  inc0.cod = I;
  inc0.obj_map = {I->obj_index("0")};
  inc0.mor_map = {I->idm[I->obj_index("0")]};
  inc0.validate();
  CHECK_FALSE(has_left_adjoint(inc0));
}

TEST_CASE("functor composition") {
  auto I = chain_cat(1);
  auto F = identity_functor(I);
  auto G = constant_functor(I, I, 0);
  auto H = compose(G, F);
  CHECK(H == G);
}
