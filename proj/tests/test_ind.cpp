#include "doctest.h"
#include "kancalc/ind.hpp"

using namespace kancalc;

namespace {

IndPresentation at_point(CatPtr i, int obj) {
  return {constant_functor(point_cat(), i, obj)};
}

IndPresentation over_self(CatPtr i) { return {identity_functor(i)}; }

} // namespace

TEST_CASE("ind hom over point indices is the plain hom set") {
  auto I = chain_cat(1);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) {
      auto h = ind_hom(at_point(I, a), at_point(I, b));
      CHECK(h.elems.size() == I->hom(a, b).size());
    }
  CHECK_THROWS_AS(ind_hom(at_point(I, 0), at_point(walking_idempotent(), 0)), Error);
  CHECK_THROWS_AS(
      (void)IndPresentation{constant_functor(discrete_cat({"a", "b"}), I, 0)}.validate(),
      Error);
}

TEST_CASE("the idempotent splits in ind hom over P") {
  auto P = walking_idempotent();
  auto A = at_point(P, 0);
  auto B = over_self(P);

  auto ab = ind_hom(A, B);
  REQUIRE(ab.elems.size() == 1);
  // id and p collapse to one class: the split hom set
  CHECK(ab.nclasses[0] == 1);
  CHECK(ab.cls(0, 0, P->mor_index("p")) == ab.elems[0][0]);

  auto ba = ind_hom(B, A);
  REQUIRE(ba.elems.size() == 1);
  CHECK(ba.nclasses[0] == 2);  // no transitions on the point side
  CHECK(ba.elems[0][0] == ba.cls(0, 0, P->mor_index("p")));

  // the round trip through the split object is the idempotent p itself,
  // while the round trip on the split side is the identity
  auto aa = ind_hom(A, A);
  auto bb = ind_hom(B, B);
  auto round = ind_compose(ba, ba.elems[0], ab, ab.elems[0], aa);
  CHECK(round[0] == aa.cls(0, 0, P->mor_index("p")));
  CHECK(round != ind_identity(aa));
  CHECK(ind_compose(ab, ab.elems[0], ba, ba.elems[0], bb) == ind_identity(bb));
}

TEST_CASE("a terminal index collapses to its top object") {
  auto I = chain_cat(1);
  auto B = over_self(I);  // index [1], terminal object 1
  for (int a = 0; a <= 1; ++a) {
    auto lhs = ind_hom(at_point(I, a), B);
    auto rhs = ind_hom(at_point(I, a), at_point(I, 1));
    CHECK(lhs.elems.size() == rhs.elems.size());
  }
}

TEST_CASE("ind hom composition is associative and unital") {
  auto P = walking_idempotent();
  std::vector<IndPresentation> corpus = {at_point(P, 0), over_self(P)};
  for (auto& a : corpus)
    for (auto& b : corpus) {
      auto ab = ind_hom(a, b);
      auto aa = ind_hom(a, a);
      auto bb = ind_hom(b, b);
      for (auto& f : ab.elems) {
        CHECK(ind_compose(ab, f, aa, ind_identity(aa), ab) == f);
        CHECK(ind_compose(bb, ind_identity(bb), ab, f, ab) == f);
      }
      for (auto& c : corpus)
        for (auto& d : corpus) {
          auto bc = ind_hom(b, c);
          auto cd = ind_hom(c, d);
          auto ac = ind_hom(a, c);
          auto bd = ind_hom(b, d);
          auto ad = ind_hom(a, d);
          for (auto& f : ab.elems)
            for (auto& g : bc.elems)
              for (auto& h : cd.elems) {
                auto left = ind_compose(cd, h, ac, ind_compose(bc, g, ab, f, ac), ad);
                auto right = ind_compose(bd, ind_compose(cd, h, bc, g, bd), ab, f, ad);
                CHECK(left == right);
              }
        }
    }
}

TEST_CASE("presheaf of a presentation") {
  auto P = walking_idempotent();
  auto y = presheaf_of(at_point(P, 0));
  CHECK(y.at[0].size() == 2);  // the representable
  bool iso = false;
  for (auto& nm : hom_presheaves(y, yoneda_at(P, 0)))
    if (nm.is_iso()) iso = true;
  CHECK(iso);

  auto split = presheaf_of(over_self(P));
  CHECK(split.at[0].size() == 1);  // the split image, not representable
  bool iso2 = false;
  for (auto& nm : hom_presheaves(split, yoneda_at(P, 0)))
    if (nm.is_iso()) iso2 = true;
  CHECK_FALSE(iso2);

  auto I = chain_cat(1);
  auto top = presheaf_of(over_self(I));  // terminal index: Y(1)
  bool iso3 = false;
  for (auto& nm : hom_presheaves(top, yoneda_at(I, 1)))
    if (nm.is_iso()) iso3 = true;
  CHECK(iso3);
}

TEST_CASE("ind hom maps bijectively onto presheaf homs") {
  auto P = walking_idempotent();
  auto I1 = chain_cat(1);
  std::vector<IndPresentation> corpus = {at_point(P, 0), over_self(P)};
  for (auto& a : corpus)
    for (auto& b : corpus) {
      auto r = ind_hom_bijection(ind_hom(a, b));
      CHECK(r.bijective);
    }
  std::vector<IndPresentation> corpus1 = {at_point(I1, 0), at_point(I1, 1),
                                          over_self(I1)};
  for (auto& a : corpus1)
    for (auto& b : corpus1) {
      auto r = ind_hom_bijection(ind_hom(a, b));
      CHECK(r.bijective);
    }
}

TEST_CASE("ind object recognition") {
  auto P = walking_idempotent();
  auto r = is_ind_object(yoneda_at(P, 0));
  CHECK(r.ok);
  REQUIRE(r.presentation.has_value());
  CHECK(r.presentation->index()->terminal_object().has_value());

  auto r2 = is_ind_object(constant_set(point_cat(), true, {"u", "w"}));
  CHECK_FALSE(r2.ok);
  REQUIRE(r2.obstruction.has_value());
  CHECK(r2.obstruction->dom->nobj() == 2);

  auto split = split_presheaf(P, {0, P->mor_index("p")});
  CHECK(is_ind_object(split).ok);

  CHECK_THROWS_AS(is_ind_object(constant_set(P, false, {"*"})), Error);

  // soundness on presheaf_of outputs
  for (auto& a : {at_point(P, 0), over_self(P)})
    CHECK(is_ind_object(presheaf_of(a)).ok);
}

TEST_CASE("karoubi identification") {
  auto pt = karoubi_identification(point_cat());
  CHECK(pt.fully_faithful);
  CHECK(pt.image_classes.size() == 1);
  CHECK(pt.image_matches_criterion);
  CHECK(pt.terminal_conjecture);

  auto P = walking_idempotent();
  auto kp = karoubi_identification(P);
  CHECK(kp.fully_faithful);
  CHECK(kp.image_classes.size() == 2);
  CHECK(kp.image_matches_criterion);
  CHECK(kp.terminal_conjecture);

  auto I = chain_cat(1);
  auto k1 = karoubi_identification(I);
  CHECK(k1.fully_faithful);
  CHECK(k1.image_classes.size() == 2);  // [1] is Karoubi closed: representables
  for (auto& cl : k1.image_classes) {
    bool rep = false;
    for (int o = 0; o <= 1; ++o)
      for (auto& nm : hom_presheaves(cl, yoneda_at(I, o)))
        if (nm.is_iso()) rep = true;
    CHECK(rep);
  }
  CHECK(k1.image_matches_criterion);
  CHECK(k1.terminal_conjecture);

  CHECK_THROWS_AS(karoubi_identification(P, 2, 3), Error);
}

TEST_CASE("even odd fiber product demo") {
  auto d3 = pullback_failure_demo(3);
  CHECK(d3.strict_empty);
  CHECK(d3.lax_nonempty);
  CHECK(d3.odd_cofinal);
  CHECK_FALSE(d3.even_cofinal);

  auto d4 = pullback_failure_demo(4);
  CHECK(d4.strict_empty);
  CHECK(d4.lax_nonempty);
  CHECK(d4.even_cofinal);
  CHECK_FALSE(d4.odd_cofinal);

  auto d2 = pullback_failure_demo(2);
  CHECK(d2.strict_empty);
  CHECK(d2.lax_nonempty);
  CHECK(d2.even_cofinal);

  CHECK_THROWS_AS(pullback_failure_demo(1), Error);
}
