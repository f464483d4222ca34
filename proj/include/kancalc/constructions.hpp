#pragma once

#include "kancalc/functor.hpp"

namespace kancalc {

/// Opposite category. Object and morphism indices (and names) are kept
/// stable; only endpoints and the table are reversed.
CatPtr opposite(CatPtr c);

struct ProductCat {
  CatPtr cat;
  FinFunctor p0, p1;                          // projections
  std::vector<std::pair<int, int>> obj_pair;  // product object -> factor objects
  std::vector<std::pair<int, int>> mor_pair;

  int obj_of(int a0, int a1) const;
  int mor_of(int m0, int m1) const;
};
ProductCat product(CatPtr c0, CatPtr c1);

/// Comma category of F: A -> C, G: B -> C: objects ⟨a, b, α: F(a) -> G(b)⟩,
/// morphisms pairs ⟨u, v⟩ with G(v)∘α = α'∘F(u).
struct CommaCat {
  CatPtr cat;
  FinFunctor sigma;  // -> A
  FinFunctor tau;    // -> B
  std::vector<std::tuple<int, int, int>> objs;  // (a, b, α)
  std::vector<std::pair<int, int>> mor_pair;    // (u, v)

  int obj_of(int a, int b, int alpha) const;
};
CommaCat comma(const FinFunctor& F, const FinFunctor& G);

CommaCat left_comma(const FinFunctor& pi);   // C/I for π: C -> I
CommaCat right_comma(const FinFunctor& pi);  // I∖C
/// η: C -> C/I, c ↦ ⟨c, π(c), id⟩ (fully faithful right adjoint of σ).
FinFunctor comma_eta(const FinFunctor& pi, const CommaCat& cc);
CommaCat comma_fiber_left(const FinFunctor& pi, int i);   // C/i
CommaCat comma_fiber_right(const FinFunctor& pi, int i);  // i∖C

CommaCat lax_fiber_product(const FinFunctor& g0, const FinFunctor& g1);
/// Full subcategory of the lax fiber product on objects with α invertible.
CommaCat fiber_product(const FinFunctor& g0, const FinFunctor& g1);

/// Full subcategory spanned by the given objects (ascending order).
struct SubCat {
  CatPtr cat;
  FinFunctor incl;
  std::vector<int> obj_orig;  // per object of cat, the object of the ambient
  std::vector<int> mor_orig;
};
SubCat full_subcat(CatPtr c, std::vector<int> objs);

/// Connected components: classes sorted by least member.
std::vector<std::vector<int>> pi0(const FinCat& c);
bool is_connected(const FinCat& c);  // exactly one component (empty: false)

/// A cocone on E: legs E(i) -> vertex with leg(i') ∘ E(f) = leg(i).
struct Cone {
  FinFunctor diagram;
  int vertex = -1;
  std::vector<int> legs;  // per object of diagram.dom

  void validate() const;
};

struct ConeCat {
  CatPtr cat;               // object k = cones[k], morphisms named f:ck>ck'
  std::vector<Cone> cones;  // canonical enumeration order
};
ConeCat cone_category(const FinFunctor& E);
/// First cone in canonical (vertex, legs) order, if any.
std::optional<Cone> find_cone(const FinFunctor& E);
/// Enumerates cones in canonical order until fn returns false.
void for_each_cone(const FinFunctor& E, const std::function<bool(const Cone&)>& fn);
/// Universal (initial) cone, canonically least, if any.
std::optional<Cone> colimit(const FinFunctor& E);
/// Limit as the colimit of E^o: the returned cone lives over the opposite
/// diagram, so its legs are morphisms vertex -> E(i) of the original C.
std::optional<Cone> limit(const FinFunctor& E);

struct Projector {
  int carrier = -1;
  int endo = -1;
};

struct KaroubiCat {
  CatPtr cat;
  FinFunctor eps;                // C -> P(C), c ↦ ⟨c, id⟩
  std::vector<Projector> objs;   // per object of cat
  std::vector<int> underlying;   // per morphism of cat, the morphism of C

  int obj_of(int carrier, int endo) const;
};
KaroubiCat karoubi_closure(CatPtr c);
std::optional<int> image_of_projector(const FinCat& c, const Projector& p);
std::optional<Cone> find_id_cone(CatPtr c);

struct ConedCat {
  CatPtr cat;
  FinFunctor incl;  // the embedding ε: C -> C^> (or C^<)
  int tip = -1;     // the new terminal (or initial) object
};
ConedCat add_terminal(CatPtr c);
ConedCat add_initial(CatPtr c);
CatPtr join(CatPtr c0, CatPtr c1);
/// Left adjoint C0^> × C1^> -> (C0 × C1)^> of the o ↦ o×o embedding:
/// collapses every pair with an o component to the new cone point.
FinFunctor bicone_collapse(CatPtr c0, CatPtr c1);

} // namespace kancalc
