#pragma once

#include <map>

#include "kancalc/poset.hpp"
#include "kancalc/setfun.hpp"

namespace kancalc {

/// Strict Cat-valued diagram on a poset index J, placed contravariantly:
/// the transition for j <= j' is a functor at(j') -> at(j), and transitions
/// compose on the nose.
struct CatDiagram {
  Poset index;
  std::vector<CatPtr> at;
  std::map<std::pair<int, int>, FinFunctor> act;  // strict pairs j < j'

  /// Transition functor at(jp) -> at(j); the identity when j == jp.
  FinFunctor transition(int j, int jp) const;
  void validate() const;  // strict functoriality on all composable pairs
};

CatDiagram constant_diagram(const Poset& j, CatPtr c);
/// Discrete fibers from a presheaf on the index poset.
CatDiagram set_diagram(const Poset& j, const SetFunctor& x);
/// The single-arrow diagram: index [1], at(1) = dom γ, at(0) = cod γ.
CatDiagram gamma_diagram(const FinFunctor& gamma);

/// A Grothendieck construction with its bookkeeping. Objects are pairs
/// (index element, fiber object); a morphism over a base arrow j -> j'
/// carries a fiber-side morphism g in at(j).
struct GrothCat {
  CatPtr cat;
  CatPtr base;       // the index poset as a category
  FinFunctor proj;   // cat -> base
  std::vector<std::pair<int, int>> objs;      // (index element, fiber object)
  std::vector<int> mor_base;                  // base morphism per morphism
  std::vector<int> mor_g;                     // fiber-side morphism per morphism

  int obj_of(int j, int c) const;
  int mor_of(int base_mor, int g, int src_obj, int tgt_obj) const;
};
/// Arrow version: g: c -> C(f)(c').
GrothCat groth_arrow(const CatDiagram& d);
/// Co-lax version: g: C(f)(c') -> c.
GrothCat groth_colax(const CatDiagram& d);

/// A section: a fiber object per index element and a structure morphism per
/// strict pair, functorial under composition of base arrows.
struct Section {
  std::vector<int> obj;
  std::map<std::pair<int, int>, int> g;
};

struct SectionCat {
  CatPtr total;  // the Grothendieck construction sectioned
  CatPtr base;
  CatPtr cat;    // the category of sections
  std::vector<Section> sections;
  std::vector<std::vector<int>> mor_comps;  // per morphism of cat, components

  int section_index(const Section& s) const;
};
/// Lax limit: sections of the arrow construction.
SectionCat lax_limit(const CatDiagram& d);
/// Co-lax limit: contravariant sections of the co-lax construction.
SectionCat colax_limit(const CatDiagram& d);

/// Twisted arrows category: objects are the morphisms of I; a morphism
/// f0 -> f1 is a pair (down, up) with f0 = up∘f1∘down. Built directly and
/// as the elements category of the Hom pairing on I × I^o; construction
/// verifies that the two agree via an explicit isomorphism.
struct TwistedArrows {
  CatPtr cat;
  ElementsCat els;   // elements of the Hom pairing
  FinFunctor iso;    // cat -> els.cat, bijective
  std::vector<int> obj_mor;                   // per object, a morphism of I
  std::vector<std::pair<int, int>> mor_pair;  // (down, up)

  int obj_of(int mor_of_i) const;
};
TwistedArrows twisted_arrows(CatPtr i);

/// tw(s) of a co-lax-limit section: tw(J) -> the arrow construction,
/// f: j -> j' ↦ ⟨j, C(f)(s(j'))⟩; a twisted-arrow map (down, up) goes to the
/// morphism over down whose fiber part is the transition image of the
/// structure map at up. (The structure maps of a lax section point the wrong
/// way to make this a functor; co-lax sections are the ones with a Yoneda
/// presheaf, matching the co-lax limits used for the filteredness results.)
FinFunctor tw_section(const CatDiagram& d, const GrothCat& arrow,
                      const TwistedArrows& tw, const Section& s);

/// Relative Yoneda presheaf of a co-lax-limit section, computed as the left
/// Kan extension of the point along tw(s), with the component structure
/// kept: atoms at y are connected classes of nodes (tw object a,
/// u: y -> tw(s)(a)). pointwise_hom_ok certifies the Hom identification:
/// the restriction to every fiber is naturally isomorphic to the Yoneda
/// presheaf of s(j), so the atoms at ⟨j,c⟩ biject with Hom(c, s(j)).
struct RelYonedaResult {
  SetFunctor fun;   // presheaf on the arrow construction
  FinFunctor tw_s;  // tw(s)
  std::vector<std::map<std::pair<int, int>, int>> node_of;  // per object: (a, u) -> node
  std::vector<std::vector<int>> class_of;                   // per object: node -> atom
  bool pointwise_hom_ok = false;
};
RelYonedaResult relative_yoneda(const CatDiagram& d, const GrothCat& arrow,
                                const TwistedArrows& tw, const Section& s);

/// Set-valued degeneration: both Grothendieck constructions agree with the
/// elements category, and both limits are discrete with object tuples equal
/// to lim_set, via explicit isomorphisms.
bool set_degeneration_check(const Poset& j, const SetFunctor& x);

struct Dim1Report {
  bool fibers_ok = false;
  int bad_fiber = -1;
  bool filtered = false;  // the co-lax limit admits an identity cone
};
/// Throws PreconditionFailed unless every fiber admits an identity cone.
Dim1Report check_dim1_le(const CatDiagram& d);

struct LaxIndReport {
  bool ok = false;
  int sections = 0;
  long long pairs = 0;
  int bad_s = -1, bad_t = -1;
};
/// Full faithfulness of the relative Yoneda functor: for every pair of
/// co-lax-limit sections, morphisms in the co-lax limit biject with natural
/// maps between the images, via the explicit induced map.
LaxIndReport check_lax_ind_shadow(const CatDiagram& d);

struct LaxProductReport {
  bool applicable = false;  // both elements categories admit identity cones
  int alphas = 0;           // triples checked
  int bad_alpha = -1;
  bool ok = false;
};
/// For presheaves x0, x1 over the legs g0, g1 with filtered elements, every
/// triple ⟨x0, x1, α⟩ (α between the extensions) induces a presheaf on the
/// lax fiber product whose elements category is again filtered.
LaxProductReport check_lax_product_shadow(const FinFunctor& g0, const FinFunctor& g1,
                                          const SetFunctor& x0, const SetFunctor& x1);

} // namespace kancalc
