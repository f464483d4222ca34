#pragma once

#include "kancalc/constructions.hpp"

namespace kancalc {

/// Finite-Set-valued functor. Covariant act[m] maps at[src] to at[tgt];
/// contravariant (presheaf) act[m] maps at[tgt] to at[src].
struct SetFunctor {
  CatPtr base;
  bool contravariant = false;
  std::vector<std::vector<std::string>> at;  // atoms per object
  std::vector<std::vector<int>> act;         // per morphism, a function as an index list

  int dom_obj(int m) const { return contravariant ? base->tgt(m) : base->src(m); }
  int cod_obj(int m) const { return contravariant ? base->src(m) : base->tgt(m); }
  int size_at(int obj) const { return static_cast<int>(at[obj].size()); }
  int apply(int m, int x) const { return act[m][x]; }

  void validate() const;
  bool operator==(const SetFunctor& o) const;
};

SetFunctor constant_set(CatPtr base, bool contravariant, std::vector<std::string> atoms);
SetFunctor yoneda_at(CatPtr c, int obj);    // the presheaf Y(obj) = Hom(-, obj)
SetFunctor coyoneda_at(CatPtr c, int obj);  // covariant Hom(obj, -)

/// Category of elements: IX for a presheaf, the dual I^⊥X for a covariant
/// functor. objs[k] = (base object, atom index).
struct ElementsCat {
  CatPtr cat;
  FinFunctor proj;
  std::vector<std::pair<int, int>> objs;
  std::vector<int> mor_base;                   // underlying base morphism per morphism
  std::vector<std::pair<int, int>> mor_atoms;  // source and target atom per morphism

  int obj_of(int base_obj, int atom) const;
  int mor_of(int base_mor, int src_atom, int tgt_atom) const;
};
ElementsCat elements(const SetFunctor& x);

/// π0 of the elements category, with the component decomposition exposed.
struct Pi0Set {
  std::vector<std::string> atoms;         // representative names, one per class
  std::vector<int> class_of;              // per elements object
  std::vector<std::vector<int>> classes;  // elements objects per class
};
Pi0Set colim_set(const SetFunctor& x);
/// Sections: compatible tuples, one atom index per base object.
std::vector<std::vector<int>> lim_set(const SetFunctor& x);

struct SetNatMap {
  SetFunctor src, tgt;
  std::vector<std::vector<int>> comp;  // per object, a function

  void validate() const;
  bool is_iso() const;
};
SetNatMap identity_map(const SetFunctor& x);
SetNatMap compose(const SetNatMap& g, const SetNatMap& f);
/// All natural maps x -> y between same-variance functors on one base.
std::vector<SetNatMap> hom_presheaves(const SetFunctor& x, const SetFunctor& y);

/// γ*Y: restriction along a functor (same variance).
SetFunctor pullback_along(const FinFunctor& g, const SetFunctor& y);

/// Kan extension along g (presheaves extend along g^o). `adj` is the unit
/// X -> g* kan_left(X) for the left version, the counit g* kan_right(X) -> X
/// for the right version.
struct KanResult {
  SetFunctor fun;
  SetNatMap adj;
};
KanResult kan_left(const FinFunctor& g, const SetFunctor& x);
KanResult kan_right(const FinFunctor& g, const SetFunctor& x);

struct CofinalReport {
  bool cofinal = false;
  int bad = -1;  // object of the codomain with a bad comma-fiber
};
CofinalReport check_cofinal(const FinFunctor& g);
CofinalReport check_final(const FinFunctor& g);
/// Full faithfulness of g* on functor categories, against each listed target.
bool check_localization_sample(const FinFunctor& g, const std::vector<CatPtr>& targets);

/// For a: kan_left(g)(x') -> x (presheaves), the induced functor on elements
/// ⟨i',x'⟩ ↦ ⟨g(i'), a†(x')⟩.
FinFunctor elements_map(const FinFunctor& g, const SetFunctor& xp, const KanResult& kan,
                        const SetNatMap& a);
struct CofinalIsoReport {
  bool a_iso = false;
  bool alpha_cofinal = false;
  bool agree = false;
};
CofinalIsoReport cofinal_iff_iso_check(const FinFunctor& g, const SetFunctor& xp,
                                       const KanResult& kan, const SetNatMap& a);

/// Certifies X ≅ colim of representables over its elements category by the
/// universal property against every presheaf with value sets ≤ size_bound.
bool yoneda_colimit_decomposition(const SetFunctor& x, int size_bound);

/// Enumerates all Set-valued functors on the base with value sets of size
/// ≤ max_size, in canonical order, until fn returns false.
void for_each_setfunctor(CatPtr base, bool contravariant, int max_size,
                         const std::function<bool(const SetFunctor&)>& fn);

} // namespace kancalc
