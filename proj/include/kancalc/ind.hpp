#pragma once

#include "kancalc/filtered.hpp"

namespace kancalc {

/// A finite Ind presentation: a filtered index category together with a
/// diagram into the base. The index is diagram.dom, the base diagram.cod.
struct IndPresentation {
  FinFunctor diagram;

  CatPtr index() const { return diagram.dom; }
  CatPtr base() const { return diagram.cod; }
  void validate() const;  // throws PreconditionFailed when the index is not filtered
};

/// The hom set lim over J^o of colim over J' of Hom(i_j, i'_{j'}),
/// evaluated directly. Per object j of the source index, the colimit is a
/// quotient of the atoms (j', f : i_j -> i'_{j'}) by postcomposition with
/// the transition maps of b; an element of the hom set picks one class per
/// j, compatibly with precomposition along the transition maps of a.
struct IndHomSet {
  IndPresentation a, b;
  std::vector<std::vector<std::pair<int, int>>> atoms;  // per j: (j', mor of base)
  std::vector<std::vector<int>> class_of;               // per j, class per atom
  std::vector<int> nclasses;                            // per j
  std::vector<std::vector<int>> elems;                  // each: one class per j

  int atom_index(int j, int jp, int mor) const;
  /// Class at j of the atom (j', mor).
  int cls(int j, int jp, int mor) const;
};
IndHomSet ind_hom(const IndPresentation& a, const IndPresentation& b);

/// The identity element of ind_hom(a, a): at each j the class of id_{i_j}.
std::vector<int> ind_identity(const IndHomSet& aa);
/// Composite in ind_hom(a, c) of f in ab and g in bc, via representatives;
/// well-definedness is rechecked over all representatives and a
/// ValidationError thrown should it ever fail.
std::vector<int> ind_compose(const IndHomSet& bc, const std::vector<int>& g,
                             const IndHomSet& ab, const std::vector<int>& f,
                             const IndHomSet& ac);

/// colim over J of Y(i_j), computed pointwise: X(c) = colim_J Hom(c, i_j).
SetFunctor presheaf_of(const IndPresentation& a);

/// The canonical map ind_hom(a, b) -> Hom(presheaf_of a, presheaf_of b),
/// an explicit bijection onto hom_presheaves on every checked instance.
struct IndHomBijection {
  std::vector<SetNatMap> images;  // per element of hom.elems
  bool injective = false;
  bool surjective = false;        // onto hom_presheaves(presheaf_of a, presheaf_of b)
  bool bijective = false;
};
IndHomBijection ind_hom_bijection(const IndHomSet& hom);

/// Recognition per the elements criterion: X is a filtered colimit of
/// representables exactly when its category of elements is filtered; true
/// yields the canonical presentation (the elements projection), false the
/// coneless diagram found by the bounded sweep when one fits the budget.
struct IndRecognition {
  bool ok = false;
  ElementsCat elem;
  std::optional<IndPresentation> presentation;
  std::optional<FinFunctor> obstruction;
};
IndRecognition is_ind_object(const SetFunctor& x, long long budget = 1000000);

/// The split-idempotent presheaf of a projector: X(d) = {f : d -> c with
/// p after f = f}, acting by precomposition.
SetFunctor split_presheaf(CatPtr i, const Projector& p);

/// Certified identification of the compact Ind-objects with the Karoubi
/// closure: the functor (c, p) -> split presheaf is checked fully
/// faithful, and a bounded presheaf sweep checks that its essential image
/// is exactly the recognized compact objects. The terminal-object
/// comparison is a sharpened conjecture checked independently; mismatches
/// are reported, never reconciled.
struct KaroubiIdReport {
  KaroubiCat ka;
  std::vector<SetFunctor> images;  // split presheaf per object of ka
  bool fully_faithful = false;
  int value_bound = 0;             // per-object value-set bound of the sweep
  long long swept = 0;
  std::vector<SetFunctor> image_classes;  // iso-class reps found in the image
  bool image_matches_criterion = false;   // image == ind object and pt-compact
  std::optional<SetFunctor> criterion_mismatch;
  bool terminal_conjecture = false;  // image == elements closure has terminal
  std::optional<SetFunctor> terminal_mismatch;
};
KaroubiIdReport karoubi_identification(CatPtr i, int value_bound = 2,
                                       long long budget = 1000000);

/// The even/odd embeddings into the chain [n]: their strict fiber product
/// is empty, the lax one is not, and exactly one of the two embeddings is
/// cofinal, decided by the parity of the top element.
struct ProdDemoReport {
  int n = 0;
  bool strict_empty = false;
  bool lax_nonempty = false;
  bool even_cofinal = false;
  bool odd_cofinal = false;
};
ProdDemoReport pullback_failure_demo(int n);  // PreconditionFailed when n < 2

} // namespace kancalc
