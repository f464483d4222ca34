#pragma once

#include "kancalc/enumerate.hpp"
#include "kancalc/setfun.hpp"

namespace kancalc {

/// Outcome of a filteredness decision. `witness` holds an identity cone
/// when one exists, `failing` a coneless diagram found by the level sweep.
struct FilterReport {
  CatPtr subject;
  bool exact_filtered = false;
  std::optional<int> level_checked;
  bool level_ok = false;
  std::optional<Cone> witness;
  std::optional<FinFunctor> failing;
};

/// The exact criterion: a cone on the identity diagram exists.
bool id_cone_filtered(CatPtr c);
/// The equivalent criterion: the Karoubi closure has a terminal object.
bool karoubi_terminal_filtered(CatPtr c);
/// Decides filteredness by the identity-cone criterion, cross-validated
/// against the Karoubi-terminal criterion; throws ValidationError should
/// the two ever disagree. For a finite category this settles filteredness
/// at every level beyond its own size: an identity cone restricts to a
/// cone on any diagram by composition.
bool is_filtered_exact(CatPtr c);

/// Shape families for the bounded sweep. Dimension <= 1 posets suffice;
/// the other families exist for cross-validation at tiny sizes.
enum class ShapeClass { Dim1Posets, AllPosets, AllCategories };

/// Bounded criterion: cones exist for every diagram in C from a shape with
/// fewer than n elements (for AllCategories: fewer than n morphisms).
/// `budget` caps the number of diagrams tried; throws BoundExceeded.
FilterReport is_filtered_at_level(CatPtr c, int n, long long budget = 1000000,
                                  ShapeClass shapes = ShapeClass::Dim1Posets);

struct CofinalSubcatReport {
  bool hypothesis = false;  // every c \ C' is nonempty
  int bad_obj = -1;         // an object with empty c \ C' otherwise
  bool sub_filtered = false;
  bool embedding_cofinal = false;
};
/// For filtered C and a full subcategory C' reachable from every object,
/// asserts the two conclusions independently. Conclusions are only
/// computed when the hypothesis holds.
CofinalSubcatReport check_cofinal_subcategory(CatPtr c, const std::vector<int>& objs);

struct ConLeReport {
  bool colim_is_point = false;
  bool elements_filtered = false;
  bool agree = false;
};
/// For a covariant X on a filtered index, the dual elements category is
/// filtered exactly when the colimit is a point. Throws PreconditionFailed
/// when the index is not filtered.
ConLeReport check_con_le(const SetFunctor& x);

/// The functor category Fun(J, C) materialized: objects are functors,
/// morphisms natural transformations, composition componentwise.
struct FunCat {
  CatPtr cat;
  std::vector<FinFunctor> objs;
  std::vector<std::vector<int>> mor_comps;  // per morphism, components
  FinFunctor constants;                     // C -> cat, the constant embedding

  int obj_of(const FinFunctor& f) const;
};
FunCat fun_cat(CatPtr j, CatPtr c, long long budget = 1000000);

struct ConeLeReport {
  bool fun_filtered = false;
  bool constants_cofinal = false;
  bool ok = false;
};
/// For filtered C, Fun(J, C) is filtered and the constant embedding is
/// cofinal. Throws PreconditionFailed when C is not filtered and
/// BoundExceeded when the functor category outgrows the budget.
ConeLeReport check_cone_le(CatPtr j, CatPtr c, long long budget = 1000000);

struct CommuteReport {
  bool i_filtered = false;
  int lhs = 0;  // |colim_I lim_J X|
  int rhs = 0;  // |lim_J colim_I X|
  bool bijective = false;
  std::optional<std::pair<int, int>> collision;  // lhs classes sharing an image
  std::optional<int> missed;                     // rhs element not hit
};
/// Canonical comparison colim_I lim_J X -> lim_J colim_I X for a covariant
/// X on the product; a bijection whenever the first factor is filtered, a
/// legitimate mismatch otherwise.
CommuteReport filt_commute_check(const ProductCat& pc, const SetFunctor& x);

struct CompactWitness {
  Poset shape;
  FinFunctor gamma;   // shape (as a category) -> base of x
  SetNatMap section;  // x -> extension of the point along gamma
  SetNatMap retraction;
};
/// Exhibits a presheaf as a retract of the extension of the point along a
/// diagram from a dimension <= 1 poset with fewer than size_bound
/// elements; first witness in canonical order, Absent at that bound.
std::optional<CompactWitness> compact_witness_search(const SetFunctor& x, int size_bound,
                                                     long long budget = 1000000);

} // namespace kancalc
