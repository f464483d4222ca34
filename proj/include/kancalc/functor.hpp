#pragma once

#include <functional>

#include "kancalc/fincat.hpp"

namespace kancalc {

/// A functor between explicit finite categories, stored as index maps.
/// Carries shared ownership of both endpoints so construction results
/// stay alive independently.
struct FinFunctor {
  CatPtr dom;
  CatPtr cod;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  int on_obj(int a) const { return obj_map[a]; }
  int on_mor(int m) const { return mor_map[m]; }

  void validate() const;  // throws on a broken functor law
  bool operator==(const FinFunctor& o) const;
};

FinFunctor identity_functor(CatPtr c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
FinFunctor constant_functor(CatPtr dom, CatPtr cod, int obj);
/// The opposite functor γ^o between opposite categories (see opposite()).
FinFunctor opposite_functor(const FinFunctor& f, CatPtr dom_op, CatPtr cod_op);

/// Natural transformation between parallel functors.
struct NatTransform {
  FinFunctor src;
  FinFunctor tgt;
  std::vector<int> components;  // per object of dom, a morphism of cod

  void validate() const;
};

/// All functors dom -> cod, in canonical order.
std::vector<FinFunctor> all_functors(CatPtr dom, CatPtr cod);
void for_each_functor(CatPtr dom, CatPtr cod, const std::function<bool(const FinFunctor&)>& fn);

/// All natural transformations F => G (componentwise enumeration with
/// naturality pruning), canonical order.
std::vector<std::vector<int>> all_nat_transforms(const FinFunctor& F, const FinFunctor& G);

bool is_full(const FinFunctor& f);
bool is_faithful(const FinFunctor& f);
bool is_fully_faithful(const FinFunctor& f);
bool is_essentially_surjective(const FinFunctor& f);
bool is_conservative(const FinFunctor& f);

/// On-the-nose isomorphism of categories, by exhaustive search over
/// invertible functors.
bool iso_check(CatPtr a, CatPtr b);
/// Equivalence of categories (fully faithful + essentially surjective
/// functor exists).
bool equivalence_check(CatPtr a, CatPtr b);

/// Left adjoint existence for f (used for the cofinality examples):
/// returns true iff every comma-fiber c \ dom has an initial object.
bool has_left_adjoint(const FinFunctor& f);

} // namespace kancalc
