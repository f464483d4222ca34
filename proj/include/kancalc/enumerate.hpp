#pragma once

#include "kancalc/poset.hpp"

namespace kancalc {

/// One representative per isomorphism class of posets on exactly n
/// elements (named e0, e1, ...), with the lexicographically least relation
/// matrix as the representative; output sorted by matrix.
std::vector<Poset> all_posets(int n);

/// Diagram shapes for the bounded filteredness sweep: all posets of
/// dimension <= 1 with at most max_elements elements, smallest first.
std::vector<Poset> dim1_shapes(int max_elements);

/// One representative per isomorphism class of categories with at most
/// max_obj objects and at most max_mor morphisms (identities included),
/// until fn returns false. Canonical order: object count ascending, then
/// the hom-size matrix, then the composition table; within a class the
/// representative groups morphisms into (source, target) blocks with
/// identities first in their diagonal block and has the lexicographically
/// least composition table over all relabelings.
void for_each_fincat(int max_obj, int max_mor, const std::function<bool(const CatPtr&)>& fn);

} // namespace kancalc
