#pragma once

#include "kancalc/constructions.hpp"

namespace kancalc {

/// Finite partially ordered set with the full reflexive relation.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<char>> leq;  // leq[a][b] = 1 iff a <= b

  int n() const { return static_cast<int>(elements.size()); }
  bool le(int a, int b) const { return leq[a][b] != 0; }
  int index(const std::string& name) const;

  bool operator==(const Poset& o) const { return elements == o.elements && leq == o.leq; }

  /// Checks reflexivity, antisymmetry, transitivity.
  static Poset validated(std::vector<std::string> elements,
                         std::vector<std::vector<char>> leq);
  /// Hasse-style input: takes generating pairs, forms the reflexive
  /// transitive closure, rejects antisymmetry violations.
  static Poset from_generators(std::vector<std::string> elements,
                               const std::vector<std::pair<int, int>>& gens);
};

Poset chain_poset(int n);            // [n]
Poset discrete_poset(const std::vector<std::string>& names);
Poset v_poset();                     // V = {0,1}^<: o <= 0, o <= 1
Poset opposite(const Poset& j);

CatPtr as_category(const Poset& j);  // one morphism "(a<=b)" per strict pair
/// Inverse of as_category on thin skeletal categories.
std::optional<Poset> try_as_poset(CatPtr c);
bool poset_iso(const Poset& a, const Poset& b);

/// Functor into a thin category determined by its object map alone.
FinFunctor thin_functor(CatPtr dom, CatPtr cod, std::vector<int> obj_map);

/// Number of non-degenerate chains per length 0..max_len.
std::vector<long long> chain_count(const FinCat& c, int max_len);
int dimension(const Poset& j);       // -1 for the empty poset
std::vector<int> height_map(const Poset& j);

bool is_left_closed(const Poset& j, const std::vector<char>& members);
/// The lattice L(J) of left-closed subsets ordered by inclusion; element
/// k of the result is masks[k].
struct LeftClosedLattice {
  Poset lattice;
  std::vector<std::vector<char>> masks;
};
LeftClosedLattice left_closed_sets(const Poset& j);
/// Λ(S) = ∪_{s∈S} J/s, the least left-closed superset.
std::vector<char> lambda_closure(const Poset& j, const std::vector<char>& s);

struct GluingDatum {
  Poset j0, j1;
  std::vector<std::vector<char>> lambda;  // per element of j1, a left-closed subset of j0
};
struct GlueResult {
  Poset glued;
  std::vector<int> emb0, emb1;  // element index maps into glued
};
GlueResult glue(const GluingDatum& d);  // throws NonMonotoneLambda
/// Recovers the datum for a left-closed subset: λ = ε0† ∘ Y ∘ ε1.
GluingDatum split(const Poset& j, const std::vector<char>& left_closed);

/// J ≅ J_{<n} ⊔_λ J_n with n = dim J, J_n the top height fiber (discrete)
/// and λ(j) = J/'j.
GluingDatum height_decomposition(const Poset& j);

/// Disjoint union of categories with injections; names are prefixed
/// "<k>." when needed to stay unique.
struct CoproductCat {
  CatPtr cat;
  std::vector<FinFunctor> inj;
};
CoproductCat coproduct(const std::vector<CatPtr>& parts);

struct PushoutSquare {
  CatPtr corner;       // ⊔_{j∈J_n} λ(j)
  CatPtr cone_corner;  // ⊔_{j∈J_n} λ(j)^>
  CatPtr below;        // J_{<n}
  CatPtr total;        // J
  FinFunctor top;      // corner -> cone_corner
  FinFunctor left;     // corner -> below
  FinFunctor right;    // cone_corner -> total
  FinFunctor bottom;   // below -> total
};
PushoutSquare pushout_square(const Poset& j);
/// Certifies the square cocartesian against each target: functors out of
/// `total` biject with matching pairs out of `below` and `cone_corner`.
bool check_cocartesian(const PushoutSquare& sq, const std::vector<CatPtr>& targets);

struct DirectedReport {
  bool directed = false;
  std::pair<int, int> witness{-1, -1};  // a pair without an upper bound
  std::optional<int> greatest;
};
DirectedReport is_directed(const Poset& j);

} // namespace kancalc
