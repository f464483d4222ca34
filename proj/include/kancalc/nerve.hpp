#pragma once

#include "kancalc/poset.hpp"
#include "kancalc/setfun.hpp"

namespace kancalc {

/// The truncated simplex category: objects [0]..[n], morphisms all
/// monotone maps, recorded by their image tuples.
struct SimplexCat {
  CatPtr cat;
  int max_dim = 0;
  std::vector<std::vector<int>> images;  // per morphism, the images of 0..m

  int obj_of(int k) const { return k; }
  int mor_of(int m, int k, const std::vector<int>& g) const;
};
SimplexCat simplex_cat(int n);

/// A length-k chain: objs[0] -> ... -> objs[k] via mors[l]: objs[l] -> objs[l+1].
struct NerveChain {
  std::vector<int> objs;
  std::vector<int> mors;

  int length() const { return static_cast<int>(mors.size()); }
  bool degenerate(const FinCat& c) const;
  /// Composite objs[a] -> objs[b] in the ambient category.
  int composite(const FinCat& c, int a, int b) const;
};

struct TruncatedNerve {
  CatPtr cat;
  int max_dim = 0;
  SimplexCat simplex;
  SetFunctor presheaf;  // on simplex.cat; atoms are chain names
  std::vector<std::vector<NerveChain>> chains;

  int chain_index(int k, const NerveChain& ch) const;
  /// Restriction along a monotone map g: [m] -> [k] (as an index into chains[m]).
  int restricted(int k, int idx, const std::vector<int>& g) const;
};
TruncatedNerve nerve(CatPtr c, int max_dim);

/// The last-element functor out of the category of elements of the nerve.
struct XiResult {
  ElementsCat els;
  FinFunctor xi;  // els.cat -> C
};
XiResult xi(const TruncatedNerve& n);

/// The dimension-<=1 replacement poset V(C) with its two projections.
/// Points: (0,c) and (1,c) per object, (o,f) per morphism, with
/// (0,tgt f) <= (o,f) >= (1,src f). q sends (o,f) to tgt f, the 0-side
/// arrows to identities and the 1-side arrows to f; q_perp is the dual.
struct VReplacement {
  Poset vposet;
  CatPtr vcat;
  FinFunctor q;       // vcat -> C
  FinFunctor q_perp;  // vcat -> C^o
  std::vector<int> kind;     // per point: 0, 1, or 2 for the o-layer
  std::vector<int> payload;  // object for kinds 0/1, morphism for the o-layer
  std::vector<char> zero_part;  // mask: the 0-points and o-points

  int point_of(int k, int payload) const;
};
VReplacement v_replacement(CatPtr c);

/// V(C) and V(C^o) agree under the 0/1 swap, compatibly with q and q_perp.
bool v_swap_check(CatPtr c);

struct VLocReport {
  bool ok = false;
  long long pairs = 0;         // functor pairs checked
  int bad_f = -1, bad_g = -1;  // indices into all_functors(C, E) on failure
};
/// Certifies Hom(F,G) = lim over V(C) of Hom(F(q_perp v), G(q v)) for every
/// pair of functors C -> E, and full faithfulness of restriction along q.
VLocReport verify_v_localization(CatPtr c, CatPtr e);

struct VSquareReport {
  long long fun_count = 0;    // |Fun(C, E)|
  long long fiber_count = 0;  // pairs (H, s) with the zero-part restriction through p
  bool commutes = false;      // every restricted functor lands in the fiber
  bool necessity = false;     // image of q* contained in the fiber
  bool sufficiency = false;   // fiber contained in the image of q*
  bool cartesian = false;
  std::optional<FinFunctor> witness_outside;  // some H: V(C) -> E outside the image
};
VSquareReport verify_v_square(CatPtr c, CatPtr e);

/// Maps of truncated nerves biject with functors (truncation permitting).
bool check_nerve_fully_faithful(CatPtr c, CatPtr d, int trunc);

} // namespace kancalc
