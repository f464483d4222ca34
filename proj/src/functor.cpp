#include "kancalc/functor.hpp"

#include <algorithm>

namespace kancalc {

void FinFunctor::validate() const {
  const FinCat& C = *dom;
  const FinCat& D = *cod;
  if (static_cast<int>(obj_map.size()) != C.nobj() ||
      static_cast<int>(mor_map.size()) != C.nmor())
    throw Error(Error::Kind::ValidationError, "functor maps have wrong shape");
  for (int m = 0; m < C.nmor(); ++m) {
    int fm = mor_map[m];
    if (fm < 0 || fm >= D.nmor())
      throw Error(Error::Kind::ValidationError, "functor morphism image out of range");
    if (D.src(fm) != obj_map[C.src(m)] || D.tgt(fm) != obj_map[C.tgt(m)])
      throw Error(Error::Kind::ValidationError,
                  "functor breaks endpoints at '" + C.mors[m].name + "'");
  }
  for (int a = 0; a < C.nobj(); ++a)
    if (mor_map[C.idm[a]] != D.idm[obj_map[a]])
      throw Error(Error::Kind::ValidationError,
                  "functor breaks identity at '" + C.objects[a] + "'");
  for (int g = 0; g < C.nmor(); ++g)
    for (int f = 0; f < C.nmor(); ++f)
      if (C.composable(g, f) &&
          mor_map[C.compose(g, f)] != D.compose(mor_map[g], mor_map[f]))
        throw Error(Error::Kind::ValidationError,
                    "functor breaks composition on (" + C.mors[g].name + ", " +
                        C.mors[f].name + ")");
}

bool FinFunctor::operator==(const FinFunctor& o) const {
  return *dom == *o.dom && *cod == *o.cod && obj_map == o.obj_map && mor_map == o.mor_map;
}

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.dom = f.cod = c;
  f.obj_map.resize(c->nobj());
  f.mor_map.resize(c->nmor());
  for (int i = 0; i < c->nobj(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->nmor(); ++i) f.mor_map[i] = i;
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!(*f.cod == *g.dom))
    throw Error(Error::Kind::ValidationError, "functor composition endpoint mismatch");
  FinFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.obj_map.resize(f.obj_map.size());
  h.mor_map.resize(f.mor_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.mor_map.size(); ++i) h.mor_map[i] = g.mor_map[f.mor_map[i]];
  return h;
}

FinFunctor constant_functor(CatPtr dom, CatPtr cod, int obj) {
  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  f.obj_map.assign(dom->nobj(), obj);
  f.mor_map.assign(dom->nmor(), cod->idm[obj]);
  return f;
}

FinFunctor opposite_functor(const FinFunctor& f, CatPtr dom_op, CatPtr cod_op) {
  // opposite() keeps object indices and morphism indices stable, so the
  // same maps work; only the endpoints are reinterpreted.
  FinFunctor g;
  g.dom = dom_op;
  g.cod = cod_op;
  g.obj_map = f.obj_map;
  g.mor_map = f.mor_map;
  return g;
}

void NatTransform::validate() const {
  const FinCat& C = *src.dom;
  const FinCat& D = *src.cod;
  if (!(*src.dom == *tgt.dom) || !(*src.cod == *tgt.cod))
    throw Error(Error::Kind::ValidationError, "transformation between non-parallel functors");
  if (static_cast<int>(components.size()) != C.nobj())
    throw Error(Error::Kind::ValidationError, "component list has wrong length");
  for (int a = 0; a < C.nobj(); ++a) {
    int m = components[a];
    if (D.src(m) != src.obj_map[a] || D.tgt(m) != tgt.obj_map[a])
      throw Error(Error::Kind::ValidationError,
                  "component at '" + C.objects[a] + "' has wrong endpoints");
  }
  for (int f = 0; f < C.nmor(); ++f) {
    int a = C.src(f), b = C.tgt(f);
    if (D.compose(components[b], src.mor_map[f]) !=
        D.compose(tgt.mor_map[f], components[a]))
      throw Error(Error::Kind::ValidationError,
                  "naturality fails at '" + C.mors[f].name + "'");
  }
}

void for_each_functor(CatPtr dom, CatPtr cod,
                      const std::function<bool(const FinFunctor&)>& fn) {
  const FinCat& C = *dom;
  const FinCat& D = *cod;
  if (C.nobj() > 0 && D.nobj() == 0) return;
  std::vector<int> nonid;
  for (int m = 0; m < C.nmor(); ++m)
    if (!C.is_id(m)) nonid.push_back(m);

  FinFunctor F;
  F.dom = dom;
  F.cod = cod;
  F.obj_map.assign(C.nobj(), -1);
  F.mor_map.assign(C.nmor(), -1);
  bool stop = false;

  // assign morphism `nonid[k]` and check everything already determined
  std::function<void(size_t)> mor_rec = [&](size_t k) {
    if (stop) return;
    if (k == nonid.size()) {
      stop = !fn(F);
      return;
    }
    int m = nonid[k];
    for (int d : D.hom(F.obj_map[C.src(m)], F.obj_map[C.tgt(m)])) {
      F.mor_map[m] = d;
      bool ok = true;
      for (int g = 0; g < C.nmor() && ok; ++g) {
        if (F.mor_map[g] < 0) continue;
        if (C.composable(g, m)) {
          int c = C.compose(g, m);
          if (F.mor_map[c] >= 0 && F.mor_map[c] != D.compose(F.mor_map[g], F.mor_map[m]))
            ok = false;
        }
        if (ok && C.composable(m, g)) {
          int c = C.compose(m, g);
          if (F.mor_map[c] >= 0 && F.mor_map[c] != D.compose(F.mor_map[m], F.mor_map[g]))
            ok = false;
        }
      }
      if (ok) mor_rec(k + 1);
      F.mor_map[m] = -1;
      if (stop) return;
    }
  };

  std::function<void(int)> obj_rec = [&](int a) {
    if (stop) return;
    if (a == C.nobj()) {
      for (int i = 0; i < C.nobj(); ++i) F.mor_map[C.idm[i]] = D.idm[F.obj_map[i]];
      mor_rec(0);
      return;
    }
    for (int d = 0; d < D.nobj(); ++d) {
      F.obj_map[a] = d;
      obj_rec(a + 1);
      F.obj_map[a] = -1;
      if (stop) return;
    }
  };
  obj_rec(0);
}

std::vector<FinFunctor> all_functors(CatPtr dom, CatPtr cod) {
  std::vector<FinFunctor> out;
  for_each_functor(dom, cod, [&](const FinFunctor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> all_nat_transforms(const FinFunctor& F, const FinFunctor& G) {
  const FinCat& C = *F.dom;
  const FinCat& D = *F.cod;
  std::vector<std::vector<int>> out;
  std::vector<int> comp(C.nobj(), -1);
  std::function<void(int)> rec = [&](int a) {
    if (a == C.nobj()) {
      out.push_back(comp);
      return;
    }
    for (int m : D.hom(F.obj_map[a], G.obj_map[a])) {
      comp[a] = m;
      bool ok = true;
      for (int f = 0; f < C.nmor() && ok; ++f) {
        int s = C.src(f), t = C.tgt(f);
        if (comp[s] < 0 || comp[t] < 0) continue;
        if (D.compose(comp[t], F.mor_map[f]) != D.compose(G.mor_map[f], comp[s])) ok = false;
      }
      if (ok) rec(a + 1);
      comp[a] = -1;
    }
  };
  rec(0);
  return out;
}

bool is_full(const FinFunctor& F) {
  const FinCat& C = *F.dom;
  const FinCat& D = *F.cod;
  for (int a = 0; a < C.nobj(); ++a)
    for (int b = 0; b < C.nobj(); ++b)
      for (int d : D.hom(F.obj_map[a], F.obj_map[b])) {
        bool hit = false;
        for (int m : C.hom(a, b))
          if (F.mor_map[m] == d) { hit = true; break; }
        if (!hit) return false;
      }
  return true;
}

bool is_faithful(const FinFunctor& F) {
  const FinCat& C = *F.dom;
  for (int a = 0; a < C.nobj(); ++a)
    for (int b = 0; b < C.nobj(); ++b) {
      auto h = C.hom(a, b);
      for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i + 1; j < h.size(); ++j)
          if (F.mor_map[h[i]] == F.mor_map[h[j]]) return false;
    }
  return true;
}

bool is_fully_faithful(const FinFunctor& f) { return is_full(f) && is_faithful(f); }

static bool objects_isomorphic(const FinCat& D, int a, int b) {
  if (a == b) return true;
  for (int m : D.hom(a, b))
    if (D.inverse(m)) return true;
  return false;
}

bool is_essentially_surjective(const FinFunctor& F) {
  const FinCat& D = *F.cod;
  for (int d = 0; d < D.nobj(); ++d) {
    bool hit = false;
    for (int a : F.obj_map)
      if (objects_isomorphic(D, a, d)) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

bool is_conservative(const FinFunctor& F) {
  const FinCat& C = *F.dom;
  for (int m = 0; m < C.nmor(); ++m)
    if (F.cod->is_invertible(F.mor_map[m]) && !C.is_invertible(m)) return false;
  return true;
}

bool iso_check(CatPtr a, CatPtr b) {
  if (a->nobj() != b->nobj() || a->nmor() != b->nmor()) return false;
  bool found = false;
  for_each_functor(a, b, [&](const FinFunctor& f) {
    std::vector<char> oseen(b->nobj(), 0), mseen(b->nmor(), 0);
    for (int x : f.obj_map) oseen[x] = 1;
    for (int x : f.mor_map) mseen[x] = 1;
    if (std::count(oseen.begin(), oseen.end(), 1) == b->nobj() &&
        std::count(mseen.begin(), mseen.end(), 1) == b->nmor()) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool equivalence_check(CatPtr a, CatPtr b) {
  bool found = false;
  for_each_functor(a, b, [&](const FinFunctor& f) {
    if (is_fully_faithful(f) && is_essentially_surjective(f)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool has_left_adjoint(const FinFunctor& F) {
  const FinCat& C = *F.dom;
  const FinCat& D = *F.cod;
  for (int d = 0; d < D.nobj(); ++d) {
    // comma d \ F: objects (c, u: d -> F c); need an initial one
    std::vector<std::pair<int, int>> objs;
    for (int c = 0; c < C.nobj(); ++c)
      for (int u : D.hom(d, F.obj_map[c])) objs.emplace_back(c, u);
    bool have_initial = false;
    for (auto& [c0, u0] : objs) {
      bool initial = true;
      for (auto& [c, u] : objs) {
        int count = 0;
        for (int m : C.hom(c0, c))
          if (D.compose(F.mor_map[m], u0) == u) ++count;
        if (count != 1) { initial = false; break; }
      }
      if (initial) { have_initial = true; break; }
    }
    if (!have_initial) return false;
  }
  return true;
}

} // namespace kancalc
