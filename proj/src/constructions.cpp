#include "kancalc/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kancalc {

CatPtr opposite(CatPtr c) {
  FinCat o;
  o.objects = c->objects;
  o.mors = c->mors;
  for (auto& m : o.mors) std::swap(m.src, m.tgt);
  o.idm = c->idm;
  const int nm = c->nmor();
  o.table.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c->composable(f, g)) o.table[g][f] = c->table[f][g];
  return make_cat(FinCat::validated_unsorted(std::move(o.objects), std::move(o.mors),
                                             std::move(o.idm), std::move(o.table)));
}

int ProductCat::obj_of(int a0, int a1) const {
  return a0 * (p1.cod->nobj()) + a1;
}

int ProductCat::mor_of(int m0, int m1) const {
  return m0 * (p1.cod->nmor()) + m1;
}

ProductCat product(CatPtr c0, CatPtr c1) {
  ProductCat r;
  const FinCat& A = *c0;
  const FinCat& B = *c1;
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> idm;
  for (int a = 0; a < A.nobj(); ++a)
    for (int b = 0; b < B.nobj(); ++b) {
      objects.push_back("(" + A.objects[a] + "," + B.objects[b] + ")");
      r.obj_pair.emplace_back(a, b);
    }
  for (int m = 0; m < A.nmor(); ++m)
    for (int n = 0; n < B.nmor(); ++n) {
      mors.push_back(Mor{"(" + A.mors[m].name + "," + B.mors[n].name + ")",
                         A.src(m) * B.nobj() + B.src(n), A.tgt(m) * B.nobj() + B.tgt(n)});
      r.mor_pair.emplace_back(m, n);
    }
  for (int a = 0; a < A.nobj(); ++a)
    for (int b = 0; b < B.nobj(); ++b) idm.push_back(A.idm[a] * B.nmor() + B.idm[b]);
  auto comp = [&](int g, int f) {
    auto [g0, g1] = r.mor_pair[g];
    auto [f0, f1] = r.mor_pair[f];
    return A.compose(g0, f0) * B.nmor() + B.compose(g1, f1);
  };
  r.cat = make_cat(from_parts(std::move(objects), std::move(mors), std::move(idm), comp));
  r.p0.dom = r.p1.dom = r.cat;
  r.p0.cod = c0;
  r.p1.cod = c1;
  for (auto& [a, b] : r.obj_pair) {
    r.p0.obj_map.push_back(a);
    r.p1.obj_map.push_back(b);
  }
  for (auto& [m, n] : r.mor_pair) {
    r.p0.mor_map.push_back(m);
    r.p1.mor_map.push_back(n);
  }
  return r;
}

int CommaCat::obj_of(int a, int b, int alpha) const {
  for (size_t k = 0; k < objs.size(); ++k)
    if (objs[k] == std::make_tuple(a, b, alpha)) return static_cast<int>(k);
  return -1;
}

CommaCat comma(const FinFunctor& F, const FinFunctor& G) {
  if (!(*F.cod == *G.cod))
    throw Error(Error::Kind::PreconditionFailed, "comma legs have different codomains");
  const FinCat& A = *F.dom;
  const FinCat& B = *G.dom;
  const FinCat& C = *F.cod;
  CommaCat r;
  std::vector<std::string> objects;
  for (int a = 0; a < A.nobj(); ++a)
    for (int b = 0; b < B.nobj(); ++b)
      for (int al : C.hom(F.obj_map[a], G.obj_map[b])) {
        r.objs.emplace_back(a, b, al);
        objects.push_back("(" + A.objects[a] + "," + B.objects[b] + ";" + C.mors[al].name +
                          ")");
      }
  const int no = static_cast<int>(r.objs.size());
  std::vector<Mor> mors;
  std::vector<int> idm(no, -1);
  std::map<std::tuple<int, int, int, int>, int> midx;  // (src, tgt, u, v)
  for (int s = 0; s < no; ++s) {
    auto [a, b, al] = r.objs[s];
    for (int t = 0; t < no; ++t) {
      auto [a2, b2, al2] = r.objs[t];
      for (int u : A.hom(a, a2))
        for (int v : B.hom(b, b2)) {
          if (C.compose(al2, F.mor_map[u]) != C.compose(G.mor_map[v], al)) continue;
          int k = static_cast<int>(mors.size());
          mors.push_back(Mor{"(" + A.mors[u].name + "," + B.mors[v].name + "):" + objects[s] +
                                 ">" + objects[t],
                             s, t});
          r.mor_pair.emplace_back(u, v);
          midx[{s, t, u, v}] = k;
          if (s == t && u == A.idm[a] && v == B.idm[b]) idm[s] = k;
        }
    }
  }
  auto comp = [&](int g, int f) {
    auto [u2, v2] = r.mor_pair[g];
    auto [u, v] = r.mor_pair[f];
    return midx.at({mors[f].src, mors[g].tgt, A.compose(u2, u), B.compose(v2, v)});
  };
  r.cat = make_cat(from_parts(std::move(objects), mors, std::move(idm), comp));
  r.sigma.dom = r.tau.dom = r.cat;
  r.sigma.cod = F.dom;
  r.tau.cod = G.dom;
  for (auto& [a, b, al] : r.objs) {
    r.sigma.obj_map.push_back(a);
    r.tau.obj_map.push_back(b);
  }
  for (auto& [u, v] : r.mor_pair) {
    r.sigma.mor_map.push_back(u);
    r.tau.mor_map.push_back(v);
  }
  return r;
}

CommaCat left_comma(const FinFunctor& pi) { return comma(pi, identity_functor(pi.cod)); }

CommaCat right_comma(const FinFunctor& pi) { return comma(identity_functor(pi.cod), pi); }

FinFunctor comma_eta(const FinFunctor& pi, const CommaCat& cc) {
  const FinCat& C = *pi.dom;
  const FinCat& I = *pi.cod;
  FinFunctor eta;
  eta.dom = pi.dom;
  eta.cod = cc.cat;
  for (int c = 0; c < C.nobj(); ++c)
    eta.obj_map.push_back(cc.obj_of(c, pi.obj_map[c], I.idm[pi.obj_map[c]]));
  for (int f = 0; f < C.nmor(); ++f) {
    int s = eta.obj_map[C.src(f)], t = eta.obj_map[C.tgt(f)];
    int found = -1;
    for (int m = 0; m < cc.cat->nmor(); ++m)
      if (cc.cat->src(m) == s && cc.cat->tgt(m) == t &&
          cc.mor_pair[m] == std::make_pair(f, pi.mor_map[f])) {
        found = m;
        break;
      }
    eta.mor_map.push_back(found);
  }
  eta.validate();
  return eta;
}

CommaCat comma_fiber_left(const FinFunctor& pi, int i) {
  return comma(pi, constant_functor(point_cat(), pi.cod, i));
}

CommaCat comma_fiber_right(const FinFunctor& pi, int i) {
  return comma(constant_functor(point_cat(), pi.cod, i), pi);
}

CommaCat lax_fiber_product(const FinFunctor& g0, const FinFunctor& g1) {
  return comma(g0, g1);
}

CommaCat fiber_product(const FinFunctor& g0, const FinFunctor& g1) {
  CommaCat lax = comma(g0, g1);
  std::vector<int> keep;
  for (int k = 0; k < lax.cat->nobj(); ++k) {
    auto [a, b, al] = lax.objs[k];
    if (g0.cod->is_invertible(al)) keep.push_back(k);
  }
  SubCat sub = full_subcat(lax.cat, keep);
  CommaCat r;
  r.cat = sub.cat;
  r.sigma = compose(lax.sigma, sub.incl);
  r.tau = compose(lax.tau, sub.incl);
  for (int o : sub.obj_orig) r.objs.push_back(lax.objs[o]);
  for (int m : sub.mor_orig) r.mor_pair.push_back(lax.mor_pair[m]);
  return r;
}

SubCat full_subcat(CatPtr c, std::vector<int> objs) {
  std::sort(objs.begin(), objs.end());
  SubCat r;
  r.obj_orig = objs;
  const FinCat& C = *c;
  std::vector<int> oinv(C.nobj(), -1), minv(C.nmor(), -1);
  std::vector<std::string> objects;
  for (size_t k = 0; k < objs.size(); ++k) {
    oinv[objs[k]] = static_cast<int>(k);
    objects.push_back(C.objects[objs[k]]);
  }
  std::vector<Mor> mors;
  for (int m = 0; m < C.nmor(); ++m)
    if (oinv[C.src(m)] >= 0 && oinv[C.tgt(m)] >= 0) {
      minv[m] = static_cast<int>(mors.size());
      mors.push_back(Mor{C.mors[m].name, oinv[C.src(m)], oinv[C.tgt(m)]});
      r.mor_orig.push_back(m);
    }
  std::vector<int> idm;
  for (int o : objs) idm.push_back(minv[C.idm[o]]);
  auto comp = [&](int g, int f) { return minv[C.compose(r.mor_orig[g], r.mor_orig[f])]; };
  r.cat = make_cat(from_parts(std::move(objects), std::move(mors), std::move(idm), comp));
  r.incl.dom = r.cat;
  r.incl.cod = c;
  r.incl.obj_map = r.obj_orig;
  r.incl.mor_map = r.mor_orig;
  return r;
}

std::vector<std::vector<int>> pi0(const FinCat& c) {
  std::vector<int> parent(c.nobj());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < c.nmor(); ++m) {
    int a = find(c.src(m)), b = find(c.tgt(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> classes;
  for (int o = 0; o < c.nobj(); ++o) classes[find(o)].push_back(o);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  return out;
}

bool is_connected(const FinCat& c) { return pi0(c).size() == 1; }

void Cone::validate() const {
  const FinCat& I = *diagram.dom;
  const FinCat& C = *diagram.cod;
  if (vertex < 0 || vertex >= C.nobj() || static_cast<int>(legs.size()) != I.nobj())
    throw Error(Error::Kind::ValidationError, "cone has wrong shape");
  for (int i = 0; i < I.nobj(); ++i)
    if (C.src(legs[i]) != diagram.obj_map[i] || C.tgt(legs[i]) != vertex)
      throw Error(Error::Kind::ValidationError,
                  "cone leg at '" + I.objects[i] + "' has wrong endpoints");
  for (int f = 0; f < I.nmor(); ++f)
    if (C.compose(legs[I.tgt(f)], diagram.mor_map[f]) != legs[I.src(f)])
      throw Error(Error::Kind::ValidationError,
                  "cone legs do not commute with '" + I.mors[f].name + "'");
}

void for_each_cone(const FinFunctor& E, const std::function<bool(const Cone&)>& fn) {
  const FinCat& I = *E.dom;
  const FinCat& C = *E.cod;
  Cone cone;
  cone.diagram = E;
  cone.legs.assign(I.nobj(), -1);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == I.nobj()) {
      stop = !fn(cone);
      return;
    }
    for (int leg : C.hom(E.obj_map[i], cone.vertex)) {
      cone.legs[i] = leg;
      bool ok = true;
      for (int f = 0; f < I.nmor() && ok; ++f) {
        int s = I.src(f), t = I.tgt(f);
        if (cone.legs[s] < 0 || cone.legs[t] < 0) continue;
        if (C.compose(cone.legs[t], E.mor_map[f]) != cone.legs[s]) ok = false;
      }
      if (ok) rec(i + 1);
      cone.legs[i] = -1;
      if (stop) return;
    }
  };
  for (int e = 0; e < C.nobj() && !stop; ++e) {
    cone.vertex = e;
    rec(0);
  }
}

std::optional<Cone> find_cone(const FinFunctor& E) {
  std::optional<Cone> out;
  for_each_cone(E, [&](const Cone& c) {
    out = c;
    return false;
  });
  return out;
}

ConeCat cone_category(const FinFunctor& E) {
  ConeCat r;
  for_each_cone(E, [&](const Cone& c) {
    r.cones.push_back(c);
    return true;
  });
  const FinCat& I = *E.dom;
  const FinCat& C = *E.cod;
  const int no = static_cast<int>(r.cones.size());
  std::vector<std::string> objects;
  for (int k = 0; k < no; ++k) objects.push_back("c" + std::to_string(k));
  std::vector<Mor> mors;
  std::vector<int> idm(no, -1);
  std::vector<int> under;  // morphism of C per cone-cat morphism
  std::map<std::tuple<int, int, int>, int> midx;
  for (int s = 0; s < no; ++s)
    for (int t = 0; t < no; ++t)
      for (int f : C.hom(r.cones[s].vertex, r.cones[t].vertex)) {
        bool ok = true;
        for (int i = 0; i < I.nobj() && ok; ++i)
          if (C.compose(f, r.cones[s].legs[i]) != r.cones[t].legs[i]) ok = false;
        if (!ok) continue;
        int k = static_cast<int>(mors.size());
        mors.push_back(Mor{C.mors[f].name + ":" + objects[s] + ">" + objects[t], s, t});
        under.push_back(f);
        midx[{s, t, f}] = k;
        if (s == t && f == C.idm[r.cones[s].vertex]) idm[s] = k;
      }
  auto comp = [&](int g, int f) {
    return midx.at({mors[f].src, mors[g].tgt, C.compose(under[g], under[f])});
  };
  r.cat = make_cat(from_parts(std::move(objects), mors, std::move(idm), comp));
  return r;
}

std::optional<Cone> colimit(const FinFunctor& E) {
  ConeCat cc = cone_category(E);
  auto init = cc.cat->initial_object();
  if (!init) return std::nullopt;
  return cc.cones[*init];
}

std::optional<Cone> limit(const FinFunctor& E) {
  CatPtr iop = opposite(E.dom);
  CatPtr cop = opposite(E.cod);
  return colimit(opposite_functor(E, iop, cop));
}

int KaroubiCat::obj_of(int carrier, int endo) const {
  for (size_t k = 0; k < objs.size(); ++k)
    if (objs[k].carrier == carrier && objs[k].endo == endo) return static_cast<int>(k);
  return -1;
}

KaroubiCat karoubi_closure(CatPtr c) {
  const FinCat& C = *c;
  KaroubiCat r;
  std::vector<std::string> objects;
  for (int a = 0; a < C.nobj(); ++a)
    for (int p = 0; p < C.nmor(); ++p)
      if (C.src(p) == a && C.is_idempotent(p)) {
        r.objs.push_back(Projector{a, p});
        objects.push_back("(" + C.objects[a] + "," + C.mors[p].name + ")");
      }
  const int no = static_cast<int>(r.objs.size());
  std::vector<Mor> mors;
  std::vector<int> idm(no, -1);
  std::map<std::tuple<int, int, int>, int> midx;
  for (int s = 0; s < no; ++s)
    for (int t = 0; t < no; ++t)
      for (int f : C.hom(r.objs[s].carrier, r.objs[t].carrier)) {
        if (C.compose(r.objs[t].endo, f) != f || C.compose(f, r.objs[s].endo) != f)
          continue;
        int k = static_cast<int>(mors.size());
        mors.push_back(Mor{C.mors[f].name + ":" + objects[s] + ">" + objects[t], s, t});
        r.underlying.push_back(f);
        midx[{s, t, f}] = k;
        if (s == t && f == r.objs[s].endo) idm[s] = k;
      }
  auto comp = [&](int g, int f) {
    return midx.at({mors[f].src, mors[g].tgt, C.compose(r.underlying[g], r.underlying[f])});
  };
  r.cat = make_cat(from_parts(objects, mors, std::move(idm), comp));
  r.eps.dom = c;
  r.eps.cod = r.cat;
  for (int a = 0; a < C.nobj(); ++a) r.eps.obj_map.push_back(r.obj_of(a, C.idm[a]));
  for (int f = 0; f < C.nmor(); ++f)
    r.eps.mor_map.push_back(
        midx.at({r.eps.obj_map[C.src(f)], r.eps.obj_map[C.tgt(f)], f}));
  return r;
}

std::optional<int> image_of_projector(const FinCat& c, const Projector& p) {
  for (int i = 0; i < c.nobj(); ++i)
    for (int s : c.hom(i, p.carrier))
      for (int rr : c.hom(p.carrier, i))
        if (c.compose(s, rr) == p.endo && c.compose(rr, s) == c.idm[i]) return i;
  return std::nullopt;
}

std::optional<Cone> find_id_cone(CatPtr c) { return find_cone(identity_functor(c)); }

static ConedCat add_cone_point(CatPtr c, bool terminal) {
  const FinCat& C = *c;
  ConedCat r;
  std::string tip = fresh_name("o", C.objects);
  std::vector<std::string> objects = C.objects;
  objects.push_back(tip);
  const int tipo = C.nobj();
  std::vector<Mor> mors = C.mors;
  std::vector<std::string> used;
  for (auto& m : C.mors) used.push_back(m.name);
  // one arrow per original object, plus the tip identity
  std::vector<int> arrow(C.nobj());
  for (int a = 0; a < C.nobj(); ++a) {
    std::string nm = terminal ? "(" + C.objects[a] + "->" + tip + ")"
                              : "(" + tip + "->" + C.objects[a] + ")";
    nm = fresh_name(nm, used);
    used.push_back(nm);
    arrow[a] = static_cast<int>(mors.size());
    mors.push_back(terminal ? Mor{nm, a, tipo} : Mor{nm, tipo, a});
  }
  int tipid = static_cast<int>(mors.size());
  mors.push_back(Mor{fresh_name("id_" + tip, used), tipo, tipo});
  std::vector<int> idm = C.idm;
  idm.push_back(tipid);
  auto comp = [&](int g, int f) {
    if (g < C.nmor() && f < C.nmor()) return C.compose(g, f);
    if (g == tipid) return f;  // f ends at tip
    if (f == tipid) return g;
    if (terminal) {
      // g is an arrow to the tip; f is either in C or the tip identity
      return f < C.nmor() ? arrow[C.src(f)] : g;
    }
    // initial: f is an arrow out of the tip; g in C or tip identity
    return g < C.nmor() ? arrow[C.tgt(g)] : f;
  };
  r.cat = make_cat(from_parts(std::move(objects), std::move(mors), std::move(idm), comp));
  r.tip = tipo;
  r.incl.dom = c;
  r.incl.cod = r.cat;
  r.incl.obj_map.resize(C.nobj());
  r.incl.mor_map.resize(C.nmor());
  std::iota(r.incl.obj_map.begin(), r.incl.obj_map.end(), 0);
  std::iota(r.incl.mor_map.begin(), r.incl.mor_map.end(), 0);
  return r;
}

ConedCat add_terminal(CatPtr c) { return add_cone_point(c, true); }

ConedCat add_initial(CatPtr c) { return add_cone_point(c, false); }

CatPtr join(CatPtr c0, CatPtr c1) {
  ConedCat t0 = add_terminal(c0);
  ConedCat t1 = add_terminal(c1);
  ProductCat pr = product(t0.cat, t1.cat);
  std::vector<int> keep;
  for (int k = 0; k < pr.cat->nobj(); ++k)
    if (pr.obj_pair[k] != std::make_pair(t0.tip, t1.tip)) keep.push_back(k);
  return full_subcat(pr.cat, keep).cat;
}

FinFunctor bicone_collapse(CatPtr c0, CatPtr c1) {
  ConedCat t0 = add_terminal(c0);
  ConedCat t1 = add_terminal(c1);
  ProductCat dom = product(t0.cat, t1.cat);
  ProductCat base = product(c0, c1);
  ConedCat cod = add_terminal(base.cat);
  FinFunctor F;
  F.dom = dom.cat;
  F.cod = cod.cat;
  auto collapsed = [&](int k) {
    auto [a0, a1] = dom.obj_pair[k];
    return a0 == t0.tip || a1 == t1.tip;
  };
  for (int k = 0; k < dom.cat->nobj(); ++k) {
    if (collapsed(k)) {
      F.obj_map.push_back(cod.tip);
    } else {
      auto [a0, a1] = dom.obj_pair[k];
      F.obj_map.push_back(cod.incl.obj_map[base.obj_of(a0, a1)]);
    }
  }
  for (int m = 0; m < dom.cat->nmor(); ++m) {
    int s = dom.cat->src(m), t = dom.cat->tgt(m);
    if (collapsed(s)) {
      F.mor_map.push_back(cod.cat->idm[cod.tip]);
    } else if (collapsed(t)) {
      // the unique arrow from the image of s to the new cone point
      int so = F.obj_map[s];
      int hit = -1;
      for (int a : cod.cat->hom(so, cod.tip)) hit = a;
      F.mor_map.push_back(hit);
    } else {
      auto [m0, m1] = dom.mor_pair[m];
      F.mor_map.push_back(cod.incl.mor_map[base.mor_of(m0, m1)]);
    }
  }
  F.validate();
  return F;
}

} // namespace kancalc
