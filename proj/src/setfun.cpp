#include "kancalc/setfun.hpp"

#include <algorithm>
#include <map>

namespace kancalc {

void SetFunctor::validate() const {
  if (!base) throw Error(Error::Kind::ValidationError, "set functor without a base");
  if (static_cast<int>(at.size()) != base->nobj() ||
      static_cast<int>(act.size()) != base->nmor())
    throw Error(Error::Kind::ValidationError, "set functor size mismatch");
  for (int m = 0; m < base->nmor(); ++m) {
    int d = dom_obj(m), c = cod_obj(m);
    if (static_cast<int>(act[m].size()) != size_at(d))
      throw Error(Error::Kind::ValidationError,
                  "action of " + base->mors[m].name + " has the wrong domain");
    for (int v : act[m])
      if (v < 0 || v >= size_at(c))
        throw Error(Error::Kind::ValidationError,
                    "action of " + base->mors[m].name + " lands out of range");
  }
  for (int o = 0; o < base->nobj(); ++o)
    for (int e = 0; e < size_at(o); ++e)
      if (act[base->idm[o]][e] != e)
        throw Error(Error::Kind::IdentityViolation,
                    "identity of " + base->objects[o] + " does not act trivially");
  for (int g = 0; g < base->nmor(); ++g)
    for (int f = 0; f < base->nmor(); ++f) {
      if (!base->composable(g, f)) continue;
      int h = base->compose(g, f);
      int n = size_at(contravariant ? base->tgt(g) : base->src(f));
      for (int e = 0; e < n; ++e) {
        int lhs = contravariant ? act[f][act[g][e]] : act[g][act[f][e]];
        if (lhs != act[h][e])
          throw Error(Error::Kind::AssociativityViolation,
                      "action is not functorial on " + base->mors[g].name + " o " +
                          base->mors[f].name);
      }
    }
}

bool SetFunctor::operator==(const SetFunctor& o) const {
  return *base == *o.base && contravariant == o.contravariant && at == o.at && act == o.act;
}

SetFunctor constant_set(CatPtr base, bool contravariant, std::vector<std::string> atoms) {
  SetFunctor x;
  x.base = base;
  x.contravariant = contravariant;
  x.at.assign(base->nobj(), atoms);
  x.act.resize(base->nmor());
  std::vector<int> id(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) id[i] = static_cast<int>(i);
  for (auto& a : x.act) a = id;
  x.validate();
  return x;
}

namespace {

// Hom-lists per object, plus position lookup inside them.
struct HomFamily {
  std::vector<std::vector<int>> homs;  // per object, morphism indices

  int pos(int obj, int m) const {
    auto& h = homs[obj];
    auto it = std::find(h.begin(), h.end(), m);
    return static_cast<int>(it - h.begin());
  }
};

SetFunctor representable(CatPtr c, int obj, bool contravariant) {
  SetFunctor x;
  x.base = c;
  x.contravariant = contravariant;
  HomFamily fam;
  fam.homs.resize(c->nobj());
  for (int o = 0; o < c->nobj(); ++o)
    fam.homs[o] = contravariant ? c->hom(o, obj) : c->hom(obj, o);
  x.at.resize(c->nobj());
  for (int o = 0; o < c->nobj(); ++o)
    for (int m : fam.homs[o]) x.at[o].push_back(c->mors[m].name);
  x.act.resize(c->nmor());
  for (int f = 0; f < c->nmor(); ++f) {
    int d = x.dom_obj(f), cod = x.cod_obj(f);
    for (int g : fam.homs[d]) {
      int comp = contravariant ? c->compose(g, f) : c->compose(f, g);
      x.act[f].push_back(fam.pos(cod, comp));
    }
  }
  x.validate();
  return x;
}

} // namespace

SetFunctor yoneda_at(CatPtr c, int obj) { return representable(c, obj, true); }
SetFunctor coyoneda_at(CatPtr c, int obj) { return representable(c, obj, false); }

int ElementsCat::obj_of(int base_obj, int atom) const {
  for (size_t k = 0; k < objs.size(); ++k)
    if (objs[k] == std::make_pair(base_obj, atom)) return static_cast<int>(k);
  return -1;
}

int ElementsCat::mor_of(int base_mor, int src_atom, int tgt_atom) const {
  for (size_t k = 0; k < mor_base.size(); ++k)
    if (mor_base[k] == base_mor && mor_atoms[k] == std::make_pair(src_atom, tgt_atom))
      return static_cast<int>(k);
  return -1;
}

ElementsCat elements(const SetFunctor& x) {
  x.validate();
  const FinCat& b = *x.base;
  ElementsCat ec;
  std::vector<std::string> objects;
  std::map<std::pair<int, int>, int> oidx;
  for (int o = 0; o < b.nobj(); ++o)
    for (int e = 0; e < x.size_at(o); ++e) {
      oidx[{o, e}] = static_cast<int>(ec.objs.size());
      ec.objs.emplace_back(o, e);
      objects.push_back("(" + b.objects[o] + "," + x.at[o][e] + ")");
    }
  // A morphism over f is determined by the atom on the acted-on end.
  std::vector<Mor> mors;
  std::map<std::pair<int, int>, int> midx;  // (base mor, determining atom)
  for (int f = 0; f < b.nmor(); ++f) {
    int n = x.size_at(x.dom_obj(f));
    for (int e = 0; e < n; ++e) {
      int sa = x.contravariant ? x.apply(f, e) : e;
      int ta = x.contravariant ? e : x.apply(f, e);
      midx[{f, e}] = static_cast<int>(mors.size());
      ec.mor_base.push_back(f);
      ec.mor_atoms.emplace_back(sa, ta);
      mors.push_back({"(" + b.mors[f].name + ";" + x.at[b.src(f)][sa] + ">" +
                          x.at[b.tgt(f)][ta] + ")",
                      oidx.at({b.src(f), sa}), oidx.at({b.tgt(f), ta})});
    }
  }
  std::vector<int> idm(ec.objs.size());
  for (auto& [key, k] : midx)
    if (b.is_id(key.first)) idm[mors[k].src] = k;
  auto mor_base = ec.mor_base;
  auto mor_atoms = ec.mor_atoms;
  bool contra = x.contravariant;
  ec.cat = make_cat(from_parts(
      std::move(objects), mors, std::move(idm),
      [&b, &midx, mor_base, mor_atoms, contra](int g, int f) {
        int h = b.compose(mor_base[g], mor_base[f]);
        int det = contra ? mor_atoms[g].second : mor_atoms[f].first;
        return midx.at({h, det});
      }));
  ec.proj.dom = ec.cat;
  ec.proj.cod = x.base;
  for (auto& [o, e] : ec.objs) {
    ec.proj.obj_map.push_back(o);
    (void)e;
  }
  ec.proj.mor_map = ec.mor_base;
  ec.proj.validate();
  return ec;
}

Pi0Set colim_set(const SetFunctor& x) {
  auto ec = elements(x);
  auto comps = pi0(*ec.cat);
  Pi0Set out;
  out.class_of.assign(ec.cat->nobj(), -1);
  for (auto& cls : comps) {
    int k = static_cast<int>(out.atoms.size());
    out.atoms.push_back(ec.cat->objects[cls.front()]);
    for (int o : cls) out.class_of[o] = k;
    out.classes.push_back(cls);
  }
  return out;
}

std::vector<std::vector<int>> lim_set(const SetFunctor& x) {
  x.validate();
  const FinCat& b = *x.base;
  std::vector<std::vector<int>> out;
  std::vector<int> pick(b.nobj(), -1);
  std::function<void(int)> rec = [&](int o) {
    if (o == b.nobj()) {
      out.push_back(pick);
      return;
    }
    for (int e = 0; e < x.size_at(o); ++e) {
      pick[o] = e;
      bool ok = true;
      for (int f = 0; f < b.nmor() && ok; ++f) {
        int d = x.dom_obj(f), c = x.cod_obj(f);
        if (d > o || c > o) continue;
        if (x.apply(f, pick[d]) != pick[c]) ok = false;
      }
      if (ok) rec(o + 1);
    }
    pick[o] = -1;
  };
  rec(0);
  return out;
}

void SetNatMap::validate() const {
  src.validate();
  tgt.validate();
  if (src.contravariant != tgt.contravariant || !(*src.base == *tgt.base))
    throw Error(Error::Kind::VarianceMismatch, "natural map endpoints disagree");
  const FinCat& b = *src.base;
  if (static_cast<int>(comp.size()) != b.nobj())
    throw Error(Error::Kind::ValidationError, "natural map component count mismatch");
  for (int o = 0; o < b.nobj(); ++o) {
    if (static_cast<int>(comp[o].size()) != src.size_at(o))
      throw Error(Error::Kind::ValidationError, "component at " + b.objects[o] + " mismatched");
    for (int v : comp[o])
      if (v < 0 || v >= tgt.size_at(o))
        throw Error(Error::Kind::ValidationError,
                    "component at " + b.objects[o] + " out of range");
  }
  for (int f = 0; f < b.nmor(); ++f) {
    int d = src.dom_obj(f), c = src.cod_obj(f);
    for (int e = 0; e < src.size_at(d); ++e)
      if (comp[c][src.apply(f, e)] != tgt.apply(f, comp[d][e]))
        throw Error(Error::Kind::ValidationError,
                    "naturality fails at " + b.mors[f].name);
  }
}

bool SetNatMap::is_iso() const {
  for (size_t o = 0; o < comp.size(); ++o) {
    if (static_cast<int>(comp[o].size()) != tgt.size_at(static_cast<int>(o))) return false;
    std::vector<char> seen(comp[o].size(), 0);
    for (int v : comp[o]) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

SetNatMap identity_map(const SetFunctor& x) {
  SetNatMap m;
  m.src = m.tgt = x;
  m.comp.resize(x.at.size());
  for (size_t o = 0; o < x.at.size(); ++o)
    for (size_t e = 0; e < x.at[o].size(); ++e) m.comp[o].push_back(static_cast<int>(e));
  m.validate();
  return m;
}

SetNatMap compose(const SetNatMap& g, const SetNatMap& f) {
  if (!(f.tgt == g.src))
    throw Error(Error::Kind::PreconditionFailed, "natural maps are not composable");
  SetNatMap m;
  m.src = f.src;
  m.tgt = g.tgt;
  m.comp.resize(f.comp.size());
  for (size_t o = 0; o < f.comp.size(); ++o)
    for (int v : f.comp[o]) m.comp[o].push_back(g.comp[o][v]);
  m.validate();
  return m;
}

std::vector<SetNatMap> hom_presheaves(const SetFunctor& x, const SetFunctor& y) {
  if (x.contravariant != y.contravariant || !(*x.base == *y.base))
    throw Error(Error::Kind::VarianceMismatch, "hom of mismatched set functors");
  const FinCat& b = *x.base;
  std::vector<SetNatMap> out;
  std::vector<std::vector<int>> comp(b.nobj());
  std::function<void(int)> rec = [&](int o) {
    if (o == b.nobj()) {
      SetNatMap m;
      m.src = x;
      m.tgt = y;
      m.comp = comp;
      out.push_back(std::move(m));
      return;
    }
    int nx = x.size_at(o), ny = y.size_at(o);
    if (nx == 0) {
      comp[o] = {};
      bool ok = true;
      for (int f = 0; f < b.nmor() && ok; ++f) {
        int d = x.dom_obj(f), c = x.cod_obj(f);
        if (d > o || c > o) continue;
        for (size_t e = 0; e < comp[d].size(); ++e)
          if (comp[c][x.apply(f, static_cast<int>(e))] !=
              y.apply(f, comp[d][e])) {
            ok = false;
            break;
          }
      }
      if (ok) rec(o + 1);
      return;
    }
    if (ny == 0) return;  // no function from a nonempty set
    std::vector<int> v(nx, 0);
    while (true) {
      comp[o] = v;
      bool ok = true;
      for (int f = 0; f < b.nmor() && ok; ++f) {
        int d = x.dom_obj(f), c = x.cod_obj(f);
        if (d > o || c > o) continue;
        for (size_t e = 0; e < comp[d].size(); ++e)
          if (comp[c][x.apply(f, static_cast<int>(e))] !=
              y.apply(f, comp[d][e])) {
            ok = false;
            break;
          }
      }
      if (ok) rec(o + 1);
      int k = nx - 1;
      while (k >= 0 && v[k] == ny - 1) v[k--] = 0;
      if (k < 0) break;
      ++v[k];
    }
    comp[o].clear();
  };
  rec(0);
  return out;
}

SetFunctor pullback_along(const FinFunctor& g, const SetFunctor& y) {
  if (!(*g.cod == *y.base))
    throw Error(Error::Kind::PreconditionFailed, "restriction base mismatch");
  SetFunctor x;
  x.base = g.dom;
  x.contravariant = y.contravariant;
  for (int o = 0; o < g.dom->nobj(); ++o) x.at.push_back(y.at[g.on_obj(o)]);
  for (int m = 0; m < g.dom->nmor(); ++m) x.act.push_back(y.act[g.on_mor(m)]);
  x.validate();
  return x;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the least index as representative
    parent[b] = a;
  }
};

// Left Kan extension of a covariant X along g, pointwise as π0 of the
// fibered elements: nodes (i, u: g(i) -> i', x).
KanResult kan_left_cov(const FinFunctor& g, const SetFunctor& x) {
  const FinCat& I = *g.dom;
  const FinCat& J = *g.cod;
  SetFunctor lan;
  lan.base = g.cod;
  lan.at.resize(J.nobj());
  lan.act.resize(J.nmor());

  struct Fiber {
    std::vector<std::tuple<int, int, int>> nodes;  // (i, u, x)
    std::map<std::tuple<int, int, int>, int> idx;
    std::vector<int> class_of;  // node -> atom of lan
  };
  std::vector<Fiber> fib(J.nobj());
  for (int jp = 0; jp < J.nobj(); ++jp) {
    Fiber& F = fib[jp];
    for (int i = 0; i < I.nobj(); ++i)
      for (int u : J.hom(g.on_obj(i), jp))
        for (int e = 0; e < x.size_at(i); ++e) {
          F.idx[{i, u, e}] = static_cast<int>(F.nodes.size());
          F.nodes.emplace_back(i, u, e);
        }
    UnionFind uf(static_cast<int>(F.nodes.size()));
    for (int f = 0; f < I.nmor(); ++f) {
      int i = I.src(f), j = I.tgt(f);
      for (int v : J.hom(g.on_obj(j), jp)) {
        int u = J.compose(v, g.on_mor(f));
        for (int e = 0; e < x.size_at(i); ++e)
          uf.unite(F.idx.at({i, u, e}), F.idx.at({j, v, x.apply(f, e)}));
      }
    }
    F.class_of.assign(F.nodes.size(), -1);
    for (size_t n = 0; n < F.nodes.size(); ++n) {
      int r = uf.find(static_cast<int>(n));
      if (F.class_of[r] < 0) {
        F.class_of[r] = static_cast<int>(lan.at[jp].size());
        auto [i, u, e] = F.nodes[r];
        lan.at[jp].push_back("(" + I.objects[i] + ";" + J.mors[u].name + ";" +
                             x.at[i][e] + ")");
      }
      F.class_of[n] = F.class_of[r];
    }
  }
  for (int v = 0; v < J.nmor(); ++v) {
    const Fiber& F = fib[J.src(v)];
    const Fiber& G = fib[J.tgt(v)];
    std::vector<int> rep(lan.at[J.src(v)].size(), -1);
    for (size_t n = 0; n < F.nodes.size(); ++n)
      if (rep[F.class_of[n]] < 0) rep[F.class_of[n]] = static_cast<int>(n);
    for (int r : rep) {
      auto [i, u, e] = F.nodes[r];
      lan.act[v].push_back(G.class_of[G.idx.at({i, J.compose(v, u), e})]);
    }
  }
  lan.validate();

  KanResult out;
  out.fun = lan;
  out.adj.src = x;
  out.adj.tgt = pullback_along(g, lan);
  out.adj.comp.resize(I.nobj());
  for (int i = 0; i < I.nobj(); ++i) {
    const Fiber& F = fib[g.on_obj(i)];
    for (int e = 0; e < x.size_at(i); ++e)
      out.adj.comp[i].push_back(F.class_of[F.idx.at({i, J.idm[g.on_obj(i)], e})]);
  }
  out.adj.validate();
  return out;
}

// Right Kan extension of a covariant X along g, pointwise as compatible
// tuples over the fiber (i, u: i' -> g(i)).
KanResult kan_right_cov(const FinFunctor& g, const SetFunctor& x) {
  const FinCat& I = *g.dom;
  const FinCat& J = *g.cod;
  SetFunctor ran;
  ran.base = g.cod;
  ran.at.resize(J.nobj());
  ran.act.resize(J.nmor());

  struct Fiber {
    std::vector<std::pair<int, int>> nodes;  // (i, u)
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::vector<int>> sections;
    std::map<std::vector<int>, int> sec_idx;
  };
  std::vector<Fiber> fib(J.nobj());
  for (int jp = 0; jp < J.nobj(); ++jp) {
    Fiber& F = fib[jp];
    for (int i = 0; i < I.nobj(); ++i)
      for (int u : J.hom(jp, g.on_obj(i))) {
        F.idx[{i, u}] = static_cast<int>(F.nodes.size());
        F.nodes.emplace_back(i, u);
      }
    int nn = static_cast<int>(F.nodes.size());
    std::vector<int> pick(nn, -1);
    std::function<void(int)> rec = [&](int n) {
      if (n == nn) {
        F.sec_idx[pick] = static_cast<int>(F.sections.size());
        F.sections.push_back(pick);
        std::string name = "<";
        for (int k = 0; k < nn; ++k) {
          auto [i, u] = F.nodes[k];
          if (k) name += "|";
          name += x.at[i][pick[k]];
        }
        ran.at[jp].push_back(name + ">");
        return;
      }
      auto [i, u] = F.nodes[n];
      for (int e = 0; e < x.size_at(i); ++e) {
        pick[n] = e;
        bool ok = true;
        for (int f = 0; f < I.nmor() && ok; ++f)
          for (int k = 0; k <= n && ok; ++k) {
            auto [a, w] = F.nodes[k];
            if (a != I.src(f)) continue;
            int k2 = F.idx.at({I.tgt(f), J.compose(g.on_mor(f), w)});
            if (k2 <= n && x.apply(f, pick[k]) != pick[k2]) ok = false;
          }
        if (ok) rec(n + 1);
      }
      pick[n] = -1;
    };
    rec(0);
  }
  for (int v = 0; v < J.nmor(); ++v) {
    const Fiber& F = fib[J.src(v)];
    const Fiber& G = fib[J.tgt(v)];
    for (auto& s : F.sections) {
      std::vector<int> t(G.nodes.size());
      for (size_t k = 0; k < G.nodes.size(); ++k) {
        auto [i, w] = G.nodes[k];
        t[k] = s[F.idx.at({i, J.compose(w, v)})];
      }
      ran.act[v].push_back(G.sec_idx.at(t));
    }
  }
  ran.validate();

  KanResult out;
  out.fun = ran;
  out.adj.src = pullback_along(g, ran);
  out.adj.tgt = x;
  out.adj.comp.resize(I.nobj());
  for (int i = 0; i < I.nobj(); ++i) {
    const Fiber& F = fib[g.on_obj(i)];
    int self = F.idx.at({i, J.idm[g.on_obj(i)]});
    for (auto& s : F.sections) out.adj.comp[i].push_back(s[self]);
  }
  out.adj.validate();
  return out;
}

// Presheaves extend along g by the covariant construction on opposites;
// opposite() keeps indices stable, so the raw tables transfer unchanged.
KanResult kan_contra(const FinFunctor& g, const SetFunctor& x, bool left) {
  auto dop = opposite(g.dom);
  auto cop = opposite(g.cod);
  FinFunctor gop = opposite_functor(g, dop, cop);
  SetFunctor xc = x;
  xc.base = dop;
  xc.contravariant = false;
  KanResult cov = left ? kan_left_cov(gop, xc) : kan_right_cov(gop, xc);
  KanResult out;
  out.fun = cov.fun;
  out.fun.base = g.cod;
  out.fun.contravariant = true;
  out.adj.comp = cov.adj.comp;
  if (left) {
    out.adj.src = x;
    out.adj.tgt = pullback_along(g, out.fun);
  } else {
    out.adj.src = pullback_along(g, out.fun);
    out.adj.tgt = x;
  }
  out.adj.validate();
  return out;
}

} // namespace

KanResult kan_left(const FinFunctor& g, const SetFunctor& x) {
  x.validate();
  if (!(*g.dom == *x.base))
    throw Error(Error::Kind::PreconditionFailed, "kan extension base mismatch");
  return x.contravariant ? kan_contra(g, x, true) : kan_left_cov(g, x);
}

KanResult kan_right(const FinFunctor& g, const SetFunctor& x) {
  x.validate();
  if (!(*g.dom == *x.base))
    throw Error(Error::Kind::PreconditionFailed, "kan extension base mismatch");
  return x.contravariant ? kan_contra(g, x, false) : kan_right_cov(g, x);
}

CofinalReport check_cofinal(const FinFunctor& g) {
  g.validate();
  CofinalReport r;
  for (int i = 0; i < g.cod->nobj(); ++i) {
    auto fib = comma_fiber_right(g, i);
    if (!is_connected(*fib.cat)) {
      r.bad = i;
      return r;
    }
  }
  r.cofinal = true;
  return r;
}

CofinalReport check_final(const FinFunctor& g) {
  g.validate();
  CofinalReport r;
  for (int i = 0; i < g.cod->nobj(); ++i) {
    auto fib = comma_fiber_left(g, i);
    if (!is_connected(*fib.cat)) {
      r.bad = i;
      return r;
    }
  }
  r.cofinal = true;
  return r;
}

bool check_localization_sample(const FinFunctor& g, const std::vector<CatPtr>& targets) {
  g.validate();
  for (auto& e : targets) {
    auto down = all_functors(g.cod, e);
    for (auto& F : down)
      for (auto& G : down) {
        auto upstairs = all_nat_transforms(compose(F, g), compose(G, g));
        auto native = all_nat_transforms(F, G);
        std::vector<std::vector<int>> image;
        for (auto& a : native) {
          std::vector<int> restricted(g.dom->nobj());
          for (int o = 0; o < g.dom->nobj(); ++o) restricted[o] = a[g.on_obj(o)];
          image.push_back(restricted);
        }
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
        std::sort(upstairs.begin(), upstairs.end());
        if (image != upstairs) return false;
      }
  }
  return true;
}

FinFunctor elements_map(const FinFunctor& g, const SetFunctor& xp, const KanResult& kan,
                        const SetNatMap& a) {
  if (!xp.contravariant || !a.src.contravariant)
    throw Error(Error::Kind::VarianceMismatch, "elements_map expects presheaves");
  if (!(a.src == kan.fun))
    throw Error(Error::Kind::PreconditionFailed, "map does not start at the extension");
  const SetFunctor& x = a.tgt;
  // transpose: a†_i = a_{g(i)} ∘ unit_i
  std::vector<std::vector<int>> tr(g.dom->nobj());
  for (int i = 0; i < g.dom->nobj(); ++i)
    for (int v : kan.adj.comp[i]) tr[i].push_back(a.comp[g.on_obj(i)][v]);

  auto src_el = elements(xp);
  auto tgt_el = elements(x);
  FinFunctor alpha;
  alpha.dom = src_el.cat;
  alpha.cod = tgt_el.cat;
  for (auto& [i, e] : src_el.objs)
    alpha.obj_map.push_back(tgt_el.obj_of(g.on_obj(i), tr[i][e]));
  for (size_t m = 0; m < src_el.mor_base.size(); ++m) {
    int f = src_el.mor_base[m];
    auto [sa, ta] = src_el.mor_atoms[m];
    alpha.mor_map.push_back(tgt_el.mor_of(g.on_mor(f), tr[g.dom->src(f)][sa],
                                          tr[g.dom->tgt(f)][ta]));
  }
  alpha.validate();
  return alpha;
}

CofinalIsoReport cofinal_iff_iso_check(const FinFunctor& g, const SetFunctor& xp,
                                       const KanResult& kan, const SetNatMap& a) {
  CofinalIsoReport r;
  r.a_iso = a.is_iso();
  r.alpha_cofinal = check_cofinal(elements_map(g, xp, kan, a)).cofinal;
  r.agree = r.a_iso == r.alpha_cofinal;
  return r;
}

bool yoneda_colimit_decomposition(const SetFunctor& x, int size_bound) {
  x.validate();
  if (!x.contravariant)
    throw Error(Error::Kind::VarianceMismatch, "decomposition expects a presheaf");
  auto ec = elements(x);
  int ne = ec.cat->nobj();
  bool ok = true;
  for_each_setfunctor(x.base, true, size_bound, [&](const SetFunctor& z) {
    // Compatible families of maps out of the representables, seen through
    // Yoneda as elements z_e with Z(f)(z_tgt) = z_src per elements arrow.
    std::vector<std::vector<int>> families;
    std::vector<int> pick(ne, -1);
    std::function<void(int)> rec = [&](int n) {
      if (n == ne) {
        families.push_back(pick);
        return;
      }
      int base_obj = ec.objs[n].first;
      for (int v = 0; v < z.size_at(base_obj); ++v) {
        pick[n] = v;
        bool fine = true;
        for (size_t m = 0; m < ec.mor_base.size() && fine; ++m) {
          int s = ec.cat->src(static_cast<int>(m)), t = ec.cat->tgt(static_cast<int>(m));
          if (s > n || t > n) continue;
          if (z.apply(ec.mor_base[m], pick[t]) != pick[s]) fine = false;
        }
        if (fine) rec(n + 1);
      }
      pick[n] = -1;
    };
    rec(0);
    std::sort(families.begin(), families.end());

    std::vector<std::vector<int>> mapped;
    for (auto& h : hom_presheaves(x, z)) {
      std::vector<int> fam(ne);
      for (int n = 0; n < ne; ++n) fam[n] = h.comp[ec.objs[n].first][ec.objs[n].second];
      mapped.push_back(fam);
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end() ||
        mapped != families) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

void for_each_setfunctor(CatPtr base, bool contravariant, int max_size,
                         const std::function<bool(const SetFunctor&)>& fn) {
  const FinCat& b = *base;
  std::vector<int> nonid;
  for (int m = 0; m < b.nmor(); ++m)
    if (!b.is_id(m)) nonid.push_back(m);

  std::vector<int> sizes(b.nobj(), 0);
  bool stop = false;
  std::function<void(int)> pick_sizes = [&](int o) {
    if (stop) return;
    if (o < b.nobj()) {
      for (int s = 0; s <= max_size && !stop; ++s) {
        sizes[o] = s;
        pick_sizes(o + 1);
      }
      return;
    }
    SetFunctor x;
    x.base = base;
    x.contravariant = contravariant;
    x.at.resize(b.nobj());
    for (int i = 0; i < b.nobj(); ++i)
      for (int e = 0; e < sizes[i]; ++e) x.at[i].push_back("s" + std::to_string(e));
    x.act.assign(b.nmor(), {});
    for (int i = 0; i < b.nobj(); ++i)
      for (int e = 0; e < sizes[i]; ++e) x.act[b.idm[i]].push_back(e);
    std::vector<char> done(b.nmor(), 0);
    for (int i = 0; i < b.nobj(); ++i) done[b.idm[i]] = 1;

    std::function<void(size_t)> pick_act = [&](size_t k) {
      if (stop) return;
      if (k == nonid.size()) {
        if (!fn(x)) stop = true;
        return;
      }
      int m = nonid[k];
      int nd = sizes[x.dom_obj(m)], nc = sizes[x.cod_obj(m)];
      if (nd == 0) {
        done[m] = 1;
        bool fine = true;
        for (int gm = 0; gm < b.nmor() && fine; ++gm)
          for (int fm = 0; fm < b.nmor() && fine; ++fm) {
            if (!b.composable(gm, fm)) continue;
            int h = b.compose(gm, fm);
            if (!done[gm] || !done[fm] || !done[h]) continue;
            int n = sizes[contravariant ? b.tgt(gm) : b.src(fm)];
            for (int e = 0; e < n; ++e) {
              int lhs = contravariant ? x.act[fm][x.act[gm][e]] : x.act[gm][x.act[fm][e]];
              if (lhs != x.act[h][e]) {
                fine = false;
                break;
              }
            }
          }
        if (fine) pick_act(k + 1);
        done[m] = 0;
        return;
      }
      if (nc == 0) return;
      std::vector<int> v(nd, 0);
      while (!stop) {
        x.act[m] = v;
        done[m] = 1;
        bool fine = true;
        for (int gm = 0; gm < b.nmor() && fine; ++gm)
          for (int fm = 0; fm < b.nmor() && fine; ++fm) {
            if (!b.composable(gm, fm)) continue;
            int h = b.compose(gm, fm);
            if (!done[gm] || !done[fm] || !done[h]) continue;
            int n = sizes[contravariant ? b.tgt(gm) : b.src(fm)];
            for (int e = 0; e < n; ++e) {
              int lhs = contravariant ? x.act[fm][x.act[gm][e]] : x.act[gm][x.act[fm][e]];
              if (lhs != x.act[h][e]) {
                fine = false;
                break;
              }
            }
          }
        if (fine) pick_act(k + 1);
        done[m] = 0;
        int i = nd - 1;
        while (i >= 0 && v[i] == nc - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
      }
      x.act[m].clear();
    };
    pick_act(0);
  };
  pick_sizes(0);
}

} // namespace kancalc
