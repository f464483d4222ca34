#include "kancalc/nerve.hpp"

#include <algorithm>
#include <map>

namespace kancalc {

namespace {

void monotone_maps(int m, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> g(m + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int low) {
    if (pos > m) {
      out.push_back(g);
      return;
    }
    for (int v = low; v <= k; ++v) {
      g[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

} // namespace

int SimplexCat::mor_of(int m, int k, const std::vector<int>& g) const {
  for (size_t i = 0; i < images.size(); ++i)
    if (cat->src(static_cast<int>(i)) == m && cat->tgt(static_cast<int>(i)) == k &&
        images[i] == g)
      return static_cast<int>(i);
  return -1;
}

SimplexCat simplex_cat(int n) {
  SimplexCat s;
  s.max_dim = n;
  std::vector<std::string> objects;
  for (int k = 0; k <= n; ++k) objects.push_back("[" + std::to_string(k) + "]");
  std::vector<Mor> mors;
  std::vector<int> idm(n + 1, -1);
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> maps;
      monotone_maps(m, k, maps);
      for (auto& g : maps) {
        std::string name = objects[m] + ">" + objects[k] + ":";
        for (size_t i = 0; i < g.size(); ++i) {
          if (i) name += ".";
          name += std::to_string(g[i]);
        }
        bool is_id = m == k;
        for (int i = 0; i <= m && is_id; ++i)
          if (g[i] != i) is_id = false;
        if (is_id) idm[m] = static_cast<int>(mors.size());
        s.images.push_back(g);
        mors.push_back({name, m, k});
      }
    }
  auto images = s.images;
  std::vector<int> msrc, mtgt;
  for (auto& m : mors) {
    msrc.push_back(m.src);
    mtgt.push_back(m.tgt);
  }
  s.cat = make_cat(from_parts(std::move(objects), std::move(mors), std::move(idm),
                              [images, msrc, mtgt](int g, int f) -> int {
                                std::vector<int> comp(images[f].size());
                                for (size_t i = 0; i < images[f].size(); ++i)
                                  comp[i] = images[g][images[f][i]];
                                for (size_t h = 0; h < images.size(); ++h)
                                  if (msrc[h] == msrc[f] && mtgt[h] == mtgt[g] &&
                                      images[h] == comp)
                                    return static_cast<int>(h);
                                return -1;
                              }));
  return s;
}

bool NerveChain::degenerate(const FinCat& c) const {
  for (int m : mors)
    if (c.is_id(m)) return true;
  return false;
}

int NerveChain::composite(const FinCat& c, int a, int b) const {
  int res = c.idm[objs[a]];
  for (int l = a; l < b; ++l) res = c.compose(mors[l], res);
  return res;
}

int TruncatedNerve::chain_index(int k, const NerveChain& ch) const {
  for (size_t i = 0; i < chains[k].size(); ++i)
    if (chains[k][i].objs == ch.objs && chains[k][i].mors == ch.mors)
      return static_cast<int>(i);
  return -1;
}

int TruncatedNerve::restricted(int k, int idx, const std::vector<int>& g) const {
  const NerveChain& ch = chains[k][idx];
  NerveChain out;
  for (int v : g) out.objs.push_back(ch.objs[v]);
  for (size_t i = 0; i + 1 < g.size(); ++i)
    out.mors.push_back(ch.composite(*cat, g[i], g[i + 1]));
  return chain_index(static_cast<int>(g.size()) - 1, out);
}

TruncatedNerve nerve(CatPtr c, int max_dim) {
  if (max_dim < 1)
    throw Error(Error::Kind::PreconditionFailed, "nerve truncation must be >= 1");
  TruncatedNerve n;
  n.cat = c;
  n.max_dim = max_dim;
  n.simplex = simplex_cat(max_dim);
  n.chains.resize(max_dim + 1);
  for (int o = 0; o < c->nobj(); ++o) n.chains[0].push_back({{o}, {}});
  for (int k = 1; k <= max_dim; ++k)
    for (auto& prev : n.chains[k - 1])
      for (int f = 0; f < c->nmor(); ++f)
        if (c->src(f) == prev.objs.back()) {
          NerveChain ch = prev;
          ch.objs.push_back(c->tgt(f));
          ch.mors.push_back(f);
          n.chains[k].push_back(ch);
        }
  n.presheaf.base = n.simplex.cat;
  n.presheaf.contravariant = true;
  n.presheaf.at.resize(max_dim + 1);
  for (int k = 0; k <= max_dim; ++k)
    for (auto& ch : n.chains[k]) {
      std::string name = k == 0 ? c->objects[ch.objs[0]] : "";
      for (size_t l = 0; l < ch.mors.size(); ++l) {
        if (l) name += "*";
        name += c->mors[ch.mors[l]].name;
      }
      n.presheaf.at[k].push_back(name);
    }
  n.presheaf.act.resize(n.simplex.cat->nmor());
  for (int m = 0; m < n.simplex.cat->nmor(); ++m) {
    int src = n.simplex.cat->src(m), tgt = n.simplex.cat->tgt(m);
    for (size_t i = 0; i < n.chains[tgt].size(); ++i)
      n.presheaf.act[m].push_back(n.restricted(tgt, static_cast<int>(i),
                                               n.simplex.images[m]));
  }
  n.presheaf.validate();
  return n;
}

XiResult xi(const TruncatedNerve& n) {
  XiResult r;
  r.els = elements(n.presheaf);
  r.xi.dom = r.els.cat;
  r.xi.cod = n.cat;
  for (auto& [k, idx] : r.els.objs)
    r.xi.obj_map.push_back(n.chains[k][idx].objs[k]);
  for (size_t m = 0; m < r.els.mor_base.size(); ++m) {
    int base = r.els.mor_base[m];
    int k = n.simplex.cat->tgt(base);
    int idx = r.els.mor_atoms[m].second;  // the chain at the target end
    const auto& g = n.simplex.images[base];
    r.xi.mor_map.push_back(n.chains[k][idx].composite(*n.cat, g.back(), k));
  }
  r.xi.validate();
  return r;
}

int VReplacement::point_of(int k, int pl) const {
  for (size_t i = 0; i < kind.size(); ++i)
    if (kind[i] == k && payload[i] == pl) return static_cast<int>(i);
  return -1;
}

VReplacement v_replacement(CatPtr c) {
  VReplacement v;
  std::vector<std::string> names;
  for (int layer = 0; layer < 2; ++layer)
    for (int o = 0; o < c->nobj(); ++o) {
      names.push_back("(" + std::to_string(layer) + "," + c->objects[o] + ")");
      v.kind.push_back(layer);
      v.payload.push_back(o);
    }
  for (int f = 0; f < c->nmor(); ++f) {
    names.push_back("(o," + c->mors[f].name + ")");
    v.kind.push_back(2);
    v.payload.push_back(f);
  }
  std::vector<std::pair<int, int>> gens;
  int obase = 2 * c->nobj();
  for (int f = 0; f < c->nmor(); ++f) {
    gens.emplace_back(c->tgt(f), obase + f);              // (0, tgt f) <= (o, f)
    gens.emplace_back(c->nobj() + c->src(f), obase + f);  // (1, src f) <= (o, f)
  }
  v.vposet = Poset::from_generators(names, gens);
  v.vcat = as_category(v.vposet);
  v.zero_part.assign(names.size(), 0);
  for (size_t i = 0; i < names.size(); ++i)
    if (v.kind[i] != 1) v.zero_part[i] = 1;

  auto cop = opposite(c);
  for (auto* fn : {&v.q, &v.q_perp}) {
    bool perp = fn == &v.q_perp;
    fn->dom = v.vcat;
    fn->cod = perp ? cop : c;
    for (size_t i = 0; i < names.size(); ++i) {
      int p = v.payload[i];
      fn->obj_map.push_back(v.kind[i] == 2 ? (perp ? c->src(p) : c->tgt(p)) : p);
    }
    for (int m = 0; m < v.vcat->nmor(); ++m) {
      int a = v.vcat->src(m), b = v.vcat->tgt(m);
      if (a == b) {
        fn->mor_map.push_back(fn->cod->idm[fn->obj_map[a]]);
        continue;
      }
      int f = v.payload[b];  // b is an o-point
      bool id_side = v.kind[a] == (perp ? 1 : 0);
      fn->mor_map.push_back(id_side ? fn->cod->idm[fn->obj_map[a]] : f);
    }
    fn->validate();
  }
  return v;
}

bool v_swap_check(CatPtr c) {
  auto v = v_replacement(c);
  auto w = v_replacement(opposite(c));
  if (v.vposet.n() != w.vposet.n()) return false;
  // the swap: (0,c) <-> (1,c), (o,f) fixed (indices of C^o match C)
  std::vector<int> to_w(v.vposet.n());
  for (int i = 0; i < v.vposet.n(); ++i)
    to_w[i] = v.kind[i] == 2 ? w.point_of(2, v.payload[i])
                             : w.point_of(1 - v.kind[i], v.payload[i]);
  for (int i = 0; i < v.vposet.n(); ++i)
    for (int j = 0; j < v.vposet.n(); ++j)
      if (v.vposet.le(i, j) != w.vposet.le(to_w[i], to_w[j])) return false;
  // q of the swapped replacement is q_perp, objectwise
  for (int i = 0; i < v.vposet.n(); ++i)
    if (w.q.obj_map[to_w[i]] != v.q_perp.obj_map[i]) return false;
  for (int i = 0; i < v.vposet.n(); ++i)
    if (w.q_perp.obj_map[to_w[i]] != v.q.obj_map[i]) return false;
  return true;
}

VLocReport verify_v_localization(CatPtr c, CatPtr e) {
  VLocReport rep;
  auto v = v_replacement(c);
  auto funs = all_functors(c, e);
  for (size_t fi = 0; fi < funs.size(); ++fi)
    for (size_t gi = 0; gi < funs.size(); ++gi) {
      const auto& F = funs[fi];
      const auto& G = funs[gi];
      auto direct = all_nat_transforms(F, G);

      // the covariant functor v -> Hom(F(q_perp v), G(q v)) on V(C)
      SetFunctor L;
      L.base = v.vcat;
      L.at.resize(v.vcat->nobj());
      std::vector<std::vector<int>> homs(v.vcat->nobj());
      for (int p = 0; p < v.vcat->nobj(); ++p) {
        homs[p] = e->hom(F.on_obj(v.q_perp.obj_map[p]), G.on_obj(v.q.obj_map[p]));
        for (int h : homs[p]) L.at[p].push_back(e->mors[h].name);
      }
      L.act.resize(v.vcat->nmor());
      for (int m = 0; m < v.vcat->nmor(); ++m) {
        int a = v.vcat->src(m), b = v.vcat->tgt(m);
        // q_perp(m) is a morphism q_perp(b) -> q_perp(a) of C; precompose
        // with its F-image, postcompose with the G-image of q(m)
        int pre = F.on_mor(v.q_perp.on_mor(m));
        int post = G.on_mor(v.q.on_mor(m));
        for (int h : homs[a]) {
          int img = e->compose(post, e->compose(h, pre));
          auto it = std::find(homs[b].begin(), homs[b].end(), img);
          L.act[m].push_back(static_cast<int>(it - homs[b].begin()));
        }
      }
      L.validate();

      auto sections = lim_set(L);
      std::sort(sections.begin(), sections.end());
      // package each direct transformation and compare
      std::vector<std::vector<int>> packaged;
      for (auto& alpha : direct) {
        std::vector<int> s(v.vcat->nobj());
        for (int p = 0; p < v.vcat->nobj(); ++p) {
          int comp = v.kind[p] == 2
                         ? e->compose(G.on_mor(v.payload[p]), alpha[c->src(v.payload[p])])
                         : alpha[v.payload[p]];
          auto it = std::find(homs[p].begin(), homs[p].end(), comp);
          if (it == homs[p].end()) {
            rep.bad_f = static_cast<int>(fi);
            rep.bad_g = static_cast<int>(gi);
            return rep;
          }
          s[p] = static_cast<int>(it - homs[p].begin());
        }
        packaged.push_back(s);
      }
      std::sort(packaged.begin(), packaged.end());
      if (std::adjacent_find(packaged.begin(), packaged.end()) != packaged.end() ||
          packaged != sections) {
        rep.bad_f = static_cast<int>(fi);
        rep.bad_g = static_cast<int>(gi);
        return rep;
      }
      ++rep.pairs;
    }
  if (!check_localization_sample(v.q, {e})) return rep;
  rep.ok = true;
  return rep;
}

VSquareReport verify_v_square(CatPtr c, CatPtr e) {
  VSquareReport rep;
  auto v = v_replacement(c);
  // zero-side arrows of vcat: (0, tgt f) <= (o, f)
  std::vector<int> zero_arrows;
  for (int m = 0; m < v.vcat->nmor(); ++m) {
    int a = v.vcat->src(m), b = v.vcat->tgt(m);
    if (a != b && v.kind[a] == 0 && v.kind[b] == 2) zero_arrows.push_back(m);
  }
  auto serial = [](const FinFunctor& h) {
    auto s = h.obj_map;
    s.insert(s.end(), h.mor_map.begin(), h.mor_map.end());
    return s;
  };
  std::vector<std::vector<int>> image;
  for (auto& F : all_functors(c, e)) {
    ++rep.fun_count;
    image.push_back(serial(compose(F, v.q)));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  rep.commutes = true;
  rep.necessity = true;
  rep.sufficiency = true;
  for_each_functor(v.vcat, e, [&](const FinFunctor& H) {
    bool in_fiber = true;
    for (int m : zero_arrows)
      if (!e->is_id(H.on_mor(m))) in_fiber = false;
    bool in_image = std::binary_search(image.begin(), image.end(), serial(H));
    if (in_fiber) ++rep.fiber_count;
    if (in_image && !in_fiber) {
      rep.commutes = false;
      rep.necessity = false;
    }
    if (in_fiber && !in_image) rep.sufficiency = false;
    if (!in_image && !rep.witness_outside.has_value()) rep.witness_outside = H;
    return true;
  });
  rep.cartesian = rep.fiber_count == static_cast<long long>(image.size()) &&
                  static_cast<long long>(image.size()) == rep.fun_count &&
                  rep.sufficiency && rep.necessity;
  return rep;
}

bool check_nerve_fully_faithful(CatPtr c, CatPtr d, int trunc) {
  auto nc = nerve(c, trunc);
  auto nd = nerve(d, trunc);
  // both presheaves live on the same truncated simplex category up to
  // equality of the base, which simplex_cat guarantees by construction
  SetFunctor ndp = nd.presheaf;
  ndp.base = nc.presheaf.base;
  auto maps = hom_presheaves(nc.presheaf, ndp);
  auto funs = all_functors(c, d);
  if (maps.size() != funs.size()) return false;
  // every functor induces a distinct nerve map; with equal counts, a
  // containment check certifies the bijection
  std::vector<std::vector<std::vector<int>>> comps;
  for (auto& m : maps) comps.push_back(m.comp);
  std::sort(comps.begin(), comps.end());
  for (auto& F : funs) {
    std::vector<std::vector<int>> comp(nc.presheaf.at.size());
    for (int k = 0; k <= trunc; ++k)
      for (auto& ch : nc.chains[k]) {
        NerveChain img;
        for (int o : ch.objs) img.objs.push_back(F.on_obj(o));
        for (int m : ch.mors) img.mors.push_back(F.on_mor(m));
        comp[k].push_back(nd.chain_index(k, img));
      }
    if (!std::binary_search(comps.begin(), comps.end(), comp)) return false;
  }
  return true;
}

} // namespace kancalc
