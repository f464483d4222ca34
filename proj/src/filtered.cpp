#include "kancalc/filtered.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace kancalc {

namespace {

// Existence search for a cone on the identity diagram: a vertex z and a
// compatible choice of legs leg[x] : x -> z. Lighter than find_id_cone,
// which builds the cone; this one only answers yes or no.
bool id_cone_exists(const FinCat& c, int z, std::vector<std::vector<int>>& cand,
                    std::vector<int>& leg, int x) {
  int n = c.nobj(), M = c.nmor();
  if (x == n) return true;
  for (int l : cand[x]) {
    bool fit = true;
    for (int m = 0; m < M && fit; ++m) {
      int a = c.src(m), b = c.tgt(m);
      if (a == x && b == x)
        fit = c.table[l][m] == l;
      else if (a == x && b < x)
        fit = c.table[leg[b]][m] == l;
      else if (b == x && a < x)
        fit = c.table[l][m] == leg[a];
    }
    if (!fit) continue;
    leg[x] = l;
    if (id_cone_exists(c, z, cand, leg, x + 1)) return true;
    leg[x] = -1;
  }
  return false;
}

} // namespace

bool id_cone_filtered(CatPtr c) {
  int n = c->nobj(), M = c->nmor();
  for (int z = 0; z < n; ++z) {
    std::vector<std::vector<int>> cand(n);
    for (int m = 0; m < M; ++m)
      if (c->tgt(m) == z) cand[c->src(m)].push_back(m);
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (cand[x].empty()) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<int> leg(n, -1);
    if (id_cone_exists(*c, z, cand, leg, 0)) return true;
  }
  return false;
}

bool karoubi_terminal_filtered(CatPtr c) {
  // Terminality checked in place: an object of the closure is an
  // idempotent e, and hom((X, e'), (Y, e)) is {g : X -> Y with e∘g∘e' = g}.
  int M = c->nmor();
  auto idem = c->idempotents();
  for (int e : idem) {
    int ce = c->src(e);
    bool term = true;
    for (int ep : idem) {
      int cf = c->src(ep), cnt = 0;
      for (int g = 0; g < M; ++g)
        if (c->src(g) == cf && c->tgt(g) == ce &&
            c->table[e][c->table[g][ep]] == g) {
          if (++cnt > 1) break;
        }
      if (cnt != 1) {
        term = false;
        break;
      }
    }
    if (term) return true;
  }
  return false;
}

bool is_filtered_exact(CatPtr c) {
  bool cone = id_cone_filtered(c);
  bool karoubi = karoubi_terminal_filtered(c);
  if (cone != karoubi)
    throw Error(Error::Kind::ValidationError,
                "identity-cone and Karoubi-terminal criteria disagree");
  return cone;
}

FilterReport is_filtered_at_level(CatPtr c, int n, long long budget, ShapeClass shapes) {
  if (n < 1) throw Error(Error::Kind::PreconditionFailed, "level must be >= 1");
  FilterReport rep;
  rep.subject = c;
  rep.exact_filtered = is_filtered_exact(c);
  rep.witness = find_id_cone(c);
  rep.level_checked = n;
  rep.level_ok = true;
  long long used = 0;
  auto sweep = [&](CatPtr shape) {
    for_each_functor(shape, c, [&](const FinFunctor& e) {
      if (++used > budget)
        throw Error(Error::Kind::BoundExceeded, "diagram budget exhausted in level sweep");
      if (!find_cone(e)) {
        rep.level_ok = false;
        rep.failing = e;
        return false;
      }
      return true;
    });
    return rep.level_ok;
  };
  if (shapes == ShapeClass::AllCategories) {
    // shapes with fewer than n morphisms stand in for "size < n"
    for_each_fincat(n - 1, n - 1, [&](const CatPtr& shape) { return sweep(shape); });
  } else {
    for (int k = 0; k < n; ++k)
      for (auto& p : all_posets(k)) {
        if (shapes == ShapeClass::Dim1Posets && dimension(p) > 1) continue;
        if (!sweep(as_category(p))) return rep;
      }
  }
  return rep;
}

CofinalSubcatReport check_cofinal_subcategory(CatPtr c, const std::vector<int>& objs) {
  CofinalSubcatReport rep;
  std::vector<char> in(c->nobj(), 0);
  for (int o : objs) in[o] = 1;
  rep.hypothesis = true;
  for (int x = 0; x < c->nobj() && rep.hypothesis; ++x) {
    bool hit = false;
    for (int m = 0; m < c->nmor() && !hit; ++m)
      if (c->src(m) == x && in[c->tgt(m)]) hit = true;
    if (!hit) {
      rep.hypothesis = false;
      rep.bad_obj = x;
    }
  }
  if (!rep.hypothesis) return rep;
  auto sub = full_subcat(c, objs);
  rep.sub_filtered = is_filtered_exact(sub.cat);
  rep.embedding_cofinal = check_cofinal(sub.incl).cofinal;
  return rep;
}

ConLeReport check_con_le(const SetFunctor& x) {
  if (x.contravariant)
    throw Error(Error::Kind::VarianceMismatch, "con-le takes a covariant functor");
  if (!is_filtered_exact(x.base))
    throw Error(Error::Kind::PreconditionFailed, "index category is not filtered");
  ConLeReport rep;
  rep.colim_is_point = colim_set(x).atoms.size() == 1;
  rep.elements_filtered = is_filtered_exact(elements(x).cat);
  rep.agree = rep.colim_is_point == rep.elements_filtered;
  return rep;
}

int FunCat::obj_of(const FinFunctor& f) const {
  for (size_t i = 0; i < objs.size(); ++i)
    if (objs[i] == f) return (int)i;
  return -1;
}

FunCat fun_cat(CatPtr j, CatPtr c, long long budget) {
  FunCat out;
  out.objs = all_functors(j, c);
  int N = (int)out.objs.size();
  if ((long long)N > budget)
    throw Error(Error::Kind::BoundExceeded, "functor category exceeds the budget");
  std::vector<std::string> onames;
  for (int i = 0; i < N; ++i) onames.push_back("F" + std::to_string(i));
  std::vector<Mor> mors;
  std::vector<std::pair<int, int>> ends;
  std::map<std::tuple<int, int, std::vector<int>>, int> midx;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (auto& nu : all_nat_transforms(out.objs[a], out.objs[b])) {
        if ((long long)mors.size() >= budget)
          throw Error(Error::Kind::BoundExceeded, "functor category exceeds the budget");
        midx[{a, b, nu}] = (int)mors.size();
        std::string nm = "[";
        for (size_t k = 0; k < nu.size(); ++k)
          nm += (k ? "|" : "") + c->mors[nu[k]].name;
        nm += "]:" + onames[a] + ">" + onames[b];
        mors.push_back({nm, a, b});
        ends.emplace_back(a, b);
        out.mor_comps.push_back(nu);
      }
  std::vector<int> idm(N);
  for (int a = 0; a < N; ++a) {
    std::vector<int> ids(j->nobj());
    for (int o = 0; o < j->nobj(); ++o) ids[o] = c->idm[out.objs[a].on_obj(o)];
    idm[a] = midx.at({a, a, ids});
  }
  int M = (int)mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      if (ends[f].second != ends[g].first) continue;
      std::vector<int> r(j->nobj());
      for (int o = 0; o < j->nobj(); ++o)
        r[o] = c->compose(out.mor_comps[g][o], out.mor_comps[f][o]);
      table[g][f] = midx.at({ends[f].first, ends[g].second, r});
    }
  out.cat = make_cat(FinCat::validated_unsorted(onames, mors, idm, table));

  FinFunctor k;
  k.dom = c;
  k.cod = out.cat;
  k.obj_map.resize(c->nobj());
  for (int x = 0; x < c->nobj(); ++x)
    k.obj_map[x] = out.obj_of(constant_functor(j, c, x));
  k.mor_map.resize(c->nmor());
  for (int m = 0; m < c->nmor(); ++m) {
    std::vector<int> comps(j->nobj(), m);
    k.mor_map[m] = midx.at({k.obj_map[c->src(m)], k.obj_map[c->tgt(m)], comps});
  }
  k.validate();
  out.constants = std::move(k);
  return out;
}

ConeLeReport check_cone_le(CatPtr j, CatPtr c, long long budget) {
  if (!is_filtered_exact(c))
    throw Error(Error::Kind::PreconditionFailed, "target category is not filtered");
  auto f = fun_cat(j, c, budget);
  ConeLeReport rep;
  rep.fun_filtered = is_filtered_exact(f.cat);
  rep.constants_cofinal = check_cofinal(f.constants).cofinal;
  rep.ok = rep.fun_filtered && rep.constants_cofinal;
  return rep;
}

CommuteReport filt_commute_check(const ProductCat& pc, const SetFunctor& x) {
  if (x.contravariant)
    throw Error(Error::Kind::VarianceMismatch, "the exchange check takes a covariant functor");
  if (!(*x.base == *pc.cat))
    throw Error(Error::Kind::PreconditionFailed, "functor does not live on the given product");
  CatPtr I = pc.p0.cod, J = pc.p1.cod;
  int ni = I->nobj(), nj = J->nobj();
  CommuteReport rep;
  rep.i_filtered = is_filtered_exact(I);

  auto row = [&](int i) {  // X(i, -) on J
    SetFunctor r;
    r.base = J;
    r.at.resize(nj);
    for (int jo = 0; jo < nj; ++jo) r.at[jo] = x.at[pc.obj_of(i, jo)];
    r.act.resize(J->nmor());
    for (int m = 0; m < J->nmor(); ++m) r.act[m] = x.act[pc.mor_of(I->idm[i], m)];
    r.validate();
    return r;
  };
  auto col = [&](int jo) {  // X(-, jo) on I
    SetFunctor r;
    r.base = I;
    r.at.resize(ni);
    for (int i = 0; i < ni; ++i) r.at[i] = x.at[pc.obj_of(i, jo)];
    r.act.resize(I->nmor());
    for (int m = 0; m < I->nmor(); ++m) r.act[m] = x.act[pc.mor_of(m, J->idm[jo])];
    r.validate();
    return r;
  };

  // L(i) = lim_J X(i, -), functorial in i componentwise
  std::vector<std::vector<std::vector<int>>> tuples(ni);
  std::vector<std::map<std::vector<int>, int>> tindex(ni);
  SetFunctor L;
  L.base = I;
  L.at.resize(ni);
  L.act.resize(I->nmor());
  for (int i = 0; i < ni; ++i) {
    tuples[i] = lim_set(row(i));
    for (size_t t = 0; t < tuples[i].size(); ++t) {
      tindex[i][tuples[i][t]] = (int)t;
      std::string nm = "(";
      for (int jo = 0; jo < nj; ++jo)
        nm += (jo ? "|" : "") + x.at[pc.obj_of(i, jo)][tuples[i][t][jo]];
      nm += ")";
      L.at[i].push_back(nm);
    }
  }
  for (int u = 0; u < I->nmor(); ++u) {
    int i1 = I->tgt(u);
    L.act[u].resize(tuples[I->src(u)].size());
    for (size_t t = 0; t < tuples[I->src(u)].size(); ++t) {
      std::vector<int> img(nj);
      for (int jo = 0; jo < nj; ++jo)
        img[jo] = x.apply(pc.mor_of(u, J->idm[jo]), tuples[I->src(u)][t][jo]);
      L.act[u][t] = tindex[i1].at(img);
    }
  }
  L.validate();

  // C(j) = colim_I X(-, j), transitions through representatives
  std::vector<Pi0Set> cp(nj);
  std::vector<ElementsCat> ce;
  ce.reserve(nj);
  SetFunctor C;
  C.base = J;
  C.at.resize(nj);
  C.act.resize(J->nmor());
  for (int jo = 0; jo < nj; ++jo) {
    auto cj = col(jo);
    cp[jo] = colim_set(cj);
    ce.push_back(elements(cj));
    C.at[jo] = cp[jo].atoms;
  }
  for (int v = 0; v < J->nmor(); ++v) {
    int j0 = J->src(v), j1 = J->tgt(v);
    C.act[v].assign(cp[j0].atoms.size(), -1);
    for (size_t k = 0; k < ce[j0].objs.size(); ++k) {
      auto [i, atom] = ce[j0].objs[k];
      int img = x.apply(pc.mor_of(I->idm[i], v), atom);
      int cls = cp[j1].class_of[ce[j1].obj_of(i, img)];
      int& slot = C.act[v][cp[j0].class_of[k]];
      if (slot == -1)
        slot = cls;
      else if (slot != cls)
        throw Error(Error::Kind::ValidationError, "colimit transition not well defined");
    }
  }
  C.validate();

  auto lhs = colim_set(L);
  auto lhs_els = elements(L);
  auto rhs = lim_set(C);
  rep.lhs = (int)lhs.atoms.size();
  rep.rhs = (int)rhs.size();
  std::map<std::vector<int>, int> rindex;
  for (size_t t = 0; t < rhs.size(); ++t) rindex[rhs[t]] = (int)t;

  std::vector<int> image(lhs.atoms.size(), -1);
  for (size_t k = 0; k < lhs_els.objs.size(); ++k) {
    auto [i, t] = lhs_els.objs[k];
    std::vector<int> r(nj);
    for (int jo = 0; jo < nj; ++jo)
      r[jo] = cp[jo].class_of[ce[jo].obj_of(i, tuples[i][t][jo])];
    auto it = rindex.find(r);
    if (it == rindex.end())
      throw Error(Error::Kind::ValidationError, "comparison image is not a section");
    int& slot = image[lhs.class_of[k]];
    if (slot == -1)
      slot = it->second;
    else if (slot != it->second)
      throw Error(Error::Kind::ValidationError, "comparison map not constant on classes");
  }

  rep.bijective = true;
  std::vector<int> pre(rhs.size(), -1);
  for (int k = 0; k < rep.lhs; ++k) {
    if (pre[image[k]] != -1) {
      rep.collision = {pre[image[k]], k};
      rep.bijective = false;
      break;
    }
    pre[image[k]] = k;
  }
  if (!rep.collision)
    for (int t = 0; t < rep.rhs; ++t)
      if (pre[t] == -1) {
        rep.missed = t;
        rep.bijective = false;
        break;
      }
  return rep;
}

std::optional<CompactWitness> compact_witness_search(const SetFunctor& x, int size_bound,
                                                     long long budget) {
  if (!x.contravariant)
    throw Error(Error::Kind::VarianceMismatch, "the retract search takes a presheaf");
  long long used = 0;
  auto ident = identity_map(x);
  for (int n = 0; n < size_bound; ++n)
    for (const auto& shape : all_posets(n)) {
      if (dimension(shape) > 1) continue;
      auto jc = as_category(shape);
      auto pt1 = constant_set(jc, true, {"*"});
      std::optional<CompactWitness> found;
      for_each_functor(jc, x.base, [&](const FinFunctor& gamma) {
        if (++used > budget)
          throw Error(Error::Kind::BoundExceeded, "retract search budget exhausted");
        auto y = kan_left(gamma, pt1).fun;
        auto secs = hom_presheaves(x, y);
        if (secs.empty()) return true;
        auto rets = hom_presheaves(y, x);
        for (auto& s : secs)
          for (auto& r : rets)
            if (compose(r, s).comp == ident.comp) {
              found = CompactWitness{shape, gamma, s, r};
              return false;
            }
        return true;
      });
      if (found) return found;
    }
  return std::nullopt;
}

} // namespace kancalc
