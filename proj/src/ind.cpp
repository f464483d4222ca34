#include "kancalc/ind.hpp"

#include <algorithm>
#include <map>

namespace kancalc {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int i) {
    while (up[i] != i) i = up[i] = up[up[i]];
    return i;
  }
  void join(int i, int j) { up[find(i)] = find(j); }
};

// Classes numbered by first occurrence, so the numbering is canonical for
// the given atom order.
std::vector<int> number_classes(UnionFind& uf, int n, int& nclasses) {
  std::vector<int> cls(n, -1), first(n, -1);
  nclasses = 0;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (first[r] < 0) first[r] = nclasses++;
    cls[i] = first[r];
  }
  return cls;
}

} // namespace

void IndPresentation::validate() const {
  diagram.validate();
  if (!is_filtered_exact(diagram.dom))
    throw Error(Error::Kind::PreconditionFailed, "presentation index is not filtered");
}

int IndHomSet::atom_index(int j, int jp, int mor) const {
  auto& row = atoms[j];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(jp, mor));
  if (it == row.end() || *it != std::make_pair(jp, mor)) return -1;
  return (int)(it - row.begin());
}

int IndHomSet::cls(int j, int jp, int mor) const {
  int k = atom_index(j, jp, mor);
  return k < 0 ? -1 : class_of[j][k];
}

IndHomSet ind_hom(const IndPresentation& a, const IndPresentation& b) {
  a.validate();
  b.validate();
  if (!(*a.base() == *b.base()))
    throw Error(Error::Kind::PreconditionFailed, "presentations have different bases");
  CatPtr J = a.index(), Jp = b.index(), I = a.base();

  IndHomSet out;
  out.a = a;
  out.b = b;
  int nj = J->nobj();
  out.atoms.resize(nj);
  out.class_of.resize(nj);
  out.nclasses.assign(nj, 0);
  for (int j = 0; j < nj; ++j) {
    auto& row = out.atoms[j];
    for (int jp = 0; jp < Jp->nobj(); ++jp)
      for (int f : I->hom(a.diagram.on_obj(j), b.diagram.on_obj(jp)))
        row.emplace_back(jp, f);
    UnionFind uf((int)row.size());
    for (int k = 0; k < (int)row.size(); ++k) {
      auto [jp, f] = row[k];
      for (int u = 0; u < Jp->nmor(); ++u) {
        if (Jp->src(u) != jp) continue;
        int g = I->compose(b.diagram.on_mor(u), f);
        int k2 = -1;
        auto key = std::make_pair(Jp->tgt(u), g);
        auto it = std::lower_bound(row.begin(), row.end(), key);
        k2 = (int)(it - row.begin());
        uf.join(k, k2);
      }
    }
    out.class_of[j] = number_classes(uf, (int)row.size(), out.nclasses[j]);
  }

  // precomposition along each transition of the source index, as a map on
  // classes; the quotient makes it well defined, which is rechecked here
  std::vector<std::vector<int>> pre(J->nmor());
  for (int m = 0; m < J->nmor(); ++m) {
    int j1 = J->src(m), j2 = J->tgt(m);
    pre[m].assign(out.nclasses[j2], -1);
    for (int k = 0; k < (int)out.atoms[j2].size(); ++k) {
      auto [jp, g] = out.atoms[j2][k];
      int c1 = out.cls(j1, jp, I->compose(g, a.diagram.on_mor(m)));
      int& slot = pre[m][out.class_of[j2][k]];
      if (slot < 0)
        slot = c1;
      else if (slot != c1)
        throw Error(Error::Kind::ValidationError,
                    "precomposition is not constant on colimit classes");
    }
  }

  // the limit: one class per j, compatible with every transition
  std::vector<int> pick(nj, -1);
  std::function<void(int)> go = [&](int j) {
    if (j == nj) {
      out.elems.push_back(pick);
      return;
    }
    for (int c = 0; c < out.nclasses[j]; ++c) {
      bool ok = true;
      for (int m = 0; m < J->nmor() && ok; ++m) {
        int j1 = J->src(m), j2 = J->tgt(m);
        if (j2 == j && j1 <= j && pick[j1] >= 0 && pre[m][c] != pick[j1]) ok = false;
        if (j1 == j && j2 < j && pick[j2] >= 0 && pre[m][pick[j2]] != c) ok = false;
        if (j1 == j && j2 == j && pre[m][c] != c) ok = false;
      }
      if (!ok) continue;
      pick[j] = c;
      go(j + 1);
      pick[j] = -1;
    }
  };
  go(0);
  return out;
}

std::vector<int> ind_identity(const IndHomSet& aa) {
  std::vector<int> e(aa.atoms.size());
  for (size_t j = 0; j < aa.atoms.size(); ++j) {
    int obj = aa.a.diagram.on_obj((int)j);
    e[j] = aa.cls((int)j, (int)j, aa.a.base()->idm[obj]);
  }
  return e;
}

std::vector<int> ind_compose(const IndHomSet& bc, const std::vector<int>& g,
                             const IndHomSet& ab, const std::vector<int>& f,
                             const IndHomSet& ac) {
  CatPtr I = ab.a.base();
  int nj = (int)ab.atoms.size();
  std::vector<int> out(nj, -1);
  for (int j = 0; j < nj; ++j) {
    // every pair of representatives must land in one class of ac
    for (int k = 0; k < (int)ab.atoms[j].size(); ++k) {
      if (ab.class_of[j][k] != f[j]) continue;
      auto [jb, u] = ab.atoms[j][k];
      for (int l = 0; l < (int)bc.atoms[jb].size(); ++l) {
        if (bc.class_of[jb][l] != g[jb]) continue;
        auto [jc, v] = bc.atoms[jb][l];
        int c = ac.cls(j, jc, I->compose(v, u));
        if (out[j] < 0)
          out[j] = c;
        else if (out[j] != c)
          throw Error(Error::Kind::ValidationError,
                      "composite depends on the representative");
      }
    }
  }
  if (std::find(ac.elems.begin(), ac.elems.end(), out) == ac.elems.end())
    throw Error(Error::Kind::ValidationError, "composite is not a limit element");
  return out;
}

namespace {

// presheaf_of with the atom bookkeeping kept: per base object, the atoms
// (j, f : c -> i_j) in canonical order and their colimit class.
struct ColimReps {
  SetFunctor fun;
  std::vector<std::vector<std::pair<int, int>>> atoms;
  std::vector<std::vector<int>> class_of;
  std::vector<int> nclasses;

  int cls(int c, int j, int mor) const {
    auto& row = atoms[c];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(j, mor));
    return class_of[c][it - row.begin()];
  }
};

ColimReps colim_reps(const IndPresentation& a) {
  CatPtr J = a.index(), I = a.base();
  ColimReps out;
  int n = I->nobj();
  out.atoms.resize(n);
  out.class_of.resize(n);
  out.nclasses.assign(n, 0);
  SetFunctor x;
  x.base = I;
  x.contravariant = true;
  x.at.resize(n);
  x.act.resize(I->nmor());
  for (int c = 0; c < n; ++c) {
    auto& row = out.atoms[c];
    for (int j = 0; j < J->nobj(); ++j)
      for (int f : I->hom(c, a.diagram.on_obj(j))) row.emplace_back(j, f);
    UnionFind uf((int)row.size());
    for (int k = 0; k < (int)row.size(); ++k) {
      auto [j, f] = row[k];
      for (int u = 0; u < J->nmor(); ++u) {
        if (J->src(u) != j) continue;
        auto key = std::make_pair(J->tgt(u), I->compose(a.diagram.on_mor(u), f));
        auto it = std::lower_bound(row.begin(), row.end(), key);
        uf.join(k, (int)(it - row.begin()));
      }
    }
    out.class_of[c] = number_classes(uf, (int)row.size(), out.nclasses[c]);
    x.at[c].resize(out.nclasses[c]);
    for (int k = 0; k < (int)row.size(); ++k) {
      int cl = out.class_of[c][k];
      if (x.at[c][cl].empty())
        x.at[c][cl] =
            "j" + std::to_string(row[k].first) + "." + I->mors[row[k].second].name;
    }
  }
  for (int m = 0; m < I->nmor(); ++m) {
    int cs = I->src(m), ct = I->tgt(m);
    x.act[m].assign(out.nclasses[ct], -1);
    for (int k = 0; k < (int)out.atoms[ct].size(); ++k) {
      auto [j, f] = out.atoms[ct][k];
      x.act[m][out.class_of[ct][k]] = out.cls(cs, j, I->compose(f, m));
    }
  }
  x.validate();
  out.fun = x;
  return out;
}

} // namespace

SetFunctor presheaf_of(const IndPresentation& a) {
  a.validate();
  return colim_reps(a).fun;
}

IndHomBijection ind_hom_bijection(const IndHomSet& hom) {
  CatPtr I = hom.a.base();
  auto pa = colim_reps(hom.a);
  auto pb = colim_reps(hom.b);
  IndHomBijection out;
  for (auto& e : hom.elems) {
    SetNatMap nm;
    nm.src = pa.fun;
    nm.tgt = pb.fun;
    nm.comp.resize(I->nobj());
    for (int c = 0; c < I->nobj(); ++c) {
      nm.comp[c].assign(pa.nclasses[c], -1);
      for (int k = 0; k < (int)pa.atoms[c].size(); ++k) {
        auto [j, f] = pa.atoms[c][k];
        // push f through every representative of the chosen class at j
        for (int l = 0; l < (int)hom.atoms[j].size(); ++l) {
          if (hom.class_of[j][l] != e[j]) continue;
          auto [jp, g] = hom.atoms[j][l];
          int img = pb.cls(c, jp, I->compose(g, f));
          int& slot = nm.comp[c][pa.class_of[c][k]];
          if (slot < 0)
            slot = img;
          else if (slot != img)
            throw Error(Error::Kind::ValidationError,
                        "hom image depends on the representative");
        }
      }
    }
    nm.validate();
    out.images.push_back(std::move(nm));
  }
  out.injective = true;
  for (size_t i = 0; i < out.images.size() && out.injective; ++i)
    for (size_t k = i + 1; k < out.images.size(); ++k)
      if (out.images[i].comp == out.images[k].comp) {
        out.injective = false;
        break;
      }
  auto all = hom_presheaves(pa.fun, pb.fun);
  out.surjective = true;
  for (auto& nm : all) {
    bool hit = false;
    for (auto& img : out.images)
      if (img.comp == nm.comp) {
        hit = true;
        break;
      }
    if (!hit) {
      out.surjective = false;
      break;
    }
  }
  out.bijective = out.injective && out.surjective && all.size() == out.images.size();
  return out;
}

IndRecognition is_ind_object(const SetFunctor& x, long long budget) {
  if (!x.contravariant)
    throw Error(Error::Kind::VarianceMismatch, "recognition takes a presheaf");
  IndRecognition rec;
  rec.elem = elements(x);
  rec.ok = is_filtered_exact(rec.elem.cat);
  if (rec.ok) {
    rec.presentation = IndPresentation{rec.elem.proj};
  } else {
    try {
      auto rep = is_filtered_at_level(rec.elem.cat, rec.elem.cat->nobj() + 2, budget);
      rec.obstruction = rep.failing;
    } catch (const Error& e) {
      if (e.kind != Error::Kind::BoundExceeded) throw;
    }
  }
  return rec;
}

SetFunctor split_presheaf(CatPtr i, const Projector& p) {
  SetFunctor x;
  x.base = i;
  x.contravariant = true;
  x.at.resize(i->nobj());
  std::vector<std::vector<int>> members(i->nobj());
  for (int d = 0; d < i->nobj(); ++d)
    for (int f : i->hom(d, p.carrier))
      if (i->compose(p.endo, f) == f) {
        members[d].push_back(f);
        x.at[d].push_back(i->mors[f].name);
      }
  x.act.resize(i->nmor());
  for (int m = 0; m < i->nmor(); ++m) {
    int cs = i->src(m), ct = i->tgt(m);
    for (int f : members[ct]) {
      int g = i->compose(f, m);
      auto it = std::lower_bound(members[cs].begin(), members[cs].end(), g);
      x.act[m].push_back((int)(it - members[cs].begin()));
    }
  }
  x.validate();
  return x;
}

namespace {

bool iso_exists(const SetFunctor& x, const SetFunctor& y) {
  for (auto& nm : hom_presheaves(x, y))
    if (nm.is_iso()) return true;
  return false;
}

} // namespace

KaroubiIdReport karoubi_identification(CatPtr i, int value_bound, long long budget) {
  KaroubiIdReport rep;
  rep.ka = karoubi_closure(i);
  rep.value_bound = value_bound;
  for (int o = 0; o < rep.ka.cat->nobj(); ++o)
    rep.images.push_back(split_presheaf(i, rep.ka.objs[o]));

  rep.fully_faithful = true;
  for (int o1 = 0; o1 < rep.ka.cat->nobj() && rep.fully_faithful; ++o1)
    for (int o2 = 0; o2 < rep.ka.cat->nobj() && rep.fully_faithful; ++o2) {
      std::vector<std::vector<std::vector<int>>> induced;
      for (int m : rep.ka.cat->hom(o1, o2)) {
        int g = rep.ka.underlying[m];
        SetNatMap nm;
        nm.src = rep.images[o1];
        nm.tgt = rep.images[o2];
        nm.comp.resize(i->nobj());
        for (int d = 0; d < i->nobj(); ++d)
          for (auto& name : rep.images[o1].at[d]) {
            int f = i->mor_index(name);
            int h = i->compose(g, f);
            auto& tgt = rep.images[o2].at[d];
            nm.comp[d].push_back(
                (int)(std::find(tgt.begin(), tgt.end(), i->mors[h].name) - tgt.begin()));
          }
        nm.validate();
        induced.push_back(nm.comp);
      }
      std::sort(induced.begin(), induced.end());
      if (std::adjacent_find(induced.begin(), induced.end()) != induced.end())
        rep.fully_faithful = false;
      else if (induced.size() != hom_presheaves(rep.images[o1], rep.images[o2]).size())
        rep.fully_faithful = false;
    }

  rep.image_matches_criterion = true;
  rep.terminal_conjecture = true;
  long long used = 0;
  for_each_setfunctor(i, true, value_bound, [&](const SetFunctor& x) {
    if (++used > budget)
      throw Error(Error::Kind::BoundExceeded, "presheaf sweep budget exhausted");
    rep.swept = used;
    bool in_image = false;
    for (auto& img : rep.images)
      if (iso_exists(x, img)) {
        in_image = true;
        break;
      }
    if (in_image) {
      bool fresh = true;
      for (auto& cl : rep.image_classes)
        if (iso_exists(x, cl)) {
          fresh = false;
          break;
        }
      if (fresh) rep.image_classes.push_back(x);
    }
    bool ind = is_ind_object(x, budget).ok;
    auto w = compact_witness_search(x, 2, budget);
    bool criterion = ind && w.has_value() && w->shape.n() == 1;
    if (criterion != in_image && rep.image_matches_criterion) {
      rep.image_matches_criterion = false;
      rep.criterion_mismatch = x;
    }
    // the sharpened conjecture, decided by the materialized closure
    bool term = karoubi_closure(elements(x).cat).cat->terminal_object().has_value();
    if (term != in_image && rep.terminal_conjecture) {
      rep.terminal_conjecture = false;
      rep.terminal_mismatch = x;
    }
    return true;
  });
  return rep;
}

ProdDemoReport pullback_failure_demo(int n) {
  if (n < 2) throw Error(Error::Kind::PreconditionFailed, "demo needs n >= 2");
  ProdDemoReport rep;
  rep.n = n;
  auto chain = chain_cat(n);
  std::vector<int> evens, odds;
  for (int k = 0; k <= n; ++k) (k % 2 == 0 ? evens : odds).push_back(k);
  auto e = full_subcat(chain, evens);
  auto o = full_subcat(chain, odds);
  rep.strict_empty = fiber_product(e.incl, o.incl).cat->nobj() == 0;
  rep.lax_nonempty = lax_fiber_product(e.incl, o.incl).cat->nobj() > 0;
  rep.even_cofinal = check_cofinal(e.incl).cofinal;
  rep.odd_cofinal = check_cofinal(o.incl).cofinal;
  return rep;
}

} // namespace kancalc
