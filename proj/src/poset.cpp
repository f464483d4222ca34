#include "kancalc/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kancalc {

int Poset::index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

Poset Poset::validated(std::vector<std::string> elements,
                       std::vector<std::vector<char>> leq) {
  Poset j;
  j.elements = std::move(elements);
  j.leq = std::move(leq);
  const int n = j.n();
  {
    std::set<std::string> seen;
    for (auto& e : j.elements)
      if (!seen.insert(e).second)
        throw Error(Error::Kind::DuplicateName, "duplicate element '" + e + "'");
  }
  if (static_cast<int>(j.leq.size()) != n)
    throw Error(Error::Kind::ValidationError, "order relation has wrong shape");
  for (auto& row : j.leq)
    if (static_cast<int>(row.size()) != n)
      throw Error(Error::Kind::ValidationError, "order relation has wrong shape");
  for (int a = 0; a < n; ++a)
    if (!j.le(a, a))
      throw Error(Error::Kind::ValidationError,
                  "order not reflexive at '" + j.elements[a] + "'");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && j.le(a, b) && j.le(b, a))
        throw Error(Error::Kind::ValidationError,
                    "antisymmetry fails on '" + j.elements[a] + "', '" + j.elements[b] + "'");
      if (!j.le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (j.le(b, c) && !j.le(a, c))
          throw Error(Error::Kind::ValidationError,
                      "transitivity fails on '" + j.elements[a] + "' <= '" + j.elements[b] +
                          "' <= '" + j.elements[c] + "'");
    }
  return j;
}

Poset Poset::from_generators(std::vector<std::string> elements,
                             const std::vector<std::pair<int, int>>& gens) {
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) leq[a][a] = 1;
  for (auto& [a, b] : gens) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Error::Kind::DanglingEndpoint, "order generator out of range");
    leq[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq[a][k] && leq[k][b]) leq[a][b] = 1;
  return validated(std::move(elements), std::move(leq));
}

Poset chain_poset(int n) {
  std::vector<std::string> e;
  for (int i = 0; i <= n; ++i) e.push_back(std::to_string(i));
  std::vector<std::vector<char>> leq(n + 1, std::vector<char>(n + 1, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) leq[a][b] = 1;
  return Poset::validated(std::move(e), std::move(leq));
}

Poset discrete_poset(const std::vector<std::string>& names) {
  std::vector<std::vector<char>> leq(names.size(), std::vector<char>(names.size(), 0));
  for (size_t a = 0; a < names.size(); ++a) leq[a][a] = 1;
  return Poset::validated(names, std::move(leq));
}

Poset v_poset() {
  return Poset::from_generators({"o", "0", "1"}, {{0, 1}, {0, 2}});
}

Poset opposite(const Poset& j) {
  std::vector<std::vector<char>> leq(j.n(), std::vector<char>(j.n(), 0));
  for (int a = 0; a < j.n(); ++a)
    for (int b = 0; b < j.n(); ++b) leq[a][b] = j.leq[b][a];
  return Poset::validated(j.elements, std::move(leq));
}

CatPtr as_category(const Poset& j) {
  std::vector<std::string> objects = j.elements;
  std::vector<Mor> mors;
  std::vector<std::vector<int>> midx(j.n(), std::vector<int>(j.n(), -1));
  std::vector<int> idm;
  for (int a = 0; a < j.n(); ++a) {
    idm.push_back(static_cast<int>(mors.size()));
    midx[a][a] = idm.back();
    mors.push_back(Mor{"id_" + j.elements[a], a, a});
  }
  for (int a = 0; a < j.n(); ++a)
    for (int b = 0; b < j.n(); ++b)
      if (a != b && j.le(a, b)) {
        midx[a][b] = static_cast<int>(mors.size());
        mors.push_back(Mor{"(" + j.elements[a] + "<=" + j.elements[b] + ")", a, b});
      }
  auto comp = [&](int g, int f) { return midx[mors[f].src][mors[g].tgt]; };
  return make_cat(from_parts(std::move(objects), mors, std::move(idm), comp));
}

std::optional<Poset> try_as_poset(CatPtr c) {
  const FinCat& C = *c;
  std::vector<std::vector<char>> leq(C.nobj(), std::vector<char>(C.nobj(), 0));
  for (int a = 0; a < C.nobj(); ++a)
    for (int b = 0; b < C.nobj(); ++b) {
      size_t h = C.hom(a, b).size();
      if (h > 1) return std::nullopt;  // not thin
      if (h == 1) {
        if (a != b && !C.hom(b, a).empty()) return std::nullopt;  // not skeletal
        leq[a][b] = 1;
      }
    }
  return Poset::validated(C.objects, std::move(leq));
}

bool poset_iso(const Poset& a, const Poset& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> perm(a.n(), -1);
  std::vector<char> used(a.n(), 0);
  std::function<bool(int)> rec = [&](int i) {
    if (i == a.n()) return true;
    for (int t = 0; t < a.n(); ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        if (a.le(i, k) != b.le(t, perm[k]) || a.le(k, i) != b.le(perm[k], t)) ok = false;
      if (!ok) continue;
      perm[i] = t;
      used[t] = 1;
      if (rec(i + 1)) return true;
      used[t] = 0;
      perm[i] = -1;
    }
    return false;
  };
  return rec(0);
}

FinFunctor thin_functor(CatPtr dom, CatPtr cod, std::vector<int> obj_map) {
  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  f.obj_map = std::move(obj_map);
  for (int m = 0; m < dom->nmor(); ++m) {
    auto h = cod->hom(f.obj_map[dom->src(m)], f.obj_map[dom->tgt(m)]);
    if (h.size() != 1)
      throw Error(Error::Kind::PreconditionFailed,
                  "object map does not induce a functor into the thin category");
    f.mor_map.push_back(h[0]);
  }
  f.validate();
  return f;
}

std::vector<long long> chain_count(const FinCat& c, int max_len) {
  std::vector<long long> out;
  std::vector<long long> ways(c.nobj(), 1);  // chains of the current length ending at b
  out.push_back(c.nobj());
  for (int k = 1; k <= max_len; ++k) {
    std::vector<long long> next(c.nobj(), 0);
    for (int m = 0; m < c.nmor(); ++m)
      if (!c.is_id(m)) next[c.tgt(m)] += ways[c.src(m)];
    out.push_back(std::accumulate(next.begin(), next.end(), 0LL));
    ways = next;
  }
  return out;
}

std::vector<int> height_map(const Poset& j) {
  std::vector<int> ht(j.n(), 0);
  // iterate to a fixed point; heights are bounded by n
  for (int round = 0; round < j.n(); ++round)
    for (int a = 0; a < j.n(); ++a)
      for (int b = 0; b < j.n(); ++b)
        if (a != b && j.le(a, b)) ht[b] = std::max(ht[b], ht[a] + 1);
  return ht;
}

int dimension(const Poset& j) {
  if (j.n() == 0) return -1;
  auto ht = height_map(j);
  return *std::max_element(ht.begin(), ht.end());
}

bool is_left_closed(const Poset& j, const std::vector<char>& members) {
  for (int a = 0; a < j.n(); ++a)
    if (members[a])
      for (int b = 0; b < j.n(); ++b)
        if (j.le(b, a) && !members[b]) return false;
  return true;
}

static std::string subset_name(const Poset& j, const std::vector<char>& mask) {
  std::string s = "{";
  bool first = true;
  for (int a = 0; a < j.n(); ++a)
    if (mask[a]) {
      if (!first) s += ",";
      s += j.elements[a];
      first = false;
    }
  return s + "}";
}

LeftClosedLattice left_closed_sets(const Poset& j) {
  LeftClosedLattice r;
  std::vector<std::string> names;
  for (unsigned long long bits = 0; bits < (1ULL << j.n()); ++bits) {
    std::vector<char> mask(j.n(), 0);
    for (int a = 0; a < j.n(); ++a) mask[a] = (bits >> a) & 1;
    if (!is_left_closed(j, mask)) continue;
    names.push_back(subset_name(j, mask));
    r.masks.push_back(mask);
  }
  const int n = static_cast<int>(r.masks.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool inc = true;
      for (int e = 0; e < j.n() && inc; ++e)
        if (r.masks[a][e] && !r.masks[b][e]) inc = false;
      leq[a][b] = inc;
    }
  r.lattice = Poset::validated(std::move(names), std::move(leq));
  return r;
}

std::vector<char> lambda_closure(const Poset& j, const std::vector<char>& s) {
  std::vector<char> out(j.n(), 0);
  for (int a = 0; a < j.n(); ++a)
    if (s[a])
      for (int b = 0; b < j.n(); ++b)
        if (j.le(b, a)) out[b] = 1;
  return out;
}

GlueResult glue(const GluingDatum& d) {
  const int n0 = d.j0.n(), n1 = d.j1.n();
  if (static_cast<int>(d.lambda.size()) != n1)
    throw Error(Error::Kind::ValidationError, "gluing datum has wrong shape");
  for (int y = 0; y < n1; ++y)
    if (!is_left_closed(d.j0, d.lambda[y]))
      throw Error(Error::Kind::PreconditionFailed,
                  "lambda('" + d.j1.elements[y] + "') is not left-closed");
  for (int y = 0; y < n1; ++y)
    for (int y2 = 0; y2 < n1; ++y2)
      if (d.j1.le(y, y2))
        for (int x = 0; x < n0; ++x)
          if (d.lambda[y][x] && !d.lambda[y2][x])
            throw Error(Error::Kind::NonMonotoneLambda,
                        "lambda is not monotone on '" + d.j1.elements[y] + "' <= '" +
                            d.j1.elements[y2] + "'");
  GlueResult r;
  std::vector<std::string> elements = d.j0.elements;
  for (int x = 0; x < n0; ++x) r.emb0.push_back(x);
  for (int y = 0; y < n1; ++y) {
    std::string nm = fresh_name(d.j1.elements[y], elements);
    r.emb1.push_back(static_cast<int>(elements.size()));
    elements.push_back(nm);
  }
  const int n = n0 + n1;
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n0; ++a)
    for (int b = 0; b < n0; ++b) leq[a][b] = d.j0.leq[a][b];
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) leq[n0 + a][n0 + b] = d.j1.leq[a][b];
  for (int y = 0; y < n1; ++y)
    for (int x = 0; x < n0; ++x) leq[x][n0 + y] = d.lambda[y][x];
  r.glued = Poset::validated(std::move(elements), std::move(leq));
  return r;
}

GluingDatum split(const Poset& j, const std::vector<char>& left_closed) {
  if (!is_left_closed(j, left_closed))
    throw Error(Error::Kind::PreconditionFailed, "subset is not left-closed");
  GluingDatum d;
  std::vector<int> part0, part1;
  for (int a = 0; a < j.n(); ++a) (left_closed[a] ? part0 : part1).push_back(a);
  auto restrict_to = [&](const std::vector<int>& part) {
    std::vector<std::string> e;
    std::vector<std::vector<char>> leq(part.size(), std::vector<char>(part.size(), 0));
    for (size_t a = 0; a < part.size(); ++a) {
      e.push_back(j.elements[part[a]]);
      for (size_t b = 0; b < part.size(); ++b) leq[a][b] = j.leq[part[a]][part[b]];
    }
    return Poset::validated(std::move(e), std::move(leq));
  };
  d.j0 = restrict_to(part0);
  d.j1 = restrict_to(part1);
  for (int y : part1) {
    std::vector<char> mask(part0.size(), 0);
    for (size_t x = 0; x < part0.size(); ++x) mask[x] = j.le(part0[x], y);
    d.lambda.push_back(mask);
  }
  return d;
}

GluingDatum height_decomposition(const Poset& j) {
  int n = dimension(j);
  if (n < 0)
    throw Error(Error::Kind::PreconditionFailed, "empty poset has no height decomposition");
  auto ht = height_map(j);
  std::vector<char> below(j.n(), 0);
  for (int a = 0; a < j.n(); ++a) below[a] = ht[a] < n;
  return split(j, below);
}

CoproductCat coproduct(const std::vector<CatPtr>& parts) {
  CoproductCat r;
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> idm;
  std::vector<int> part_of_mor, obase, mbase;
  for (size_t k = 0; k < parts.size(); ++k) {
    const FinCat& C = *parts[k];
    std::string pre = std::to_string(k) + ".";
    obase.push_back(static_cast<int>(objects.size()));
    mbase.push_back(static_cast<int>(mors.size()));
    for (auto& o : C.objects) objects.push_back(pre + o);
    for (auto& m : C.mors) {
      mors.push_back(Mor{pre + m.name, obase[k] + m.src, obase[k] + m.tgt});
      part_of_mor.push_back(static_cast<int>(k));
    }
    for (int a = 0; a < C.nobj(); ++a) idm.push_back(mbase[k] + C.idm[a]);
  }
  auto comp = [&](int g, int f) {
    int k = part_of_mor[g];
    return mbase[k] + parts[k]->compose(g - mbase[k], f - mbase[k]);
  };
  r.cat = make_cat(from_parts(std::move(objects), mors, std::move(idm), comp));
  for (size_t k = 0; k < parts.size(); ++k) {
    FinFunctor in;
    in.dom = parts[k];
    in.cod = r.cat;
    for (int a = 0; a < parts[k]->nobj(); ++a) in.obj_map.push_back(obase[k] + a);
    for (int m = 0; m < parts[k]->nmor(); ++m) in.mor_map.push_back(mbase[k] + m);
    r.inj.push_back(std::move(in));
  }
  return r;
}

PushoutSquare pushout_square(const Poset& j) {
  GluingDatum d = height_decomposition(j);
  PushoutSquare sq;
  sq.total = as_category(j);
  sq.below = as_category(d.j0);
  GlueResult g = glue(d);  // same order as j up to relabeling; recover index maps
  // element order of glue(d): d.j0 elements then d.j1 elements; map into j by name
  std::vector<int> into_j0(d.j0.n()), into_j1(d.j1.n());
  for (int x = 0; x < d.j0.n(); ++x) into_j0[x] = j.index(d.j0.elements[x]);
  for (int y = 0; y < d.j1.n(); ++y) into_j1[y] = j.index(d.j1.elements[y]);
  std::vector<CatPtr> pieces, cones;
  std::vector<std::vector<int>> piece_elems;  // local -> j0 index
  std::vector<int> tips;
  for (int y = 0; y < d.j1.n(); ++y) {
    std::vector<int> members;
    for (int x = 0; x < d.j0.n(); ++x)
      if (d.lambda[y][x]) members.push_back(x);
    std::vector<std::string> e;
    std::vector<std::vector<char>> leq(members.size(), std::vector<char>(members.size(), 0));
    for (size_t a = 0; a < members.size(); ++a) {
      e.push_back(d.j0.elements[members[a]]);
      for (size_t b = 0; b < members.size(); ++b)
        leq[a][b] = d.j0.leq[members[a]][members[b]];
    }
    CatPtr piece = as_category(Poset::validated(std::move(e), std::move(leq)));
    ConedCat cone = add_terminal(piece);
    pieces.push_back(piece);
    cones.push_back(cone.cat);
    tips.push_back(cone.tip);
    piece_elems.push_back(members);
  }
  CoproductCat corner = coproduct(pieces);
  CoproductCat cone_corner = coproduct(cones);
  sq.corner = corner.cat;
  sq.cone_corner = cone_corner.cat;
  // top: each piece includes into its cone
  std::vector<int> top_obj(sq.corner->nobj());
  std::vector<int> left_obj(sq.corner->nobj());
  for (size_t k = 0; k < pieces.size(); ++k)
    for (int a = 0; a < pieces[k]->nobj(); ++a) {
      top_obj[corner.inj[k].obj_map[a]] = cone_corner.inj[k].obj_map[a];
      left_obj[corner.inj[k].obj_map[a]] = piece_elems[k][a];
    }
  sq.top = thin_functor(sq.corner, sq.cone_corner, top_obj);
  sq.left = thin_functor(sq.corner, sq.below, left_obj);
  // right: piece objects into J, tip of piece y to the top element y
  std::vector<int> right_obj(sq.cone_corner->nobj());
  for (size_t k = 0; k < cones.size(); ++k)
    for (int a = 0; a < cones[k]->nobj(); ++a) {
      int global = cone_corner.inj[k].obj_map[a];
      right_obj[global] = (a == tips[k]) ? into_j1[k] : into_j0[piece_elems[k][a]];
    }
  sq.right = thin_functor(sq.cone_corner, sq.total, right_obj);
  std::vector<int> bottom_obj(d.j0.n());
  for (int x = 0; x < d.j0.n(); ++x) bottom_obj[x] = into_j0[x];
  sq.bottom = thin_functor(sq.below, sq.total, bottom_obj);
  (void)g;
  return sq;
}

bool check_cocartesian(const PushoutSquare& sq, const std::vector<CatPtr>& targets) {
  for (CatPtr e : targets) {
    auto from_total = all_functors(sq.total, e);
    // images under restriction must be pairwise distinct and hit every
    // matching pair exactly once
    std::vector<std::pair<FinFunctor, FinFunctor>> images;
    for (auto& h : from_total) images.emplace_back(compose(h, sq.bottom), compose(h, sq.right));
    for (size_t i = 0; i < images.size(); ++i)
      for (size_t k = i + 1; k < images.size(); ++k)
        if (images[i].first == images[k].first && images[i].second == images[k].second)
          return false;
    size_t pairs = 0;
    for (auto& f : all_functors(sq.below, e))
      for (auto& g : all_functors(sq.cone_corner, e))
        if (compose(f, sq.left) == compose(g, sq.top)) ++pairs;
    if (pairs != images.size()) return false;
  }
  return true;
}

DirectedReport is_directed(const Poset& j) {
  DirectedReport r;
  if (j.n() == 0) return r;  // no element bounds the empty subset
  for (int a = 0; a < j.n(); ++a)
    for (int b = 0; b < j.n(); ++b) {
      bool found = false;
      for (int c = 0; c < j.n() && !found; ++c)
        if (j.le(a, c) && j.le(b, c)) found = true;
      if (!found) {
        r.witness = {a, b};
        return r;
      }
    }
  r.directed = true;
  for (int g = 0; g < j.n(); ++g) {
    bool top = true;
    for (int a = 0; a < j.n() && top; ++a) top = j.le(a, g);
    if (top) {
      r.greatest = g;
      break;
    }
  }
  return r;
}

} // namespace kancalc
