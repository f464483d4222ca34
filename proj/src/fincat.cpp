#include "kancalc/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kancalc {

const char* error_kind_name(Error::Kind k) {
  switch (k) {
    case Error::Kind::MissingComposite: return "MissingComposite";
    case Error::Kind::AssociativityViolation: return "AssociativityViolation";
    case Error::Kind::IdentityViolation: return "IdentityViolation";
    case Error::Kind::DanglingEndpoint: return "DanglingEndpoint";
    case Error::Kind::DuplicateName: return "DuplicateName";
    case Error::Kind::NonMonotoneLambda: return "NonMonotoneLambda";
    case Error::Kind::VarianceMismatch: return "VarianceMismatch";
    case Error::Kind::BoundExceeded: return "BoundExceeded";
    case Error::Kind::PreconditionFailed: return "PreconditionFailed";
    case Error::Kind::ParseError: return "ParseError";
    case Error::Kind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < nmor(); ++m)
    if (mors[m].src == a && mors[m].tgt == b) out.push_back(m);
  return out;
}

int FinCat::obj_index(const std::string& name) const {
  for (int i = 0; i < nobj(); ++i)
    if (objects[i] == name) return i;
  return -1;
}

int FinCat::mor_index(const std::string& name) const {
  for (int i = 0; i < nmor(); ++i)
    if (mors[i].name == name) return i;
  return -1;
}

bool FinCat::is_idempotent(int m) const {
  return mors[m].src == mors[m].tgt && table[m][m] == m;
}

bool FinCat::is_invertible(int m) const { return inverse(m).has_value(); }

std::optional<int> FinCat::inverse(int m) const {
  for (int g : hom(mors[m].tgt, mors[m].src))
    if (table[g][m] == idm[mors[m].src] && table[m][g] == idm[mors[m].tgt]) return g;
  return std::nullopt;
}

std::vector<int> FinCat::idempotents() const {
  std::vector<int> out;
  for (int m = 0; m < nmor(); ++m)
    if (is_idempotent(m)) out.push_back(m);
  return out;
}

std::optional<int> FinCat::initial_object() const {
  for (int a = 0; a < nobj(); ++a) {
    bool ok = true;
    for (int b = 0; b < nobj() && ok; ++b) ok = hom(a, b).size() == 1;
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<int> FinCat::terminal_object() const {
  for (int b = 0; b < nobj(); ++b) {
    bool ok = true;
    for (int a = 0; a < nobj() && ok; ++a) ok = hom(a, b).size() == 1;
    if (ok) return b;
  }
  return std::nullopt;
}

bool FinCat::operator==(const FinCat& o) const {
  if (objects != o.objects || idm != o.idm || table != o.table) return false;
  if (mors.size() != o.mors.size()) return false;
  for (size_t i = 0; i < mors.size(); ++i)
    if (mors[i].name != o.mors[i].name || mors[i].src != o.mors[i].src ||
        mors[i].tgt != o.mors[i].tgt)
      return false;
  return true;
}

static void check_laws(const FinCat& c) {
  const int no = c.nobj(), nm = c.nmor();
  {
    std::set<std::string> seen;
    for (auto& s : c.objects)
      if (!seen.insert(s).second)
        throw Error(Error::Kind::DuplicateName, "duplicate object name '" + s + "'");
    seen.clear();
    for (auto& m : c.mors)
      if (!seen.insert(m.name).second)
        throw Error(Error::Kind::DuplicateName, "duplicate morphism name '" + m.name + "'");
  }
  for (auto& m : c.mors)
    if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no)
      throw Error(Error::Kind::DanglingEndpoint,
                  "morphism '" + m.name + "' has an endpoint outside the object list");
  if (static_cast<int>(c.idm.size()) != no)
    throw Error(Error::Kind::IdentityViolation, "identity map does not cover all objects");
  for (int a = 0; a < no; ++a) {
    int e = c.idm[a];
    if (e < 0 || e >= nm || c.mors[e].src != a || c.mors[e].tgt != a)
      throw Error(Error::Kind::IdentityViolation,
                  "identity of object '" + c.objects[a] + "' is not an endomorphism of it");
  }
  if (static_cast<int>(c.table.size()) != nm)
    throw Error(Error::Kind::MissingComposite, "composition table has wrong shape");
  for (int g = 0; g < nm; ++g) {
    if (static_cast<int>(c.table[g].size()) != nm)
      throw Error(Error::Kind::MissingComposite, "composition table has wrong shape");
    for (int f = 0; f < nm; ++f) {
      int h = c.table[g][f];
      if (!c.composable(g, f)) {
        if (h != -1)
          throw Error(Error::Kind::ValidationError,
                      "composite declared for non-composable pair (" + c.mors[g].name + ", " +
                          c.mors[f].name + ")");
        continue;
      }
      if (h < 0 || h >= nm)
        throw Error(Error::Kind::MissingComposite,
                    "missing composite " + c.mors[g].name + " o " + c.mors[f].name);
      if (c.mors[h].src != c.mors[f].src || c.mors[h].tgt != c.mors[g].tgt)
        throw Error(Error::Kind::ValidationError,
                    "composite " + c.mors[g].name + " o " + c.mors[f].name +
                        " has wrong endpoints");
    }
  }
  for (int f = 0; f < nm; ++f) {
    if (c.table[c.idm[c.mors[f].tgt]][f] != f || c.table[f][c.idm[c.mors[f].src]] != f)
      throw Error(Error::Kind::IdentityViolation,
                  "identity law fails at morphism '" + c.mors[f].name + "'");
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < nm; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.table[c.table[h][g]][f] != c.table[h][c.table[g][f]])
          throw Error(Error::Kind::AssociativityViolation,
                      "associativity fails on (" + c.mors[h].name + ", " + c.mors[g].name +
                          ", " + c.mors[f].name + ")");
      }
    }
}

FinCat FinCat::validated_unsorted(std::vector<std::string> objects, std::vector<Mor> mors,
                                  std::vector<int> idm, std::vector<std::vector<int>> table) {
  FinCat c;
  c.objects = std::move(objects);
  c.mors = std::move(mors);
  c.idm = std::move(idm);
  c.table = std::move(table);
  check_laws(c);
  return c;
}

FinCat FinCat::validated(std::vector<std::string> objects, std::vector<Mor> mors,
                         std::vector<int> idm, std::vector<std::vector<int>> table) {
  const int no = static_cast<int>(objects.size());
  const int nm = static_cast<int>(mors.size());
  std::vector<int> operm(no), mperm(nm);
  std::iota(operm.begin(), operm.end(), 0);
  std::iota(mperm.begin(), mperm.end(), 0);
  std::sort(operm.begin(), operm.end(),
            [&](int a, int b) { return objects[a] < objects[b]; });
  std::sort(mperm.begin(), mperm.end(),
            [&](int a, int b) { return mors[a].name < mors[b].name; });
  std::vector<int> oinv(no), minv(nm);
  for (int i = 0; i < no; ++i) oinv[operm[i]] = i;
  for (int i = 0; i < nm; ++i) minv[mperm[i]] = i;

  FinCat c;
  c.objects.resize(no);
  for (int i = 0; i < no; ++i) c.objects[i] = objects[operm[i]];
  c.mors.resize(nm);
  for (int i = 0; i < nm; ++i) {
    const Mor& m = mors[mperm[i]];
    if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no)
      throw Error(Error::Kind::DanglingEndpoint,
                  "morphism '" + m.name + "' has an endpoint outside the object list");
    c.mors[i] = Mor{m.name, oinv[m.src], oinv[m.tgt]};
  }
  if (static_cast<int>(idm.size()) != no)
    throw Error(Error::Kind::IdentityViolation, "identity map does not cover all objects");
  c.idm.resize(no);
  for (int a = 0; a < no; ++a) {
    int e = idm[operm[a]];
    if (e < 0 || e >= nm)
      throw Error(Error::Kind::IdentityViolation, "identity index out of range");
    c.idm[a] = minv[e];
  }
  c.table.assign(nm, std::vector<int>(nm, -1));
  if (static_cast<int>(table.size()) != nm)
    throw Error(Error::Kind::MissingComposite, "composition table has wrong shape");
  for (int g = 0; g < nm; ++g) {
    if (static_cast<int>(table[g].size()) != nm)
      throw Error(Error::Kind::MissingComposite, "composition table has wrong shape");
    for (int f = 0; f < nm; ++f) {
      int h = table[g][f];
      c.table[minv[g]][minv[f]] = (h < 0) ? -1 : (h >= nm ? h : minv[h]);
    }
  }
  check_laws(c);
  return c;
}

CatBuilder::CatBuilder(std::string n) : name(std::move(n)) {}

void CatBuilder::add_object(const std::string& obj) { objects_.push_back(obj); }

void CatBuilder::add_mor(const std::string& nm, const std::string& s, const std::string& t) {
  mor_names_.push_back(nm);
  endpoint_src_.push_back(s);
  endpoint_tgt_.push_back(t);
}

void CatBuilder::set_compose(const std::string& g, const std::string& f, const std::string& h) {
  composites_.emplace_back(g, f, h);
}

FinCat CatBuilder::build() const {
  std::vector<std::string> objects = objects_;
  std::vector<Mor> mors;
  std::vector<std::string> names;
  auto oidx = [&](const std::string& s) {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == s) return static_cast<int>(i);
    throw Error(Error::Kind::DanglingEndpoint, "unknown object '" + s + "'");
  };
  // implicit identities, named id_<obj>
  std::vector<int> idm;
  for (auto& o : objects) {
    names.push_back("id_" + o);
    mors.push_back(Mor{"id_" + o, oidx(o), oidx(o)});
    idm.push_back(static_cast<int>(mors.size()) - 1);
  }
  for (size_t i = 0; i < mor_names_.size(); ++i) {
    names.push_back(mor_names_[i]);
    mors.push_back(Mor{mor_names_[i], oidx(endpoint_src_[i]), oidx(endpoint_tgt_[i])});
  }
  auto midx = [&](const std::string& s) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw Error(Error::Kind::ValidationError, "unknown morphism '" + s + "'");
  };
  const int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> table(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f) {
    table[idm[mors[f].tgt]][f] = f;
    table[f][idm[mors[f].src]] = f;
  }
  for (auto& [g, f, h] : composites_) {
    int gi = midx(g), fi = midx(f), hi = midx(h);
    if (mors[fi].tgt != mors[gi].src)
      throw Error(Error::Kind::ValidationError,
                  "declared composite " + g + " o " + f + " is not composable");
    table[gi][fi] = hi;
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (mors[f].tgt == mors[g].src && table[g][f] < 0)
        throw Error(Error::Kind::MissingComposite,
                    "missing composite " + mors[g].name + " o " + mors[f].name);
  return FinCat::validated(std::move(objects), std::move(mors), std::move(idm), std::move(table));
}

CatPtr CatBuilder::build_ptr() const { return make_cat(build()); }

CatPtr make_cat(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

FinCat from_parts(std::vector<std::string> objects, std::vector<Mor> mors,
                  std::vector<int> idm, const std::function<int(int, int)>& comp) {
  const int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> table(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (mors[f].tgt == mors[g].src) table[g][f] = comp(g, f);
  // keeps the given (deterministic) order so callers' index maps stay valid
  return FinCat::validated_unsorted(std::move(objects), std::move(mors), std::move(idm),
                                    std::move(table));
}

CatPtr empty_cat() {
  static CatPtr c = make_cat(FinCat::validated({}, {}, {}, {}));
  return c;
}

CatPtr point_cat() {
  static CatPtr c = [] {
    CatBuilder b;
    b.add_object("pt");
    return b.build_ptr();
  }();
  return c;
}

CatPtr discrete_cat(const std::vector<std::string>& names) {
  CatBuilder b;
  for (auto& n : names) b.add_object(n);
  return b.build_ptr();
}

CatPtr chain_cat(int n) {
  CatBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      b.add_mor("(" + std::to_string(i) + "<=" + std::to_string(j) + ")", std::to_string(i),
                std::to_string(j));
  auto nm = [](int i, int j) {
    return i == j ? "id_" + std::to_string(i)
                  : "(" + std::to_string(i) + "<=" + std::to_string(j) + ")";
  };
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        if (i < j || j < k) b.set_compose(nm(j, k), nm(i, j), nm(i, k));
  return b.build_ptr();
}

CatPtr walking_idempotent() {
  static CatPtr c = [] {
    CatBuilder b;
    b.add_object("x");
    b.add_mor("p", "x", "x");
    b.set_compose("p", "p", "p");
    return b.build_ptr();
  }();
  return c;
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& used) {
  std::string n = base;
  while (std::find(used.begin(), used.end(), n) != used.end()) n += "'";
  return n;
}

} // namespace kancalc
