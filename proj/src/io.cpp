#include "kancalc/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kancalc {

namespace {

struct Tok {
  std::string s;
  int line = 0;
  int col = 0;
};

struct PLine {
  std::vector<Tok> toks;
  int line = 0;
};

[[noreturn]] void fail(const std::string& origin, int line, int col, const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ":" << col << ": " << msg;
  throw Error(Error::Kind::ParseError, os.str());
}

[[noreturn]] void fail_at(const std::string& origin, const Tok& t, const std::string& msg) {
  fail(origin, t.line, t.col, msg);
}

std::vector<PLine> tokenize(const std::string& text) {
  std::vector<PLine> out;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    ++lineno;
    PLine pl;
    pl.line = lineno;
    for (size_t i = 0; i < line.size();) {
      if (line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '#')
        ++i;
      pl.toks.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    if (!pl.toks.empty()) out.push_back(std::move(pl));
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

/// Header line `<kind> <name>`; returns the name.
std::string header(const std::vector<PLine>& lines, const std::string& kind,
                   const std::string& origin) {
  if (lines.empty()) fail(origin, 1, 1, "empty file, expected '" + kind + " <name>'");
  auto& h = lines[0];
  if (h.toks[0].s != kind)
    fail_at(origin, h.toks[0], "expected '" + kind + " <name>'");
  if (h.toks.size() != 2)
    fail(origin, h.line, h.toks[0].col, "expected '" + kind + " <name>'");
  return h.toks[1].s;
}

/// A `key:` directive token, with the colon either fused or standalone.
bool is_key(const PLine& pl, const std::string& key) {
  return pl.toks[0].s == key + ":";
}

/// Strips a trailing colon from `t`, failing when absent.
std::string strip_colon(const std::string& origin, const Tok& t) {
  if (t.s.size() < 2 || t.s.back() != ':')
    fail_at(origin, t, "expected '<name>:', got '" + t.s + "'");
  return t.s.substr(0, t.s.size() - 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Error::Kind::ParseError, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string resolve(const std::string& from, const std::string& ref) {
  std::filesystem::path p(ref);
  if (p.is_absolute()) return ref;
  return (std::filesystem::path(from).parent_path() / p).string();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

/// Covering pairs of the strict order, sorted by names.
std::vector<std::pair<int, int>> hasse_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < p.n(); ++b) {
      if (a == b || !p.le(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < p.n() && covering; ++c)
        if (c != a && c != b && p.le(a, c) && p.le(c, b)) covering = false;
      if (covering) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end(), [&](auto& x, auto& y) {
    if (p.elements[x.first] != p.elements[y.first])
      return p.elements[x.first] < p.elements[y.first];
    return p.elements[x.second] < p.elements[y.second];
  });
  return out;
}

} // namespace

LoadedCategory parse_category(const std::string& text, const std::string& origin) {
  auto lines = tokenize(text);
  LoadedCategory out;
  out.name = header(lines, "category", origin);
  CatBuilder b(out.name);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "objects")) {
      for (size_t k = 1; k < pl.toks.size(); ++k) b.add_object(pl.toks[k].s);
    } else if (pl.toks[0].s == "mor") {
      if (pl.toks.size() != 6 || pl.toks[2].s != ":" || pl.toks[4].s != "->")
        fail(origin, pl.line, pl.toks[0].col, "expected 'mor <name> : <src> -> <tgt>'");
      b.add_mor(pl.toks[1].s, pl.toks[3].s, pl.toks[5].s);
    } else if (pl.toks[0].s == "compose") {
      if (pl.toks.size() != 5 || pl.toks[3].s != "=")
        fail(origin, pl.line, pl.toks[0].col, "expected 'compose <g> <f> = <h>'");
      b.set_compose(pl.toks[1].s, pl.toks[2].s, pl.toks[4].s);
    } else {
      fail_at(origin, pl.toks[0], "unknown directive '" + pl.toks[0].s + "'");
    }
  }
  out.cat = b.build_ptr();
  return out;
}

LoadedPoset parse_poset(const std::string& text, const std::string& origin) {
  auto lines = tokenize(text);
  LoadedPoset out;
  out.name = header(lines, "poset", origin);
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> gens;
  auto eidx = [&](const Tok& t, const std::string& name) {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == name) return static_cast<int>(i);
    fail_at(origin, t, "unknown element '" + name + "'");
  };
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "elements")) {
      for (size_t k = 1; k < pl.toks.size(); ++k) {
        for (auto& e : elements)
          if (e == pl.toks[k].s)
            fail_at(origin, pl.toks[k], "duplicate element '" + e + "'");
        elements.push_back(pl.toks[k].s);
      }
    } else if (is_key(pl, "le")) {
      for (size_t k = 1; k < pl.toks.size(); ++k) {
        auto& t = pl.toks[k];
        size_t sep = t.s.find("<=");
        if (sep == std::string::npos || sep == 0 || sep + 2 >= t.s.size())
          fail_at(origin, t, "expected '<a><=<b>', got '" + t.s + "'");
        gens.emplace_back(eidx(t, t.s.substr(0, sep)), eidx(t, t.s.substr(sep + 2)));
      }
    } else {
      fail_at(origin, pl.toks[0], "unknown directive '" + pl.toks[0].s + "'");
    }
  }
  out.poset = Poset::from_generators(std::move(elements), gens);
  return out;
}

LoadedCategory load_category(const std::string& path) {
  return parse_category(read_file(path), path);
}

LoadedPoset load_poset(const std::string& path) {
  return parse_poset(read_file(path), path);
}

LoadedSetFun load_setfun(const std::string& path) {
  auto lines = tokenize(read_file(path));
  LoadedSetFun out;
  out.name = header(lines, "setfun", path);
  // first pass: the base reference and the variance
  bool contra = true;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "base")) {
      if (pl.toks.size() != 2) fail(path, pl.line, pl.toks[0].col, "expected 'base: <file>'");
      out.base_ref = pl.toks[1].s;
    } else if (is_key(pl, "variance")) {
      if (pl.toks.size() != 2 ||
          (pl.toks[1].s != "contravariant" && pl.toks[1].s != "covariant"))
        fail(path, pl.line, pl.toks[0].col, "expected 'variance: contravariant|covariant'");
      contra = pl.toks[1].s == "contravariant";
    }
  }
  if (out.base_ref.empty()) fail(path, 1, 1, "missing 'base: <file>' line");
  CatPtr base = load_category(resolve(path, out.base_ref)).cat;

  SetFunctor x;
  x.base = base;
  x.contravariant = contra;
  x.at.assign(base->nobj(), {});
  x.act.assign(base->nmor(), {});
  std::vector<char> act_seen(base->nmor(), 0);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "base") || is_key(pl, "variance")) continue;
    if (pl.toks[0].s == "at") {
      if (pl.toks.size() < 2) fail(path, pl.line, pl.toks[0].col, "expected 'at <obj>: ...'");
      int o = base->obj_index(strip_colon(path, pl.toks[1]));
      if (o < 0) fail_at(path, pl.toks[1], "unknown object");
      for (size_t k = 2; k < pl.toks.size(); ++k) {
        for (auto& a : x.at[o])
          if (a == pl.toks[k].s)
            fail_at(path, pl.toks[k], "duplicate atom '" + a + "'");
        x.at[o].push_back(pl.toks[k].s);
      }
    } else if (pl.toks[0].s == "act") {
      if (pl.toks.size() < 2) fail(path, pl.line, pl.toks[0].col, "expected 'act <mor>: ...'");
      int m = base->mor_index(strip_colon(path, pl.toks[1]));
      if (m < 0) fail_at(path, pl.toks[1], "unknown morphism");
      if (base->is_id(m))
        fail_at(path, pl.toks[1], "act of an identity is implicit");
      act_seen[m] = 1;
      auto& dom = x.at[x.dom_obj(m)];
      auto& cod = x.at[x.cod_obj(m)];
      x.act[m].assign(dom.size(), -1);
      if ((pl.toks.size() - 2) % 3 != 0)
        fail(path, pl.line, pl.toks[0].col, "expected 'act <mor>: <a> -> <b> ...'");
      for (size_t k = 2; k + 2 < pl.toks.size() + 1; k += 3) {
        if (pl.toks[k + 1].s != "->") fail_at(path, pl.toks[k + 1], "expected '->'");
        int a = -1, c = -1;
        for (size_t j = 0; j < dom.size(); ++j)
          if (dom[j] == pl.toks[k].s) a = static_cast<int>(j);
        for (size_t j = 0; j < cod.size(); ++j)
          if (cod[j] == pl.toks[k + 2].s) c = static_cast<int>(j);
        if (a < 0) fail_at(path, pl.toks[k], "unknown atom '" + pl.toks[k].s + "'");
        if (c < 0) fail_at(path, pl.toks[k + 2], "unknown atom '" + pl.toks[k + 2].s + "'");
        if (x.act[m][a] >= 0) fail_at(path, pl.toks[k], "atom mapped twice");
        x.act[m][a] = c;
      }
      for (size_t j = 0; j < dom.size(); ++j)
        if (x.act[m][j] < 0)
          fail(path, pl.line, pl.toks[0].col, "atom '" + dom[j] + "' has no image");
    } else {
      fail_at(path, pl.toks[0], "unknown directive '" + pl.toks[0].s + "'");
    }
  }
  for (int m = 0; m < base->nmor(); ++m) {
    if (base->is_id(m)) {
      x.act[m].resize(x.at[base->src(m)].size());
      for (size_t j = 0; j < x.act[m].size(); ++j) x.act[m][j] = static_cast<int>(j);
    } else if (!act_seen[m] && !x.at[x.dom_obj(m)].empty()) {
      throw Error(Error::Kind::ValidationError,
                  path + ": morphism '" + base->mors[m].name + "' has no act line");
    }
  }
  x.validate();
  out.fun = std::move(x);
  return out;
}

LoadedFunctor load_functor(const std::string& path) {
  auto lines = tokenize(read_file(path));
  LoadedFunctor out;
  out.name = header(lines, "functor", path);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "dom")) {
      if (pl.toks.size() != 2) fail(path, pl.line, pl.toks[0].col, "expected 'dom: <file>'");
      out.dom_ref = pl.toks[1].s;
    } else if (is_key(pl, "cod")) {
      if (pl.toks.size() != 2) fail(path, pl.line, pl.toks[0].col, "expected 'cod: <file>'");
      out.cod_ref = pl.toks[1].s;
    }
  }
  if (out.dom_ref.empty()) fail(path, 1, 1, "missing 'dom: <file>' line");
  if (out.cod_ref.empty()) fail(path, 1, 1, "missing 'cod: <file>' line");
  CatPtr dom = load_category(resolve(path, out.dom_ref)).cat;
  CatPtr cod = load_category(resolve(path, out.cod_ref)).cat;

  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  f.obj_map.assign(dom->nobj(), -1);
  f.mor_map.assign(dom->nmor(), -1);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "dom") || is_key(pl, "cod")) continue;
    bool obj = pl.toks[0].s == "obj";
    if (!obj && pl.toks[0].s != "mor")
      fail_at(path, pl.toks[0], "unknown directive '" + pl.toks[0].s + "'");
    if (pl.toks.size() != 4 || pl.toks[2].s != "->")
      fail(path, pl.line, pl.toks[0].col,
           std::string("expected '") + (obj ? "obj" : "mor") + " <name> -> <name>'");
    if (obj) {
      int a = dom->obj_index(pl.toks[1].s);
      int b = cod->obj_index(pl.toks[3].s);
      if (a < 0) fail_at(path, pl.toks[1], "unknown object");
      if (b < 0) fail_at(path, pl.toks[3], "unknown object");
      f.obj_map[a] = b;
    } else {
      int m = dom->mor_index(pl.toks[1].s);
      int n = cod->mor_index(pl.toks[3].s);
      if (m < 0) fail_at(path, pl.toks[1], "unknown morphism");
      if (n < 0) fail_at(path, pl.toks[3], "unknown morphism");
      if (dom->is_id(m)) fail_at(path, pl.toks[1], "identity images are implicit");
      f.mor_map[m] = n;
    }
  }
  for (int a = 0; a < dom->nobj(); ++a)
    if (f.obj_map[a] < 0)
      throw Error(Error::Kind::ValidationError,
                  path + ": object '" + dom->objects[a] + "' has no image");
  for (int m = 0; m < dom->nmor(); ++m) {
    if (dom->is_id(m))
      f.mor_map[m] = cod->idm[f.obj_map[dom->src(m)]];
    else if (f.mor_map[m] < 0)
      throw Error(Error::Kind::ValidationError,
                  path + ": morphism '" + dom->mors[m].name + "' has no image");
  }
  f.validate();
  out.fun = std::move(f);
  return out;
}

LoadedDiagram load_diagram(const std::string& path) {
  auto lines = tokenize(read_file(path));
  LoadedDiagram out;
  out.name = header(lines, "diagram", path);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "index")) {
      if (pl.toks.size() != 2) fail(path, pl.line, pl.toks[0].col, "expected 'index: <file>'");
      out.index_ref = pl.toks[1].s;
    }
  }
  if (out.index_ref.empty()) fail(path, 1, 1, "missing 'index: <file>' line");
  Poset j = load_poset(resolve(path, out.index_ref)).poset;
  out.at_ref.assign(j.n(), "");
  out.diag.index = j;
  out.diag.at.assign(j.n(), nullptr);

  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (is_key(pl, "index")) continue;
    if (pl.toks[0].s == "at") {
      if (pl.toks.size() != 3) fail(path, pl.line, pl.toks[0].col, "expected 'at <elt>: <file>'");
      int e = j.index(strip_colon(path, pl.toks[1]));
      if (e < 0) fail_at(path, pl.toks[1], "unknown element");
      out.at_ref[e] = pl.toks[2].s;
      out.diag.at[e] = load_category(resolve(path, pl.toks[2].s)).cat;
    } else if (pl.toks[0].s != "act") {
      fail_at(path, pl.toks[0], "unknown directive '" + pl.toks[0].s + "'");
    }
  }
  for (int e = 0; e < j.n(); ++e)
    if (!out.diag.at[e])
      throw Error(Error::Kind::ValidationError,
                  path + ": element '" + j.elements[e] + "' has no 'at' line");

  for (size_t i = 1; i < lines.size(); ++i) {
    auto& pl = lines[i];
    if (pl.toks[0].s != "act") continue;
    if (pl.toks.size() != 4)
      fail(path, pl.line, pl.toks[0].col, "expected 'act <a> <b>: <file>'");
    int a = j.index(pl.toks[1].s);
    if (a < 0) fail_at(path, pl.toks[1], "unknown element");
    int b = j.index(strip_colon(path, pl.toks[2]));
    if (b < 0) fail_at(path, pl.toks[2], "unknown element");
    if (a == b || !j.le(a, b))
      fail_at(path, pl.toks[1], "'" + pl.toks[1].s + "' is not strictly below '" +
                                    j.elements[b] + "'");
    auto lf = load_functor(resolve(path, pl.toks[3].s));
    if (!(*lf.fun.dom == *out.diag.at[b]) || !(*lf.fun.cod == *out.diag.at[a]))
      throw Error(Error::Kind::ValidationError,
                  path + ": transition '" + lf.name + "' does not go from at(" +
                      j.elements[b] + ") to at(" + j.elements[a] + ")");
    out.act_ref[{a, b}] = pl.toks[3].s;
    out.diag.act[{a, b}] =
        FinFunctor{out.diag.at[b], out.diag.at[a], lf.fun.obj_map, lf.fun.mor_map};
  }
  out.diag.validate();
  return out;
}

std::string serialize_category(const std::string& name, const FinCat& c) {
  std::ostringstream os;
  os << "category " << name << "\n";
  std::vector<std::string> objs = c.objects;
  std::sort(objs.begin(), objs.end());
  os << "objects:";
  for (auto& o : objs) os << " " << o;
  os << "\n";
  std::vector<int> nonid;
  for (int m = 0; m < c.nmor(); ++m)
    if (!c.is_id(m)) nonid.push_back(m);
  std::sort(nonid.begin(), nonid.end(),
            [&](int a, int b) { return c.mors[a].name < c.mors[b].name; });
  for (int m : nonid)
    os << "mor " << c.mors[m].name << " : " << c.objects[c.src(m)] << " -> "
       << c.objects[c.tgt(m)] << "\n";
  for (int g : nonid)
    for (int f : nonid)
      if (c.composable(g, f))
        os << "compose " << c.mors[g].name << " " << c.mors[f].name << " = "
           << c.mors[c.compose(g, f)].name << "\n";
  return os.str();
}

std::string serialize_poset(const std::string& name, const Poset& p) {
  std::ostringstream os;
  os << "poset " << name << "\n";
  std::vector<std::string> elems = p.elements;
  std::sort(elems.begin(), elems.end());
  os << "elements:";
  for (auto& e : elems) os << " " << e;
  os << "\n";
  auto pairs = hasse_pairs(p);
  if (!pairs.empty()) {
    os << "le:";
    for (auto& [a, b] : pairs) os << " " << p.elements[a] << "<=" << p.elements[b];
    os << "\n";
  }
  return os.str();
}

std::string serialize_setfun(const LoadedSetFun& x) {
  auto& f = x.fun;
  auto& c = *f.base;
  std::ostringstream os;
  os << "setfun " << x.name << "\n";
  os << "base: " << x.base_ref << "\n";
  os << "variance: " << (f.contravariant ? "contravariant" : "covariant") << "\n";
  // objects in stored order, which validated categories keep sorted
  for (int o = 0; o < c.nobj(); ++o) {
    std::vector<std::string> atoms = f.at[o];
    std::sort(atoms.begin(), atoms.end());
    os << "at " << c.objects[o] << ":";
    for (auto& a : atoms) os << " " << a;
    os << "\n";
  }
  for (int m = 0; m < c.nmor(); ++m) {
    if (c.is_id(m) || f.at[f.dom_obj(m)].empty()) continue;
    std::vector<std::pair<std::string, std::string>> arrows;
    for (size_t a = 0; a < f.act[m].size(); ++a)
      arrows.emplace_back(f.at[f.dom_obj(m)][a], f.at[f.cod_obj(m)][f.act[m][a]]);
    std::sort(arrows.begin(), arrows.end());
    os << "act " << c.mors[m].name << ":";
    for (auto& [a, b] : arrows) os << " " << a << " -> " << b;
    os << "\n";
  }
  return os.str();
}

std::string serialize_functor(const LoadedFunctor& lf) {
  auto& f = lf.fun;
  std::ostringstream os;
  os << "functor " << lf.name << "\n";
  os << "dom: " << lf.dom_ref << "\n";
  os << "cod: " << lf.cod_ref << "\n";
  std::vector<int> objs(f.dom->nobj());
  for (int a = 0; a < f.dom->nobj(); ++a) objs[a] = a;
  std::sort(objs.begin(), objs.end(),
            [&](int a, int b) { return f.dom->objects[a] < f.dom->objects[b]; });
  for (int a : objs)
    os << "obj " << f.dom->objects[a] << " -> " << f.cod->objects[f.on_obj(a)] << "\n";
  std::vector<int> nonid;
  for (int m = 0; m < f.dom->nmor(); ++m)
    if (!f.dom->is_id(m)) nonid.push_back(m);
  std::sort(nonid.begin(), nonid.end(),
            [&](int a, int b) { return f.dom->mors[a].name < f.dom->mors[b].name; });
  for (int m : nonid)
    os << "mor " << f.dom->mors[m].name << " -> " << f.cod->mors[f.on_mor(m)].name << "\n";
  return os.str();
}

std::string serialize_diagram(const LoadedDiagram& d) {
  std::ostringstream os;
  os << "diagram " << d.name << "\n";
  os << "index: " << d.index_ref << "\n";
  auto& j = d.diag.index;
  std::vector<int> elems(j.n());
  for (int e = 0; e < j.n(); ++e) elems[e] = e;
  std::sort(elems.begin(), elems.end(),
            [&](int a, int b) { return j.elements[a] < j.elements[b]; });
  for (int e : elems) os << "at " << j.elements[e] << ": " << d.at_ref[e] << "\n";
  std::vector<std::pair<int, int>> pairs;
  for (auto& [k, ref] : d.act_ref) pairs.push_back(k);
  std::sort(pairs.begin(), pairs.end(), [&](auto& x, auto& y) {
    if (j.elements[x.first] != j.elements[y.first])
      return j.elements[x.first] < j.elements[y.first];
    return j.elements[x.second] < j.elements[y.second];
  });
  for (auto& [a, b] : pairs)
    os << "act " << j.elements[a] << " " << j.elements[b] << ": " << d.act_ref.at({a, b})
       << "\n";
  return os.str();
}

std::string dot_category(const std::string& name, const FinCat& c) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=LR;\n";
  for (auto& o : c.objects) os << "  " << quoted(o) << ";\n";
  for (int m = 0; m < c.nmor(); ++m)
    if (!c.is_id(m))
      os << "  " << quoted(c.objects[c.src(m)]) << " -> " << quoted(c.objects[c.tgt(m)])
         << " [label=" << quoted(c.mors[m].name) << "];\n";
  os << "}\n";
  return os.str();
}

std::string dot_poset(const std::string& name, const Poset& p) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (auto& e : p.elements) os << "  " << quoted(e) << ";\n";
  for (auto& [a, b] : hasse_pairs(p))
    os << "  " << quoted(p.elements[a]) << " -> " << quoted(p.elements[b]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_elements(const std::string& name, const ElementsCat& e) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=LR;\n";
  for (auto& o : e.cat->objects) os << "  " << quoted(o) << ";\n";
  auto& base = *e.proj.cod;
  for (int m = 0; m < e.cat->nmor(); ++m)
    if (!e.cat->is_id(m))
      os << "  " << quoted(e.cat->objects[e.cat->src(m)]) << " -> "
         << quoted(e.cat->objects[e.cat->tgt(m)])
         << " [label=" << quoted(base.mors[e.mor_base[m]].name) << "];\n";
  os << "}\n";
  return os.str();
}

} // namespace kancalc
