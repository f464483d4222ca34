// kancalc: command-line front end for the finite category calculator.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kancalc/filtered.hpp"
#include "kancalc/ind.hpp"
#include "kancalc/io.hpp"
#include "kancalc/nerve.hpp"

using namespace kancalc;
using ordered_json = nlohmann::ordered_json;

namespace {

long long env_budget() {
  if (const char* e = std::getenv("KANCALC_BUDGET")) {
    long long v = std::atoll(e);
    if (v > 0) return v;
  }
  return 1000000;
}

/// One command report. Text lines and the JSON tree are built side by
/// side; identical invocations produce byte-identical output.
struct Report {
  std::string kind;
  bool ok = true;
  ordered_json witness;
  ordered_json data = ordered_json::object();
  std::vector<std::string> lines;
  std::string dot;  // replaces the text report when --dot is given

  void line(const std::string& s) { lines.push_back(s); }
};

void print_report(const Report& r, bool json, bool dot) {
  if (json) {
    ordered_json out;
    out["schema"] = 1;
    out["kind"] = r.kind;
    out["ok"] = r.ok;
    out["witness"] = r.witness;
    out["data"] = r.data;
    if (dot && !r.dot.empty()) out["data"]["dot"] = r.dot;
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (dot && !r.dot.empty()) {
    std::cout << r.dot;
    return;
  }
  for (auto& l : r.lines) std::cout << l << "\n";
}

ordered_json cone_json(const Cone& c) {
  auto& dom = *c.diagram.dom;
  auto& cod = *c.diagram.cod;
  ordered_json legs = ordered_json::object();
  for (int i = 0; i < dom.nobj(); ++i)
    legs[dom.objects[i]] = cod.mors[c.legs[i]].name;
  return ordered_json{{"vertex", cod.objects[c.vertex]}, {"legs", legs}};
}

void cone_lines(Report& r, const Cone& c, const std::string& head) {
  auto& dom = *c.diagram.dom;
  auto& cod = *c.diagram.cod;
  r.line(head + cod.objects[c.vertex]);
  for (int i = 0; i < dom.nobj(); ++i)
    r.line("  leg " + dom.objects[i] + " = " + cod.mors[c.legs[i]].name);
}

ordered_json diagram_json(const FinFunctor& f) {
  ordered_json on = ordered_json::object();
  for (int i = 0; i < f.dom->nobj(); ++i)
    on[f.dom->objects[i]] = f.cod->objects[f.on_obj(i)];
  return ordered_json{{"shape_objects", f.dom->nobj()},
                      {"shape_morphisms", f.dom->nmor()},
                      {"on_objects", on}};
}

// ---------------------------------------------------------------------------
// plain commands

int run_colim(const std::string& path, Report& r) {
  auto lf = load_functor(path);
  r.kind = "colim";
  r.data["functor"] = lf.name;
  auto c = colimit(lf.fun);
  if (!c) {
    r.ok = false;
    r.line("colim: none");
    return 1;
  }
  r.witness = cone_json(*c);
  r.data["vertex"] = lf.fun.cod->objects[c->vertex];
  cone_lines(r, *c, "colim: ");
  return 0;
}

int run_check_filtered(const std::string& path, long long budget, Report& r) {
  auto lc = load_category(path);
  r.kind = "check.filtered";
  r.data["category"] = lc.name;
  if (is_filtered_exact(lc.cat)) {
    auto cone = find_id_cone(lc.cat);
    r.witness = cone_json(*cone);
    r.line("filtered: true");
    cone_lines(r, *cone, "witness: identity cone at ");
    r.dot = dot_category(lc.name, *lc.cat);
    return 0;
  }
  r.ok = false;
  r.line("filtered: false");
  auto rep = is_filtered_at_level(lc.cat, lc.cat->nmor() + 2, budget);
  if (rep.failing) {
    r.witness = diagram_json(*rep.failing);
    r.line("witness: coneless diagram from a " +
           std::to_string(rep.failing->dom->nobj()) + "-point shape");
    for (int i = 0; i < rep.failing->dom->nobj(); ++i)
      r.line("  " + rep.failing->dom->objects[i] + " -> " +
             lc.cat->objects[rep.failing->on_obj(i)]);
  }
  r.dot = dot_category(lc.name, *lc.cat);
  return 1;
}

int run_check_cofinal(const std::string& path, Report& r) {
  auto lf = load_functor(path);
  r.kind = "check.cofinal";
  r.data["functor"] = lf.name;
  auto rep = check_cofinal(lf.fun);
  r.ok = rep.cofinal;
  if (rep.cofinal) {
    r.line("cofinal: true");
    return 0;
  }
  r.witness = ordered_json{{"object", lf.fun.cod->objects[rep.bad]}};
  r.line("cofinal: false");
  r.line("witness: the comma fiber under '" + lf.fun.cod->objects[rep.bad] +
         "' is empty or disconnected");
  return 1;
}

int run_check_con_le(const std::string& path, Report& r) {
  auto lx = load_setfun(path);
  r.kind = "check.con-le";
  r.data["setfun"] = lx.name;
  if (lx.fun.contravariant)
    throw Error(Error::Kind::PreconditionFailed,
                "con-le expects a covariant set functor");
  auto rep = check_con_le(lx.fun);
  r.ok = rep.agree;
  r.data["colim_is_point"] = rep.colim_is_point;
  r.data["elements_filtered"] = rep.elements_filtered;
  r.line(std::string("colim is a point: ") + (rep.colim_is_point ? "true" : "false"));
  r.line(std::string("elements filtered: ") + (rep.elements_filtered ? "true" : "false"));
  r.line(std::string("agree: ") + (rep.agree ? "true" : "false"));
  return rep.agree ? 0 : 1;
}

int run_check_commute(const std::string& ipath, const std::string& jpath,
                      const std::string& xpath, Report& r) {
  auto ci = load_category(ipath);
  auto cj = load_category(jpath);
  auto lx = load_setfun(xpath);
  r.kind = "check.commute";
  r.data["I"] = ci.name;
  r.data["J"] = cj.name;
  r.data["X"] = lx.name;
  if (lx.fun.contravariant)
    throw Error(Error::Kind::PreconditionFailed,
                "commute expects a covariant set functor on the product");
  auto pc = product(ci.cat, cj.cat);
  // transport X onto the internally built product by matching names
  SetFunctor x;
  x.base = pc.cat;
  x.contravariant = false;
  x.at.assign(pc.cat->nobj(), {});
  x.act.assign(pc.cat->nmor(), {});
  for (int o = 0; o < pc.cat->nobj(); ++o) {
    int src = lx.fun.base->obj_index(pc.cat->objects[o]);
    if (src < 0)
      throw Error(Error::Kind::ValidationError,
                  "set functor base lacks product object '" + pc.cat->objects[o] + "'");
    x.at[o] = lx.fun.at[src];
  }
  for (int m = 0; m < pc.cat->nmor(); ++m) {
    if (pc.cat->is_id(m)) {  // identity names need not match across the two bases
      x.act[m].resize(x.at[pc.cat->src(m)].size());
      for (size_t k = 0; k < x.act[m].size(); ++k) x.act[m][k] = static_cast<int>(k);
      continue;
    }
    int src = lx.fun.base->mor_index(pc.cat->mors[m].name);
    if (src < 0)
      throw Error(Error::Kind::ValidationError,
                  "set functor base lacks product morphism '" + pc.cat->mors[m].name + "'");
    x.act[m] = lx.fun.act[src];
  }
  x.validate();
  auto rep = filt_commute_check(pc, x);
  r.ok = rep.bijective;
  r.data["i_filtered"] = rep.i_filtered;
  r.data["lhs"] = rep.lhs;
  r.data["rhs"] = rep.rhs;
  r.line(std::string("commute: ") + (rep.bijective ? "true" : "false"));
  r.line("lhs |colim lim| = " + std::to_string(rep.lhs));
  r.line("rhs |lim colim| = " + std::to_string(rep.rhs));
  if (!rep.bijective) {
    if (rep.missed) {
      r.witness = ordered_json{{"missed", *rep.missed}};
      r.line("witness: element " + std::to_string(*rep.missed) +
             " of the right side is not reached");
    } else if (rep.collision) {
      r.witness =
          ordered_json{{"collision", {rep.collision->first, rep.collision->second}}};
      r.line("witness: classes " + std::to_string(rep.collision->first) + " and " +
             std::to_string(rep.collision->second) + " share an image");
    }
    return 1;
  }
  return 0;
}

int run_nerve(const std::string& path, int max_dim, Report& r) {
  auto lc = load_category(path);
  r.kind = "nerve";
  r.data["category"] = lc.name;
  r.data["max_dim"] = max_dim;
  auto n = nerve(lc.cat, max_dim);
  ordered_json dims = ordered_json::array();
  for (int k = 0; k <= max_dim; ++k) {
    int nondeg = 0;
    for (auto& ch : n.chains[k])
      if (!ch.degenerate(*lc.cat)) ++nondeg;
    dims.push_back(ordered_json{{"dim", k},
                                {"chains", n.chains[k].size()},
                                {"nondegenerate", nondeg}});
    r.line("dim " + std::to_string(k) + ": " + std::to_string(n.chains[k].size()) +
           " chains, " + std::to_string(nondeg) + " non-degenerate");
  }
  r.data["dims"] = dims;
  r.dot = dot_elements(lc.name + ".nerve", xi(n).els);
  return 0;
}

int run_vc(const std::string& path, Report& r) {
  auto lc = load_category(path);
  r.kind = "vc";
  auto v = v_replacement(lc.cat);
  std::string name = "V(" + lc.name + ")";
  r.data["category"] = lc.name;
  r.data["points"] = v.vposet.n();
  r.data["dimension"] = dimension(v.vposet);
  auto s = serialize_poset(name, v.vposet);
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) r.line(l);
  r.dot = dot_poset(name, v.vposet);
  return 0;
}

int run_lax_limit(const std::string& path, bool colax, Report& r) {
  auto ld = load_diagram(path);
  r.kind = colax ? "colax-limit" : "lax-limit";
  r.data["diagram"] = ld.name;
  auto s = colax ? colax_limit(ld.diag) : lax_limit(ld.diag);
  r.data["sections"] = s.sections.size();
  r.data["morphisms"] = s.cat->nmor();
  r.line("sections: " + std::to_string(s.sections.size()));
  r.line("morphisms: " + std::to_string(s.cat->nmor()));
  for (size_t i = 0; i < s.sections.size(); ++i) {
    std::string desc;
    for (int j = 0; j < ld.diag.index.n(); ++j) {
      if (j) desc += " ";
      desc += ld.diag.index.elements[j] + "=" +
              ld.diag.at[j]->objects[s.sections[i].obj[j]];
    }
    r.line("  section " + std::to_string(i) + ": " + desc);
  }
  return 0;
}

int run_tw(const std::string& path, Report& r) {
  auto lc = load_category(path);
  r.kind = "tw";
  auto t = twisted_arrows(lc.cat);
  std::string name = "tw(" + lc.name + ")";
  r.data["category"] = lc.name;
  r.data["objects"] = t.cat->nobj();
  r.data["morphisms"] = t.cat->nmor();
  auto s = serialize_category(name, *t.cat);
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) r.line(l);
  r.dot = dot_category(name, *t.cat);
  return 0;
}

// ---------------------------------------------------------------------------
// ind commands

int run_ind_hom(const std::string& apath, const std::string& bpath, Report& r) {
  auto fa = load_functor(apath);
  auto fb = load_functor(bpath);
  r.kind = "ind.hom";
  r.data["A"] = fa.name;
  r.data["B"] = fb.name;
  auto hom = ind_hom({fa.fun}, {fb.fun});
  r.data["elements"] = hom.elems.size();
  ordered_json classes = ordered_json::array();
  for (auto n : hom.nclasses) classes.push_back(n);
  r.data["classes_per_index_object"] = classes;
  r.line("elements: " + std::to_string(hom.elems.size()));
  return 0;
}

int run_ind_recognize(const std::string& path, long long budget, Report& r) {
  auto lx = load_setfun(path);
  r.kind = "ind.recognize";
  r.data["setfun"] = lx.name;
  auto rec = is_ind_object(lx.fun, budget);
  r.ok = rec.ok;
  r.dot = dot_elements(lx.name + ".elements", rec.elem);
  if (rec.ok) {
    r.data["index_objects"] = rec.presentation->index()->nobj();
    r.line("ind object: true");
    r.line("presentation: the elements projection, " +
           std::to_string(rec.presentation->index()->nobj()) + " index objects");
    return 0;
  }
  r.line("ind object: false");
  if (rec.obstruction) {
    r.witness = diagram_json(*rec.obstruction);
    r.line("witness: coneless diagram in the elements category from a " +
           std::to_string(rec.obstruction->dom->nobj()) + "-point shape");
  }
  return 1;
}

int run_ind_karoubi(const std::string& path, int value_bound, long long budget,
                    Report& r) {
  auto lc = load_category(path);
  r.kind = "ind.karoubi-id";
  r.data["category"] = lc.name;
  auto rep = karoubi_identification(lc.cat, value_bound, budget);
  r.ok = rep.fully_faithful && rep.image_matches_criterion;
  r.data["karoubi_objects"] = rep.ka.cat->nobj();
  r.data["fully_faithful"] = rep.fully_faithful;
  r.data["image_classes"] = rep.image_classes.size();
  r.data["image_matches_criterion"] = rep.image_matches_criterion;
  r.data["terminal_conjecture"] = rep.terminal_conjecture;
  r.data["swept"] = rep.swept;
  r.line(std::string("fully faithful: ") + (rep.fully_faithful ? "true" : "false"));
  r.line("image classes: " + std::to_string(rep.image_classes.size()));
  r.line(std::string("image matches the compact-ind criterion: ") +
         (rep.image_matches_criterion ? "true" : "false"));
  r.line(std::string("terminal-object conjecture: ") +
         (rep.terminal_conjecture ? "holds on this sweep" : "MISMATCH"));
  return r.ok ? 0 : 1;
}

int run_ind_prod_demo(int n, Report& r) {
  r.kind = "ind.prod-demo";
  r.data["n"] = n;
  auto rep = pullback_failure_demo(n);
  bool parity_ok = (n % 2 == 0) ? (rep.even_cofinal && !rep.odd_cofinal)
                                : (rep.odd_cofinal && !rep.even_cofinal);
  r.ok = rep.strict_empty && rep.lax_nonempty && parity_ok;
  r.data["strict_empty"] = rep.strict_empty;
  r.data["lax_nonempty"] = rep.lax_nonempty;
  r.data["even_cofinal"] = rep.even_cofinal;
  r.data["odd_cofinal"] = rep.odd_cofinal;
  r.line(std::string("strict fiber product empty: ") +
         (rep.strict_empty ? "true" : "false"));
  r.line(std::string("lax fiber product nonempty: ") +
         (rep.lax_nonempty ? "true" : "false"));
  r.line(std::string("even embedding cofinal: ") + (rep.even_cofinal ? "true" : "false"));
  r.line(std::string("odd embedding cofinal: ") + (rep.odd_cofinal ? "true" : "false"));
  return r.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// harness

struct SuiteResult {
  bool ok = true;
  long long checked = 0;
  std::vector<std::string> notes;
  std::string counterexample;
};

struct BudgetGuard {
  long long left;
  void tick() {
    if (--left < 0) throw Error(Error::Kind::BoundExceeded, "harness budget exhausted");
  }
};

std::vector<CatPtr> corpus(int max_obj, int max_mor) {
  std::vector<CatPtr> out;
  for_each_fincat(max_obj, max_mor, [&](const CatPtr& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

SuiteResult suite_p_le(int max_obj, int max_mor, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for_each_fincat(max_obj, max_mor, [&](const CatPtr& c) {
    g.tick();
    ++r.checked;
    if (id_cone_filtered(c) != karoubi_terminal_filtered(c)) {
      r.ok = false;
      r.counterexample = serialize_category("counterexample", *c);
      return false;
    }
    return true;
  });
  return r;
}

SuiteResult suite_v_le(int max_obj, int max_mor, int e_max_obj, int e_max_mor,
                       long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for (auto& c : corpus(max_obj, max_mor)) {
    for (auto& e : corpus(e_max_obj, e_max_mor)) {
      g.tick();
      ++r.checked;
      auto rep = verify_v_localization(c, e);
      if (!rep.ok) {
        r.ok = false;
        r.counterexample = serialize_category("C", *c) + serialize_category("E", *e);
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_con_le(int max_obj, int max_mor, int values, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for (auto& i : corpus(max_obj, max_mor)) {
    if (!is_filtered_exact(i)) continue;
    for_each_setfunctor(i, false, values, [&](const SetFunctor& x) {
      g.tick();
      ++r.checked;
      if (!check_con_le(x).agree) {
        r.ok = false;
        r.counterexample = serialize_category("I", *i);
        return false;
      }
      return true;
    });
    if (!r.ok) break;
  }
  return r;
}

SuiteResult suite_filt_prop(int max_obj, int max_mor, int max_size, int values,
                            long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for (auto& i : corpus(max_obj, max_mor)) {
    if (!is_filtered_exact(i)) continue;
    for (auto& j : dim1_shapes(max_size)) {
      auto pc = product(i, as_category(j));
      for_each_setfunctor(pc.cat, false, values, [&](const SetFunctor& x) {
        g.tick();
        ++r.checked;
        auto rep = filt_commute_check(pc, x);
        if (!rep.i_filtered || !rep.bijective) {
          r.ok = false;
          r.counterexample = serialize_category("I", *i) + serialize_poset("J", j);
          return false;
        }
        return true;
      });
      if (!r.ok) return r;
    }
  }
  return r;
}

SuiteResult suite_cof_le(int max_obj, int max_mor, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for (auto& c : corpus(max_obj, max_mor)) {
    if (!is_filtered_exact(c)) continue;
    for (int mask = 1; mask < (1 << c->nobj()); ++mask) {
      std::vector<int> objs;
      for (int o = 0; o < c->nobj(); ++o)
        if (mask & (1 << o)) objs.push_back(o);
      g.tick();
      ++r.checked;
      auto rep = check_cofinal_subcategory(c, objs);
      if (rep.hypothesis && (!rep.sub_filtered || !rep.embedding_cofinal)) {
        r.ok = false;
        r.counterexample = serialize_category("C", *c);
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_cone_le(int max_obj, int max_mor, int j_max_obj, int j_max_mor,
                          long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for (auto& c : corpus(max_obj, max_mor)) {
    if (!is_filtered_exact(c)) continue;
    for (auto& j : corpus(j_max_obj, j_max_mor)) {
      g.tick();
      ++r.checked;
      if (!check_cone_le(j, c, g.left + 1).ok) {
        r.ok = false;
        r.counterexample = serialize_category("J", *j) + serialize_category("C", *c);
        return r;
      }
    }
  }
  return r;
}

/// Strict Cat-valued diagrams on dimension <= 1 posets: no strict pair
/// composes with another, so the transitions are independent choices.
void for_each_diagram(int max_elems, const std::vector<CatPtr>& fibers,
                      const std::function<bool(const CatDiagram&)>& fn) {
  bool go = true;
  for (auto& j : dim1_shapes(max_elems)) {
    if (!go) return;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < j.n(); ++a)
      for (int b = 0; b < j.n(); ++b)
        if (a != b && j.le(a, b)) pairs.emplace_back(a, b);
    std::vector<int> fib(j.n(), 0);
    std::function<void(int)> pick_fibers = [&](int e) {
      if (!go) return;
      if (e == j.n()) {
        CatDiagram d;
        d.index = j;
        d.at.resize(j.n());
        for (int k = 0; k < j.n(); ++k) d.at[k] = fibers[fib[k]];
        std::function<void(size_t)> pick_act = [&](size_t p) {
          if (!go) return;
          if (p == pairs.size()) {
            go = fn(d);
            return;
          }
          auto [a, b] = pairs[p];
          for (auto& f : all_functors(d.at[b], d.at[a])) {
            d.act[{a, b}] = f;
            pick_act(p + 1);
            if (!go) return;
          }
          d.act.erase({a, b});
        };
        pick_act(0);
        return;
      }
      for (size_t k = 0; k < fibers.size(); ++k) {
        fib[e] = static_cast<int>(k);
        pick_fibers(e + 1);
        if (!go) return;
      }
    };
    pick_fibers(0);
  }
}

std::vector<CatPtr> filtered_fibers() {
  return {point_cat(), chain_cat(1), walking_idempotent()};
}

SuiteResult suite_dim1_le(int max_size, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for_each_diagram(max_size, filtered_fibers(), [&](const CatDiagram& d) {
    g.tick();
    ++r.checked;
    auto rep = check_dim1_le(d);
    if (!rep.fibers_ok || !rep.filtered) {
      r.ok = false;
      r.counterexample = serialize_poset("index", d.index);
      return false;
    }
    return true;
  });
  return r;
}

SuiteResult suite_lax_ind(int max_size, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for_each_diagram(max_size, filtered_fibers(), [&](const CatDiagram& d) {
    g.tick();
    ++r.checked;
    auto rep = check_lax_ind_shadow(d);
    if (!rep.ok) {
      r.ok = false;
      r.counterexample = serialize_poset("index", d.index);
      return false;
    }
    return true;
  });
  return r;
}

SuiteResult suite_yo_ind(int idx_max_obj, int idx_max_mor, int base_max_obj,
                         int base_max_mor, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  std::vector<CatPtr> indices;
  for (auto& i : corpus(idx_max_obj, idx_max_mor))
    if (is_filtered_exact(i)) indices.push_back(i);
  for (auto& b : corpus(base_max_obj, base_max_mor)) {
    std::vector<IndPresentation> pres;
    for (auto& i : indices)
      for (auto& f : all_functors(i, b)) pres.push_back({f});
    for (auto& pa : pres)
      for (auto& pb : pres) {
        g.tick();
        ++r.checked;
        auto rep = ind_hom_bijection(ind_hom(pa, pb));
        if (!rep.bijective) {
          r.ok = false;
          r.counterexample = serialize_category("base", *b);
          return r;
        }
      }
  }
  return r;
}

SuiteResult suite_ka_ka(int max_obj, int max_mor, int values, long long budget) {
  SuiteResult r;
  BudgetGuard g{budget};
  for (auto& i : corpus(max_obj, max_mor)) {
    g.tick();
    ++r.checked;
    auto rep = karoubi_identification(i, values, budget);
    if (!rep.fully_faithful || !rep.image_matches_criterion) {
      r.ok = false;
      r.counterexample = serialize_category("base", *i);
      return r;
    }
    if (!rep.terminal_conjecture)
      r.notes.push_back("terminal conjecture mismatch on instance " +
                        std::to_string(r.checked));
  }
  return r;
}

int run_harness(const std::string& suite, const SuiteResult& s, Report& r) {
  r.kind = "harness." + suite;
  r.ok = s.ok;
  r.data["checked"] = s.checked;
  if (s.ok) {
    r.line("suite " + suite + ": pass, " + std::to_string(s.checked) +
           " instances checked");
  } else {
    r.line("suite " + suite + ": FAIL after " + std::to_string(s.checked) +
           " instances");
    if (!s.counterexample.empty()) {
      r.witness = s.counterexample;
      r.line("counterexample:");
      std::istringstream is(s.counterexample);
      for (std::string l; std::getline(is, l);) r.line("  " + l);
    }
  }
  for (auto& n : s.notes) r.line("note: " + n);
  return s.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"kancalc: a calculator for finite categories"};
  app.require_subcommand(1);
  bool json = false, dot = false, colax = false;
  long long budget = env_budget();
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--dot", dot, "DOT graph output where applicable");
  app.add_option("--budget", budget, "enumeration budget (overrides KANCALC_BUDGET)");

  std::string path, ipath, jpath, xpath, apath, bpath;
  int max_dim = 2, demo_n = 3, value_bound = 2;

  auto* colim = app.add_subcommand("colim", "colimit of a diagram");
  colim->add_option("-d,--diagram", path, "functor file (.fun)")->required();

  auto* check = app.add_subcommand("check", "decision procedures");
  check->require_subcommand(1);
  auto* filtered = check->add_subcommand("filtered", "exact filteredness");
  filtered->add_option("category", path, "category file (.fc)")->required();
  auto* cofinal = check->add_subcommand("cofinal", "cofinality of a functor");
  cofinal->add_option("-F,--functor", path, "functor file (.fun)")->required();
  auto* conle = check->add_subcommand("con-le", "point colimit vs filtered elements");
  conle->add_option("-X,--setfun", path, "set functor file (.psh)")->required();
  auto* commute = check->add_subcommand("commute", "filtered colimits vs finite limits");
  commute->add_option("-I", ipath, "first factor (.fc)")->required();
  commute->add_option("-J", jpath, "second factor (.fc)")->required();
  commute->add_option("-X", xpath, "set functor on the product (.psh)")->required();

  auto* nervec = app.add_subcommand("nerve", "truncated nerve chain counts");
  nervec->add_option("category", path, "category file (.fc)")->required();
  nervec->add_option("--max-dim", max_dim, "truncation dimension");
  auto* vc = app.add_subcommand("vc", "the dimension <= 1 replacement V(C)");
  vc->add_option("category", path, "category file (.fc)")->required();
  auto* laxlim = app.add_subcommand("lax-limit", "sections of a Cat-valued diagram");
  laxlim->add_option("-d,--diagram", path, "diagram file (.diag)")->required();
  laxlim->add_flag("--colax", colax, "co-lax sections");
  auto* tw = app.add_subcommand("tw", "twisted arrows category");
  tw->add_option("category", path, "category file (.fc)")->required();

  auto* ind = app.add_subcommand("ind", "finite ind calculus");
  ind->require_subcommand(1);
  auto* indhom = ind->add_subcommand("hom", "hom set between presentations");
  indhom->add_option("-A", apath, "first presentation (.fun)")->required();
  indhom->add_option("-B", bpath, "second presentation (.fun)")->required();
  auto* indrec = ind->add_subcommand("recognize", "ind object recognition");
  indrec->add_option("-X,--setfun", path, "presheaf file (.psh)")->required();
  auto* indka = ind->add_subcommand("karoubi-id", "compact objects vs Karoubi closure");
  indka->add_option("category", path, "category file (.fc)")->required();
  indka->add_option("--value-bound", value_bound, "sweep value-set bound");
  auto* inddemo = ind->add_subcommand("prod-demo", "even/odd fiber product demo");
  inddemo->add_option("-n", demo_n, "chain length")->required();

  auto* harness = app.add_subcommand("harness", "lemma suites over the corpus");
  std::string suite;
  int max_obj = 2, max_mor = 4, e_max_obj = 2, e_max_mor = 4, j_max_obj = 2,
      j_max_mor = 3, max_size = 3, values = 2;
  std::string shapes = "dim1";
  harness
      ->add_option("suite", suite, "one of: p-le v-le con-le filt-prop cof-le "
                                   "cone-le dim1-le yo-ind ka-ka lax-ind")
      ->required();
  harness->add_option("--max-obj", max_obj, "object bound for the main corpus");
  harness->add_option("--max-mor", max_mor, "morphism bound for the main corpus");
  harness->add_option("--e-max-obj", e_max_obj, "object bound for the target corpus");
  harness->add_option("--e-max-mor", e_max_mor, "morphism bound for the target corpus");
  harness->add_option("--j-max-obj", j_max_obj, "object bound for the shape corpus");
  harness->add_option("--j-max-mor", j_max_mor, "morphism bound for the shape corpus");
  harness->add_option("--max-size", max_size, "poset shape size bound");
  harness->add_option("--values", values, "value-set size bound");
  harness->add_option("--shapes", shapes, "shape family (dim1)");

  for (auto* s : {colim, filtered, cofinal, conle, commute, nervec, vc, laxlim, tw,
                  indhom, indrec, indka, inddemo, harness})
    s->fallthrough();
  check->fallthrough();
  ind->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r;
  int rc = 0;
  try {
    if (colim->parsed()) rc = run_colim(path, r);
    else if (filtered->parsed()) rc = run_check_filtered(path, budget, r);
    else if (cofinal->parsed()) rc = run_check_cofinal(path, r);
    else if (conle->parsed()) rc = run_check_con_le(path, r);
    else if (commute->parsed()) rc = run_check_commute(ipath, jpath, xpath, r);
    else if (nervec->parsed()) rc = run_nerve(path, max_dim, r);
    else if (vc->parsed()) rc = run_vc(path, r);
    else if (laxlim->parsed()) rc = run_lax_limit(path, colax, r);
    else if (tw->parsed()) rc = run_tw(path, r);
    else if (indhom->parsed()) rc = run_ind_hom(apath, bpath, r);
    else if (indrec->parsed()) rc = run_ind_recognize(path, budget, r);
    else if (indka->parsed()) rc = run_ind_karoubi(path, value_bound, budget, r);
    else if (inddemo->parsed()) rc = run_ind_prod_demo(demo_n, r);
    else if (harness->parsed()) {
      if (shapes != "dim1")
        throw Error(Error::Kind::PreconditionFailed,
                    "unsupported shape family '" + shapes + "'");
      SuiteResult s;
      if (suite == "p-le") s = suite_p_le(max_obj, max_mor, budget);
      else if (suite == "v-le") s = suite_v_le(max_obj, max_mor, e_max_obj, e_max_mor, budget);
      else if (suite == "con-le") s = suite_con_le(max_obj, max_mor, values, budget);
      else if (suite == "filt-prop") s = suite_filt_prop(max_obj, max_mor, max_size, values, budget);
      else if (suite == "cof-le") s = suite_cof_le(max_obj, max_mor, budget);
      else if (suite == "cone-le") s = suite_cone_le(max_obj, max_mor, j_max_obj, j_max_mor, budget);
      else if (suite == "dim1-le") s = suite_dim1_le(max_size, budget);
      else if (suite == "yo-ind") s = suite_yo_ind(max_obj, max_mor, e_max_obj, e_max_mor, budget);
      else if (suite == "ka-ka") s = suite_ka_ka(max_obj, max_mor, values, budget);
      else if (suite == "lax-ind") s = suite_lax_ind(max_size, budget);
      else
        throw Error(Error::Kind::PreconditionFailed, "unknown suite '" + suite + "'");
      rc = run_harness(suite, s, r);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << error_kind_name(e.kind) << ": " << e.what() << "\n";
    return e.kind == Error::Kind::BoundExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  print_report(r, json, dot);
  return rc;
}
