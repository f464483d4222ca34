#pragma once

#include <map>

#include "kancalc/groth.hpp"

namespace kancalc {

/// Loaded entities keep their section name and, where the file references
/// other files, the reference strings as written, so serialization can
/// reproduce them.
struct LoadedCategory {
  std::string name;
  CatPtr cat;
};

struct LoadedPoset {
  std::string name;
  Poset poset;
};

struct LoadedSetFun {
  std::string name;
  SetFunctor fun;
  std::string base_ref;
};

struct LoadedFunctor {
  std::string name;
  FinFunctor fun;
  std::string dom_ref, cod_ref;
};

struct LoadedDiagram {
  std::string name;
  CatDiagram diag;
  std::string index_ref;
  std::vector<std::string> at_ref;                    // per index element
  std::map<std::pair<int, int>, std::string> act_ref; // per strict pair
};

// Parsers for the self-contained formats; `origin` names the source in
// diagnostics. Grammar errors throw ParseError with origin:line:column,
// law violations the corresponding validator error.
LoadedCategory parse_category(const std::string& text, const std::string& origin = "<input>");
LoadedPoset parse_poset(const std::string& text, const std::string& origin = "<input>");

// File loaders; formats with references resolve them relative to the
// file's directory.
LoadedCategory load_category(const std::string& path);
LoadedPoset load_poset(const std::string& path);
LoadedSetFun load_setfun(const std::string& path);
LoadedFunctor load_functor(const std::string& path);
LoadedDiagram load_diagram(const std::string& path);

// Canonical serialization, sorted by identifier; serialize(load(f)) is
// idempotent after the one normalization pass load performs.
std::string serialize_category(const std::string& name, const FinCat& c);
std::string serialize_poset(const std::string& name, const Poset& p);
std::string serialize_setfun(const LoadedSetFun& x);
std::string serialize_functor(const LoadedFunctor& f);
std::string serialize_diagram(const LoadedDiagram& d);

// DOT export: categories as labeled digraphs on non-identity morphisms,
// posets as Hasse diagrams, elements categories with atom-labeled nodes.
std::string dot_category(const std::string& name, const FinCat& c);
std::string dot_poset(const std::string& name, const Poset& p);
std::string dot_elements(const std::string& name, const ElementsCat& e);

} // namespace kancalc
