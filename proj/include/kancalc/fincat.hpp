#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

namespace kancalc {

/// Diagnostic thrown when a structure fails its laws. `kind` is a stable
/// machine-readable tag; `what()` names the offending data.
class Error : public std::runtime_error {
public:
  enum class Kind {
    MissingComposite,
    AssociativityViolation,
    IdentityViolation,
    DanglingEndpoint,
    DuplicateName,
    NonMonotoneLambda,
    VarianceMismatch,
    BoundExceeded,
    PreconditionFailed,
    ParseError,
    ValidationError,
  };

  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

const char* error_kind_name(Error::Kind k);

struct Mor {
  std::string name;
  int src = 0;
  int tgt = 0;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

/// An explicit finite category: ordered objects, ordered morphisms with
/// endpoints, identities, and a total composition table. Instances are
/// immutable once validated; `validated` is the only intended entry point
/// and normalizes object/morphism order to the canonical (lexicographic)
/// one so that equal presentations compare equal.
class FinCat {
public:
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> idm;                  // object -> identity morphism
  std::vector<std::vector<int>> table;   // table[g][f] = g∘f, -1 if not composable

  int nobj() const { return static_cast<int>(objects.size()); }
  int nmor() const { return static_cast<int>(mors.size()); }
  int src(int m) const { return mors[m].src; }
  int tgt(int m) const { return mors[m].tgt; }
  bool is_id(int m) const { return idm[mors[m].src] == m; }
  bool composable(int g, int f) const { return mors[f].tgt == mors[g].src; }
  int compose(int g, int f) const { return table[g][f]; }

  std::vector<int> hom(int a, int b) const;
  int obj_index(const std::string& name) const;      // -1 if absent
  int mor_index(const std::string& name) const;      // -1 if absent
  bool is_idempotent(int m) const;
  bool is_invertible(int m) const;
  std::optional<int> inverse(int m) const;
  std::vector<int> idempotents() const;
  std::optional<int> initial_object() const;
  std::optional<int> terminal_object() const;

  bool operator==(const FinCat& o) const;

  /// Checks all category laws; throws Error naming the first violation.
  static FinCat validated(std::vector<std::string> objects, std::vector<Mor> mors,
                          std::vector<int> idm, std::vector<std::vector<int>> table);

  /// Same checks, but keeps the given object/morphism order (used by
  /// enumeration, where the order is already canonical).
  static FinCat validated_unsorted(std::vector<std::string> objects, std::vector<Mor> mors,
                                   std::vector<int> idm, std::vector<std::vector<int>> table);
};

/// Assembles a category from named parts, inferring identity composites.
/// Only non-identity composites need to be declared.
class CatBuilder {
public:
  explicit CatBuilder(std::string name = "");
  void add_object(const std::string& obj);
  void add_mor(const std::string& name, const std::string& src, const std::string& tgt);
  /// g∘f = h (apply f first).
  void set_compose(const std::string& g, const std::string& f, const std::string& h);
  FinCat build() const;   // validates
  CatPtr build_ptr() const;

  std::string name;

private:
  std::vector<std::string> objects_;
  std::vector<std::string> mor_names_;
  std::vector<std::string> endpoint_src_;
  std::vector<std::string> endpoint_tgt_;
  std::vector<std::tuple<std::string, std::string, std::string>> composites_;
};

CatPtr make_cat(FinCat c);

/// Assembles a category from indexed parts, filling the composition table
/// with comp(g, f) for each composable pair, then validates. Identity
/// composites must also be answered by comp.
FinCat from_parts(std::vector<std::string> objects, std::vector<Mor> mors,
                  std::vector<int> idm, const std::function<int(int, int)>& comp);

// Stock categories.
CatPtr empty_cat();
CatPtr point_cat();
CatPtr discrete_cat(const std::vector<std::string>& names);
CatPtr chain_cat(int n);     // the poset [n] as a category
CatPtr walking_idempotent(); // P: one object x, p with p∘p = p

std::string fresh_name(const std::string& base, const std::vector<std::string>& used);

} // namespace kancalc
