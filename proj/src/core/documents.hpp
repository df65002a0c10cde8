#pragma once

// JSON documents: groups, set-level and algebra-level actions, algebras.
// Ingest errors are BadDocument with "origin:line:col: message".

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "json.hpp"

#include "core/algebra.hpp"
#include "core/group.hpp"
#include "core/linalg.hpp"
#include "core/partial_action.hpp"
#include "core/semigroup.hpp"

namespace excross {

using Json = nlohmann::json;

/// A parsed document that remembers where each value started.
class LocatedJson {
 public:
  /// Throws BadDocument on a syntax error.
  static LocatedJson parse(std::string_view text, std::string origin);
  /// Reads and parses a file; throws BadDocument when it cannot be read.
  static LocatedJson load(const std::string& path);

  const Json& root() const { return root_; }
  const std::string& origin() const { return origin_; }
  /// "origin:line:col" of the value at `pointer`, or of its nearest
  /// recorded ancestor.
  std::string where(const std::string& pointer) const;
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const;

 private:
  Json root_;
  std::string origin_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions_;
};

enum class DocumentKind { Group, SetAction, AlgebraAction, Algebra };

std::string_view to_string(DocumentKind kind);

/// Decided by the top-level keys: "table" or "permutations" for a group,
/// "maps" for a set-level action, "alpha" for an algebra-level action,
/// "structure_constants" for an algebra.
DocumentKind document_kind(const LocatedJson& doc);

/// A preset name, or else a path to a group document.
GroupTable load_group(std::string_view spec);

GroupTable group_from_json(const LocatedJson& doc, const std::string& pointer = "");
StructureAlgebra algebra_from_json(const LocatedJson& doc, const std::string& pointer = "");

/// The group comes from the document's "group" member, or from `fallback`
/// when the member is absent. Throws SourceMismatch when both are present
/// and differ, BadDocument when neither is.
SetPartialAction set_action_from_json(const LocatedJson& doc, const std::optional<GroupTable>& fallback);

/// "ideals" lists a basis of D_g for g != e (missing means zero);
/// "alpha"[g][i] is the image of "ideals"[g^-1][i] (of the i-th unit vector
/// when g^-1 = e). A missing alpha_{g^-1} is taken as the inverse of alpha_g.
AlgebraPartialAction algebra_action_from_json(const LocatedJson& doc, const std::optional<GroupTable>& fallback);

// Export. Rationals are written as "p/q" strings.
Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const StructureAlgebra& algebra);
Json to_json(const GroupTable& group);
Json to_json(const AxiomResult& result);
Json to_json(const ValidationReport& report);
/// {"elements": [...], "table": [[...]], "star": [...]}
Json semigroup_table_json(const SemigroupTable& table);

}  // namespace excross
