#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posets/poset.hpp"
#include "posets/pseudo.hpp"

namespace posets {

// Poset description language:
//
//   document   := (poset_decl)*
//   poset_decl := "poset" NAME "{" "elements" ":" NAME+ ";"
//                                  "covers" ":" cover_list? ";" "}"
//   cover_list := cover ("," cover)*
//   cover      := NAME "<" NAME
//
// NAME is [A-Za-z0-9_]+, case-sensitive; "#" starts a line comment.
// Files use the .poset extension, UTF-8, LF or CRLF; output is LF.

struct ElementDecl {
  std::string name;
  Span span;
};

struct CoverDecl {
  std::string lower;
  std::string upper;
  Span lower_span;
  Span upper_span;
};

struct PosetEntry {
  std::string name;
  Span name_span;
  std::vector<ElementDecl> elements;
  std::vector<CoverDecl> covers;

  std::vector<std::string> element_names() const;
};

struct PosetDoc {
  std::vector<PosetEntry> entries;

  const PosetEntry* find(std::string_view name) const;
};

PosetDoc parse(std::string_view text);

/// Canonical text form: elements in declaration order, covers sorted by
/// (lower, upper) declaration index, fixed whitespace, LF line ends.
/// parse(serialize(d)) is structurally equal to d up to canonical cover
/// order, and serialize ∘ parse is idempotent.
std::string serialize(const PosetDoc& doc);
std::string serialize(const PosetEntry& entry);

/// Ignores spans; compares names, element lists and cover multisets.
bool structurally_equal(const PosetEntry& a, const PosetEntry& b);
bool structurally_equal(const PosetDoc& a, const PosetDoc& b);

Poset build_poset(const PosetEntry& entry);
/// Entry whose covers are the poset's transitive reduction.
PosetEntry to_entry(const Poset& p, std::string name);

struct DotOptions {
  std::string graph_name = "poset";
  /// When set, node labels carry "x*=…" annotations.
  const StarTable* star = nullptr;
  /// Suffix Boolean/dense membership markers (needs star).
  bool mark_classes = false;
};

/// DOT digraph of the transitive reduction, edges oriented lower -> upper.
std::string to_dot(const Poset& p, const DotOptions& options = {});

}  // namespace posets
