#include "posets/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace posets {

namespace {

bool name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

enum class Tok { name, lbrace, rbrace, colon, semicolon, comma, less, end };

struct Token {
  Tok kind;
  std::string_view text;
  Span span;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_trivia();
    Span span{pos_, 0, line_, col_};
    if (pos_ >= src_.size()) return {Tok::end, {}, span};
    const char c = src_[pos_];
    if (name_char(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && name_char(src_[pos_])) advance();
      span.length = pos_ - start;
      return {Tok::name, src_.substr(start, span.length), span};
    }
    span.length = 1;
    Tok kind;
    switch (c) {
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case ':': kind = Tok::colon; break;
      case ';': kind = Tok::semicolon; break;
      case ',': kind = Tok::comma; break;
      case '<': kind = Tok::less; break;
      default:
        throw ParseError(Errc::syntax_error, span,
                         location(span) + ": unexpected character '" + std::string(1, c) + "'");
    }
    Token t{kind, src_.substr(pos_, 1), span};
    advance();
    return t;
  }

  static std::string location(const Span& s) {
    return std::to_string(s.line) + ":" + std::to_string(s.column);
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) { shift(); }

  PosetDoc document() {
    PosetDoc doc;
    std::set<std::string, std::less<>> names;
    while (cur_.kind != Tok::end) {
      PosetEntry entry = poset_decl();
      if (!names.insert(entry.name).second)
        throw ParseError(Errc::duplicate_poset_name, entry.name_span,
                         Lexer::location(entry.name_span) + ": duplicate poset name '" +
                             entry.name + "'");
      doc.entries.push_back(std::move(entry));
    }
    return doc;
  }

private:
  void shift() { cur_ = lexer_.next(); }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(Errc::syntax_error, cur_.span,
                       Lexer::location(cur_.span) + ": expected " + what + ", found '" +
                           describe(cur_) + "'");
    Token t = cur_;
    shift();
    return t;
  }

  Token expect_keyword(std::string_view word) {
    if (cur_.kind != Tok::name || cur_.text != word)
      throw ParseError(Errc::syntax_error, cur_.span,
                       Lexer::location(cur_.span) + ": expected '" + std::string(word) +
                           "', found '" + describe(cur_) + "'");
    Token t = cur_;
    shift();
    return t;
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of input" : std::string(t.text);
  }

  PosetEntry poset_decl() {
    PosetEntry entry;
    expect_keyword("poset");
    Token name = expect(Tok::name, "a poset name");
    entry.name = std::string(name.text);
    entry.name_span = name.span;
    expect(Tok::lbrace, "'{'");

    expect_keyword("elements");
    expect(Tok::colon, "':'");
    std::set<std::string_view> seen;
    while (cur_.kind == Tok::name) {
      if (!seen.insert(cur_.text).second)
        throw ParseError(Errc::duplicate_element, cur_.span,
                         Lexer::location(cur_.span) + ": duplicate element '" +
                             std::string(cur_.text) + "'");
      entry.elements.push_back({std::string(cur_.text), cur_.span});
      shift();
    }
    if (entry.elements.empty())
      throw ParseError(Errc::syntax_error, cur_.span,
                       Lexer::location(cur_.span) + ": expected at least one element name");
    expect(Tok::semicolon, "';'");

    expect_keyword("covers");
    expect(Tok::colon, "':'");
    if (cur_.kind == Tok::name) {
      entry.covers.push_back(cover(seen));
      while (cur_.kind == Tok::comma) {
        shift();
        entry.covers.push_back(cover(seen));
      }
    }
    expect(Tok::semicolon, "';'");
    expect(Tok::rbrace, "'}'");
    return entry;
  }

  CoverDecl cover(const std::set<std::string_view>& declared) {
    CoverDecl c;
    Token lo = expect(Tok::name, "an element name");
    expect(Tok::less, "'<'");
    Token hi = expect(Tok::name, "an element name");
    check_declared(lo, declared);
    check_declared(hi, declared);
    c.lower = std::string(lo.text);
    c.lower_span = lo.span;
    c.upper = std::string(hi.text);
    c.upper_span = hi.span;
    return c;
  }

  static void check_declared(const Token& t, const std::set<std::string_view>& declared) {
    if (!declared.contains(t.text))
      throw ParseError(Errc::unknown_element_in_cover, t.span,
                       Lexer::location(t.span) + ": cover references undeclared element '" +
                           std::string(t.text) + "'");
  }

  Lexer lexer_;
  Token cur_{Tok::end, {}, {}};
};

}  // namespace

std::vector<std::string> PosetEntry::element_names() const {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.name);
  return out;
}

const PosetEntry* PosetDoc::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

PosetDoc parse(std::string_view text) { return Parser(text).document(); }

std::string serialize(const PosetEntry& entry) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < entry.elements.size(); ++i) index[entry.elements[i].name] = i;

  auto covers = entry.covers;
  std::sort(covers.begin(), covers.end(), [&](const CoverDecl& a, const CoverDecl& b) {
    return std::pair(index.at(a.lower), index.at(a.upper)) <
           std::pair(index.at(b.lower), index.at(b.upper));
  });

  std::ostringstream out;
  out << "poset " << entry.name << " {\n  elements:";
  for (const auto& e : entry.elements) out << ' ' << e.name;
  out << ";\n  covers:";
  for (std::size_t i = 0; i < covers.size(); ++i)
    out << (i ? ", " : " ") << covers[i].lower << '<' << covers[i].upper;
  out << (covers.empty() ? " ;\n}\n" : ";\n}\n");
  return out.str();
}

std::string serialize(const PosetDoc& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.entries.size(); ++i) {
    if (i) out += "\n";
    out += serialize(doc.entries[i]);
  }
  return out;
}

bool structurally_equal(const PosetEntry& a, const PosetEntry& b) {
  if (a.name != b.name || a.elements.size() != b.elements.size() ||
      a.covers.size() != b.covers.size())
    return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (a.elements[i].name != b.elements[i].name) return false;
  auto key = [](const CoverDecl& c) { return std::pair(c.lower, c.upper); };
  std::multiset<std::pair<std::string, std::string>> ca, cb;
  for (const auto& c : a.covers) ca.insert(key(c));
  for (const auto& c : b.covers) cb.insert(key(c));
  return ca == cb;
}

bool structurally_equal(const PosetDoc& a, const PosetDoc& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!structurally_equal(a.entries[i], b.entries[i])) return false;
  return true;
}

Poset build_poset(const PosetEntry& entry) {
  std::vector<std::pair<std::string, std::string>> covers;
  covers.reserve(entry.covers.size());
  for (const auto& c : entry.covers) covers.emplace_back(c.lower, c.upper);
  return Poset::from_covers(entry.element_names(), covers);
}

PosetEntry to_entry(const Poset& p, std::string name) {
  PosetEntry entry;
  entry.name = std::move(name);
  for (const auto& l : p.labels()) entry.elements.push_back({l, {}});
  for (auto [lo, hi] : p.covers())
    entry.covers.push_back({p.label(lo), p.label(hi), {}, {}});
  return entry;
}

std::string to_dot(const Poset& p, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph \"" << options.graph_name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";

  std::optional<Subset> booleans, denses;
  if (options.star && options.mark_classes) {
    booleans = boolean_elements(*options.star);
    denses = dense_elements(*options.star);
  }

  for (int e = 0; e < p.size(); ++e) {
    out << "  \"" << p.label(e) << "\"";
    if (options.star) {
      out << " [label=\"" << p.label(e) << "\\n" << p.label(e) << "*="
          << p.label(options.star->star(e));
      if (booleans) {
        if (booleans->contains(e)) out << " B";
        if (denses->contains(e)) out << " D";
      }
      out << "\"]";
    }
    out << ";\n";
  }
  for (auto [lo, hi] : p.covers())
    out << "  \"" << p.label(lo) << "\" -> \"" << p.label(hi) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posets
