#ifndef BPROOF_SYNTAX_HPP_
#define BPROOF_SYNTAX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bproof/kernel.hpp"
#include "bproof/term.hpp"

namespace bproof {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Names of the free variables: index i is named names()[i-1].
class ScopeTable {
 public:
  ScopeTable() = default;
  explicit ScopeTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index i) const;
  std::optional<Index> lookup(std::string_view name) const;
  bool contains(std::string_view name) const { return lookup(name).has_value(); }

  // Appends a name; it must not be present yet.
  Index add(std::string name);
  // Appends `hint` (or a generated name), adding primes until it is unused.
  Index fresh(std::string_view hint = {});

  friend bool operator==(const ScopeTable&, const ScopeTable&) = default;

 private:
  std::vector<std::string> names_;
};

// Words that cannot be used as variable names.
bool is_keyword(std::string_view word);

enum class TokenKind { Ident, Keyword, Number, Symbol, PredVar, Elem, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}
  explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool at(std::string_view symbol_or_keyword) const;
  bool accept(std::string_view symbol_or_keyword);
  Token expect(std::string_view symbol_or_keyword);
  std::size_t mark() const { return pos_; }
  void reset(std::size_t mark) { pos_ = mark; }
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Surface syntax tree with named variables.
struct NamedTerm {
  enum class Op {
    And, Implies, Iff, Or, Not, Forall, Exists, Eq, In, PredVar,
    Name, MapsTo, Choice, Big, Pow, Prod, Cmp, Elem,
  };
  Op op;
  // Variable name, bound name of a binder, or the name of #k / @j.
  std::string name;
  // Cmp: {set, body}; binders: {body}.
  std::vector<NamedTerm> args;
  std::size_t pos = 0;

  bool is_predicate() const;
};

NamedTerm parse_named_predicate(TokenStream& in);
NamedTerm parse_named_expression(TokenStream& in);
// Whole text, either sort.
NamedTerm parse_named(std::string_view text);

/// Converts to De Bruijn form. Free names are looked up in `scope`; unknown
/// ones are appended to it in first-occurrence order.
Term resolve(const NamedTerm& t, ScopeTable& scope);
/// Same, as if `t` sat under binders named `bound` (outermost first).
Term resolve_under(const NamedTerm& t, ScopeTable& scope, const std::vector<std::string>& bound);

Term parse_term(std::string_view text, ScopeTable& scope);
Term parse_predicate(std::string_view text, ScopeTable& scope);
Term parse_expression(std::string_view text, ScopeTable& scope);

struct ParsedTerm {
  Term term;
  ScopeTable scope;
};
ParsedTerm parse_term(std::string_view text);

/// Bound variables print as v1, v2, ... by nesting level; dangling indexes
/// beyond the scope get generated names.
std::string print_term(const Term& t, const ScopeTable& scope);

/// `H1, H2 |- G`, or just `G`.
Sequent parse_sequent(std::string_view text, ScopeTable& scope);
std::string print_sequent(const Sequent& s, const ScopeTable& scope);

// Drops `--` comments and surrounding blank space.
std::string strip_comments(std::string_view text);

}  // namespace bproof

#endif  // BPROOF_SYNTAX_HPP_
