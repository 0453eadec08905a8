#include "bproof/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <set>

#include "bproof/binder.hpp"

namespace bproof {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at " + std::to_string(position) + ": " + message), position_(position), message_(message) {}

ScopeTable::ScopeTable(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

const std::string& ScopeTable::name(Index i) const {
  if (i.value() > names_.size()) throw Error("index " + std::to_string(i.value()) + " is not in scope");
  return names_[i.value() - 1];
}

std::optional<Index> ScopeTable::lookup(std::string_view name) const {
  for (std::size_t n = 0; n < names_.size(); ++n) {
    if (names_[n] == name) return Index(static_cast<std::uint32_t>(n + 1));
  }
  return std::nullopt;
}

Index ScopeTable::add(std::string name) {
  if (!is_identifier(name) || is_keyword(name)) throw Error("not a variable name: " + name);
  if (contains(name)) throw Error("name already in scope: " + name);
  names_.push_back(std::move(name));
  return Index(static_cast<std::uint32_t>(names_.size()));
}

Index ScopeTable::fresh(std::string_view hint) {
  std::string name = hint.empty() ? "x" + std::to_string(names_.size() + 1) : std::string(hint);
  while (contains(name)) name += '\'';
  return add(std::move(name));
}

bool is_keyword(std::string_view word) {
  static const std::array<std::string_view, 15> words = {"forall", "exists", "not",   "or",    "choice",
                                                         "pow",    "BIG",    "then",  "orelse", "repeat",
                                                         "try",    "focus",  "with",  "at",    "graft"};
  return std::find(words.begin(), words.end(), word) != words.end();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  static const std::array<std::string_view, 17> symbols = {"<=>", "|->", "=>", "|-", "&", "=", ":", "|", "*",
                                                           "{",   "}",   "(",  ")",  ".", ",", "[", "]"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '#' || c == '@') {
      ++i;
      if (i >= text.size() || !ident_start(text[i])) throw ParseError(start, std::string("expected a name after '") + c + "'");
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({c == '#' ? TokenKind::PredVar : TokenKind::Elem, std::string(text.substr(start + 1, i - start - 1)),
                     start});
      continue;
    }
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      out.push_back({is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident, std::move(word), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    bool matched = false;
    for (std::string_view s : symbols) {
      if (text.substr(i, s.size()) == s) {
        out.push_back({TokenKind::Symbol, std::string(s), start});
        i += s.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokenKind::End, "", text.size()});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::at(std::string_view s) const {
  const Token& t = peek();
  return (t.kind == TokenKind::Symbol || t.kind == TokenKind::Keyword) && t.text == s;
}

bool TokenStream::accept(std::string_view s) {
  if (!at(s)) return false;
  next();
  return true;
}

Token TokenStream::expect(std::string_view s) {
  if (!at(s)) fail("expected '" + std::string(s) + "'");
  return next();
}

void TokenStream::fail(const std::string& message) const {
  const Token& t = peek();
  throw ParseError(t.pos, message + (t.kind == TokenKind::End ? " at end of input" : ", found '" + t.text + "'"));
}

bool NamedTerm::is_predicate() const {
  switch (op) {
    case Op::And:
    case Op::Implies:
    case Op::Iff:
    case Op::Or:
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
    case Op::Eq:
    case Op::In:
    case Op::PredVar:
      return true;
    default:
      return false;
  }
}

namespace {

using Op = NamedTerm::Op;

NamedTerm node(Op op, std::size_t pos, std::vector<NamedTerm> args = {}, std::string name = {}) {
  return NamedTerm{op, std::move(name), std::move(args), pos};
}

class Parser {
 public:
  explicit Parser(TokenStream& in) : in_(in) {}

  NamedTerm predicate() { return iff(); }
  NamedTerm expression() { return maps(); }

 private:
  NamedTerm binary_right(Op op, std::string_view symbol, NamedTerm (Parser::*operand)(),
                         NamedTerm (Parser::*self)()) {
    NamedTerm lhs = (this->*operand)();
    if (!in_.at(symbol)) return lhs;
    const std::size_t pos = in_.next().pos;
    NamedTerm rhs = (this->*self)();
    return node(op, pos, {std::move(lhs), std::move(rhs)});
  }

  NamedTerm iff() { return binary_right(Op::Iff, "<=>", &Parser::imp, &Parser::iff); }
  NamedTerm imp() { return binary_right(Op::Implies, "=>", &Parser::disj, &Parser::imp); }
  NamedTerm disj() { return binary_right(Op::Or, "or", &Parser::conj, &Parser::disj); }
  NamedTerm conj() { return binary_right(Op::And, "&", &Parser::unary, &Parser::conj); }

  NamedTerm unary() {
    const Token& t = in_.peek();
    if (in_.at("not")) {
      in_.next();
      return node(Op::Not, t.pos, {unary()});
    }
    if (in_.at("forall") || in_.at("exists")) {
      const Op op = in_.at("forall") ? Op::Forall : Op::Exists;
      const std::size_t pos = in_.next().pos;
      std::string name = variable_name();
      in_.expect(".");
      return node(op, pos, {iff()}, std::move(name));
    }
    return patom();
  }

  NamedTerm patom() {
    const Token t = in_.peek();
    if (t.kind == TokenKind::PredVar) {
      in_.next();
      return node(Op::PredVar, t.pos, {}, t.text);
    }
    if (in_.at("(")) {
      const std::size_t mark = in_.mark();
      try {
        in_.next();
        NamedTerm p = iff();
        in_.expect(")");
        return p;
      } catch (const Error&) {
        in_.reset(mark);
      }
    }
    NamedTerm lhs = expression();
    const Token& rel = in_.peek();
    if (in_.at("=") || in_.at(":")) {
      const Op op = in_.at("=") ? Op::Eq : Op::In;
      in_.next();
      return node(op, rel.pos, {std::move(lhs), expression()});
    }
    throw SortError("expression where a predicate is required at " + std::to_string(lhs.pos));
  }

  NamedTerm maps() { return binary_right(Op::MapsTo, "|->", &Parser::prod, &Parser::maps); }

  NamedTerm prod() {
    NamedTerm lhs = eunary();
    while (in_.at("*")) {
      const std::size_t pos = in_.next().pos;
      lhs = node(Op::Prod, pos, {std::move(lhs), eunary()});
    }
    return lhs;
  }

  NamedTerm eunary() {
    const Token& t = in_.peek();
    if (in_.at("choice") || in_.at("pow")) {
      const Op op = in_.at("choice") ? Op::Choice : Op::Pow;
      in_.next();
      return node(op, t.pos, {eunary()});
    }
    return eatom();
  }

  NamedTerm eatom() {
    const Token t = in_.peek();
    switch (t.kind) {
      case TokenKind::Ident:
        in_.next();
        return node(Op::Name, t.pos, {}, t.text);
      case TokenKind::Elem:
        in_.next();
        return node(Op::Elem, t.pos, {}, t.text);
      case TokenKind::PredVar:
        throw SortError("predicate variable where an expression is required at " + std::to_string(t.pos));
      default:
        break;
    }
    if (in_.accept("BIG")) return node(Op::Big, t.pos);
    if (in_.accept("{")) {
      std::string name = variable_name();
      in_.expect(":");
      NamedTerm set = expression();
      in_.expect("|");
      NamedTerm body = predicate();
      in_.expect("}");
      return node(Op::Cmp, t.pos, {std::move(set), std::move(body)}, std::move(name));
    }
    if (in_.at("(")) {
      const std::size_t mark = in_.mark();
      in_.next();
      try {
        NamedTerm e = expression();
        in_.expect(")");
        return e;
      } catch (const ParseError&) {
        in_.reset(mark);
        in_.next();
        bool is_pred = false;
        try {
          predicate();
          is_pred = in_.at(")");
        } catch (const Error&) {
        }
        in_.reset(mark);
        if (is_pred) throw SortError("predicate where an expression is required at " + std::to_string(t.pos));
        throw;
      }
    }
    if (in_.at("not") || in_.at("forall") || in_.at("exists")) {
      throw SortError("predicate where an expression is required at " + std::to_string(t.pos));
    }
    in_.fail("expected an expression");
  }

  std::string variable_name() {
    const Token t = in_.peek();
    if (t.kind != TokenKind::Ident) in_.fail("expected a variable name");
    in_.next();
    return t.text;
  }

  TokenStream& in_;
};

void expect_end(TokenStream& in) {
  if (!in.at_end()) in.fail("unexpected input");
}

// Free names in first-occurrence order.
void collect_free(const NamedTerm& t, std::vector<std::string>& bound, ScopeTable& scope) {
  switch (t.op) {
    case Op::Name:
      if (std::find(bound.begin(), bound.end(), t.name) == bound.end() && !scope.contains(t.name)) {
        scope.add(t.name);
      }
      return;
    case Op::Forall:
    case Op::Exists:
      bound.push_back(t.name);
      collect_free(t.args[0], bound, scope);
      bound.pop_back();
      return;
    case Op::Cmp:
      collect_free(t.args[0], bound, scope);
      bound.push_back(t.name);
      collect_free(t.args[1], bound, scope);
      bound.pop_back();
      return;
    default:
      for (const NamedTerm& a : t.args) collect_free(a, bound, scope);
  }
}

// Named form to the functional representation: every binder gets a
// temporary free index beyond the scope and is then abstracted with bind_*.
class Resolver {
 public:
  Resolver(const ScopeTable& scope, std::vector<std::string> prefix) : scope_(scope) {
    for (auto& name : prefix) push(std::move(name));
  }

  Term run(const NamedTerm& t) {
    switch (t.op) {
      case Op::And: return Term::And(run(t.args[0]), run(t.args[1]));
      case Op::Implies: return Term::Implies(run(t.args[0]), run(t.args[1]));
      case Op::Iff: return Term::Iff(run(t.args[0]), run(t.args[1]));
      case Op::Or: return Term::Or(run(t.args[0]), run(t.args[1]));
      case Op::Not: return Term::Not(run(t.args[0]));
      case Op::Eq: return Term::Eq(run(t.args[0]), run(t.args[1]));
      case Op::In: return Term::In(run(t.args[0]), run(t.args[1]));
      case Op::PredVar: return Term::PredVar(PredName(t.name));
      case Op::MapsTo: return Term::MapsTo(run(t.args[0]), run(t.args[1]));
      case Op::Choice: return Term::Choice(run(t.args[0]));
      case Op::Big: return Term::Big();
      case Op::Pow: return Term::Pow(run(t.args[0]));
      case Op::Prod: return Term::Prod(run(t.args[0]), run(t.args[1]));
      case Op::Elem: return Term::Elem(BigName(t.name));
      case Op::Name: {
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
          if (it->first == t.name) return Term::Var(it->second);
        }
        return Term::Var(*scope_.lookup(t.name));
      }
      case Op::Forall:
      case Op::Exists: {
        const Index i = push(t.name);
        Term body = run(t.args[0]);
        bound_.pop_back();
        return t.op == Op::Forall ? bind_forall(i, body) : bind_exists(i, body);
      }
      case Op::Cmp: {
        Term set = run(t.args[0]);
        const Index i = push(t.name);
        Term body = run(t.args[1]);
        bound_.pop_back();
        return bind_cmp(i, set, body);
      }
    }
    throw Error("unknown syntax node");
  }

  // Index of the prefix binder at nesting level `level` (0 = outermost).
  Index prefix_index(std::size_t level) const { return temp(level); }

 private:
  Index temp(std::size_t level) const {
    return Index(static_cast<std::uint32_t>(scope_.size() + level + 1));
  }
  Index push(std::string name) {
    const Index i = temp(bound_.size());
    bound_.emplace_back(std::move(name), i);
    return i;
  }

  const ScopeTable& scope_;
  std::vector<std::pair<std::string, Index>> bound_;
};

// Renames the free indexes of `t` with `f`, keeping bound ones.
Term rename_free(const Term& t, const std::function<std::uint32_t(std::uint32_t)>& f, std::uint32_t depth = 0) {
  if (t.max_dangling() <= depth) return t;
  switch (t.kind()) {
    case Kind::Var: return Term::Var(f(t.index().value() - depth) + depth);
    case Kind::Not: return Term::Not(rename_free(t.left(), f, depth));
    case Kind::Forall: return Term::Forall(rename_free(t.left(), f, depth + 1));
    case Kind::Choice: return Term::Choice(rename_free(t.left(), f, depth));
    case Kind::Pow: return Term::Pow(rename_free(t.left(), f, depth));
    case Kind::And: return Term::And(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth));
    case Kind::Implies: return Term::Implies(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth));
    case Kind::Eq: return Term::Eq(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth));
    case Kind::In: return Term::In(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth));
    case Kind::MapsTo: return Term::MapsTo(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth));
    case Kind::Prod: return Term::Prod(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth));
    case Kind::Cmp: return Term::Cmp(rename_free(t.left(), f, depth), rename_free(t.right(), f, depth + 1));
    default: return t;
  }
}

}  // namespace

NamedTerm parse_named_predicate(TokenStream& in) { return Parser(in).predicate(); }
NamedTerm parse_named_expression(TokenStream& in) { return Parser(in).expression(); }

NamedTerm parse_named(std::string_view text) {
  TokenStream in(text);
  const std::size_t start = in.mark();
  std::optional<ParseError> pred_error;
  try {
    NamedTerm p = parse_named_predicate(in);
    expect_end(in);
    return p;
  } catch (const ParseError& e) {
    pred_error = e;
  } catch (const SortError&) {
  }
  in.reset(start);
  try {
    NamedTerm e = parse_named_expression(in);
    expect_end(in);
    return e;
  } catch (const SortError&) {
    if (pred_error) throw *pred_error;
    throw;
  } catch (const ParseError& e) {
    if (pred_error && pred_error->position() >= e.position()) throw *pred_error;
    throw;
  }
}

Term resolve(const NamedTerm& t, ScopeTable& scope) { return resolve_under(t, scope, {}); }

Term resolve_under(const NamedTerm& t, ScopeTable& scope, const std::vector<std::string>& bound) {
  std::vector<std::string> names = bound;
  collect_free(t, names, scope);
  Resolver r(scope, bound);
  Term flat = r.run(t);
  const auto m = static_cast<std::uint32_t>(bound.size());
  if (m == 0) return flat;
  const auto s = static_cast<std::uint32_t>(scope.size());
  // Seen from under the m prefix binders: scope indexes move up by m, the
  // binder at level L becomes index m - L.
  return rename_free(flat, [s, m](std::uint32_t i) { return i <= s ? i + m : m - (i - s - 1); });
}

Term parse_term(std::string_view text, ScopeTable& scope) { return resolve(parse_named(text), scope); }

Term parse_predicate(std::string_view text, ScopeTable& scope) {
  TokenStream in(text);
  NamedTerm p = parse_named_predicate(in);
  expect_end(in);
  return resolve(p, scope);
}

Term parse_expression(std::string_view text, ScopeTable& scope) {
  TokenStream in(text);
  NamedTerm e = parse_named_expression(in);
  expect_end(in);
  return resolve(e, scope);
}

ParsedTerm parse_term(std::string_view text) {
  ScopeTable scope;
  Term t = parse_term(text, scope);
  return {std::move(t), std::move(scope)};
}

namespace {

class Printer {
 public:
  explicit Printer(const ScopeTable& scope) : scope_(scope) {}

  std::string predicate(const Term& t) {
    out_.clear();
    pred(t, 0, false);
    return out_;
  }
  std::string expression(const Term& t) {
    out_.clear();
    expr(t, 0);
    return out_;
  }

 private:
  enum PredPrec { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5 };
  enum ExprPrec { kMaps = 1, kProd = 2, kPrefix = 3 };

  void open(bool parens) {
    if (parens) out_ += '(';
  }
  void close(bool parens) {
    if (parens) out_ += ')';
  }

  void infix(const Term& a, const Term& b, const char* op, int prec, int ctx, bool trailing) {
    const bool parens = prec < ctx;
    if (parens) trailing = false;
    open(parens);
    pred(a, prec + 1, true);
    out_ += op;
    pred(b, prec, trailing);
    close(parens);
  }

  void binder(const char* word, const Term& body, bool trailing) {
    open(trailing);
    out_ += word;
    out_ += ' ';
    out_ += push();
    out_ += " . ";
    pred(body, kIff, false);
    bound_.pop_back();
    close(trailing);
  }

  // `trailing`: more text follows at this nesting level, so a binder
  // printed here would swallow it.
  void pred(const Term& t, int ctx, bool trailing) {
    switch (t.kind()) {
      case Kind::And:
        if (auto iff = match_iff(t)) return infix(iff->first, iff->second, " <=> ", kIff, ctx, trailing);
        return infix(t.left(), t.right(), " & ", kAnd, ctx, trailing);
      case Kind::Implies:
        if (auto disj = match_or(t)) return infix(disj->first, disj->second, " or ", kOr, ctx, trailing);
        return infix(t.left(), t.right(), " => ", kImp, ctx, trailing);
      case Kind::Not: {
        if (auto body = match_exists(t)) return binder("exists", *body, trailing);
        const bool parens = kUnary < ctx;
        open(parens);
        out_ += "not ";
        pred(t.left(), kUnary, parens ? false : trailing);
        close(parens);
        return;
      }
      case Kind::Forall:
        return binder("forall", t.left(), trailing);
      case Kind::Eq:
      case Kind::In:
        expr(t.left(), kMaps);
        out_ += t.kind() == Kind::Eq ? " = " : " : ";
        expr(t.right(), kMaps);
        return;
      case Kind::PredVar:
        out_ += '#';
        out_ += t.name();
        return;
      default:
        throw SortError("not a predicate");
    }
  }

  void expr(const Term& t, int ctx) {
    switch (t.kind()) {
      case Kind::Var:
        out_ += var(t.index().value());
        return;
      case Kind::MapsTo: {
        const bool parens = kMaps < ctx;
        open(parens);
        expr(t.left(), kMaps + 1);
        out_ += " |-> ";
        expr(t.right(), kMaps);
        close(parens);
        return;
      }
      case Kind::Prod: {
        const bool parens = kProd < ctx;
        open(parens);
        expr(t.left(), kProd);
        out_ += " * ";
        expr(t.right(), kProd + 1);
        close(parens);
        return;
      }
      case Kind::Choice:
      case Kind::Pow:
        out_ += t.kind() == Kind::Choice ? "choice " : "pow ";
        expr(t.left(), kPrefix);
        return;
      case Kind::Big:
        out_ += "BIG";
        return;
      case Kind::Elem:
        out_ += '@';
        out_ += t.name();
        return;
      case Kind::Cmp:
        out_ += "{ ";
        {
          std::string name = push();
          bound_.pop_back();
          out_ += name;
          out_ += " : ";
          expr(t.left(), kMaps);
          out_ += " | ";
          bound_.push_back(name);
        }
        pred(t.right(), kIff, false);
        bound_.pop_back();
        out_ += " }";
        return;
      default:
        throw SortError("not an expression");
    }
  }

  std::string push() {
    std::string name = "v" + std::to_string(bound_.size() + 1);
    while (scope_.contains(name)) name += '\'';
    bound_.push_back(name);
    return name;
  }

  std::string var(std::uint32_t i) const {
    const auto depth = static_cast<std::uint32_t>(bound_.size());
    if (i <= depth) return bound_[depth - i];
    const std::uint32_t free = i - depth;
    if (free <= scope_.size()) return scope_.name(Index(free));
    std::string name = "x" + std::to_string(free);
    while (scope_.contains(name)) name += '\'';
    return name;
  }

  const ScopeTable& scope_;
  std::vector<std::string> bound_;
  std::string out_;
};

}  // namespace

std::string print_term(const Term& t, const ScopeTable& scope) {
  Printer p(scope);
  return t.is_predicate() ? p.predicate(t) : p.expression(t);
}

Sequent parse_sequent(std::string_view text, ScopeTable& scope) {
  TokenStream in(text);
  HypList hyps;
  bool has_turnstile = false;
  for (std::size_t n = 0;; ++n) {
    const Token& t = in.peek(n);
    if (t.kind == TokenKind::End) break;
    if (t.kind == TokenKind::Symbol && t.text == "|-") {
      has_turnstile = true;
      break;
    }
  }
  std::vector<NamedTerm> named;
  if (has_turnstile) {
    if (!in.at("|-")) {
      named.push_back(parse_named_predicate(in));
      while (in.accept(",")) named.push_back(parse_named_predicate(in));
    }
    in.expect("|-");
  }
  named.push_back(parse_named_predicate(in));
  expect_end(in);
  for (std::size_t n = 0; n + 1 < named.size(); ++n) hyps.push_back(resolve(named[n], scope));
  Term goal = resolve(named.back(), scope);
  return Sequent(std::move(hyps), std::move(goal));
}

std::string print_sequent(const Sequent& s, const ScopeTable& scope) {
  std::string out;
  for (std::size_t n = 0; n < s.hyps.size(); ++n) {
    if (n) out += ", ";
    out += print_term(s.hyps[n], scope);
  }
  out += s.hyps.empty() ? "|- " : " |- ";
  out += print_term(s.goal, scope);
  return out;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    out += text[i++];
  }
  const auto first = out.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = out.find_last_not_of(" \t\r\n");
  return out.substr(first, last - first + 1);
}

}  // namespace bproof
