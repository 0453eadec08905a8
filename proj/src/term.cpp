#include "bproof/term.hpp"

#include <algorithm>
#include <functional>

namespace bproof {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text[0])) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c) || c == '\''; });
}

BigName::BigName(std::string t) : text(std::move(t)) {
  if (!is_identifier(text)) throw Error("invalid BIG element name: '" + text + "'");
}

PredName::PredName(std::string t) : text(std::move(t)) {
  if (!is_identifier(text)) throw Error("invalid predicate variable name: '" + text + "'");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::And: return "And";
    case Kind::Implies: return "Implies";
    case Kind::Not: return "Not";
    case Kind::Forall: return "Forall";
    case Kind::Eq: return "Eq";
    case Kind::In: return "In";
    case Kind::PredVar: return "PredVar";
    case Kind::Var: return "Var";
    case Kind::MapsTo: return "MapsTo";
    case Kind::Choice: return "Choice";
    case Kind::Big: return "Big";
    case Kind::Pow: return "Pow";
    case Kind::Prod: return "Prod";
    case Kind::Cmp: return "Cmp";
    case Kind::Elem: return "Elem";
  }
  return "?";
}

namespace {

Sort sort_of_kind(Kind k) {
  return static_cast<std::uint8_t>(k) <= static_cast<std::uint8_t>(Kind::PredVar) ? Sort::Predicate
                                                                                  : Sort::Expression;
}

std::size_t arity_of_kind(Kind k) {
  switch (k) {
    case Kind::PredVar:
    case Kind::Var:
    case Kind::Big:
    case Kind::Elem:
      return 0;
    case Kind::Not:
    case Kind::Forall:
    case Kind::Choice:
    case Kind::Pow:
      return 1;
    default:
      return 2;
  }
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void require(const Term& t, Sort s, const char* ctor) {
  if (t.sort() != s) {
    throw SortError(std::string(ctor) + " expects " + (s == Sort::Predicate ? "a predicate" : "an expression") +
                    ", got " + kind_name(t.kind()));
  }
}

}  // namespace

Term Term::make(Kind kind, std::uint32_t index, std::string name, Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->index = index;
  n->name = std::move(name);
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, index);
  if (!n->name.empty()) h = mix(h, std::hash<std::string>{}(n->name));
  const std::size_t ar = arity_of_kind(kind);
  if (ar >= 1) {
    n->depth = a.depth() + 1;
    n->has_pred_var = a.has_pred_var();
    h = mix(h, a.hash());
  }
  if (ar == 2) {
    n->depth = std::max(a.depth(), b.depth()) + 1;
    n->has_pred_var = n->has_pred_var || b.has_pred_var();
    h = mix(h, b.hash());
  }
  switch (kind) {
    case Kind::Var:
      n->max_dangling = index;
      break;
    case Kind::Forall:
      n->max_dangling = a.max_dangling() > 0 ? a.max_dangling() - 1 : 0;
      break;
    case Kind::Cmp:
      n->max_dangling = std::max(a.max_dangling(), b.max_dangling() > 0 ? b.max_dangling() - 1 : 0);
      break;
    case Kind::PredVar:
      n->has_pred_var = true;
      break;
    default:
      if (ar >= 1) n->max_dangling = a.max_dangling();
      if (ar == 2) n->max_dangling = std::max(n->max_dangling, b.max_dangling());
      break;
  }
  n->hash = h;
  n->a = std::move(a);
  n->b = std::move(b);
  return Term(std::move(n));
}

Term Term::And(Term p, Term q) {
  require(p, Sort::Predicate, "And");
  require(q, Sort::Predicate, "And");
  return make(Kind::And, 0, {}, std::move(p), std::move(q));
}

Term Term::Implies(Term p, Term q) {
  require(p, Sort::Predicate, "Implies");
  require(q, Sort::Predicate, "Implies");
  return make(Kind::Implies, 0, {}, std::move(p), std::move(q));
}

Term Term::Not(Term p) {
  require(p, Sort::Predicate, "Not");
  return make(Kind::Not, 0, {}, std::move(p), Term());
}

Term Term::Forall(Term p) {
  require(p, Sort::Predicate, "Forall");
  return make(Kind::Forall, 0, {}, std::move(p), Term());
}

Term Term::Eq(Term e, Term f) {
  require(e, Sort::Expression, "Eq");
  require(f, Sort::Expression, "Eq");
  return make(Kind::Eq, 0, {}, std::move(e), std::move(f));
}

Term Term::In(Term e, Term f) {
  require(e, Sort::Expression, "In");
  require(f, Sort::Expression, "In");
  return make(Kind::In, 0, {}, std::move(e), std::move(f));
}

Term Term::PredVar(PredName k) { return make(Kind::PredVar, 0, std::move(k.text), Term(), Term()); }

Term Term::Var(Index i) { return make(Kind::Var, i.value(), {}, Term(), Term()); }

Term Term::MapsTo(Term e, Term f) {
  require(e, Sort::Expression, "MapsTo");
  require(f, Sort::Expression, "MapsTo");
  return make(Kind::MapsTo, 0, {}, std::move(e), std::move(f));
}

Term Term::Choice(Term e) {
  require(e, Sort::Expression, "Choice");
  return make(Kind::Choice, 0, {}, std::move(e), Term());
}

Term Term::Big() {
  static const Term big = make(Kind::Big, 0, {}, Term(), Term());
  return big;
}

Term Term::Pow(Term e) {
  require(e, Sort::Expression, "Pow");
  return make(Kind::Pow, 0, {}, std::move(e), Term());
}

Term Term::Prod(Term e, Term f) {
  require(e, Sort::Expression, "Prod");
  require(f, Sort::Expression, "Prod");
  return make(Kind::Prod, 0, {}, std::move(e), std::move(f));
}

Term Term::Cmp(Term e, Term p) {
  require(e, Sort::Expression, "Cmp");
  require(p, Sort::Predicate, "Cmp");
  return make(Kind::Cmp, 0, {}, std::move(e), std::move(p));
}

Term Term::Elem(BigName j) { return make(Kind::Elem, 0, std::move(j.text), Term(), Term()); }

Term Term::Iff(Term p, Term q) { return And(Implies(p, q), Implies(q, p)); }

Term Term::Or(Term p, Term q) { return Implies(Not(std::move(p)), std::move(q)); }

Term Term::Exists(Term p) { return Not(Forall(Not(std::move(p)))); }

Sort Term::sort() const { return sort_of_kind(kind()); }

std::size_t Term::arity() const { return arity_of_kind(kind()); }

Index Term::index() const {
  if (kind() != Kind::Var) throw Error(std::string("not a variable: ") + kind_name(kind()));
  return Index(node_->index);
}

const std::string& Term::name() const {
  if (kind() != Kind::Elem && kind() != Kind::PredVar) {
    throw Error(std::string("term carries no name: ") + kind_name(kind()));
  }
  return node_->name;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.index != y.index || x.depth != y.depth || x.name != y.name) {
    return false;
  }
  const std::size_t ar = arity_of_kind(x.kind);
  if (ar >= 1 && !(x.a == y.a)) return false;
  if (ar == 2 && !(x.b == y.b)) return false;
  return true;
}

Sort sort_of(const Term& t) { return t.sort(); }

std::size_t depth(const Term& t) { return t.depth(); }

bool equal(const Term& a, const Term& b) { return a == b; }

namespace {

void collect_dangling(const Term& t, std::uint32_t offset, std::set<Index>& out) {
  if (t.max_dangling() <= offset) return;
  switch (t.kind()) {
    case Kind::Var:
      if (t.index().value() > offset) out.insert(Index(t.index().value() - offset));
      return;
    case Kind::Forall:
      collect_dangling(t.left(), offset + 1, out);
      return;
    case Kind::Cmp:
      collect_dangling(t.left(), offset, out);
      collect_dangling(t.right(), offset + 1, out);
      return;
    default:
      if (t.arity() >= 1) collect_dangling(t.left(), offset, out);
      if (t.arity() == 2) collect_dangling(t.right(), offset, out);
      return;
  }
}

}  // namespace

std::set<Index> dangling(const Term& t) {
  std::set<Index> out;
  collect_dangling(t, 0, out);
  return out;
}

std::optional<std::pair<Term, Term>> match_iff(const Term& t) {
  if (t.kind() != Kind::And) return std::nullopt;
  const Term& l = t.left();
  const Term& r = t.right();
  if (l.kind() != Kind::Implies || r.kind() != Kind::Implies) return std::nullopt;
  if (!(l.left() == r.right()) || !(l.right() == r.left())) return std::nullopt;
  return std::pair{l.left(), l.right()};
}

std::optional<std::pair<Term, Term>> match_or(const Term& t) {
  if (t.kind() != Kind::Implies || t.left().kind() != Kind::Not) return std::nullopt;
  return std::pair{t.left().left(), t.right()};
}

std::optional<Term> match_exists(const Term& t) {
  if (t.kind() != Kind::Not || t.left().kind() != Kind::Forall || t.left().left().kind() != Kind::Not) {
    return std::nullopt;
  }
  return t.left().left().left();
}
bool hyp_member(const Term& p, std::span<const Term> hyps) {
  return std::any_of(hyps.begin(), hyps.end(), [&](const Term& h) { return h == p; });
}

bool hyp_included(std::span<const Term> small, std::span<const Term> large) {
  return std::all_of(small.begin(), small.end(), [&](const Term& p) { return hyp_member(p, large); });
}

}  // namespace bproof
