#include "bproof/binder.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bproof {

namespace {

// Same constructor as `t`, new children. Returns `t` itself when nothing changed.
Term rebuild(const Term& t, const Term& a) {
  if (a.same_node(t.left())) return t;
  switch (t.kind()) {
    case Kind::Not: return Term::Not(a);
    case Kind::Forall: return Term::Forall(a);
    case Kind::Choice: return Term::Choice(a);
    case Kind::Pow: return Term::Pow(a);
    default: throw Error(std::string("rebuild: unexpected unary ") + kind_name(t.kind()));
  }
}

Term rebuild(const Term& t, const Term& a, const Term& b) {
  if (a.same_node(t.left()) && b.same_node(t.right())) return t;
  switch (t.kind()) {
    case Kind::And: return Term::And(a, b);
    case Kind::Implies: return Term::Implies(a, b);
    case Kind::Eq: return Term::Eq(a, b);
    case Kind::In: return Term::In(a, b);
    case Kind::MapsTo: return Term::MapsTo(a, b);
    case Kind::Prod: return Term::Prod(a, b);
    case Kind::Cmp: return Term::Cmp(a, b);
    default: throw Error(std::string("rebuild: unexpected binary ") + kind_name(t.kind()));
  }
}

// Applies `f(child, binders_crossed)` to the immediate subterms of `t`.
// `binders_crossed` is 1 for the body of Forall and the predicate of Cmp.
template <typename F>
Term map_children(const Term& t, F&& f) {
  switch (t.arity()) {
    case 0:
      return t;
    case 1:
      return rebuild(t, f(t.left(), t.kind() == Kind::Forall ? 1u : 0u));
    default: {
      Term l = f(t.left(), 0u);
      return rebuild(t, std::move(l), f(t.right(), t.kind() == Kind::Cmp ? 1u : 0u));
    }
  }
}

// Replaces index n by e (already lifted to the current level); indexes above
// n move down by one since a binder disappears.
Term instantiate(const Term& t, std::uint32_t n, const Term& e) {
  if (t.max_dangling() < n) return t;
  if (t.kind() == Kind::Var) {
    const std::uint32_t i = t.index().value();
    if (i == n) return e;
    return Term::Var(i - 1);
  }
  return map_children(t, [&](const Term& c, std::uint32_t crossed) {
    return crossed ? instantiate(c, n + 1, lift(e)) : instantiate(c, n, e);
  });
}

template <bool kLift>
Term replace_pred(const PredName& k, const Term& p, const Term& t) {
  if (!t.has_pred_var()) return t;
  if (t.kind() == Kind::PredVar) return t.name() == k.text ? p : t;
  return map_children(t, [&](const Term& c, std::uint32_t crossed) {
    if constexpr (kLift) {
      return crossed ? replace_pred<kLift>(k, lift(p), c) : replace_pred<kLift>(k, p, c);
    } else {
      return replace_pred<kLift>(k, p, c);
    }
  });
}

void collect_names(const Term& t, Kind kind, std::set<std::string>& out) {
  if (t.kind() == kind) out.insert(t.name());
  if (t.arity() >= 1) collect_names(t.left(), kind, out);
  if (t.arity() == 2) collect_names(t.right(), kind, out);
}

std::string fresh_name(std::span<const Term> ts, Kind kind, const char* prefix) {
  std::set<std::string> used;
  for (const Term& t : ts) collect_names(t, kind, used);
  for (std::size_t n = 1;; ++n) {
    std::string candidate = prefix + std::to_string(n);
    if (!used.count(candidate)) return candidate;
  }
}

}  // namespace

Term lift(const Term& t, std::uint32_t cutoff) {
#ifndef BPROOF_MUTANT_LIFT
  if (t.max_dangling() <= cutoff) return t;
  if (t.kind() == Kind::Var) return Term::Var(t.index().value() + 1);
#else
  // Deliberately wrong cutoff comparison; only built into the mutant library.
  if (t.kind() == Kind::Var) return t.index().value() >= cutoff ? Term::Var(t.index().value() + 1) : t;
#endif
  return map_children(t, [&](const Term& c, std::uint32_t crossed) { return lift(c, cutoff + crossed); });
}

Term shift(const Term& t, std::uint32_t times) {
  Term out = t;
  for (std::uint32_t n = 0; n < times; ++n) out = lift(out);
  return out;
}

Term bind(Index i1, Index i2, const Term& t) {
  if (t.max_dangling() < i2.value()) return t;
  if (t.kind() == Kind::Var) {
    const Index i = t.index();
    if (i < i2) return t;
    if (i == i1) return Term::Var(i2);
    return Term::Var(i.value() + 1);
  }
  return map_children(t, [&](const Term& c, std::uint32_t crossed) {
    return crossed ? bind(i1.next(), i2.next(), c) : bind(i1, i2, c);
  });
}

Term bind_forall(Index i, const Term& p) { return Term::Forall(bind(i, Index(1), p)); }

Term bind_exists(Index i, const Term& p) { return Term::Exists(bind(i, Index(1), p)); }

Term bind_cmp(Index i, const Term& e, const Term& p) { return Term::Cmp(e, bind(i, Index(1), p)); }

Term inst_forall(const Term& e, const Term& q) {
  if (q.kind() != Kind::Forall) throw NotAForall(std::string("cannot instantiate a ") + kind_name(q.kind()));
  if (!e.is_expression()) throw SortError("instantiation expects an expression");
  return instantiate(q.left(), 1, e);
}

Term inst_cmp(const Term& e, const Term& set) {
  if (set.kind() != Kind::Cmp) {
    throw NotAComprehension(std::string("cannot instantiate a ") + kind_name(set.kind()));
  }
  if (!e.is_expression()) throw SortError("instantiation expects an expression");
  return Term::And(Term::In(e, set.left()), instantiate(set.right(), 1, e));
}

Term subst(Index i, const Term& e, const Term& t) {
  if (!e.is_expression()) throw SortError("substitution expects an expression");
  if (t.max_dangling() < i.value()) return t;
  if (t.kind() == Kind::Var) return t.index() == i ? e : t;
  return map_children(t, [&](const Term& c, std::uint32_t crossed) {
    return crossed ? subst(i.next(), lift(e), c) : subst(i, e, c);
  });
}

bool not_free(Index i, const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return t.index() != i;
    case Kind::Big:
    case Kind::Elem:
    case Kind::PredVar:
      return true;
    case Kind::Forall:
      return not_free(i.next(), t.left());
    case Kind::Cmp:
      return not_free(i, t.left()) && not_free(i.next(), t.right());
    default:
      if (!not_free(i, t.left())) return false;
      return t.arity() == 1 || not_free(i, t.right());
  }
}

bool not_free(Index i, std::span<const Term> ts) {
  return std::all_of(ts.begin(), ts.end(), [&](const Term& t) { return not_free(i, t); });
}

Term subst_pred(const PredName& k, const Term& p, const Term& t) {
  if (!p.is_predicate()) throw SortError("predicate substitution expects a predicate");
  return replace_pred<true>(k, p, t);
}

Term graft_pred(const PredName& k, const Term& p, const Term& t) {
  if (!p.is_predicate()) throw SortError("predicate grafting expects a predicate");
  return replace_pred<false>(k, p, t);
}

Index fresh_index(std::span<const Term> ts) {
  std::uint32_t top = 0;
  for (const Term& t : ts) top = std::max(top, t.max_dangling());
  return Index(top + 1);
}

BigName fresh_bigname(std::span<const Term> ts) { return BigName(fresh_name(ts, Kind::Elem, "j")); }

PredName fresh_predname(std::span<const Term> ts) { return PredName(fresh_name(ts, Kind::PredVar, "k")); }

Term map_subterms(const Term& t, const std::function<Term(const Term&, std::uint32_t)>& f) {
  return map_children(t, f);
}

bool occurs_pred(const PredName& k, const Term& t) {
  if (!t.has_pred_var()) return false;
  if (t.kind() == Kind::PredVar) return t.name() == k.text;
  if (t.arity() >= 1 && occurs_pred(k, t.left())) return true;
  return t.arity() == 2 && occurs_pred(k, t.right());
}

}  // namespace bproof
