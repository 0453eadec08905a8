#include "bproof/tactics.hpp"

#include <algorithm>

#include "bproof/binder.hpp"
#include "bproof/prop.hpp"

namespace bproof {

Step Tactic::operator()(const Sequent& goal, TacticContext& ctx) const {
  Step step = fn_(goal, ctx);
  auto inner = std::make_shared<Justification>(std::move(step.justify));
  step.justify = [inner, subgoals = step.subgoals, goal, name = name_](std::span<const Theorem> ths) {
    if (ths.size() != subgoals.size()) {
      throw JustificationMismatch(name + ": expected " + std::to_string(subgoals.size()) + " theorem(s), got " +
                                  std::to_string(ths.size()));
    }
    for (std::size_t n = 0; n < ths.size(); ++n) {
      if (!(ths[n].sequent() == subgoals[n])) {
        throw JustificationMismatch(name + ": theorem " + std::to_string(n + 1) + " does not prove its subgoal");
      }
    }
    Theorem th = (*inner)(ths);
    if (!(th.sequent() == goal)) throw JustificationMismatch(name + ": justification proves a different sequent");
    return th;
  };
  return step;
}

Step identity_step(const Sequent& s) {
  return {{s}, [](std::span<const Theorem> ths) { return ths[0]; }};
}

namespace {

using namespace rules;

[[noreturn]] void refuse(const std::string& tactic, const std::string& why) {
  throw GoalShapeMismatch(tactic + ": " + why);
}

Step closed(Justification j) { return {{}, std::move(j)}; }

Step one(Sequent s, std::function<Theorem(const Theorem&)> f) {
  return {{std::move(s)}, [f = std::move(f)](std::span<const Theorem> ths) { return f(ths[0]); }};
}

Step two(Sequent a, Sequent b, std::function<Theorem(const Theorem&, const Theorem&)> f) {
  return {{std::move(a), std::move(b)},
          [f = std::move(f)](std::span<const Theorem> ths) { return f(ths[0], ths[1]); }};
}

std::vector<Term> sequent_terms(const Sequent& s) {
  std::vector<Term> ts = s.hyps;
  ts.push_back(s.goal);
  return ts;
}

// A free index not occurring in `s`, registered in the scope under `hint`.
Index fresh_variable(const Sequent& s, TacticContext& ctx, const std::string& hint) {
  const Index floor = fresh_index(sequent_terms(s));
  while (ctx.scope.size() + 1 < floor.value()) ctx.scope.fresh();
  return ctx.scope.fresh(hint);
}

Index fresh_over(std::initializer_list<Term> ts) { return fresh_index(std::vector<Term>(ts)); }

const Term& hyp_at(const Sequent& s, std::size_t n, const std::string& tactic) {
  if (n == 0 || n > s.hyps.size()) {
    refuse(tactic, "no hypothesis " + std::to_string(n) + " (there are " + std::to_string(s.hyps.size()) + ")");
  }
  return s.hyps[n - 1];
}

// Body of the universal quantification `q` seen from a free index `i`
// that does not occur in q: bind_forall(i, body) == q.
Term open_at(const Term& q, Index i) { return inst_forall(Term::Var(i), q); }

// Membership unfolding: the unfolded form of `m` and a theorem
// `g |- m <=> u` (or `g |- u <=> m`, or `g |- u => m` for choice).
struct Unfolding {
  Term unfolded;
  Theorem fact;
  enum Shape { MemberFirst, UnfoldedFirst, ImpliesMember } shape;
};

std::optional<Unfolding> unfold_membership(const Term& m, const HypList& g) {
  if (m.kind() != Kind::In) return std::nullopt;
  const Term& e1 = m.left();
  const Term& set = m.right();
  switch (set.kind()) {
    case Kind::Cmp: {
      const Index i = fresh_over({m});
      const Term p = open_at(Term::Forall(set.right()), i);
      const Arg args[] = {i, e1, set.left(), p};
      Theorem ax = apply_rule(RuleTag::CmpAxiom, {}, args);
      Theorem fact = weaken(ax, g);
      return Unfolding{match_iff(fact.goal())->second, fact, Unfolding::MemberFirst};
    }
    case Kind::Pow: {
      const Index i = fresh_over({m});
      const Arg args[] = {g, i, e1, set.left()};
      Theorem fact = apply_rule(RuleTag::PowAxiom, {}, args);
      return Unfolding{match_iff(fact.goal())->second, fact, Unfolding::MemberFirst};
    }
    case Kind::Prod: {
      const Index i1 = fresh_over({m});
      const Index i2 = i1.next();
      const Arg args[] = {g, i1, i2, e1, set.left(), set.right()};
      Theorem fact = apply_rule(RuleTag::ProdChar, {}, args);
      return Unfolding{match_iff(fact.goal())->first, fact, Unfolding::UnfoldedFirst};
    }
    default:
      break;
  }
  if (e1.kind() == Kind::Choice && e1.left() == set) {
    const Index i = fresh_over({set});
    const Arg args[] = {g, i, set};
    Theorem fact = apply_rule(RuleTag::ChoiceAxiom, {}, args);
    return Unfolding{fact.goal().left(), fact, Unfolding::ImpliesMember};
  }
  return std::nullopt;
}

Term abstract_pred_at(const Term& t, const Term& p, const PredName& k, RewriteMode mode, std::uint32_t depth,
                      std::vector<Term>& lifted) {
  if (t.is_predicate()) {
    const Term* target = &p;
    if (mode == RewriteMode::Subst) {
      while (lifted.size() <= depth) lifted.push_back(lift(lifted.back()));
      target = &lifted[depth];
    }
    if (t.depth() == target->depth() && t == *target) return Term::PredVar(k);
  }
  if (t.depth() <= p.depth()) return t;
  return map_subterms(t, [&](const Term& c, std::uint32_t crossed) {
    return abstract_pred_at(c, p, k, mode, depth + crossed, lifted);
  });
}

Term abstract_expr_at(const Term& t, const Term& e, Index i, std::uint32_t depth, std::vector<Term>& lifted) {
  if (t.is_expression()) {
    while (lifted.size() <= depth) lifted.push_back(lift(lifted.back()));
    if (t.depth() == lifted[depth].depth() && t == lifted[depth]) return Term::Var(i.value() + depth);
  }
  if (t.depth() <= e.depth()) return t;
  return map_subterms(t, [&](const Term& c, std::uint32_t crossed) {
    return abstract_expr_at(c, e, i, depth + crossed, lifted);
  });
}

// Verbatim occurrence of p strictly under a binder that captures one of
// its free indexes.
bool captured_occurrence(const Term& t, const Term& p, std::uint32_t depth) {
  if (depth > 0 && p.max_dangling() > 0 && t == p) return true;
  if (t.depth() <= p.depth()) return false;
  bool found = false;
  map_subterms(t, [&](const Term& c, std::uint32_t crossed) {
    if (!found) found = captured_occurrence(c, p, depth + crossed);
    return c;
  });
  return found;
}

struct Abstraction {
  PredName k;
  Term context;
};

Abstraction abstract_or_refuse(const std::string& tactic, const Term& target, const Term& p1, const Term& p2,
                               RewriteMode mode) {
  const PredName k = fresh_predname(std::vector<Term>{target, p1, p2});
  Term context = abstract_predicate(target, p1, k, mode);
  if (!occurs_pred(k, context)) {
    if (mode == RewriteMode::Subst && captured_occurrence(target, p1, 0)) {
      throw CaptureModeMismatch(tactic + ": the occurrence captures free variables of the rewritten predicate; use graft");
    }
    throw OccurrenceNotFound(tactic + ": no occurrence of the rewritten predicate");
  }
  return {k, std::move(context)};
}

Term place(RewriteMode mode, const PredName& k, const Term& p, const Term& context) {
  return mode == RewriteMode::Subst ? subst_pred(k, p, context) : graft_pred(k, p, context);
}

// `hyps |- context[p1] <=> context[p2]` from a theorem of `p1 <=> p2`.
Theorem congruent(RewriteMode mode, const Abstraction& a, const HypList& hyps, const Theorem& equiv, bool on_expr) {
  if (mode == RewriteMode::Subst) {
    const Arg args[] = {a.k, a.context};
    return congruence(on_expr ? CongruenceKind::SubstEq : CongruenceKind::SubstEquiv, equiv, args);
  }
  const Arg args[] = {hyps, a.k, a.context};
  return congruence(on_expr ? CongruenceKind::GraftEq : CongruenceKind::GraftEquiv, equiv, args);
}

Sequent equivalence_goal(RewriteMode mode, const HypList& g, const Term& p1, const Term& p2) {
  return Sequent(mode == RewriteMode::Subst ? g : HypList{}, Term::Iff(p1, p2));
}

// Shared part of rewrite and rewrite_with: the rewritten sequent and a
// function rebuilding the original from it and a theorem of the equivalence.
struct Rewritten {
  Sequent sequent;
  std::function<Theorem(const Theorem& rewritten, const Theorem& equiv)> rebuild;
};

Rewritten rewrite_sequent(const std::string& tactic, const Sequent& s, const Term& p1, const Term& p2,
                          RewriteMode mode, std::optional<std::size_t> at) {
  if (!at) {
    Abstraction a = abstract_or_refuse(tactic, s.goal, p1, p2, mode);
    Term goal2 = place(mode, a.k, p2, a.context);
    HypList g = s.hyps;
    return {Sequent(g, goal2), [=](const Theorem& rewritten, const Theorem& equiv) {
              return iff_mp_rev(congruent(mode, a, g, equiv, false), rewritten);
            }};
  }
  const Term h = hyp_at(s, *at, tactic);
  Abstraction a = abstract_or_refuse(tactic, h, p1, p2, mode);
  Term h2 = place(mode, a.k, p2, a.context);
  HypList g = s.hyps;
  return {Sequent(extend(g, h2), s.goal), [=](const Theorem& rewritten, const Theorem& equiv) {
            Theorem moved = iff_mp(congruent(mode, a, g, equiv, false), hyp(g, h));
            return cut(moved, rewritten);
          }};
}

}  // namespace

Term abstract_predicate(const Term& t, const Term& p, const PredName& k, RewriteMode mode) {
  if (!p.is_predicate()) throw SortError("only predicates can be abstracted into a predicate variable");
  std::vector<Term> lifted{p};
  return abstract_pred_at(t, p, k, mode, 0, lifted);
}

Term abstract_expression(const Term& t, const Term& e, Index i) {
  if (!e.is_expression()) throw SortError("only expressions can be abstracted into a variable");
  std::vector<Term> lifted{e};
  return abstract_expr_at(t, e, i, 0, lifted);
}

namespace tactics {

Tactic id() {
  return Tactic("id", [](const Sequent& s, TacticContext&) { return identity_step(s); });
}

Tactic hyp() {
  return Tactic("hyp", [](const Sequent& s, TacticContext&) -> Step {
    if (!hyp_member(s.goal, s.hyps)) return identity_step(s);
    return closed([s](std::span<const Theorem>) { return rules::hyp(s.hyps, s.goal); });
  });
}

Tactic and_intro() {
  return Tactic("and_intro", [](const Sequent& s, TacticContext&) -> Step {
    if (s.goal.kind() != Kind::And) return identity_step(s);
    return two(Sequent(s.hyps, s.goal.left()), Sequent(s.hyps, s.goal.right()), rules::and_intro);
  });
}

Tactic identity() {
  return Tactic("identity", [](const Sequent& s, TacticContext&) -> Step {
    if (s.hyps.size() != 1 || !(s.hyps[0] == s.goal)) refuse("identity", "goal is not `p |- p`");
    return closed([p = s.goal](std::span<const Theorem>) {
      const Arg args[] = {p};
      return derived(DerivedRule::Identity, {}, args);
    });
  });
}

Tactic imp_intro() {
  return Tactic("imp_intro", [](const Sequent& s, TacticContext&) -> Step {
    if (s.goal.kind() != Kind::Implies) refuse("imp_intro", "goal is not an implication");
    return one(Sequent(extend(s.hyps, s.goal.left()), s.goal.right()), rules::imp_intro);
  });
}

Tactic forall_intro(std::string hint) {
  return Tactic("forall_intro", [hint](const Sequent& s, TacticContext& ctx) -> Step {
    if (s.goal.kind() != Kind::Forall) refuse("forall_intro", "goal is not a universal quantification");
    const Index i = fresh_variable(s, ctx, hint);
    const Term q = s.goal;
    return one(Sequent(s.hyps, open_at(q, i)), [i, q](const Theorem& th) {
      const Arg args[] = {i, q};
      return derived(DerivedRule::InternalForallIntro, std::span<const Theorem>(&th, 1), args);
    });
  });
}

Tactic intro(std::string hint) {
  return Tactic("intro", [hint](const Sequent& s, TacticContext& ctx) -> Step {
    if (s.goal.kind() == Kind::Forall) return forall_intro(hint)(s, ctx);
    if (s.goal.kind() == Kind::Implies) return imp_intro()(s, ctx);
    refuse("intro", "goal is neither an implication nor a universal quantification");
  });
}

Tactic alpha_intro(std::string hint) {
  return Tactic("alpha_intro", [hint](const Sequent& s, TacticContext& ctx) -> Step {
    if (s.goal.kind() != Kind::Forall) refuse("alpha_intro", "goal is not a universal quantification");
    const Index i1 = fresh_variable(s, ctx, hint);
    const Index i2 = i1.next();
    const Term p = open_at(s.goal, i2);
    return one(Sequent(s.hyps, subst(i2, Term::Var(i1), p)), [i1, i2, p](const Theorem& th) {
      const Arg args[] = {i1, i2, p};
      return derived(DerivedRule::AlphaForallIntro, std::span<const Theorem>(&th, 1), args);
    });
  });
}

Tactic refl() {
  return Tactic("refl", [](const Sequent& s, TacticContext&) -> Step {
    if (s.goal.kind() != Kind::Eq || !(s.goal.left() == s.goal.right())) refuse("refl", "goal is not `e = e`");
    return closed([s](std::span<const Theorem>) { return eq_refl(s.hyps, s.goal.left()); });
  });
}

Tactic contra(Term p) {
  return Tactic("contra", [p](const Sequent& s, TacticContext&) -> Step {
    const HypList g = extend(s.hyps, Term::Not(s.goal));
    return two(Sequent(g, p), Sequent(g, Term::Not(p)), rules::not_neg);
  });
}

Tactic neg_intro(Term p) {
  return Tactic("neg_intro", [p](const Sequent& s, TacticContext&) -> Step {
    if (s.goal.kind() != Kind::Not) refuse("neg_intro", "goal is not a negation");
    const HypList g = extend(s.hyps, s.goal.left());
    return two(Sequent(g, p), Sequent(g, Term::Not(p)), rules::not_pos);
  });
}

Tactic and_left(Term q) {
  return Tactic("and_left", [q](const Sequent& s, TacticContext&) -> Step {
    return one(Sequent(s.hyps, Term::And(s.goal, q)), rules::and_elim_l);
  });
}

Tactic and_right(Term p) {
  return Tactic("and_right", [p](const Sequent& s, TacticContext&) -> Step {
    return one(Sequent(s.hyps, Term::And(p, s.goal)), rules::and_elim_r);
  });
}

Tactic imp_elim() {
  return Tactic("imp_elim", [](const Sequent& s, TacticContext&) -> Step {
    if (s.hyps.empty()) refuse("imp_elim", "no hypothesis to move into the goal");
    HypList g(s.hyps.begin(), s.hyps.end() - 1);
    return one(Sequent(std::move(g), Term::Implies(s.hyps.back(), s.goal)), rules::imp_elim);
  });
}

Tactic clear(std::size_t n) {
  return Tactic("clear", [n](const Sequent& s, TacticContext&) -> Step {
    hyp_at(s, n, "clear");
    HypList g = s.hyps;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(n - 1));
    return one(Sequent(std::move(g), s.goal), [full = s.hyps](const Theorem& th) { return weaken(th, full); });
  });
}

Tactic inst(Term q, Term e) {
  return Tactic("inst", [q, e](const Sequent& s, TacticContext&) -> Step {
    if (q.kind() != Kind::Forall) refuse("inst", "the instantiated formula is not a universal quantification");
    if (!e.is_expression()) throw SortError("inst: the witness must be an expression");
    if (!(inst_forall(e, q) == s.goal)) refuse("inst", "goal is not the instance of the formula at the witness");
    const Index i = fresh_over({q});
    const Term p = open_at(q, i);
    return one(Sequent(s.hyps, q), [i, p, e](const Theorem& th) { return forall_elim(th, i, p, e); });
  });
}

Tactic unfold(std::optional<std::size_t> at) {
  return Tactic("unfold", [at](const Sequent& s, TacticContext&) -> Step {
    if (!at) {
      auto u = unfold_membership(s.goal, s.hyps);
      if (!u) refuse("unfold", "goal is not an unfoldable membership");
      return one(Sequent(s.hyps, u->unfolded), [u = *u](const Theorem& th) {
        switch (u.shape) {
          case Unfolding::MemberFirst: return iff_mp_rev(u.fact, th);
          case Unfolding::UnfoldedFirst: return iff_mp(u.fact, th);
          case Unfolding::ImpliesMember: break;
        }
        return modus_ponens(u.fact, th);
      });
    }
    const Term h = hyp_at(s, *at, "unfold");
    auto u = unfold_membership(h, s.hyps);
    if (!u || u->shape == Unfolding::ImpliesMember) refuse("unfold", "hypothesis is not an unfoldable membership");
    return one(Sequent(extend(s.hyps, u->unfolded), s.goal), [u = *u, g = s.hyps, h](const Theorem& th) {
      Theorem member = rules::hyp(g, h);
      Theorem unfolded = u.shape == Unfolding::MemberFirst ? iff_mp(u.fact, member) : iff_mp_rev(u.fact, member);
      return rules::cut(unfolded, th);
    });
  });
}

Tactic ext() {
  return Tactic("ext", [](const Sequent& s, TacticContext&) -> Step {
    if (s.goal.kind() != Kind::Eq) refuse("ext", "goal is not an equality");
    const Term& a = s.goal.left();
    const Term& b = s.goal.right();
    return two(Sequent(s.hyps, Term::In(a, Term::Pow(b))), Sequent(s.hyps, Term::In(b, Term::Pow(a))),
               [](const Theorem& x, const Theorem& y) {
                 const Theorem prem[] = {x, y};
                 return apply_rule(RuleTag::ExtIntro, prem, {});
               });
  });
}

Tactic big() {
  return Tactic("big", [](const Sequent& s, TacticContext&) -> Step {
    const Term& q = s.goal;
    if (q.kind() == Kind::In && q.left().kind() == Kind::Elem && q.right().kind() == Kind::Big) {
      return closed([s](std::span<const Theorem>) {
        const Arg args[] = {s.hyps, BigName(s.goal.left().name())};
        return apply_rule(RuleTag::BigElem, {}, args);
      });
    }
    if (q.kind() == Kind::Not && q.left().kind() == Kind::Eq && q.left().left().kind() == Kind::Elem &&
        q.left().right().kind() == Kind::Elem) {
      return closed([s](std::span<const Theorem>) {
        const Term& eq = s.goal.left();
        const Arg args[] = {s.hyps, BigName(eq.left().name()), BigName(eq.right().name())};
        return apply_rule(RuleTag::BigDistinct, {}, args);
      });
    }
    refuse("big", "goal is neither `@j : BIG` nor `not (@i = @j)`");
  });
}

namespace {

Tactic pair_side(Term pair_eq, bool left_side) {
  const char* name = left_side ? "pair_left" : "pair_right";
  return Tactic(name, [pair_eq, left_side, name](const Sequent& s, TacticContext&) -> Step {
    if (pair_eq.kind() != Kind::Eq || pair_eq.left().kind() != Kind::MapsTo ||
        pair_eq.right().kind() != Kind::MapsTo) {
      refuse(name, "argument is not an equality of pairs");
    }
    const Term expected = left_side ? Term::Eq(pair_eq.left().left(), pair_eq.right().left())
                                    : Term::Eq(pair_eq.left().right(), pair_eq.right().right());
    if (!(expected == s.goal)) refuse(name, "goal is not the component equality of the pairs");
    const RuleTag tag = left_side ? RuleTag::PairInjL : RuleTag::PairInjR;
    return one(Sequent(s.hyps, pair_eq), [tag](const Theorem& th) {
      return apply_rule(tag, std::span<const Theorem>(&th, 1), {});
    });
  });
}

}  // namespace

Tactic pair_left(Term pair_eq) { return pair_side(std::move(pair_eq), true); }
Tactic pair_right(Term pair_eq) { return pair_side(std::move(pair_eq), false); }

Tactic leibniz(Term e1, Term e2) {
  return Tactic("leibniz", [e1, e2](const Sequent& s, TacticContext&) -> Step {
    const Index i = fresh_over({s.goal, e1, e2});
    const Term p = abstract_expression(s.goal, e2, i);
    if (p == s.goal) throw OccurrenceNotFound("leibniz: the goal does not mention the right-hand side");
    return two(Sequent(s.hyps, Term::Eq(e1, e2)), Sequent(s.hyps, subst(i, e1, p)),
               [i, p](const Theorem& eq, const Theorem& th) {
                 const Theorem prem[] = {eq, th};
                 const Arg args[] = {i, p};
                 return apply_rule(RuleTag::Leibniz, prem, args);
               });
  });
}

Tactic sym() {
  return Tactic("sym", [](const Sequent& s, TacticContext&) -> Step {
    if (s.goal.kind() != Kind::Eq) refuse("sym", "goal is not an equality");
    return one(Sequent(s.hyps, Term::Eq(s.goal.right(), s.goal.left())), [](const Theorem& th) {
      return derived(DerivedRule::EqSym, std::span<const Theorem>(&th, 1), {});
    });
  });
}

Tactic cut(Term p) {
  return Tactic("cut", [p](const Sequent& s, TacticContext&) -> Step {
    return two(Sequent(s.hyps, p), Sequent(extend(s.hyps, p), s.goal), rules::cut);
  });
}

Tactic mp(Term p) {
  return Tactic("mp", [p](const Sequent& s, TacticContext&) -> Step {
    return two(Sequent(s.hyps, Term::Implies(p, s.goal)), Sequent(s.hyps, p), rules::modus_ponens);
  });
}

Tactic exists_intro(Term e) {
  return Tactic("exists_intro", [e](const Sequent& s, TacticContext&) -> Step {
    auto body = match_exists(s.goal);
    if (!body) refuse("exists_intro", "goal is not an existential");
    if (!e.is_expression()) throw SortError("exists_intro: the witness must be an expression");
    const Index i = fresh_over({s.goal, e});
    const Term p = open_at(Term::Forall(*body), i);
    return one(Sequent(s.hyps, subst(i, e, p)), [i, p, e](const Theorem& th) {
      const Arg args[] = {i, p, e};
      return derived(DerivedRule::ExistsIntro, std::span<const Theorem>(&th, 1), args);
    });
  });
}

Tactic destruct(std::size_t n, std::string hint) {
  return Tactic("destruct", [n, hint](const Sequent& s, TacticContext& ctx) -> Step {
    const Term h = hyp_at(s, n, "destruct");
    const HypList g = s.hyps;
    if (auto body = match_exists(h)) {
      const Index i = fresh_variable(s, ctx, hint);
      const Term p = open_at(Term::Forall(*body), i);
      return one(Sequent(extend(g, p), s.goal), [g, h, i, p](const Theorem& th) {
        const Theorem prem[] = {rules::hyp(g, h), th};
        const Arg args[] = {i, p};
        return derived(DerivedRule::ExistsElim, prem, args);
      });
    }
    if (h.kind() == Kind::And) {
      const Term a = h.left();
      const Term b = h.right();
      return one(Sequent(extend(extend(g, a), b), s.goal), [g, h, a](const Theorem& th) {
        const HypList ga = extend(g, a);
        Theorem rest = rules::cut(and_elim_r(rules::hyp(ga, h)), th);
        return rules::cut(and_elim_l(rules::hyp(g, h)), rest);
      });
    }
    if (auto disj = match_or(h)) {
      const Term a = disj->first;
      const Term b = disj->second;
      return two(Sequent(extend(g, a), s.goal), Sequent(extend(g, b), s.goal),
                 [g, h, a, b](const Theorem& pos, const Theorem& other) {
                   const HypList gn = extend(g, Term::Not(a));
                   Theorem b_holds = modus_ponens(rules::hyp(gn, h), rules::hyp(gn, Term::Not(a)));
                   Theorem neg = rules::cut(b_holds, weaken(other, extend(gn, b)));
                   return case_split(a, pos, neg);
                 });
    }
    refuse("destruct", "hypothesis is not a conjunction, an existential or a disjunction");
  });
}

Tactic left() {
  return Tactic("left", [](const Sequent& s, TacticContext&) -> Step {
    auto disj = match_or(s.goal);
    if (!disj) refuse("left", "goal is not a disjunction");
    return one(Sequent(s.hyps, disj->first), [q = disj->second](const Theorem& th) {
      const Arg args[] = {q};
      return derived(DerivedRule::OrIntroL, std::span<const Theorem>(&th, 1), args);
    });
  });
}

Tactic right() {
  return Tactic("right", [](const Sequent& s, TacticContext&) -> Step {
    auto disj = match_or(s.goal);
    if (!disj) refuse("right", "goal is not a disjunction");
    return one(Sequent(s.hyps, disj->second), [p = disj->first](const Theorem& th) {
      const Arg args[] = {p};
      return derived(DerivedRule::OrIntroR, std::span<const Theorem>(&th, 1), args);
    });
  });
}

Tactic prop() {
  return Tactic("prop", [](const Sequent& s, TacticContext&) -> Step {
    if (!prop_valid(s)) return identity_step(s);
    return closed([s](std::span<const Theorem>) { return *prop_prove(s); });
  });
}

Tactic congr(Term p1, Term p2, RewriteMode mode) {
  return Tactic("congr", [p1, p2, mode](const Sequent& s, TacticContext&) -> Step {
    Term lhs = s.goal;
    Term rhs = s.goal;
    bool on_expr = false;
    if (auto iff = match_iff(s.goal)) {
      lhs = iff->first;
      rhs = iff->second;
    } else if (s.goal.kind() == Kind::Eq) {
      lhs = s.goal.left();
      rhs = s.goal.right();
      on_expr = true;
    } else {
      refuse("congr", "goal is neither an equivalence nor an equality");
    }
    Abstraction a = abstract_or_refuse("congr", lhs, p1, p2, mode);
    if (!(place(mode, a.k, p2, a.context) == rhs)) {
      refuse("congr", "the right side is not the left side with the predicate replaced");
    }
    return one(equivalence_goal(mode, s.hyps, p1, p2), [mode, a, g = s.hyps, on_expr](const Theorem& th) {
      return congruent(mode, a, g, th, on_expr);
    });
  });
}

Tactic rewrite(Term p1, Term p2, RewriteMode mode, std::optional<std::size_t> at) {
  return Tactic("rewrite", [p1, p2, mode, at](const Sequent& s, TacticContext&) -> Step {
    Rewritten r = rewrite_sequent("rewrite", s, p1, p2, mode, at);
    return two(r.sequent, equivalence_goal(mode, s.hyps, p1, p2), r.rebuild);
  });
}

Tactic rewrite_with(Theorem premise, RewriteMode mode, std::optional<std::size_t> at) {
  return Tactic("rewrite_with", [premise, mode, at](const Sequent& s, TacticContext&) -> Step {
    auto sides = match_iff(premise.goal());
    if (!sides) refuse("rewrite_with", "the premise is not an equivalence");
    Theorem equiv = premise;
    if (mode == RewriteMode::Graft) {
      if (!premise.hyps().empty()) refuse("rewrite_with", "grafting needs a premise without hypotheses");
    } else if (!(premise.hyps() == s.hyps)) {
      if (!hyp_included(premise.hyps(), s.hyps)) refuse("rewrite_with", "premise hypotheses are not available");
      equiv = weaken(premise, s.hyps);
    }
    Rewritten r = rewrite_sequent("rewrite_with", s, sides->first, sides->second, mode, at);
    return one(r.sequent, [rebuild = r.rebuild, equiv](const Theorem& th) { return rebuild(th, equiv); });
  });
}

Tactic backward(RuleTag tag) {
  switch (tag) {
    case RuleTag::Hyp: return hyp();
    case RuleTag::AndIntro: return and_intro();
    case RuleTag::ImpIntro: return imp_intro();
    case RuleTag::ImpElim: return imp_elim();
    case RuleTag::EqRefl: return refl();
    case RuleTag::ForallIntro: return forall_intro();
    case RuleTag::ExtIntro: return ext();
    case RuleTag::BigElem:
    case RuleTag::BigDistinct: return big();
    case RuleTag::CmpAxiom:
    case RuleTag::PowAxiom:
    case RuleTag::ChoiceAxiom:
    case RuleTag::ProdChar: return unfold();
    default: break;
  }
  throw Error(std::string(rule_name(tag)) + " needs arguments; use its dedicated tactic");
}

Tactic then(Tactic a, Tactic b) {
  return Tactic("then", [a, b](const Sequent& s, TacticContext& ctx) -> Step {
    Step first = a(s, ctx);
    std::vector<Step> rest;
    std::vector<Sequent> goals;
    for (const Sequent& sub : first.subgoals) {
      rest.push_back(b(sub, ctx));
      goals.insert(goals.end(), rest.back().subgoals.begin(), rest.back().subgoals.end());
    }
    return {std::move(goals), [first = std::move(first), rest = std::move(rest)](std::span<const Theorem> ths) {
              std::vector<Theorem> mid;
              std::size_t offset = 0;
              for (const Step& r : rest) {
                mid.push_back(r.justify(ths.subspan(offset, r.subgoals.size())));
                offset += r.subgoals.size();
              }
              return first.justify(mid);
            }};
  });
}

Tactic then_nth(Tactic a, std::size_t n, Tactic b) {
  return Tactic("then_nth", [a, n, b](const Sequent& s, TacticContext& ctx) -> Step {
    Step first = a(s, ctx);
    if (n == 0 || n > first.subgoals.size()) {
      throw TacticError("focus: no subgoal " + std::to_string(n) + " (there are " +
                        std::to_string(first.subgoals.size()) + ")");
    }
    Step second = b(first.subgoals[n - 1], ctx);
    std::vector<Sequent> goals(first.subgoals.begin(), first.subgoals.begin() + static_cast<std::ptrdiff_t>(n - 1));
    goals.insert(goals.end(), second.subgoals.begin(), second.subgoals.end());
    goals.insert(goals.end(), first.subgoals.begin() + static_cast<std::ptrdiff_t>(n), first.subgoals.end());
    const std::size_t m = second.subgoals.size();
    return {std::move(goals), [first = std::move(first), second = std::move(second), n, m](std::span<const Theorem> ths) {
              std::vector<Theorem> mid(ths.begin(), ths.begin() + static_cast<std::ptrdiff_t>(n - 1));
              mid.push_back(second.justify(ths.subspan(n - 1, m)));
              mid.insert(mid.end(), ths.begin() + static_cast<std::ptrdiff_t>(n - 1 + m), ths.end());
              return first.justify(mid);
            }};
  });
}

Tactic orelse(Tactic a, Tactic b) {
  return Tactic("orelse", [a, b](const Sequent& s, TacticContext& ctx) -> Step {
    const ScopeTable saved = ctx.scope;
    try {
      return a(s, ctx);
    } catch (const TacticError&) {
      ctx.scope = saved;
      return b(s, ctx);
    }
  });
}

namespace {

Step repeat_step(const Tactic& t, const Sequent& s, TacticContext& ctx, std::size_t& budget) {
  if (budget == 0) return identity_step(s);
  --budget;
  const ScopeTable saved = ctx.scope;
  Step first = [&]() -> Step {
    try {
      return t(s, ctx);
    } catch (const TacticError&) {
      ctx.scope = saved;
      return identity_step(s);
    }
  }();
  if (first.subgoals.size() == 1 && first.subgoals[0] == s) return identity_step(s);
  std::vector<Step> rest;
  std::vector<Sequent> goals;
  for (const Sequent& sub : first.subgoals) {
    rest.push_back(repeat_step(t, sub, ctx, budget));
    goals.insert(goals.end(), rest.back().subgoals.begin(), rest.back().subgoals.end());
  }
  return {std::move(goals), [first = std::move(first), rest = std::move(rest)](std::span<const Theorem> ths) {
            std::vector<Theorem> mid;
            std::size_t offset = 0;
            for (const Step& r : rest) {
              mid.push_back(r.justify(ths.subspan(offset, r.subgoals.size())));
              offset += r.subgoals.size();
            }
            return first.justify(mid);
          }};
}

}  // namespace

Tactic repeat(Tactic t) {
  return Tactic("repeat", [t](const Sequent& s, TacticContext& ctx) {
    std::size_t budget = 10000;
    return repeat_step(t, s, ctx, budget);
  });
}

Tactic try_(Tactic t) { return orelse(std::move(t), id()); }

}  // namespace tactics

}  // namespace bproof
