#include "bproof/kernel.hpp"

#include <algorithm>
#include <unordered_map>

#include "bproof/binder.hpp"

namespace bproof {

struct KernelAccess {
  static Theorem make(Sequent s, ProofTree p) { return Theorem(std::move(s), std::move(p)); }
};

namespace {

using Code = KernelError::Code;

[[noreturn]] void fail(Code code, const std::string& what) { throw KernelError(code, what); }

const std::vector<std::pair<Rule, RuleInfo>>& rule_table() {
  using K = ArgKind;
  static const std::vector<std::pair<Rule, RuleInfo>> table = {
      {RuleTag::Hyp, {"Hyp", {K::Hyps, K::Term}, 0}},
      {RuleTag::Weaken, {"Weaken", {K::Hyps}, 1}},
      {RuleTag::ImpElim, {"ImpElim", {}, 1}},
      {RuleTag::ImpIntro, {"ImpIntro", {}, 1}},
      {RuleTag::AndIntro, {"AndIntro", {}, 2}},
      {RuleTag::AndElimL, {"AndElimL", {}, 1}},
      {RuleTag::AndElimR, {"AndElimR", {}, 1}},
      {RuleTag::NotPos, {"NotPos", {}, 2}},
      {RuleTag::NotNeg, {"NotNeg", {}, 2}},
      {RuleTag::EqRefl, {"EqRefl", {K::Hyps, K::Term}, 0}},
      {RuleTag::ForallIntro, {"ForallIntro", {K::Index}, 1}},
      {RuleTag::ForallElim, {"ForallElim", {K::Index, K::Term, K::Term}, 1}},
      {RuleTag::CmpAxiom, {"CmpAxiom", {K::Index, K::Term, K::Term, K::Term}, 0}},
      {RuleTag::Leibniz, {"Leibniz", {K::Index, K::Term}, 2}},
      {RuleTag::ChoiceAxiom, {"ChoiceAxiom", {K::Hyps, K::Index, K::Term}, 0}},
      {RuleTag::PowAxiom, {"PowAxiom", {K::Hyps, K::Index, K::Term, K::Term}, 0}},
      {RuleTag::ExtIntro, {"ExtIntro", {}, 2}},
      {RuleTag::BigElem, {"BigElem", {K::Hyps, K::Big}, 0}},
      {RuleTag::BigDistinct, {"BigDistinct", {K::Hyps, K::Big, K::Big}, 0}},
      {RuleTag::PairInjL, {"PairInjL", {}, 1}},
      {RuleTag::PairInjR, {"PairInjR", {}, 1}},
      {RuleTag::ProdChar, {"ProdChar", {K::Hyps, K::Index, K::Index, K::Term, K::Term, K::Term}, 0}},
      {DerivedRule::Identity, {"Identity", {K::Term}, 0}},
      {DerivedRule::Cut, {"Cut", {}, 2}},
      {DerivedRule::ModusPonens, {"ModusPonens", {}, 2}},
      {DerivedRule::AlphaForallIntro, {"AlphaForallIntro", {K::Index, K::Index, K::Term}, 1}},
      {DerivedRule::InternalForallIntro, {"InternalForallIntro", {K::Index, K::Term}, 1}},
      {DerivedRule::OrIntroL, {"OrIntroL", {K::Term}, 1}},
      {DerivedRule::OrIntroR, {"OrIntroR", {K::Term}, 1}},
      {DerivedRule::ExistsIntro, {"ExistsIntro", {K::Index, K::Term, K::Term}, 1}},
      {DerivedRule::ExistsElim, {"ExistsElim", {K::Index, K::Term}, 2}},
      {DerivedRule::EqSym, {"EqSym", {}, 1}},
      {DerivedRule::IffMP, {"IffMP", {}, 2}},
      {DerivedRule::IffMPRev, {"IffMPRev", {}, 2}},
      {DerivedRule::CaseSplit, {"CaseSplit", {K::Term}, 2}},
      {DerivedRule::Absurd, {"Absurd", {K::Term}, 2}},
      {DerivedRule::DoubleNegIntro, {"DoubleNegIntro", {}, 1}},
      {CongruenceKind::SubstEquiv, {"SubstEquiv", {K::Pred, K::Term}, 1}},
      {CongruenceKind::SubstEq, {"SubstEq", {K::Pred, K::Term}, 1}},
      {CongruenceKind::GraftEquiv, {"GraftEquiv", {K::Hyps, K::Pred, K::Term}, 1}},
      {CongruenceKind::GraftEq, {"GraftEq", {K::Hyps, K::Pred, K::Term}, 1}},
  };
  return table;
}

// Validates premise count and argument kinds against the rule table.
void check_shape(const Rule& rule, std::span<const Theorem> premises, std::span<const Arg> args) {
  const RuleInfo& info = rule_info(rule);
  if (premises.size() != info.premises) {
    fail(Code::PremiseMismatch, std::string(info.name) + " expects " + std::to_string(info.premises) +
                                    " premise(s), got " + std::to_string(premises.size()));
  }
  if (args.size() != info.args.size()) {
    fail(Code::PremiseMismatch, std::string(info.name) + " expects " + std::to_string(info.args.size()) +
                                    " argument(s), got " + std::to_string(args.size()));
  }
  for (std::size_t n = 0; n < args.size(); ++n) {
    if (arg_kind(args[n]) != info.args[n]) {
      fail(Code::PremiseMismatch, std::string(info.name) + ": argument " + std::to_string(n + 1) + " has the wrong kind");
    }
    if (const auto* g = std::get_if<HypList>(&args[n])) {
      for (const Term& h : *g) {
        if (!h.is_predicate()) fail(Code::SortError, std::string(info.name) + ": hypotheses must be predicates");
      }
    }
  }
}

const Term& term_arg(std::span<const Arg> args, std::size_t n) { return std::get<Term>(args[n]); }
const HypList& hyps_arg(std::span<const Arg> args, std::size_t n) { return std::get<HypList>(args[n]); }
Index index_arg(std::span<const Arg> args, std::size_t n) { return std::get<Index>(args[n]); }

const Term& pred(const Term& t, const char* rule, const char* what) {
  if (!t.is_predicate()) fail(Code::SortError, std::string(rule) + ": " + what + " must be a predicate");
  return t;
}

const Term& expr(const Term& t, const char* rule, const char* what) {
  if (!t.is_expression()) fail(Code::SortError, std::string(rule) + ": " + what + " must be an expression");
  return t;
}

void same_hyps(const Theorem& a, const Theorem& b, const char* rule) {
  if (a.hyps() != b.hyps()) fail(Code::PremiseMismatch, std::string(rule) + ": premises have different hypotheses");
}

void expect_kind(const Term& t, Kind k, const char* rule, const char* what) {
  if (t.kind() != k) {
    fail(Code::PremiseMismatch,
         std::string(rule) + ": " + what + " must be " + kind_name(k) + ", got " + kind_name(t.kind()));
  }
}

void side(bool ok, const char* rule, const std::string& condition) {
  if (!ok) fail(Code::SideConditionViolated, std::string(rule) + ": side condition violated: " + condition);
}

// Splits `g, p` into `g` and `p`.
std::pair<HypList, Term> split_last(const HypList& hyps, const char* rule) {
  if (hyps.empty()) fail(Code::PremiseMismatch, std::string(rule) + ": premise has no hypothesis to discharge");
  return {HypList(hyps.begin(), hyps.end() - 1), hyps.back()};
}

std::vector<ProofTree> premise_trees(std::span<const Theorem> premises) {
  std::vector<ProofTree> out;
  out.reserve(premises.size());
  for (const Theorem& th : premises) out.push_back(th.proof());
  return out;
}

Theorem conclude(const Rule& rule, std::span<const Theorem> premises, std::span<const Arg> args, HypList hyps,
                 Term goal) {
  return KernelAccess::make(Sequent(std::move(hyps), std::move(goal)),
                            ProofTree(rule, std::vector<Arg>(args.begin(), args.end()), premise_trees(premises)));
}

Theorem primitive(RuleTag tag, std::span<const Theorem> prem, std::span<const Arg> args) {
  check_shape(tag, prem, args);
  const Rule rule = tag;
  switch (tag) {
    case RuleTag::Hyp: {
      const HypList& g = hyps_arg(args, 0);
      const Term& p = pred(term_arg(args, 1), "Hyp", "goal");
      side(hyp_member(p, g), "Hyp", "goal is not a hypothesis");
      return conclude(rule, prem, args, g, p);
    }
    case RuleTag::Weaken: {
      const HypList& g2 = hyps_arg(args, 0);
      side(hyp_included(prem[0].hyps(), g2), "Weaken", "premise hypotheses are not included in the new list");
      return conclude(rule, prem, args, g2, prem[0].goal());
    }
    case RuleTag::ImpElim: {
      const Term& imp = prem[0].goal();
      expect_kind(imp, Kind::Implies, "ImpElim", "premise goal");
      return conclude(rule, prem, args, extend(prem[0].hyps(), imp.left()), imp.right());
    }
    case RuleTag::ImpIntro: {
      auto [g, p1] = split_last(prem[0].hyps(), "ImpIntro");
      return conclude(rule, prem, args, std::move(g), Term::Implies(p1, prem[0].goal()));
    }
    case RuleTag::AndIntro: {
      same_hyps(prem[0], prem[1], "AndIntro");
      return conclude(rule, prem, args, prem[0].hyps(), Term::And(prem[0].goal(), prem[1].goal()));
    }
    case RuleTag::AndElimL:
    case RuleTag::AndElimR: {
      const char* name = tag == RuleTag::AndElimL ? "AndElimL" : "AndElimR";
      const Term& conj = prem[0].goal();
      expect_kind(conj, Kind::And, name, "premise goal");
      return conclude(rule, prem, args, prem[0].hyps(), tag == RuleTag::AndElimL ? conj.left() : conj.right());
    }
    case RuleTag::NotPos:
    case RuleTag::NotNeg: {
      const char* name = tag == RuleTag::NotPos ? "NotPos" : "NotNeg";
      same_hyps(prem[0], prem[1], name);
      auto [g, assumed] = split_last(prem[0].hyps(), name);
      const Term& p1 = prem[0].goal();
      if (!(prem[1].goal() == Term::Not(p1))) {
        fail(Code::PremiseMismatch, std::string(name) + ": second premise must prove the negation of the first");
      }
      if (tag == RuleTag::NotPos) return conclude(rule, prem, args, std::move(g), Term::Not(assumed));
      expect_kind(assumed, Kind::Not, name, "discharged hypothesis");
      return conclude(rule, prem, args, std::move(g), assumed.left());
    }
    case RuleTag::EqRefl: {
      const Term& e = expr(term_arg(args, 1), "EqRefl", "argument");
      return conclude(rule, prem, args, hyps_arg(args, 0), Term::Eq(e, e));
    }
    case RuleTag::ForallIntro: {
      const Index i = index_arg(args, 0);
      side(not_free(i, prem[0].hyps()), "ForallIntro", "index " + std::to_string(i.value()) + " is free in the hypotheses");
      return conclude(rule, prem, args, prem[0].hyps(), bind_forall(i, prem[0].goal()));
    }
    case RuleTag::ForallElim: {
      const Index i = index_arg(args, 0);
      const Term& p = pred(term_arg(args, 1), "ForallElim", "body");
      const Term& e = expr(term_arg(args, 2), "ForallElim", "witness");
      if (!(prem[0].goal() == bind_forall(i, p))) {
        fail(Code::PremiseMismatch, "ForallElim: premise goal is not the quantification of the given body");
      }
      return conclude(rule, prem, args, prem[0].hyps(), subst(i, e, p));
    }
    case RuleTag::CmpAxiom: {
      const Index i = index_arg(args, 0);
      const Term& e1 = expr(term_arg(args, 1), "CmpAxiom", "element");
      const Term& e2 = expr(term_arg(args, 2), "CmpAxiom", "set");
      const Term& p = pred(term_arg(args, 3), "CmpAxiom", "body");
      Term goal = Term::Iff(Term::In(e1, bind_cmp(i, e2, p)), Term::And(Term::In(e1, e2), subst(i, e1, p)));
      return conclude(rule, prem, args, HypList{}, std::move(goal));
    }
    case RuleTag::Leibniz: {
      const Index i = index_arg(args, 0);
      const Term& p = pred(term_arg(args, 1), "Leibniz", "context");
      same_hyps(prem[0], prem[1], "Leibniz");
      const Term& eq = prem[0].goal();
      expect_kind(eq, Kind::Eq, "Leibniz", "first premise goal");
      if (!(prem[1].goal() == subst(i, eq.left(), p))) {
        fail(Code::PremiseMismatch, "Leibniz: second premise is not the context instantiated with the left side");
      }
      return conclude(rule, prem, args, prem[0].hyps(), subst(i, eq.right(), p));
    }
    case RuleTag::ChoiceAxiom: {
      const Index i = index_arg(args, 1);
      const Term& e = expr(term_arg(args, 2), "ChoiceAxiom", "set");
      side(not_free(i, e), "ChoiceAxiom", "index is free in the set");
      Term goal = Term::Implies(bind_exists(i, Term::In(Term::Var(i), e)), Term::In(Term::Choice(e), e));
      return conclude(rule, prem, args, hyps_arg(args, 0), std::move(goal));
    }
    case RuleTag::PowAxiom: {
      const Index i = index_arg(args, 1);
      const Term& e1 = expr(term_arg(args, 2), "PowAxiom", "first set");
      const Term& e2 = expr(term_arg(args, 3), "PowAxiom", "second set");
      side(not_free(i, e1), "PowAxiom", "index is free in the first set");
      side(not_free(i, e2), "PowAxiom", "index is free in the second set");
      const Term v = Term::Var(i);
      Term goal = Term::Iff(Term::In(e1, Term::Pow(e2)),
                            bind_forall(i, Term::Implies(Term::In(v, e1), Term::In(v, e2))));
      return conclude(rule, prem, args, hyps_arg(args, 0), std::move(goal));
    }
    case RuleTag::ExtIntro: {
      same_hyps(prem[0], prem[1], "ExtIntro");
      const Term& a = prem[0].goal();
      const Term& b = prem[1].goal();
      expect_kind(a, Kind::In, "ExtIntro", "first premise goal");
      expect_kind(b, Kind::In, "ExtIntro", "second premise goal");
      expect_kind(a.right(), Kind::Pow, "ExtIntro", "first premise set");
      expect_kind(b.right(), Kind::Pow, "ExtIntro", "second premise set");
      if (!(a.left() == b.right().left()) || !(b.left() == a.right().left())) {
        fail(Code::PremiseMismatch, "ExtIntro: premises are not mutual inclusions");
      }
      return conclude(rule, prem, args, prem[0].hyps(), Term::Eq(a.left(), b.left()));
    }
    case RuleTag::BigElem: {
      const BigName& j = std::get<BigName>(args[1]);
      return conclude(rule, prem, args, hyps_arg(args, 0), Term::In(Term::Elem(j), Term::Big()));
    }
    case RuleTag::BigDistinct: {
      const BigName& j1 = std::get<BigName>(args[1]);
      const BigName& j2 = std::get<BigName>(args[2]);
      side(j1 != j2, "BigDistinct", "the two names are equal");
      return conclude(rule, prem, args, hyps_arg(args, 0), Term::Not(Term::Eq(Term::Elem(j1), Term::Elem(j2))));
    }
    case RuleTag::PairInjL:
    case RuleTag::PairInjR: {
      const char* name = tag == RuleTag::PairInjL ? "PairInjL" : "PairInjR";
      const Term& eq = prem[0].goal();
      expect_kind(eq, Kind::Eq, name, "premise goal");
      expect_kind(eq.left(), Kind::MapsTo, name, "left side");
      expect_kind(eq.right(), Kind::MapsTo, name, "right side");
      Term goal = tag == RuleTag::PairInjL ? Term::Eq(eq.left().left(), eq.right().left())
                                           : Term::Eq(eq.left().right(), eq.right().right());
      return conclude(rule, prem, args, prem[0].hyps(), std::move(goal));
    }
    case RuleTag::ProdChar: {
      const Index i1 = index_arg(args, 1);
      const Index i2 = index_arg(args, 2);
      const Term& e = expr(term_arg(args, 3), "ProdChar", "element");
      const Term& e1 = expr(term_arg(args, 4), "ProdChar", "first set");
      const Term& e2 = expr(term_arg(args, 5), "ProdChar", "second set");
      const Term membership = Term::In(e, Term::Prod(e1, e2));
      side(not_free(i1, membership), "ProdChar", "first index is free in the membership");
      side(not_free(i2, membership), "ProdChar", "second index is free in the membership");
      side(i1 != i2, "ProdChar", "the two indexes are equal");
      const Term v1 = Term::Var(i1);
      const Term v2 = Term::Var(i2);
      Term inner = bind_exists(i2, Term::And(Term::In(v2, e2), Term::Eq(e, Term::MapsTo(v1, v2))));
      Term outer = bind_exists(i1, Term::And(Term::In(v1, e1), inner));
      return conclude(rule, prem, args, hyps_arg(args, 0), Term::Iff(outer, membership));
    }
  }
  fail(Code::PremiseMismatch, "unknown rule");
}

Theorem finish(DerivedRule rule, std::span<const Theorem> prem, std::span<const Arg> args, const Theorem& result) {
  return conclude(rule, prem, args, result.hyps(), result.goal());
}

Theorem derive(DerivedRule rule, std::span<const Theorem> prem, std::span<const Arg> args) {
  check_shape(rule, prem, args);
  using namespace rules;
  switch (rule) {
    case DerivedRule::Identity: {
      const Term& p = pred(term_arg(args, 0), "Identity", "argument");
      return finish(rule, prem, args, hyp({p}, p));
    }
    case DerivedRule::Cut: {
      const Theorem& a = prem[0];
      const Theorem& b = prem[1];
      const HypList& g = a.hyps();
      if (!(b.hyps() == extend(g, a.goal()))) {
        fail(Code::PremiseMismatch, "Cut: second premise must assume the first premise's goal");
      }
      const Term nq = Term::Not(b.goal());
      const HypList gnq = extend(g, nq);
      const HypList gnqp = extend(gnq, a.goal());
      Theorem not_p = not_pos(weaken(b, gnqp), hyp(gnqp, nq));
      return finish(rule, prem, args, not_neg(weaken(a, gnq), not_p));
    }
    case DerivedRule::ModusPonens: {
      same_hyps(prem[0], prem[1], "ModusPonens");
      expect_kind(prem[0].goal(), Kind::Implies, "ModusPonens", "first premise goal");
      if (!(prem[0].goal().left() == prem[1].goal())) {
        fail(Code::PremiseMismatch, "ModusPonens: second premise does not prove the antecedent");
      }
      return finish(rule, prem, args, cut(prem[1], imp_elim(prem[0])));
    }
    case DerivedRule::AlphaForallIntro: {
      const Index i1 = index_arg(args, 0);
      const Index i2 = index_arg(args, 1);
      const Term& p = pred(term_arg(args, 2), "AlphaForallIntro", "body");
      side(not_free(i1, prem[0].hyps()), "AlphaForallIntro", "new index is free in the hypotheses");
      side(not_free(i1, p), "AlphaForallIntro", "new index is free in the body");
      if (!(prem[0].goal() == subst(i2, Term::Var(i1), p))) {
        fail(Code::PremiseMismatch, "AlphaForallIntro: premise is not the renamed body");
      }
      Theorem th = forall_intro(prem[0], i1);
      if (!(th.goal() == bind_forall(i2, p))) fail(Code::PremiseMismatch, "AlphaForallIntro: renaming mismatch");
      return finish(rule, prem, args, th);
    }
    case DerivedRule::InternalForallIntro: {
      const Index i = index_arg(args, 0);
      const Term& q = pred(term_arg(args, 1), "InternalForallIntro", "quantification");
      expect_kind(q, Kind::Forall, "InternalForallIntro", "argument");
      side(not_free(i, prem[0].hyps()), "InternalForallIntro", "index is free in the hypotheses");
      side(not_free(i, q), "InternalForallIntro", "index is free in the quantification");
      if (!(prem[0].goal() == inst_forall(Term::Var(i), q))) {
        fail(Code::PremiseMismatch, "InternalForallIntro: premise is not the instantiated body");
      }
      Theorem th = forall_intro(prem[0], i);
      if (!(th.goal() == q)) fail(Code::PremiseMismatch, "InternalForallIntro: rebinding mismatch");
      return finish(rule, prem, args, th);
    }
    case DerivedRule::OrIntroL: {
      const Term& q = pred(term_arg(args, 0), "OrIntroL", "right disjunct");
      const Term& p = prem[0].goal();
      const Term np = Term::Not(p);
      const HypList g1 = extend(prem[0].hyps(), np);
      const HypList g2 = extend(g1, Term::Not(q));
      Theorem th = not_neg(weaken(prem[0], g2), hyp(g2, np));
      return finish(rule, prem, args, imp_intro(th));
    }
    case DerivedRule::OrIntroR: {
      const Term& p = pred(term_arg(args, 0), "OrIntroR", "left disjunct");
      return finish(rule, prem, args, imp_intro(weaken(prem[0], extend(prem[0].hyps(), Term::Not(p)))));
    }
    case DerivedRule::ExistsIntro: {
      const Index i = index_arg(args, 0);
      const Term& p = pred(term_arg(args, 1), "ExistsIntro", "body");
      const Term& e = expr(term_arg(args, 2), "ExistsIntro", "witness");
      if (!(prem[0].goal() == subst(i, e, p))) {
        fail(Code::PremiseMismatch, "ExistsIntro: premise is not the body instantiated with the witness");
      }
      const Term all_not = bind_forall(i, Term::Not(p));
      const HypList g = extend(prem[0].hyps(), all_not);
      Theorem neg = forall_elim(hyp(g, all_not), i, Term::Not(p), e);
      return finish(rule, prem, args, not_pos(weaken(prem[0], g), neg));
    }
    case DerivedRule::ExistsElim: {
      const Index i = index_arg(args, 0);
      const Term& p = pred(term_arg(args, 1), "ExistsElim", "body");
      const Theorem& ex = prem[0];
      const Theorem& use = prem[1];
      const HypList& g = ex.hyps();
      if (!(ex.goal() == bind_exists(i, p))) {
        fail(Code::PremiseMismatch, "ExistsElim: first premise is not the existential of the given body");
      }
      if (!(use.hyps() == extend(g, p))) {
        fail(Code::PremiseMismatch, "ExistsElim: second premise must assume the body");
      }
      side(not_free(i, g), "ExistsElim", "index is free in the hypotheses");
      side(not_free(i, use.goal()), "ExistsElim", "index is free in the conclusion");
      const Term nq = Term::Not(use.goal());
      const HypList gnq = extend(g, nq);
      const HypList gnqp = extend(gnq, p);
      Theorem not_body = not_pos(weaken(use, gnqp), hyp(gnqp, nq));
      Theorem all_not = forall_intro(not_body, i);
      return finish(rule, prem, args, not_neg(all_not, weaken(ex, gnq)));
    }
    case DerivedRule::EqSym: {
      const Term& eq = prem[0].goal();
      expect_kind(eq, Kind::Eq, "EqSym", "premise goal");
      const Term& e1 = eq.left();
      const Index i = fresh_index(std::vector<Term>{eq});
      const Term ctx = Term::Eq(Term::Var(i), e1);
      Theorem refl = eq_refl(prem[0].hyps(), e1);
      return finish(rule, prem, args, apply_rule(RuleTag::Leibniz, std::vector<Theorem>{prem[0], refl},
                                                 std::vector<Arg>{i, ctx}));
    }
    case DerivedRule::IffMP:
    case DerivedRule::IffMPRev: {
      const char* name = rule == DerivedRule::IffMP ? "IffMP" : "IffMPRev";
      same_hyps(prem[0], prem[1], name);
      if (!match_iff(prem[0].goal())) fail(Code::PremiseMismatch, std::string(name) + ": first premise is not an equivalence");
      Theorem imp = rule == DerivedRule::IffMP ? and_elim_l(prem[0]) : and_elim_r(prem[0]);
      if (!(imp.goal().left() == prem[1].goal())) {
        fail(Code::PremiseMismatch, std::string(name) + ": second premise does not match the equivalence");
      }
      return finish(rule, prem, args, modus_ponens(imp, prem[1]));
    }
    case DerivedRule::CaseSplit: {
      const Term& a = pred(term_arg(args, 0), "CaseSplit", "case");
      const Theorem& pos = prem[0];
      const Theorem& neg = prem[1];
      auto [g, assumed_pos] = split_last(pos.hyps(), "CaseSplit");
      if (!(assumed_pos == a) || !(neg.hyps() == extend(g, Term::Not(a))) || !(pos.goal() == neg.goal())) {
        fail(Code::PremiseMismatch, "CaseSplit: premises must assume the case and its negation");
      }
      const Term nq = Term::Not(pos.goal());
      const HypList gnq = extend(g, nq);
      const HypList gnqa = extend(gnq, a);
      const HypList gnqna = extend(gnq, Term::Not(a));
      Theorem not_a = not_pos(weaken(pos, gnqa), hyp(gnqa, nq));
      Theorem is_a = not_neg(weaken(neg, gnqna), hyp(gnqna, nq));
      return finish(rule, prem, args, not_neg(is_a, not_a));
    }
    case DerivedRule::Absurd: {
      const Term& q = pred(term_arg(args, 0), "Absurd", "conclusion");
      same_hyps(prem[0], prem[1], "Absurd");
      if (!(prem[1].goal() == Term::Not(prem[0].goal()))) {
        fail(Code::PremiseMismatch, "Absurd: second premise must prove the negation of the first");
      }
      const HypList g = extend(prem[0].hyps(), Term::Not(q));
      return finish(rule, prem, args, not_neg(weaken(prem[0], g), weaken(prem[1], g)));
    }
    case DerivedRule::DoubleNegIntro: {
      const Term np = Term::Not(prem[0].goal());
      const HypList g = extend(prem[0].hyps(), np);
      return finish(rule, prem, args, not_pos(weaken(prem[0], g), hyp(g, np)));
    }
  }
  fail(Code::PremiseMismatch, "unknown derived rule");
}

Theorem congruent(CongruenceKind kind, const Theorem& premise, std::span<const Arg> args) {
  std::span<const Theorem> prem(&premise, 1);
  check_shape(kind, prem, args);
  const bool graft = kind == CongruenceKind::GraftEquiv || kind == CongruenceKind::GraftEq;
  const bool on_expr = kind == CongruenceKind::SubstEq || kind == CongruenceKind::GraftEq;
  const char* name = rule_info(kind).name.data();
  const std::size_t base = graft ? 1 : 0;
  const PredName& k = std::get<PredName>(args[base]);
  const Term& target = term_arg(args, base + 1);
  if (on_expr) {
    expr(target, name, "target");
  } else {
    pred(target, name, "target");
  }
  auto sides = match_iff(premise.goal());
  if (!sides) fail(Code::PremiseMismatch, std::string(name) + ": premise is not an equivalence");
  HypList hyps = premise.hyps();
  if (graft) {
    side(premise.hyps().empty(), name, "grafting requires a premise without hypotheses");
    hyps = hyps_arg(args, 0);
  }
  auto place = [&](const Term& p) { return graft ? graft_pred(k, p, target) : subst_pred(k, p, target); };
  Term lhs = place(sides->first);
  Term rhs = place(sides->second);
  Term goal = on_expr ? Term::Eq(lhs, rhs) : Term::Iff(lhs, rhs);
  return conclude(kind, prem, args, std::move(hyps), std::move(goal));
}

struct Replayer {
  std::unordered_map<const void*, Theorem> done;
  std::vector<std::size_t> path;

  Theorem run(const ProofTree& tree) {
    if (auto it = done.find(tree.id()); it != done.end()) return it->second;
    std::vector<Theorem> premises;
    premises.reserve(tree.premises().size());
    for (std::size_t n = 0; n < tree.premises().size(); ++n) {
      path.push_back(n);
      premises.push_back(run(tree.premises()[n]));
      path.pop_back();
    }
    try {
      Theorem th = apply(tree.rule(), premises, tree.args());
      done.emplace(tree.id(), th);
      return th;
    } catch (const KernelError& e) {
      throw InvalidStep(path, tree.rule(), e.code(), e.what());
    } catch (const SortError& e) {
      throw InvalidStep(path, tree.rule(), Code::SortError, e.what());
    } catch (const InvalidStep&) {
      throw;
    } catch (const Error& e) {
      throw InvalidStep(path, tree.rule(), Code::PremiseMismatch, e.what());
    }
  }
};

}  // namespace

ArgKind arg_kind(const Arg& a) { return static_cast<ArgKind>(a.index()); }

const RuleInfo& rule_info(const Rule& r) {
  for (const auto& [rule, info] : rule_table()) {
    if (rule == r) return info;
  }
  throw Error("unknown rule");
}

std::string_view rule_name(const Rule& r) { return rule_info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, info] : rule_table()) {
    if (info.name == name) return rule;
  }
  return std::nullopt;
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (const auto& entry : rule_table()) out.push_back(entry.first);
    return out;
  }();
  return rules;
}

Sequent::Sequent(HypList h, Term g) : hyps(std::move(h)), goal(std::move(g)) {
  if (!goal.is_predicate()) throw SortError("sequent goal must be a predicate");
  for (const Term& t : hyps) {
    if (!t.is_predicate()) throw SortError("hypotheses must be predicates");
  }
}

ProofTree::ProofTree(Rule rule, std::vector<Arg> args, std::vector<ProofTree> premises)
    : node_(std::make_shared<const Node>(Node{rule, std::move(args), std::move(premises)})) {}

bool operator==(const ProofTree& a, const ProofTree& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->rule == b.node_->rule && a.node_->args == b.node_->args &&
         a.node_->premises == b.node_->premises;
}

const char* kernel_code_name(KernelError::Code c) {
  switch (c) {
    case Code::PremiseMismatch: return "PremiseMismatch";
    case Code::SideConditionViolated: return "SideConditionViolated";
    case Code::SortError: return "SortError";
  }
  return "?";
}

InvalidStep::InvalidStep(std::vector<std::size_t> path, Rule rule, KernelError::Code code, const std::string& reason)
    : Error("invalid step at " + [&] {
        std::string s = "root";
        for (std::size_t n : path) s += "/" + std::to_string(n + 1);
        return s;
      }() + " (" + std::string(rule_name(rule)) + "): " + reason),
      path_(std::move(path)),
      rule_(rule),
      code_(code) {}

std::string InvalidStep::path_string() const {
  std::string s = "root";
  for (std::size_t n : path_) s += "/" + std::to_string(n + 1);
  return s;
}

Theorem apply_rule(RuleTag tag, std::span<const Theorem> premises, std::span<const Arg> args) {
  return primitive(tag, premises, args);
}

Theorem derived(DerivedRule rule, std::span<const Theorem> premises, std::span<const Arg> args) {
  return derive(rule, premises, args);
}

Theorem congruence(CongruenceKind kind, const Theorem& premise, std::span<const Arg> args) {
  return congruent(kind, premise, args);
}

Theorem apply(const Rule& rule, std::span<const Theorem> premises, std::span<const Arg> args) {
  return std::visit(
      [&](auto r) -> Theorem {
        using R = decltype(r);
        if constexpr (std::is_same_v<R, RuleTag>) {
          return primitive(r, premises, args);
        } else if constexpr (std::is_same_v<R, DerivedRule>) {
          return derive(r, premises, args);
        } else {
          if (premises.size() != 1) {
            fail(Code::PremiseMismatch, std::string(rule_name(r)) + " expects 1 premise(s), got " +
                                            std::to_string(premises.size()));
          }
          return congruent(r, premises[0], args);
        }
      },
      rule);
}

Theorem check(const ProofTree& tree) {
  Replayer replayer;
  return replayer.run(tree);
}

std::size_t proof_depth(const ProofTree& tree) {
  std::size_t deepest = 0;
  for (const ProofTree& p : tree.premises()) deepest = std::max(deepest, proof_depth(p));
  return deepest + 1;
}

std::size_t proof_size(const ProofTree& tree) {
  std::size_t n = 1;
  for (const ProofTree& p : tree.premises()) n += proof_size(p);
  return n;
}

HypList extend(const HypList& g, const Term& p) {
  HypList out;
  out.reserve(g.size() + 1);
  out.insert(out.end(), g.begin(), g.end());
  out.push_back(p);
  return out;
}

namespace rules {

namespace {
Theorem one(RuleTag tag, const Theorem& th, std::vector<Arg> args = {}) {
  return apply_rule(tag, std::span<const Theorem>(&th, 1), args);
}
Theorem two(RuleTag tag, const Theorem& a, const Theorem& b) {
  const Theorem prem[] = {a, b};
  return apply_rule(tag, prem, {});
}
Theorem two(DerivedRule rule, const Theorem& a, const Theorem& b, std::vector<Arg> args = {}) {
  const Theorem prem[] = {a, b};
  return derived(rule, prem, args);
}
}  // namespace

Theorem hyp(HypList g, Term p) {
  const Arg args[] = {std::move(g), std::move(p)};
  return apply_rule(RuleTag::Hyp, {}, args);
}
Theorem weaken(const Theorem& th, HypList g2) { return one(RuleTag::Weaken, th, {std::move(g2)}); }
Theorem imp_elim(const Theorem& th) { return one(RuleTag::ImpElim, th); }
Theorem imp_intro(const Theorem& th) { return one(RuleTag::ImpIntro, th); }
Theorem and_intro(const Theorem& a, const Theorem& b) { return two(RuleTag::AndIntro, a, b); }
Theorem and_elim_l(const Theorem& th) { return one(RuleTag::AndElimL, th); }
Theorem and_elim_r(const Theorem& th) { return one(RuleTag::AndElimR, th); }
Theorem not_pos(const Theorem& a, const Theorem& b) { return two(RuleTag::NotPos, a, b); }
Theorem not_neg(const Theorem& a, const Theorem& b) { return two(RuleTag::NotNeg, a, b); }
Theorem eq_refl(HypList g, Term e) {
  const Arg args[] = {std::move(g), std::move(e)};
  return apply_rule(RuleTag::EqRefl, {}, args);
}
Theorem forall_intro(const Theorem& th, Index i) { return one(RuleTag::ForallIntro, th, {i}); }
Theorem forall_elim(const Theorem& th, Index i, Term p, Term e) {
  return one(RuleTag::ForallElim, th, {i, std::move(p), std::move(e)});
}
Theorem cut(const Theorem& a, const Theorem& b) { return two(DerivedRule::Cut, a, b); }
Theorem modus_ponens(const Theorem& imp, const Theorem& a) { return two(DerivedRule::ModusPonens, imp, a); }
Theorem iff_mp(const Theorem& iff, const Theorem& a) { return two(DerivedRule::IffMP, iff, a); }
Theorem iff_mp_rev(const Theorem& iff, const Theorem& b) { return two(DerivedRule::IffMPRev, iff, b); }
Theorem case_split(Term atom, const Theorem& pos, const Theorem& neg) {
  return two(DerivedRule::CaseSplit, pos, neg, {std::move(atom)});
}
Theorem absurd(Term q, const Theorem& a, const Theorem& na) { return two(DerivedRule::Absurd, a, na, {std::move(q)}); }
Theorem double_neg_intro(const Theorem& th) {
  return derived(DerivedRule::DoubleNegIntro, std::span<const Theorem>(&th, 1), {});
}

}  // namespace rules

}  // namespace bproof
