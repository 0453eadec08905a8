#include "doctest.h"

#include <set>

#include "bproof/binder.hpp"
#include "bproof/kernel.hpp"
#include "rule_cases.hpp"

using namespace bproof;
using rule_cases::pv;
using rule_cases::v;

namespace {

const Term big = Term::Big();
const Term p = pv("p");
const Term q = pv("q");

Theorem der(DerivedRule r, std::vector<Theorem> prem, std::vector<Arg> args) { return derived(r, prem, args); }

}  // namespace

TEST_CASE("every primitive rule has an accepted and a rejected case") {
  std::set<RuleTag> covered;
  for (const auto& c : rule_cases::all()) {
    CAPTURE(rule_name(c.tag));
    const Theorem th = c.positive();
    CHECK(th.sequent() == c.expected);
    CHECK(check(th.proof()).sequent() == c.expected);
    try {
      c.negative();
      FAIL("rejection case was accepted");
    } catch (const KernelError& e) {
      CHECK(e.code() == c.code);
    }
    covered.insert(c.tag);
  }
  CHECK(covered.size() == kRuleTagCount);
}

TEST_CASE("rule table") {
  CHECK(all_rules().size() == kRuleTagCount + 15 + 4);
  for (const Rule& r : all_rules()) {
    CHECK(rule_from_name(rule_name(r)) == std::optional(r));
  }
  CHECK_FALSE(rule_from_name("NoSuchRule"));
  CHECK(rule_info(RuleTag::ProdChar).args.size() == 6);
  CHECK(rule_info(Rule(RuleTag::AndIntro)).premises == 2);
}

TEST_CASE("premise and argument counts are enforced") {
  const Theorem th = rules::hyp({p}, p);
  CHECK_THROWS_AS(apply_rule(RuleTag::AndIntro, std::vector<Theorem>{th}, std::vector<Arg>{}), KernelError);
  CHECK_THROWS_AS(apply_rule(RuleTag::Hyp, std::vector<Theorem>{}, std::vector<Arg>{HypList{p}}), KernelError);
  CHECK_THROWS_AS(apply_rule(RuleTag::EqRefl, std::vector<Theorem>{}, std::vector<Arg>{v(1), HypList{}}), KernelError);
}

TEST_CASE("identity and cut") {
  CHECK(der(DerivedRule::Identity, {}, {p}).sequent() == Sequent({p}, p));
  const Theorem a = rules::hyp({p}, p);
  const Theorem b = rules::and_intro(rules::hyp({p, p}, p), rules::hyp({p, p}, p));
  const Theorem c = der(DerivedRule::Cut, {a, b}, {});
  CHECK(c.sequent() == Sequent({p}, Term::And(p, p)));
  CHECK(check(c.proof()).sequent() == c.sequent());
  CHECK_THROWS_AS(der(DerivedRule::Cut, {a, rules::hyp({q, p}, p)}, {}), KernelError);
}

TEST_CASE("disjunction introduction") {
  const Theorem th = rules::hyp({p}, p);
  CHECK(der(DerivedRule::OrIntroL, {th}, {q}).sequent() == Sequent({p}, Term::Or(p, q)));
  CHECK(der(DerivedRule::OrIntroR, {th}, {q}).sequent() == Sequent({p}, Term::Or(q, p)));
}

TEST_CASE("renamed universal introduction") {
  // |- v2 = v2 generalised over index 2 via the fresh index 2.
  const Theorem refl = rules::eq_refl({}, v(2));
  const Term body = Term::Eq(v(1), v(1));
  const Theorem th = der(DerivedRule::AlphaForallIntro, {refl}, {Index(2), Index(1), body});
  CHECK(th.goal() == Term::Forall(Term::Eq(v(1), v(1))));
  const Theorem bad = rules::eq_refl({Term::Eq(v(2), v(2))}, v(2));
  CHECK_THROWS_AS(der(DerivedRule::AlphaForallIntro, {bad}, {Index(2), Index(1), body}), KernelError);
}

TEST_CASE("universal introduction on the internal representation") {
  const Term all = Term::Forall(Term::In(v(1), v(2)));
  const Theorem inst = rules::hyp({Term::In(v(3), v(1))}, Term::In(v(3), v(1)));
  // Index 3 occurs in the hypothesis, so it cannot be generalised.
  CHECK_THROWS_AS(der(DerivedRule::InternalForallIntro, {inst}, {Index(3), all}), KernelError);
  const Theorem ok = rules::weaken(rules::hyp({Term::In(v(1), big)}, Term::In(v(1), big)), {Term::In(v(1), big)});
  CHECK_NOTHROW(rules::forall_elim(
      der(DerivedRule::InternalForallIntro, {rules::imp_intro(ok)},
          {Index(1), Term::Forall(Term::Implies(Term::In(v(1), big), Term::In(v(1), big)))}),
      Index(1), Term::Implies(Term::In(v(1), big), Term::In(v(1), big)), big));
}

TEST_CASE("existentials") {
  const Term body = Term::In(v(1), big);
  const Theorem wit = rules::hyp({Term::In(v(2), big)}, Term::In(v(2), big));
  const Theorem ex = der(DerivedRule::ExistsIntro, {wit}, {Index(1), body, v(2)});
  CHECK(ex.goal() == Term::Exists(body));

  const Theorem use = rules::hyp({Term::Exists(body), p, body}, p);
  const Theorem ex0 = rules::hyp({Term::Exists(body), p}, Term::Exists(body));
  CHECK(der(DerivedRule::ExistsElim, {ex0, use}, {Index(1), body}).sequent() ==
        Sequent({Term::Exists(body), p}, p));
  const Theorem leaks = rules::hyp({Term::Exists(body), body}, body);
  const Theorem ex1 = rules::hyp({Term::Exists(body)}, Term::Exists(body));
  CHECK_THROWS_AS(der(DerivedRule::ExistsElim, {ex1, leaks}, {Index(1), body}), KernelError);
}

TEST_CASE("equality symmetry and equivalence modus ponens") {
  const Theorem eq = rules::hyp({Term::Eq(v(1), v(2))}, Term::Eq(v(1), v(2)));
  CHECK(der(DerivedRule::EqSym, {eq}, {}).goal() == Term::Eq(v(2), v(1)));
  const HypList g{Term::Iff(p, q), p};
  CHECK(rules::iff_mp(rules::hyp(g, Term::Iff(p, q)), rules::hyp(g, p)).goal() == q);
  const HypList g2{Term::Iff(p, q), q};
  CHECK(rules::iff_mp_rev(rules::hyp(g2, Term::Iff(p, q)), rules::hyp(g2, q)).goal() == p);
  CHECK_THROWS_AS(rules::iff_mp(rules::hyp(g2, Term::Iff(p, q)), rules::hyp(g2, q)), KernelError);
}

TEST_CASE("case split, absurdity and double negation") {
  const Theorem em = rules::case_split(p, der(DerivedRule::OrIntroL, {rules::hyp({p}, p)}, {Term::Not(p)}),
                                       der(DerivedRule::OrIntroR, {rules::hyp({Term::Not(p)}, Term::Not(p))}, {p}));
  CHECK(em.sequent() == Sequent({}, Term::Or(p, Term::Not(p))));
  CHECK(check(em.proof()).sequent() == em.sequent());
  const HypList g{p, Term::Not(p)};
  CHECK(rules::absurd(q, rules::hyp(g, p), rules::hyp(g, Term::Not(p))).sequent() == Sequent(g, q));
  CHECK(rules::double_neg_intro(rules::hyp({p}, p)).goal() == Term::Not(Term::Not(p)));
}

TEST_CASE("check replays trees and locates failures") {
  const Theorem th = rules::and_intro(rules::eq_refl({}, v(1)), rules::eq_refl({}, big));
  CHECK(check(th.proof()).goal() == Term::And(Term::Eq(v(1), v(1)), Term::Eq(big, big)));

  const HypList g{Term::Eq(v(1), v(1))};
  const ProofTree leaf(RuleTag::Hyp, {g, Term::Eq(v(1), v(1))}, {});
  const ProofTree bad(RuleTag::ForallIntro, {Index(1)}, {leaf});
  const ProofTree root(RuleTag::ImpIntro, {}, {ProofTree(RuleTag::Weaken, {extend(g, p)}, {bad})});
  try {
    check(root);
    FAIL("accepted");
  } catch (const InvalidStep& e) {
    CHECK(e.path() == std::vector<std::size_t>{0, 0});
    CHECK(e.code() == KernelError::Code::SideConditionViolated);
    CHECK(e.rule() == Rule(RuleTag::ForallIntro));
    CHECK(e.path_string() == "root/1/1");
  }
}

TEST_CASE("proof depth and size") {
  Theorem th = rules::hyp({p, p, p, p}, p);
  CHECK(proof_depth(th.proof()) == 1);
  for (int n = 1; n <= 4; ++n) {
    th = rules::imp_intro(th);
    CHECK(proof_depth(th.proof()) == static_cast<std::size_t>(n + 1));
  }
  const Theorem both = rules::and_intro(th, th);
  CHECK(proof_size(both.proof()) == 11);
}

TEST_CASE("congruence") {
  const PredName k("k");
  const Theorem iff = rules::hyp({Term::Iff(p, q)}, Term::Iff(p, q));
  const Term target = Term::And(pv("k"), Term::Forall(pv("k")));
  const Theorem th = congruence(CongruenceKind::SubstEquiv, iff, std::vector<Arg>{k, target});
  CHECK(th.goal() == Term::Iff(subst_pred(k, p, target), subst_pred(k, q, target)));

  const Term plain = Term::In(v(1), big);
  CHECK(congruence(CongruenceKind::SubstEquiv, iff, std::vector<Arg>{k, plain}).goal() == Term::Iff(plain, plain));

  const Term e1 = Term::In(v(1), big);
  const Theorem closed = rules::imp_intro(rules::hyp({e1}, e1));
  const Theorem refl_iff = rules::and_intro(closed, closed);
  const Theorem g = congruence(CongruenceKind::GraftEquiv, refl_iff, std::vector<Arg>{HypList{p}, k, Term::Forall(pv("k"))});
  CHECK(g.sequent() == Sequent({p}, Term::Iff(Term::Forall(e1), Term::Forall(e1))));
  // Grafting demands a premise without hypotheses.
  CHECK_THROWS_AS(congruence(CongruenceKind::GraftEquiv, iff, std::vector<Arg>{HypList{}, k, pv("k")}), KernelError);

  const Theorem e = congruence(CongruenceKind::SubstEq, iff, std::vector<Arg>{k, Term::Cmp(big, pv("k"))});
  CHECK(e.goal() == Term::Eq(Term::Cmp(big, p), Term::Cmp(big, q)));
  CHECK_THROWS_AS(congruence(CongruenceKind::SubstEq, iff, std::vector<Arg>{k, pv("k")}), KernelError);
}

TEST_CASE("a predicate variable sequent is derivable and stays put") {
  const Theorem th = der(DerivedRule::Identity, {}, {pv("k")});
  CHECK(th.sequent() == Sequent({pv("k")}, pv("k")));
  CHECK(check(th.proof()).sequent() == th.sequent());
}
