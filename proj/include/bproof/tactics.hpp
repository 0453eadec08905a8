#ifndef BPROOF_TACTICS_HPP_
#define BPROOF_TACTICS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bproof/kernel.hpp"
#include "bproof/syntax.hpp"

namespace bproof {

// A tactic refused the goal. Tacticals such as orelse catch these.
class TacticError : public Error {
 public:
  using Error::Error;
};

class GoalShapeMismatch : public TacticError {
 public:
  using TacticError::TacticError;
};

class OccurrenceNotFound : public TacticError {
 public:
  using TacticError::TacticError;
};

// The rewritten occurrence sits under binders that capture free variables
// of the rewritten predicate; graft mode is needed.
class CaptureModeMismatch : public TacticError {
 public:
  using TacticError::TacticError;
};

// A justification received theorems that do not match its subgoals.
class JustificationMismatch : public Error {
 public:
  using Error::Error;
};

using Justification = std::function<Theorem(std::span<const Theorem>)>;

struct Step {
  std::vector<Sequent> subgoals;
  Justification justify;
};

// State shared by every goal of one proof.
struct TacticContext {
  ScopeTable scope;
};

class Tactic {
 public:
  using Fn = std::function<Step(const Sequent&, TacticContext&)>;

  Tactic(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }

  // The returned justification checks that it receives theorems of exactly
  // the subgoals and that it rebuilds exactly `goal`.
  Step operator()(const Sequent& goal, TacticContext& ctx) const;

 private:
  std::string name_;
  Fn fn_;
};

// Subgoals unchanged, justification passes the theorem through.
Step identity_step(const Sequent& s);

enum class RewriteMode { Subst, Graft };

namespace tactics {

Tactic id();
// Closes goals that are hypotheses; leaves other goals unchanged.
Tactic hyp();
// Splits a conjunction; leaves other goals unchanged.
Tactic and_intro();
// Closes `p |- p`.
Tactic identity();
// Implication or universal goal.
Tactic intro(std::string hint = {});
Tactic imp_intro();
// Instantiates the bound variable with a fresh free variable named after `hint`.
Tactic forall_intro(std::string hint = {});
// Same goal effect, justified through the alpha-renamed introduction rule.
Tactic alpha_intro(std::string hint = {});
Tactic refl();
// `q` from `not q |- p` and `not q |- not p`.
Tactic contra(Term p);
// `not q` from `q |- p` and `q |- not p`.
Tactic neg_intro(Term p);
// `p` from `p & q`.
Tactic and_left(Term q);
// `q` from `p & q`.
Tactic and_right(Term p);
// `g, p |- q` from `g |- p => q`.
Tactic imp_elim();
// Drops hypothesis n (1-based).
Tactic clear(std::size_t n);
// Goal must be the instance of `q` at `e`; the new goal is `q`.
Tactic inst(Term q, Term e);
// Unfolds a membership in a comprehension, power set, product or the
// choice axiom, in the goal or in hypothesis n.
Tactic unfold(std::optional<std::size_t> hyp = {});
Tactic ext();
Tactic big();
Tactic pair_left(Term pair_eq);
Tactic pair_right(Term pair_eq);
// Replaces occurrences of e2 in the goal by e1 and asks for e1 = e2.
Tactic leibniz(Term e1, Term e2);
Tactic sym();
Tactic cut(Term p);
Tactic mp(Term p);
Tactic exists_intro(Term e);
// Splits hypothesis n when it is a conjunction, an existential or a
// disjunction; new hypotheses are appended.
Tactic destruct(std::size_t n, std::string hint = {});
Tactic left();
Tactic right();
// Propositional decision procedure.
Tactic prop();

// Goal `L <=> R` (or `E = F`) where R is L with p1 replaced by p2.
Tactic congr(Term p1, Term p2, RewriteMode mode);
// Replaces p1 by p2 in the goal or in hypothesis n; p1 <=> p2 becomes a
// subgoal (with no hypotheses in graft mode).
Tactic rewrite(Term p1, Term p2, RewriteMode mode, std::optional<std::size_t> hyp = {});
// Same, with the equivalence already proved.
Tactic rewrite_with(Theorem premise, RewriteMode mode, std::optional<std::size_t> hyp = {});

// One backward tactic per rule that needs no extra argument.
Tactic backward(RuleTag tag);

// Tacticals.
Tactic then(Tactic a, Tactic b);
// b on subgoal n (1-based) of a only.
Tactic then_nth(Tactic a, std::size_t n, Tactic b);
Tactic orelse(Tactic a, Tactic b);
// Applies until failure or no progress.
Tactic repeat(Tactic t);
Tactic try_(Tactic t);

}  // namespace tactics

// Abstracts the occurrences of `p` in `t` into the predicate variable `k`:
// Subst mode matches `p` lifted across binders, Graft mode matches it verbatim.
Term abstract_predicate(const Term& t, const Term& p, const PredName& k, RewriteMode mode);
// Abstracts the occurrences of the expression `e` into the free index `i`.
Term abstract_expression(const Term& t, const Term& e, Index i);

}  // namespace bproof

#endif  // BPROOF_TACTICS_HPP_
