#ifndef BPROOF_KERNEL_HPP_
#define BPROOF_KERNEL_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bproof/term.hpp"

namespace bproof {

// The primitive inference rules. A Theorem can only come out of these (or
// of derived rules and congruences, which are checked in terms of them).
enum class RuleTag : std::uint8_t {
  Hyp,
  Weaken,
  ImpElim,
  ImpIntro,
  AndIntro,
  AndElimL,
  AndElimR,
  NotPos,
  NotNeg,
  EqRefl,
  ForallIntro,
  ForallElim,
  CmpAxiom,
  Leibniz,
  ChoiceAxiom,
  PowAxiom,
  ExtIntro,
  BigElem,
  BigDistinct,
  PairInjL,
  PairInjR,
  ProdChar,
};
inline constexpr std::size_t kRuleTagCount = 22;

// Derived rules; each one replays as a fixed sequence of primitive rules.
enum class DerivedRule : std::uint8_t {
  Identity,
  Cut,
  ModusPonens,
  AlphaForallIntro,
  InternalForallIntro,
  OrIntroL,
  OrIntroR,
  ExistsIntro,
  ExistsElim,
  EqSym,
  IffMP,
  IffMPRev,
  CaseSplit,
  Absurd,
  DoubleNegIntro,
};

// Congruence of predicate substitution / grafting.
enum class CongruenceKind : std::uint8_t { SubstEquiv, SubstEq, GraftEquiv, GraftEq };

using Rule = std::variant<RuleTag, DerivedRule, CongruenceKind>;

enum class ArgKind : std::uint8_t { Hyps, Term, Index, Big, Pred };
// Alternative order matches ArgKind.
using Arg = std::variant<HypList, Term, Index, BigName, PredName>;

ArgKind arg_kind(const Arg& a);

struct RuleInfo {
  std::string_view name;
  std::vector<ArgKind> args;
  std::size_t premises;
};

const RuleInfo& rule_info(const Rule& r);
std::string_view rule_name(const Rule& r);
std::optional<Rule> rule_from_name(std::string_view name);
// Every rule, primitive ones first.
const std::vector<Rule>& all_rules();

struct Sequent {
  HypList hyps;
  Term goal;

  Sequent(HypList h, Term g);
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Serializable derivation: rule, arguments, sub-derivations.
class ProofTree {
 public:
  ProofTree(Rule rule, std::vector<Arg> args, std::vector<ProofTree> premises);

  const Rule& rule() const { return node_->rule; }
  const std::vector<Arg>& args() const { return node_->args; }
  const std::vector<ProofTree>& premises() const { return node_->premises; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const ProofTree& a, const ProofTree& b);

 private:
  struct Node {
    Rule rule;
    std::vector<Arg> args;
    std::vector<ProofTree> premises;
  };
  std::shared_ptr<const Node> node_;
};

/// A kernel-certified sequent. Only the kernel can create one.
class Theorem {
 public:
  const Sequent& sequent() const { return sequent_; }
  const HypList& hyps() const { return sequent_.hyps; }
  const Term& goal() const { return sequent_.goal; }
  const ProofTree& proof() const { return proof_; }

 private:
  friend struct KernelAccess;
  Theorem(Sequent s, ProofTree p) : sequent_(std::move(s)), proof_(std::move(p)) {}

  Sequent sequent_;
  ProofTree proof_;
};

class KernelError : public Error {
 public:
  enum class Code { PremiseMismatch, SideConditionViolated, SortError };
  KernelError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

const char* kernel_code_name(KernelError::Code c);

/// A node of a proof tree failed to replay. `path` lists premise positions
/// from the root (empty for the root itself).
class InvalidStep : public Error {
 public:
  InvalidStep(std::vector<std::size_t> path, Rule rule, KernelError::Code code, const std::string& reason);
  const std::vector<std::size_t>& path() const { return path_; }
  const Rule& rule() const { return rule_; }
  KernelError::Code code() const { return code_; }
  std::string path_string() const;

 private:
  std::vector<std::size_t> path_;
  Rule rule_;
  KernelError::Code code_;
};

Theorem apply_rule(RuleTag tag, std::span<const Theorem> premises, std::span<const Arg> args);
Theorem derived(DerivedRule rule, std::span<const Theorem> premises, std::span<const Arg> args);
Theorem congruence(CongruenceKind kind, const Theorem& premise, std::span<const Arg> args);
// Dispatches on the rule family.
Theorem apply(const Rule& rule, std::span<const Theorem> premises, std::span<const Arg> args);

/// Replays `tree` bottom-up. Throws InvalidStep on the first failing node.
Theorem check(const ProofTree& tree);

/// 1 for a leaf, 1 + max over premises otherwise.
std::size_t proof_depth(const ProofTree& tree);
/// Number of nodes, counting shared subtrees once per occurrence.
std::size_t proof_size(const ProofTree& tree);

// Convenience wrappers used by the tactics.
namespace rules {
Theorem hyp(HypList g, Term p);
Theorem weaken(const Theorem& th, HypList g2);
Theorem imp_elim(const Theorem& th);
Theorem imp_intro(const Theorem& th);
Theorem and_intro(const Theorem& a, const Theorem& b);
Theorem and_elim_l(const Theorem& th);
Theorem and_elim_r(const Theorem& th);
Theorem not_pos(const Theorem& a, const Theorem& b);
Theorem not_neg(const Theorem& a, const Theorem& b);
Theorem eq_refl(HypList g, Term e);
Theorem forall_intro(const Theorem& th, Index i);
Theorem forall_elim(const Theorem& th, Index i, Term p, Term e);
Theorem cut(const Theorem& a, const Theorem& b);
Theorem modus_ponens(const Theorem& imp, const Theorem& a);
Theorem iff_mp(const Theorem& iff, const Theorem& a);
Theorem iff_mp_rev(const Theorem& iff, const Theorem& b);
Theorem case_split(Term atom, const Theorem& pos, const Theorem& neg);
Theorem absurd(Term q, const Theorem& a, const Theorem& na);
Theorem double_neg_intro(const Theorem& th);
}  // namespace rules

// `g` with `p` appended.
HypList extend(const HypList& g, const Term& p);

}  // namespace bproof

#endif  // BPROOF_KERNEL_HPP_
