#ifndef BPROOF_SCRIPT_HPP_
#define BPROOF_SCRIPT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bproof/syntax.hpp"
#include "bproof/tactics.hpp"

namespace bproof {

// Tactic expression as written in a script:
//   expr  := alt ("then" alt)*
//   alt   := unary ("orelse" unary)*
//   unary := "repeat" unary | "try" unary | "focus" N unary | "(" expr ")" | atom
// Term arguments of atoms stay named until the tactic runs, so they see
// the names introduced by earlier steps.
struct TacticExpr {
  enum class Op { Atom, Then, OrElse, Repeat, Try, Focus };
  Op op = Op::Atom;
  std::string name;                      // atom name
  std::string text;                      // atom source text
  std::vector<NamedTerm> terms;          // atom term arguments
  std::vector<std::string> words;        // atom name arguments and graft names
  std::optional<std::size_t> number;     // `at N`, `clear N`, `focus N`
  bool graft = false;
  std::vector<TacticExpr> children;
  std::size_t pos = 0;
};

TacticExpr parse_tactic_expr(std::string_view text);
std::string print_tactic_expr(const TacticExpr& e);

Tactic compile(const TacticExpr& e);

// Names of the atomic tactics, for help output.
const std::vector<std::string>& tactic_names();

class ScriptFailed : public Error {
 public:
  ScriptFailed(std::size_t line, const std::string& reason, std::vector<std::string> remaining);
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }
  // Open goals when the script stopped, printed.
  const std::vector<std::string>& remaining() const { return remaining_; }

 private:
  std::size_t line_;
  std::string reason_;
  std::vector<std::string> remaining_;
};

// Goals of a proof under construction. Values are immutable; apply returns
// a new state.
class ProofState {
 public:
  ProofState(Sequent root, ScopeTable scope);

  const Sequent& root() const { return root_; }
  const ScopeTable& root_scope() const { return root_scope_; }
  const ScopeTable& scope() const { return scope_; }
  const std::vector<Sequent>& goals() const { return goals_; }
  bool done() const { return goals_.empty(); }

  // Runs `e` on goal n (1-based); a top-level `focus k t` picks goal k.
  ProofState apply(const TacticExpr& e, std::size_t n = 1) const;
  ProofState apply(const Tactic& t, std::size_t n = 1) const;

  // The theorem of the root once every goal is closed, re-checked by the
  // kernel from its proof tree.
  Theorem qed() const;

  std::vector<std::string> print_goals() const;

  friend bool operator==(const ProofState& a, const ProofState& b) {
    return a.root_ == b.root_ && a.goals_ == b.goals_ && a.scope_ == b.scope_;
  }

 private:
  Sequent root_;
  ScopeTable root_scope_;
  ScopeTable scope_;
  std::vector<Sequent> goals_;
  std::shared_ptr<const Justification> justify_;
};

// One tactic expression per non-blank line; `--` starts a comment.
std::vector<std::pair<std::size_t, TacticExpr>> parse_script(std::string_view text);

// Runs a script on the state's goals; throws ScriptFailed.
ProofState run_script(const ProofState& start, std::string_view script);
Theorem prove(const Sequent& goal, const ScopeTable& scope, std::string_view script);

}  // namespace bproof

#endif  // BPROOF_SCRIPT_HPP_
