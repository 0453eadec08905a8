#include "bproof/session.hpp"

#include <fstream>

namespace bproof {

CheckReport check_proof_text(std::string_view text) {
  const ProofFile file = decode_proof_file(text);
  try {
    const Theorem th = check(file.proof);
    if (!(th.sequent() == file.sequent)) {
      return {Outcome::Invalid, "proof establishes " + print_sequent(th.sequent(), file.scope) +
                                    " instead of " + print_sequent(file.sequent, file.scope)};
    }
    return {Outcome::Ok, print_sequent(th.sequent(), file.scope)};
  } catch (const InvalidStep& e) {
    return {Outcome::Invalid, std::string("invalid step at ") + e.path_string() + ": " + e.what()};
  }
}

namespace {

std::string numbered(const std::vector<std::string>& goals) {
  std::string out;
  for (std::size_t n = 0; n < goals.size(); ++n) out += "  " + std::to_string(n + 1) + ". " + goals[n] + "\n";
  return out;
}

std::string goal_summary(const ProofState& s) {
  if (s.done()) return "no goals left; use `qed`\n";
  return std::to_string(s.goals().size()) + " goal(s)\n" + numbered(s.print_goals());
}

std::pair<std::string_view, std::string_view> split_command(std::string_view line) {
  const auto start = line.find_first_not_of(" \t");
  if (start == std::string_view::npos) return {};
  line.remove_prefix(start);
  const auto end = line.find_first_of(" \t");
  if (end == std::string_view::npos) return {line, {}};
  std::string_view rest = line.substr(end);
  rest.remove_prefix(std::min(rest.size(), rest.find_first_not_of(" \t")));
  return {line.substr(0, end), rest};
}

}  // namespace

ProveReport prove_text(std::string_view goal_text, std::string_view script) {
  ScopeTable scope;
  const Sequent goal = parse_sequent(strip_comments(goal_text), scope);
  try {
    ProofState end = run_script(ProofState(goal, scope), script);
    if (!end.done()) {
      return {Outcome::Invalid,
              std::to_string(end.goals().size()) + " goal(s) remain:\n" + numbered(end.print_goals()), std::nullopt};
    }
    const Theorem th = end.qed();
    return {Outcome::Ok, print_sequent(th.sequent(), scope), ProofFile{scope, goal, th.proof()}};
  } catch (const ScriptFailed& e) {
    std::string msg = "line " + std::to_string(e.line()) + ": " + e.reason() + "\n";
    if (!e.remaining().empty()) msg += "open goals:\n" + numbered(e.remaining());
    return {Outcome::Invalid, msg, std::nullopt};
  }
}

std::string session_help() {
  std::string tactics;
  for (const std::string& n : tactic_names()) tactics += (tactics.empty() ? "" : " ") + n;
  return "commands:\n"
         "  goal H1, H2 |- G   start a proof\n"
         "  apply TACTIC       run a tactic on the first goal (`focus N TACTIC` for goal N)\n"
         "  undo               revert the last apply\n"
         "  subgoals           list the open goals\n"
         "  emit PATH          write the finished proof\n"
         "  qed                check the finished proof\n"
         "  help, quit\n"
         "tacticals: then orelse repeat try focus\n"
         "tactics: " + tactics + "\n";
}

Session::Reply Session::exec(std::string_view line) {
  const std::string stripped = strip_comments(line);
  auto [cmd, arg] = split_command(stripped);
  try {
    if (cmd.empty()) return {true, ""};
    if (cmd == "goal") return goal(arg);
    if (cmd == "apply") return apply(arg);
    if (cmd == "undo") return undo();
    if (cmd == "subgoals") return subgoals();
    if (cmd == "emit") return emit(arg);
    if (cmd == "qed") return qed();
    if (cmd == "help") return {true, session_help()};
    if (cmd == "quit" || cmd == "exit") {
      finished_ = true;
      return {true, ""};
    }
    return {false, "unknown command '" + std::string(cmd) + "'; try `help`\n"};
  } catch (const std::exception& e) {
    return {false, std::string(e.what()) + "\n"};
  }
}

Session::Reply Session::goal(std::string_view arg) {
  ScopeTable scope;
  Sequent s = parse_sequent(arg, scope);
  state_.emplace(std::move(s), std::move(scope));
  history_.clear();
  return {true, goal_summary(*state_)};
}

Session::Reply Session::apply(std::string_view arg) {
  if (!state_) return {false, "no goal; start with `goal`\n"};
  const TacticExpr e = parse_tactic_expr(arg);
  ProofState next = state_->apply(e);
  history_.push_back(*state_);
  state_ = std::move(next);
  return {true, goal_summary(*state_)};
}

Session::Reply Session::undo() {
  if (history_.empty()) return {false, "nothing to undo\n"};
  state_ = std::move(history_.back());
  history_.pop_back();
  return {true, goal_summary(*state_)};
}

Session::Reply Session::subgoals() const {
  if (!state_) return {false, "no goal\n"};
  return {true, goal_summary(*state_)};
}

Session::Reply Session::emit(std::string_view path) const {
  if (!state_) return {false, "no goal\n"};
  if (path.empty()) return {false, "emit needs a path\n"};
  const Theorem th = state_->qed();
  std::ofstream out{std::string(path), std::ios::binary};
  if (!out) return {false, "cannot write " + std::string(path) + "\n"};
  out << encode_proof_file(ProofFile{state_->root_scope(), state_->root(), th.proof()});
  if (!out) return {false, "cannot write " + std::string(path) + "\n"};
  return {true, "wrote " + std::string(path) + "\n"};
}

Session::Reply Session::qed() const {
  if (!state_) return {false, "no goal\n"};
  if (!state_->done()) return {false, "refused: " + goal_summary(*state_)};
  const Theorem th = state_->qed();
  return {true, "QED " + print_sequent(th.sequent(), state_->root_scope()) + "\n"};
}

}  // namespace bproof
