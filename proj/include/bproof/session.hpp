#ifndef BPROOF_SESSION_HPP_
#define BPROOF_SESSION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bproof/proof_format.hpp"
#include "bproof/script.hpp"

namespace bproof {

enum class Outcome { Ok, Invalid, Failure };

struct CheckReport {
  Outcome outcome = Outcome::Failure;
  std::string message;
};

// Replays a proof file; Invalid when a node fails or the proof establishes
// another sequent. Throws DecodeError on malformed text.
CheckReport check_proof_text(std::string_view text);

struct ProveReport {
  Outcome outcome = Outcome::Failure;
  std::string message;
  std::optional<ProofFile> proof;
};

// Parses a goal (`H1, H2 |- G`) and runs a script on it. Throws ParseError
// on malformed goal or script text.
ProveReport prove_text(std::string_view goal, std::string_view script);

// Line-oriented interactive proof session.
class Session {
 public:
  struct Reply {
    bool ok = true;
    std::string text;
  };

  Reply exec(std::string_view line);
  bool finished() const { return finished_; }
  const std::optional<ProofState>& state() const { return state_; }
  std::size_t history_size() const { return history_.size(); }

 private:
  Reply goal(std::string_view arg);
  Reply apply(std::string_view arg);
  Reply undo();
  Reply subgoals() const;
  Reply emit(std::string_view path) const;
  Reply qed() const;

  std::optional<ProofState> state_;
  std::vector<ProofState> history_;
  bool finished_ = false;
};

std::string session_help();

}  // namespace bproof

#endif  // BPROOF_SESSION_HPP_
