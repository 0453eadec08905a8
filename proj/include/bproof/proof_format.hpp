#ifndef BPROOF_PROOF_FORMAT_HPP_
#define BPROOF_PROOF_FORMAT_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "bproof/kernel.hpp"
#include "bproof/syntax.hpp"

// Canonical text encoding of proof trees (`.bprf` files):
//
//   (bprf 1
//     (scope x y)
//     (sequent (hyps T*) T)
//     (proof NODE))
//
//   NODE := (RuleName ARG*
//             NODE*)          premises go on their own, further indented lines
//   ARG  := (hyps T*) | (term T) | (index N) | (big NAME) | (pvar NAME)
//   T    := (and T T) | (imp T T) | (not T) | (all T) | (eq T T) | (in T T)
//         | (pv NAME) | (var N) | (map T T) | (choice T) | BIG | (pow T)
//         | (prod T T) | (cmp T T) | (elem NAME)
//
// The encoder output is canonical; the decoder accepts any whitespace.
namespace bproof {

class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& reason);
  std::size_t offset() const { return offset_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

struct ProofFile {
  ScopeTable scope;
  Sequent sequent;
  ProofTree proof;
};

std::string encode_term(const Term& t);
Term decode_term(std::string_view text);

std::string encode_proof(const ProofTree& tree);
ProofTree decode_proof(std::string_view text);

std::string encode_proof_file(const ProofFile& file);
ProofFile decode_proof_file(std::string_view text);

}  // namespace bproof

#endif  // BPROOF_PROOF_FORMAT_HPP_
