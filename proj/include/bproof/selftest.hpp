#ifndef BPROOF_SELFTEST_HPP_
#define BPROOF_SELFTEST_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bproof {

struct LawResult {
  std::string law;
  std::size_t checks = 0;
  // First counterexample, if any.
  std::optional<std::string> counterexample;
};

// Checks the binder laws and the structural deciders against the reference
// checkers on every term up to `depth`.
std::vector<LawResult> run_selftest(std::size_t depth);

// One line per law; returns true when every law holds.
bool report_selftest(const std::vector<LawResult>& results, std::ostream& out);

}  // namespace bproof

#endif  // BPROOF_SELFTEST_HPP_
