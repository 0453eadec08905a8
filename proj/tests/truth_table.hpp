#ifndef BPROOF_TESTS_TRUTH_TABLE_HPP_
#define BPROOF_TESTS_TRUTH_TABLE_HPP_

#include <cstdint>
#include <vector>

#include "bproof/term.hpp"

// Propositional skeletons over three opaque atoms, each paired with its
// truth table: bit n is the value under assignment n (atom a is bit 0 of n).
namespace truth_table {

using namespace bproof;

struct Skeleton {
  Term term;
  std::uint8_t table;
};

inline std::vector<Term> atoms() {
  return {Term::PredVar(PredName("k")), Term::In(Term::Var(1), Term::Big()),
          Term::Forall(Term::Eq(Term::Var(1), Term::Var(2)))};
}

inline constexpr std::uint8_t kAtomTables[3] = {0b10101010, 0b11001100, 0b11110000};

// All skeletons of connective depth <= depth (atoms have depth 1) built
// from And, Implies and Not.
inline std::vector<Skeleton> enumerate(std::size_t depth) {
  const auto as = atoms();
  std::vector<Skeleton> leaves;
  for (std::size_t n = 0; n < as.size(); ++n) leaves.push_back({as[n], kAtomTables[n]});
  std::vector<Skeleton> all = leaves;
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::vector<Skeleton> below = std::move(all);
    std::vector<Skeleton> next = leaves;
    for (const Skeleton& a : below) {
      next.push_back({Term::Not(a.term), static_cast<std::uint8_t>(~a.table)});
    }
    for (const Skeleton& a : below) {
      for (const Skeleton& b : below) {
        next.push_back({Term::And(a.term, b.term), static_cast<std::uint8_t>(a.table & b.table)});
        next.push_back({Term::Implies(a.term, b.term), static_cast<std::uint8_t>(~a.table | b.table)});
      }
    }
    all = std::move(next);
  }
  return all;
}

inline bool tautology(const Skeleton& s) { return s.table == 0xFF; }

}  // namespace truth_table

#endif  // BPROOF_TESTS_TRUTH_TABLE_HPP_
