#ifndef BPROOF_ORACLE_HPP_
#define BPROOF_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bproof/term.hpp"

// Reference checkers written straight from the inference-rule definitions,
// plus the exhaustive term enumerator they are compared on. Slow on purpose:
// they exist to be compared against the structural deciders.
namespace bproof::oracle {

struct Alphabet {
  std::uint32_t max_index = 3;
  std::vector<BigName> bigs{BigName("j")};
  std::vector<PredName> preds{PredName("k")};
};

// All sort-correct terms up to a depth, bucketed by exact depth
// (bucket 0 is unused).
struct Enumeration {
  std::vector<std::vector<Term>> predicates;
  std::vector<std::vector<Term>> expressions;

  std::vector<Term> predicates_upto(std::size_t depth) const;
  std::vector<Term> expressions_upto(std::size_t depth) const;
  // Every term, predicates first.
  std::vector<Term> all() const;
};

Enumeration enumerate(std::size_t depth, const Alphabet& alphabet = {});

// Fully parenthesised De Bruijn text, one constructor per node.
std::string structure_text(const Term& t);

// Equality as identity of the structure texts.
bool equal_by_text(const Term& a, const Term& b);

// Non-freeness by backward search over the rules
//   i \ BIG, i \ @j, i \ #k, i1 != i2 => i1 \ i2,
//   (i+1) \ p => i \ forall p, i \ e and (i+1) \ p => i \ {e | p},
//   and componentwise rules for the other constructors.
bool not_free_by_rules(Index i, const Term& t);

// Membership and inclusion folded over the list with equal_by_text.
bool member_by_rules(const Term& p, const std::vector<Term>& hyps);
bool included_by_rules(const std::vector<Term>& small, const std::vector<Term>& large);

}  // namespace bproof::oracle

#endif  // BPROOF_ORACLE_HPP_
