#ifndef BPROOF_PROP_HPP_
#define BPROOF_PROP_HPP_

#include <optional>
#include <vector>

#include "bproof/kernel.hpp"

namespace bproof {

// Maximal subterms not rooted at a propositional connective (&, =>, not),
// in first-occurrence order over the hypotheses then the goal.
std::vector<Term> prop_atoms(const Sequent& s);

// True when the goal follows from the hypotheses by truth tables alone.
bool prop_valid(const Sequent& s);

// A kernel proof of a propositionally valid sequent, built by case splits
// on the atoms; nullopt when the sequent is not valid.
std::optional<Theorem> prop_prove(const Sequent& s);

}  // namespace bproof

#endif  // BPROOF_PROP_HPP_
