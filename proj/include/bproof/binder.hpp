#ifndef BPROOF_BINDER_HPP_
#define BPROOF_BINDER_HPP_

#include <cstdint>
#include <functional>
#include <span>

#include "bproof/term.hpp"

namespace bproof {

// Instantiation applied to a term of the wrong shape.
class NotAForall : public Error {
 public:
  using Error::Error;
};

class NotAComprehension : public Error {
 public:
  using Error::Error;
};

/// Increments every index of `t` that dangles relative to `cutoff` binders.
/// The cutoff grows by one under Forall and in the predicate slot of Cmp.
Term lift(const Term& t, std::uint32_t cutoff = 0);

/// Lifts `t` `times` times at cutoff 0.
Term shift(const Term& t, std::uint32_t times);

/// Bind i1 i2 t: turns free index i1 into index i2, leaving indexes below i2
/// alone and pushing every other index up by one. Under a binder both
/// arguments move up by one.
Term bind(Index i1, Index i2, const Term& t);

/// Abstractions of the functional representation.
Term bind_forall(Index i, const Term& p);
Term bind_exists(Index i, const Term& p);
Term bind_cmp(Index i, const Term& e, const Term& p);

/// Eliminates the Forall at the root of `q`, putting `e` in place of the
/// bound variable. Throws NotAForall when `q` is not a Forall.
Term inst_forall(const Term& e, const Term& q);

/// For `set` = Cmp(s, p), returns `e In s And p[1 := e]`.
/// Throws NotAComprehension when `set` is not a comprehension.
Term inst_cmp(const Term& e, const Term& set);

/// Capture-avoiding replacement of the free index `i` by `e`; `e` is lifted
/// every time a binder is crossed. Other indexes are left untouched.
Term subst(Index i, const Term& e, const Term& t);

/// Decides non-freeness of index i in t.
bool not_free(Index i, const Term& t);
/// Pointwise extension to hypothesis lists.
bool not_free(Index i, std::span<const Term> ts);

/// Predicate-variable substitution: like `subst`, `p` is lifted under binders.
Term subst_pred(const PredName& k, const Term& p, const Term& t);

/// Predicate-variable grafting: `p` is inserted verbatim, so its dangling
/// indexes may be captured by the binders of `t`.
Term graft_pred(const PredName& k, const Term& p, const Term& t);

/// 1 + largest dangling index over `ts` (1 when everything is closed).
Index fresh_index(std::span<const Term> ts);

/// A BIG element name not occurring in any of `ts`.
BigName fresh_bigname(std::span<const Term> ts);
/// A predicate variable name not occurring in any of `ts`.
PredName fresh_predname(std::span<const Term> ts);

/// Rebuilds `t` from `f(child, crossed)` applied to each immediate subterm,
/// where `crossed` is 1 for the body of Forall and the predicate of Cmp.
Term map_subterms(const Term& t, const std::function<Term(const Term&, std::uint32_t)>& f);

/// True when the predicate variable `k` occurs in `t`.
bool occurs_pred(const PredName& k, const Term& t);

}  // namespace bproof

#endif  // BPROOF_BINDER_HPP_
