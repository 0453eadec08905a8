#ifndef BPROOF_TERM_HPP_
#define BPROOF_TERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bproof {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A predicate was supplied where an expression is required, or vice versa.
class SortError : public Error {
 public:
  using Error::Error;
};

// De Bruijn index. Always >= 1.
class Index {
 public:
  constexpr explicit Index(std::uint32_t value) : value_(value) {
    if (value == 0) throw Error("De Bruijn indexes start at 1");
  }
  constexpr std::uint32_t value() const { return value_; }
  constexpr Index next() const { return Index(value_ + 1); }
  friend constexpr auto operator<=>(Index, Index) = default;

 private:
  std::uint32_t value_;
};

// Identifier-like names: [A-Za-z_][A-Za-z0-9_']*.
bool is_identifier(std::string_view text);

// Name of an element of BIG (the omega-elements).
struct BigName {
  std::string text;
  explicit BigName(std::string t);
  friend auto operator<=>(const BigName&, const BigName&) = default;
};

// Name of a predicate variable.
struct PredName {
  std::string text;
  explicit PredName(std::string t);
  friend auto operator<=>(const PredName&, const PredName&) = default;
};

enum class Sort : std::uint8_t { Predicate, Expression };

enum class Kind : std::uint8_t {
  // predicates
  And,
  Implies,
  Not,
  Forall,
  Eq,
  In,
  PredVar,
  // expressions
  Var,
  MapsTo,
  Choice,
  Big,
  Pow,
  Prod,
  Cmp,
  Elem,
};

const char* kind_name(Kind k);

/// Immutable B term in pure De Bruijn form.
///
/// Predicates and expressions share one handle; the sort of every child is
/// checked by the factories, so a Term is sort-correct by construction.
/// `Forall(p)` binds index 1 in `p`; `Cmp(e, p)` binds index 1 in `p` only.
/// Copies share structure and are cheap.
class Term {
 public:
  static Term And(Term p, Term q);
  static Term Implies(Term p, Term q);
  static Term Not(Term p);
  static Term Forall(Term p);
  static Term Eq(Term e, Term f);
  static Term In(Term e, Term f);
  static Term PredVar(PredName k);
  static Term Var(Index i);
  static Term Var(std::uint32_t i) { return Var(Index(i)); }
  static Term MapsTo(Term e, Term f);
  static Term Choice(Term e);
  static Term Big();
  static Term Pow(Term e);
  static Term Prod(Term e, Term f);
  static Term Cmp(Term e, Term p);
  static Term Elem(BigName j);

  // Derived connectives; they expand to the primitive constructors.
  static Term Iff(Term p, Term q);
  static Term Or(Term p, Term q);
  static Term Exists(Term p);

  Kind kind() const;
  Sort sort() const;
  bool is_predicate() const { return sort() == Sort::Predicate; }
  bool is_expression() const { return sort() == Sort::Expression; }

  // Number of immediate subterms (0, 1 or 2).
  std::size_t arity() const;
  // First and second immediate subterms. For Cmp, left() is the set and
  // right() the predicate; unary constructors only have left().
  const Term& left() const;
  const Term& right() const;

  // Var only.
  Index index() const;
  // Elem and PredVar only.
  const std::string& name() const;

  // 1 for leaves, 1 + max over immediate subterms otherwise.
  std::size_t depth() const;
  // Largest dangling index, 0 for closed terms.
  std::uint32_t max_dangling() const;
  bool has_pred_var() const;
  std::size_t hash() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind kind, std::uint32_t index, std::string name, Term a, Term b);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::uint32_t max_dangling = 0;
  bool has_pred_var = false;
  std::size_t depth = 1;
  std::size_t hash = 0;
  std::string name;
  Term a;
  Term b;
};

inline Kind Term::kind() const { return node_->kind; }
inline std::size_t Term::depth() const { return node_->depth; }
inline std::uint32_t Term::max_dangling() const { return node_->max_dangling; }
inline bool Term::has_pred_var() const { return node_->has_pred_var; }
inline std::size_t Term::hash() const { return node_->hash; }

inline const Term& Term::left() const {
  if (arity() < 1) throw Error(std::string("term has no subterm: ") + kind_name(kind()));
  return node_->a;
}

inline const Term& Term::right() const {
  if (arity() < 2) throw Error(std::string("term has no second subterm: ") + kind_name(kind()));
  return node_->b;
}

Sort sort_of(const Term& t);
std::size_t depth(const Term& t);
bool equal(const Term& a, const Term& b);

// Indexes occurring dangling (free) in t.
std::set<Index> dangling(const Term& t);

// Recognisers for the derived connectives.
std::optional<std::pair<Term, Term>> match_iff(const Term& t);
std::optional<std::pair<Term, Term>> match_or(const Term& t);
// Body of an Exists (the predicate under the binder).
std::optional<Term> match_exists(const Term& t);

// Hypothesis lists are ordered; duplicates are allowed.
using HypList = std::vector<Term>;

bool hyp_member(const Term& p, std::span<const Term> hyps);
bool hyp_included(std::span<const Term> small, std::span<const Term> large);

}  // namespace bproof

template <>
struct std::hash<bproof::Term> {
  std::size_t operator()(const bproof::Term& t) const noexcept { return t.hash(); }
};

#endif  // BPROOF_TERM_HPP_
