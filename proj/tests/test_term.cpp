#include "doctest.h"

#include "bproof/term.hpp"

using namespace bproof;

namespace {

Term v(std::uint32_t i) { return Term::Var(i); }
Term k(const char* name) { return Term::PredVar(PredName(name)); }

}  // namespace

TEST_CASE("factories check sorts") {
  CHECK_THROWS_AS(Term::And(v(1), k("k")), SortError);
  CHECK_THROWS_AS(Term::Eq(k("k"), v(1)), SortError);
  CHECK_THROWS_AS(Term::Pow(k("k")), SortError);
  CHECK_THROWS_AS(Term::Cmp(v(1), v(2)), SortError);
  CHECK_THROWS_AS(Term::Forall(v(1)), SortError);
  CHECK(Term::In(v(1), Term::Big()).is_predicate());
  CHECK(Term::Cmp(Term::Big(), k("k")).is_expression());
}

TEST_CASE("indexes and names are validated") {
  CHECK_THROWS(Index(0));
  CHECK_THROWS(BigName("1x"));
  CHECK_THROWS(PredName(""));
  CHECK(is_identifier("e'"));
  CHECK_FALSE(is_identifier("a-b"));
}

TEST_CASE("derived connectives expand") {
  const Term p = k("p");
  const Term q = k("q");
  CHECK(Term::Iff(p, q) == Term::And(Term::Implies(p, q), Term::Implies(q, p)));
  CHECK(Term::Or(p, q) == Term::Implies(Term::Not(p), q));
  CHECK(Term::Exists(p) == Term::Not(Term::Forall(Term::Not(p))));
  CHECK(match_iff(Term::Iff(p, q)) == std::optional(std::pair(p, q)));
  CHECK(match_or(Term::Or(p, q)) == std::optional(std::pair(p, q)));
  CHECK(match_exists(Term::Exists(p)) == std::optional(p));
  CHECK_FALSE(match_iff(Term::And(p, q)));
  CHECK_FALSE(match_exists(Term::Not(p)));
}

TEST_CASE("depth and dangling indexes") {
  const Term t = Term::Forall(Term::In(v(1), Term::Cmp(v(2), Term::Eq(v(1), v(3)))));
  CHECK(t.depth() == 5);
  CHECK(depth(t) == 5);
  CHECK(dangling(t) == std::set<Index>{Index(1)});
  CHECK(t.max_dangling() == 1);
  CHECK(Term::Forall(Term::Eq(v(1), v(1))).max_dangling() == 0);
  CHECK(dangling(Term::Cmp(v(1), Term::Eq(v(1), v(2)))) == std::set<Index>{Index(1)});
}

TEST_CASE("equality is structural") {
  const Term a = Term::MapsTo(v(1), Term::Elem(BigName("j")));
  const Term b = Term::MapsTo(v(1), Term::Elem(BigName("j")));
  CHECK(a == b);
  CHECK(equal(a, b));
  CHECK_FALSE(a == Term::MapsTo(v(2), Term::Elem(BigName("j"))));
  CHECK_FALSE(a == Term::Prod(v(1), Term::Elem(BigName("j"))));
  CHECK(a.hash() == b.hash());
  CHECK_FALSE(k("a") == k("b"));
}

TEST_CASE("accessors refuse the wrong shape") {
  CHECK_THROWS(Term::Big().left());
  CHECK_THROWS(Term::Not(k("p")).right());
  CHECK_THROWS(Term::Big().index());
  CHECK(Term::Elem(BigName("j")).name() == "j");
}

TEST_CASE("hypothesis membership and inclusion") {
  const HypList g{k("a"), k("b"), k("a")};
  CHECK(hyp_member(k("b"), g));
  CHECK_FALSE(hyp_member(k("c"), g));
  CHECK(hyp_included(HypList{k("a"), k("b")}, g));
  CHECK(hyp_included(HypList{}, g));
  CHECK_FALSE(hyp_included(HypList{k("c")}, g));
  CHECK(hyp_included(HypList{k("b"), k("b")}, g));
}
