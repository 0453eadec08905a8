#include "doctest.h"

#include "bproof/binder.hpp"
#include "bproof/oracle.hpp"
#include "bproof/syntax.hpp"

using namespace bproof;

namespace {

Term v(std::uint32_t i) { return Term::Var(i); }
const Term big = Term::Big();

}  // namespace

TEST_CASE("binders parse to the internal representation") {
  auto [t, scope] = parse_term("forall x . x : { y : E | x = y }");
  CHECK(t == Term::Forall(Term::In(v(1), Term::Cmp(v(2), Term::Eq(v(2), v(1))))));
  CHECK(scope.names() == std::vector<std::string>{"E"});
  CHECK(parse_term("BIG").term == big);
}

TEST_CASE("parsing commutes with functional binding") {
  ScopeTable scope({"x", "E"});
  const Term body = parse_predicate("x : { y : E | x = y }", scope);
  CHECK(parse_predicate("forall x . x : { y : E | x = y }", scope) == bind_forall(Index(1), body));
  const Term ex = parse_predicate("exists x . x : E", scope);
  CHECK(ex == bind_exists(Index(1), Term::In(v(1), v(2))));
}

TEST_CASE("free names are numbered by first occurrence") {
  auto [t, scope] = parse_term("b : a & a : c");
  CHECK(scope.names() == std::vector<std::string>{"b", "a", "c"});
  CHECK(t == Term::And(Term::In(v(1), v(2)), Term::In(v(2), v(3))));
}

TEST_CASE("precedence and derived connectives") {
  ScopeTable s({"a", "b"});
  const Term pa = Term::PredVar(PredName("p"));
  const Term pb = Term::PredVar(PredName("q"));
  CHECK(parse_predicate("not #p & #q => #p", s) == Term::Implies(Term::And(Term::Not(pa), pb), pa));
  CHECK(parse_predicate("#p => #q => #p", s) == Term::Implies(pa, Term::Implies(pb, pa)));
  CHECK(parse_predicate("#p <=> #q", s) == Term::Iff(pa, pb));
  CHECK(parse_predicate("#p or #q", s) == Term::Or(pa, pb));
  CHECK(parse_expression("a |-> b * a", s) == Term::MapsTo(v(1), Term::Prod(v(2), v(1))));
  CHECK(parse_expression("pow choice @j", s) == Term::Pow(Term::Choice(Term::Elem(BigName("j")))));
}

TEST_CASE("printing") {
  CHECK(print_term(Term::Forall(Term::In(v(1), v(2))), ScopeTable({"x"})) == "forall v1 . v1 : x");
  CHECK(print_term(big, ScopeTable()) == "BIG");
  CHECK(print_term(Term::Cmp(big, Term::Eq(v(1), v(1))), ScopeTable()) == "{ v1 : BIG | v1 = v1 }");
  CHECK(print_term(Term::In(v(1), v(2)), ScopeTable({"x", "y"})) == "x : y");
  // Bound names avoid free ones.
  CHECK(print_term(Term::Forall(Term::In(v(1), v(2))), ScopeTable({"v1"})) == "forall v1' . v1' : v1");
}

TEST_CASE("printing never shows raw indexes and round trips on small terms") {
  for (const Term& t : oracle::enumerate(2).all()) {
    ScopeTable scope({"a", "b", "c"});
    const std::string text = print_term(t, scope);
    CAPTURE(text);
    ScopeTable again = scope;
    CHECK(parse_term(text, again) == t);
    CHECK(again == scope);
  }
}

TEST_CASE("dangling indexes beyond the scope get generated names") {
  const std::string text = print_term(Term::In(v(1), v(2)), ScopeTable({"x"}));
  CHECK(text == "x : x2");
}

TEST_CASE("errors") {
  ScopeTable s;
  CHECK_THROWS_AS(parse_term("x : ", s), ParseError);
  CHECK_THROWS_AS(parse_term("forall . x = x", s), ParseError);
  CHECK_THROWS_AS(parse_term("x & y", s), Error);
  CHECK_THROWS_AS(parse_predicate("x", s), Error);
  CHECK_THROWS_AS(parse_expression("#p", s), Error);
  try {
    parse_term("a : b )", s);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("sequents") {
  ScopeTable s;
  const Sequent seq = parse_sequent("x : y, #k |- y = x", s);
  CHECK(seq == Sequent({Term::In(v(1), v(2)), Term::PredVar(PredName("k"))}, Term::Eq(v(2), v(1))));
  CHECK(print_sequent(seq, s) == "x : y, #k |- y = x");
  ScopeTable s2;
  CHECK(parse_sequent("|- BIG = BIG", s2) == Sequent({}, Term::Eq(big, big)));
  CHECK(print_sequent(Sequent({}, Term::Eq(big, big)), s2) == "|- BIG = BIG");
  CHECK(parse_sequent("BIG = BIG", s2).hyps.empty());
}

TEST_CASE("comments") {
  CHECK(strip_comments("x : y -- note\n  \n") == "x : y");
  CHECK(strip_comments("-- only\n#p\n") == "#p");
}
