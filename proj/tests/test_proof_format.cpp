#include "doctest.h"

#include "bproof/proof_format.hpp"
#include "rule_cases.hpp"

using namespace bproof;
using rule_cases::v;

TEST_CASE("a single reflexivity node") {
  const Theorem th = rules::eq_refl({}, Term::Big());
  const std::string text = encode_proof(th.proof());
  CHECK(text == "(EqRefl (hyps) (term BIG))");
  CHECK(decode_proof(text) == th.proof());
}

TEST_CASE("terms encode one constructor per node") {
  const Term t = Term::Forall(Term::In(v(1), Term::Cmp(Term::Elem(BigName("j")), Term::PredVar(PredName("k")))));
  CHECK(encode_term(t) == "(all (in (var 1) (cmp (elem j) (pv k))))");
  CHECK(decode_term(encode_term(t)) == t);
}

TEST_CASE("every rule case round trips") {
  for (const auto& c : rule_cases::all()) {
    const ProofTree tree = c.positive().proof();
    const std::string text = encode_proof(tree);
    const ProofTree back = decode_proof(text);
    CHECK(back == tree);
    CHECK(encode_proof(back) == text);
    CHECK(check(back).sequent() == c.expected);
  }
}

TEST_CASE("proof files") {
  ScopeTable scope({"x"});
  const Theorem th = rules::eq_refl({Term::In(v(1), Term::Big())}, v(1));
  const ProofFile file{scope, th.sequent(), th.proof()};
  const std::string text = encode_proof_file(file);
  const ProofFile back = decode_proof_file(text);
  CHECK(back.scope == scope);
  CHECK(back.sequent == th.sequent());
  CHECK(back.proof == th.proof());
  CHECK(encode_proof_file(back) == text);
  // Any whitespace is accepted.
  std::string squashed;
  for (char c : text) squashed += c == '\n' ? ' ' : c;
  CHECK(decode_proof_file(squashed).proof == th.proof());
}

TEST_CASE("malformed input is rejected") {
  const std::string good = encode_proof(rules::eq_refl({}, Term::Big()).proof());
  for (std::size_t cut = 0; cut < good.size(); ++cut) {
    CHECK_THROWS_AS(decode_proof(good.substr(0, cut)), DecodeError);
  }
  CHECK_THROWS_AS(decode_proof("(NoSuchRule)"), DecodeError);
  CHECK_THROWS_AS(decode_proof("(EqRefl (hyps))"), DecodeError);
  CHECK_THROWS_AS(decode_proof("(EqRefl (hyps) (term BIG)) trailing"), DecodeError);
  CHECK_THROWS_AS(decode_proof("(EqRefl (hyps) (term (var 0)))"), DecodeError);
  CHECK_THROWS_AS(decode_proof("(EqRefl (hyps) (term (and BIG BIG)))"), DecodeError);
  CHECK_THROWS_AS(decode_proof("(AndIntro (EqRefl (hyps) (term BIG)))"), DecodeError);
  try {
    decode_proof("(EqRefl (hyps) (term (frob)))");
    FAIL("accepted");
  } catch (const DecodeError& e) {
    CHECK(e.offset() == 21);
  }
}
