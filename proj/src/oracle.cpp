#include "bproof/oracle.hpp"

#include <utility>

namespace bproof::oracle {

namespace {

// Pairs drawn from a..b with at least one side of exact depth d-1.
template <typename F>
void binary(const Enumeration& en, bool left_pred, bool right_pred, std::size_t d, F&& make,
            std::vector<Term>& out) {
  const auto& lbuckets = left_pred ? en.predicates : en.expressions;
  const auto& rbuckets = right_pred ? en.predicates : en.expressions;
  for (std::size_t da = 1; da < d; ++da) {
    for (std::size_t db = 1; db < d; ++db) {
      if (da != d - 1 && db != d - 1) continue;
      for (const Term& a : lbuckets[da]) {
        for (const Term& b : rbuckets[db]) out.push_back(make(a, b));
      }
    }
  }
}

void text(const Term& t, std::string& out) {
  out += '(';
  out += kind_name(t.kind());
  switch (t.kind()) {
    case Kind::Var:
      out += ' ';
      out += std::to_string(t.index().value());
      break;
    case Kind::Elem:
    case Kind::PredVar:
      out += ' ';
      out += t.name();
      break;
    default:
      for (std::size_t n = 0; n < t.arity(); ++n) {
        out += ' ';
        text(n == 0 ? t.left() : t.right(), out);
      }
  }
  out += ')';
}

}  // namespace

std::vector<Term> Enumeration::predicates_upto(std::size_t depth) const {
  std::vector<Term> out;
  for (std::size_t d = 1; d <= depth && d < predicates.size(); ++d) {
    out.insert(out.end(), predicates[d].begin(), predicates[d].end());
  }
  return out;
}

std::vector<Term> Enumeration::expressions_upto(std::size_t depth) const {
  std::vector<Term> out;
  for (std::size_t d = 1; d <= depth && d < expressions.size(); ++d) {
    out.insert(out.end(), expressions[d].begin(), expressions[d].end());
  }
  return out;
}

std::vector<Term> Enumeration::all() const {
  std::vector<Term> out = predicates_upto(predicates.size());
  std::vector<Term> es = expressions_upto(expressions.size());
  out.insert(out.end(), es.begin(), es.end());
  return out;
}

Enumeration enumerate(std::size_t depth, const Alphabet& alphabet) {
  Enumeration en;
  en.predicates.resize(depth + 1);
  en.expressions.resize(depth + 1);
  if (depth == 0) return en;
  for (const PredName& k : alphabet.preds) en.predicates[1].push_back(Term::PredVar(k));
  for (std::uint32_t i = 1; i <= alphabet.max_index; ++i) en.expressions[1].push_back(Term::Var(i));
  en.expressions[1].push_back(Term::Big());
  for (const BigName& j : alphabet.bigs) en.expressions[1].push_back(Term::Elem(j));

  for (std::size_t d = 2; d <= depth; ++d) {
    auto& ps = en.predicates[d];
    auto& es = en.expressions[d];
    binary(en, true, true, d, Term::And, ps);
    binary(en, true, true, d, Term::Implies, ps);
    for (const Term& p : en.predicates[d - 1]) ps.push_back(Term::Not(p));
    for (const Term& p : en.predicates[d - 1]) ps.push_back(Term::Forall(p));
    binary(en, false, false, d, Term::Eq, ps);
    binary(en, false, false, d, Term::In, ps);

    binary(en, false, false, d, Term::MapsTo, es);
    for (const Term& e : en.expressions[d - 1]) es.push_back(Term::Choice(e));
    for (const Term& e : en.expressions[d - 1]) es.push_back(Term::Pow(e));
    binary(en, false, false, d, Term::Prod, es);
    binary(en, false, true, d, Term::Cmp, es);
  }
  return en;
}

std::string structure_text(const Term& t) {
  std::string out;
  text(t, out);
  return out;
}

bool equal_by_text(const Term& a, const Term& b) { return structure_text(a) == structure_text(b); }

bool not_free_by_rules(Index i, const Term& t) {
  // Pending judgments `i \ t`; the judgment holds when every rule premise
  // generated from it is discharged by an axiom.
  std::vector<std::pair<std::uint32_t, Term>> goals{{i.value(), t}};
  while (!goals.empty()) {
    auto [n, u] = std::move(goals.back());
    goals.pop_back();
    switch (u.kind()) {
      case Kind::Big:
      case Kind::Elem:
      case Kind::PredVar:
        break;
      case Kind::Var:
        if (u.index().value() == n) return false;
        break;
      case Kind::Forall:
        goals.emplace_back(n + 1, u.left());
        break;
      case Kind::Cmp:
        goals.emplace_back(n, u.left());
        goals.emplace_back(n + 1, u.right());
        break;
      default:
        goals.emplace_back(n, u.left());
        if (u.arity() == 2) goals.emplace_back(n, u.right());
    }
  }
  return true;
}

bool member_by_rules(const Term& p, const std::vector<Term>& hyps) {
  for (const Term& h : hyps) {
    if (equal_by_text(p, h)) return true;
  }
  return false;
}

bool included_by_rules(const std::vector<Term>& small, const std::vector<Term>& large) {
  for (const Term& p : small) {
    if (!member_by_rules(p, large)) return false;
  }
  return true;
}

}  // namespace bproof::oracle
