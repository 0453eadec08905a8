#include "bproof/selftest.hpp"

#include <functional>
#include <set>

#include "bproof/binder.hpp"
#include "bproof/oracle.hpp"
#include "bproof/prop.hpp"
#include "bproof/syntax.hpp"

namespace bproof {

namespace {

std::string show(const Term& t) { return oracle::structure_text(t); }

class Law {
 public:
  explicit Law(std::string name) { result_.law = std::move(name); }

  // Counts one check; records the first failure.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && !result_.counterexample) result_.counterexample = describe();
  }

  LawResult done() { return std::move(result_); }

 private:
  LawResult result_;
};

Term deep_copy(const Term& t) {
  switch (t.kind()) {
    case Kind::Var: return Term::Var(t.index());
    case Kind::Big: return Term::Big();
    case Kind::Elem: return Term::Elem(BigName(t.name()));
    case Kind::PredVar: return Term::PredVar(PredName(t.name()));
    default: return map_subterms(t, [](const Term& c, std::uint32_t) { return deep_copy(c); });
  }
}

std::set<std::uint32_t> dangling_values(const Term& t) {
  std::set<std::uint32_t> out;
  for (Index i : dangling(t)) out.insert(i.value());
  return out;
}

// Whether the predicate variable k occurs under at least one binder.
bool pred_var_under_binder(const Term& t, const PredName& k, std::uint32_t depth) {
  if (!t.has_pred_var()) return false;
  if (t.kind() == Kind::PredVar) return depth > 0 && t.name() == k.text;
  bool found = false;
  map_subterms(t, [&](const Term& c, std::uint32_t crossed) {
    if (!found) found = pred_var_under_binder(c, k, depth + crossed);
    return c;
  });
  return found;
}

LawResult non_freeness(const std::vector<Term>& all, std::uint32_t max_index) {
  Law law("non-freeness agrees with the dangling set and the rule checker");
  for (const Term& t : all) {
    const std::set<std::uint32_t> d = dangling_values(t);
    for (std::uint32_t i = 1; i <= max_index + 1; ++i) {
      const bool structural = not_free(Index(i), t);
      law.expect(structural == !d.contains(i) && structural == oracle::not_free_by_rules(Index(i), t), [&] {
        return "index " + std::to_string(i) + " in " + show(t);
      });
    }
  }
  return law.done();
}

LawResult equality(const oracle::Enumeration& e) {
  Law law("term equality agrees with structural text comparison");
  auto compare = [&](const Term& a, const Term& b) {
    const bool reference = oracle::equal_by_text(a, b);
    law.expect(equal(a, b) == reference && (a == b) == reference,
               [&] { return show(a) + " vs " + show(b); });
  };
  for (const auto* buckets : {&e.predicates, &e.expressions}) {
    for (const auto& bucket : *buckets) {
      for (std::size_t n = 0; n < bucket.size(); ++n) {
        compare(bucket[n], deep_copy(bucket[n]));
        if (n + 1 < bucket.size()) compare(bucket[n], bucket[n + 1]);
      }
    }
  }
  const std::vector<Term> small = [&] {
    std::vector<Term> out = e.predicates_upto(2);
    for (const Term& x : e.expressions_upto(2)) out.push_back(x);
    return out;
  }();
  for (const Term& a : small) {
    for (const Term& b : small) compare(a, b);
  }
  return law.done();
}

LawResult hypotheses(const std::vector<Term>& preds) {
  Law law("hypothesis membership and inclusion agree with the rule checker");
  const std::size_t n = preds.size();
  if (n < 4) return law.done();
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<Term> window{preds[k], preds[(k + 1) % n], preds[(k + 2) % n]};
    for (std::size_t off : {std::size_t{0}, std::size_t{2}, std::size_t{3}, n / 2}) {
      const Term& p = preds[(k + off) % n];
      law.expect(hyp_member(p, window) == oracle::member_by_rules(p, window),
                 [&] { return "member " + show(p) + " of window at " + std::to_string(k); });
    }
    const std::vector<Term> smalls[] = {
        {preds[(k + 2) % n], preds[k]}, {preds[(k + 3) % n]}, {}, {preds[(k + 1) % n], preds[(k + 1) % n]}};
    for (const auto& s : smalls) {
      law.expect(hyp_included(s, window) == oracle::included_by_rules(s, window),
                 [&] { return "inclusion into the window at " + std::to_string(k); });
    }
  }
  return law.done();
}

LawResult alpha_irrelevance(const std::vector<Term>& preds, const std::vector<Term>& exprs, std::uint32_t max_index) {
  Law law("binding is irrelevant to the choice of the bound index");
  const Term set = exprs.empty() ? Term::Big() : exprs.front();
  for (const Term& p : preds) {
    for (std::uint32_t i = 1; i <= max_index; ++i) {
      for (std::uint32_t j = 1; j <= max_index + 1; ++j) {
        if (i == j || !not_free(Index(j), p)) continue;
        const Term renamed = subst(Index(i), Term::Var(Index(j)), p);
        law.expect(bind_forall(Index(i), p) == bind_forall(Index(j), renamed), [&] {
          return "forall, i=" + std::to_string(i) + " j=" + std::to_string(j) + " in " + show(p);
        });
        law.expect(bind_cmp(Index(i), set, p) == bind_cmp(Index(j), set, renamed), [&] {
          return "comprehension, i=" + std::to_string(i) + " j=" + std::to_string(j) + " in " + show(p);
        });
      }
    }
  }
  return law.done();
}

LawResult round_trips(const std::vector<Term>& preds, const std::vector<Term>& witnesses, std::uint32_t max_index) {
  Law law("instantiation undoes binding and binding undoes instantiation");
  for (const Term& p : preds) {
    for (std::uint32_t i = 1; i <= max_index; ++i) {
      const Index ix(i);
      law.expect(inst_forall(Term::Var(ix), bind_forall(ix, p)) == p,
                 [&] { return "inst after bind, i=" + std::to_string(i) + " in " + show(p); });
      if (p.kind() == Kind::Forall && not_free(ix, p)) {
        law.expect(bind_forall(ix, inst_forall(Term::Var(ix), p)) == p,
                   [&] { return "bind after inst, i=" + std::to_string(i) + " in " + show(p); });
      }
      for (const Term& w : witnesses) {
        law.expect(inst_forall(w, bind_forall(ix, p)) == subst(ix, w, p), [&] {
          return "inst at " + show(w) + " after bind, i=" + std::to_string(i) + " in " + show(p);
        });
        const Term set = Term::Big();
        law.expect(inst_cmp(w, bind_cmp(ix, set, p)) == Term::And(Term::In(w, set), subst(ix, w, p)), [&] {
          return "comprehension at " + show(w) + ", i=" + std::to_string(i) + " in " + show(p);
        });
      }
    }
  }
  return law.done();
}

LawResult vacuous_substitution(const std::vector<Term>& all, const std::vector<Term>& witnesses,
                               std::uint32_t max_index) {
  Law law("substituting a variable that is not free changes nothing");
  for (const Term& t : all) {
    for (std::uint32_t i = 1; i <= max_index + 1; ++i) {
      if (!not_free(Index(i), t)) continue;
      for (const Term& w : witnesses) {
        law.expect(subst(Index(i), w, t) == t,
                   [&] { return "i=" + std::to_string(i) + " e=" + show(w) + " in " + show(t); });
      }
    }
  }
  return law.done();
}

LawResult lift_shifts_dangling(const std::vector<Term>& all) {
  Law law("lifting shifts exactly the dangling indexes above the cutoff");
  for (const Term& t : all) {
    const std::set<std::uint32_t> before = dangling_values(t);
    for (std::uint32_t c = 0; c <= 2; ++c) {
      std::set<std::uint32_t> expected;
      for (std::uint32_t k : before) expected.insert(k > c ? k + 1 : k);
      law.expect(dangling_values(lift(t, c)) == expected,
                 [&] { return "cutoff " + std::to_string(c) + " on " + show(t) + " gives " + show(lift(t, c)); });
    }
  }
  return law.done();
}

LawResult substitution_vs_grafting(const std::vector<Term>& all, const std::vector<Term>& fillers,
                                   const PredName& k) {
  Law law("predicate substitution and grafting differ exactly at capturing positions");
  for (const Term& t : all) {
    if (!occurs_pred(k, t)) continue;
    const bool under = pred_var_under_binder(t, k, 0);
    for (const Term& p : fillers) {
      const bool same = subst_pred(k, p, t) == graft_pred(k, p, t);
      law.expect(same == (!under || p.max_dangling() == 0),
                 [&] { return "filler " + show(p) + " in " + show(t); });
    }
  }
  return law.done();
}

bool truth_table(const Term& t, const std::vector<Term>& atoms, unsigned row) {
  switch (t.kind()) {
    case Kind::Not: return !truth_table(t.left(), atoms, row);
    case Kind::And: return truth_table(t.left(), atoms, row) && truth_table(t.right(), atoms, row);
    case Kind::Implies: return !truth_table(t.left(), atoms, row) || truth_table(t.right(), atoms, row);
    default:
      for (std::size_t n = 0; n < atoms.size(); ++n) {
        if (atoms[n] == t) return (row >> n) & 1u;
      }
      throw Error("atom missing from the table");
  }
}

LawResult propositional(const std::vector<Term>& preds) {
  Law law("the propositional decider agrees with truth tables");
  for (const Term& p : preds) {
    const Sequent s({}, p);
    const std::vector<Term> atoms = prop_atoms(s);
    if (atoms.size() > 12) continue;
    bool tautology = true;
    for (unsigned row = 0; row < (1u << atoms.size()) && tautology; ++row) tautology = truth_table(p, atoms, row);
    law.expect(prop_valid(s) == tautology, [&] { return show(p); });
  }
  return law.done();
}

}  // namespace

std::vector<LawResult> run_selftest(std::size_t depth) {
  const oracle::Alphabet alphabet;
  const oracle::Enumeration e = oracle::enumerate(depth, alphabet);
  const std::vector<Term> preds = e.predicates_upto(depth);
  const std::vector<Term> exprs = e.expressions_upto(depth);
  const std::vector<Term> all = e.all();
  const std::vector<Term> fillers = e.predicates_upto(std::min<std::size_t>(depth, 2));
  const std::uint32_t m = alphabet.max_index;

  std::vector<LawResult> out;
  out.push_back(non_freeness(all, m));
  out.push_back(equality(e));
  out.push_back(hypotheses(preds));
  out.push_back(alpha_irrelevance(preds, exprs, m));
  out.push_back(round_trips(preds, e.expressions_upto(1), m));
  out.push_back(vacuous_substitution(all, e.expressions_upto(1), m));
  out.push_back(lift_shifts_dangling(all));
  out.push_back(substitution_vs_grafting(all, fillers, alphabet.preds.front()));
  out.push_back(propositional(preds));
  return out;
}

bool report_selftest(const std::vector<LawResult>& results, std::ostream& out) {
  bool ok = true;
  for (const LawResult& r : results) {
    if (r.counterexample) {
      ok = false;
      out << "FAIL " << r.law << " (" << r.checks << " checks)\n  counterexample: " << *r.counterexample << "\n";
    } else {
      out << "ok   " << r.law << " (" << r.checks << " checks)\n";
    }
  }
  return ok;
}

}  // namespace bproof
