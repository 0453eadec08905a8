// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "bproof/binder.hpp"
#include "bproof/kernel.hpp"
#include "bproof/oracle.hpp"
#include "bproof/proof_format.hpp"
#include "bproof/prop.hpp"
#include "bproof/syntax.hpp"
#include "rule_cases.hpp"
#include "truth_table.hpp"

namespace fs = std::filesystem;
using namespace bproof;

namespace {

struct Verdict {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what());
  }
  bool passed() const { return failures.empty() && checks > 0; }
};

std::string show(const Term& t) { return oracle::structure_text(t); }

// ---------------------------------------------------------------------------
// Reference implementations, written from the definitions.

Term var(std::uint32_t i) { return Term::Var(i); }

void dangling_ref(const Term& t, std::uint32_t depth, std::set<std::uint32_t>& out) {
  switch (t.kind()) {
    case Kind::Var:
      if (t.index().value() > depth) out.insert(t.index().value() - depth);
      return;
    case Kind::Forall:
      dangling_ref(t.left(), depth + 1, out);
      return;
    case Kind::Cmp:
      dangling_ref(t.left(), depth, out);
      dangling_ref(t.right(), depth + 1, out);
      return;
    default:
      if (t.arity() >= 1) dangling_ref(t.left(), depth, out);
      if (t.arity() == 2) dangling_ref(t.right(), depth, out);
  }
}

std::set<std::uint32_t> dangling_ref(const Term& t) {
  std::set<std::uint32_t> out;
  dangling_ref(t, 0, out);
  return out;
}

bool free_ref(std::uint32_t i, const Term& t) { return dangling_ref(t).contains(i); }

Term rebuild(const Term& t, const std::function<Term(const Term&, std::uint32_t)>& leaf, std::uint32_t depth) {
  auto rec = [&](const Term& c, std::uint32_t d) { return rebuild(c, leaf, d); };
  switch (t.kind()) {
    case Kind::And: return Term::And(rec(t.left(), depth), rec(t.right(), depth));
    case Kind::Implies: return Term::Implies(rec(t.left(), depth), rec(t.right(), depth));
    case Kind::Not: return Term::Not(rec(t.left(), depth));
    case Kind::Forall: return Term::Forall(rec(t.left(), depth + 1));
    case Kind::Eq: return Term::Eq(rec(t.left(), depth), rec(t.right(), depth));
    case Kind::In: return Term::In(rec(t.left(), depth), rec(t.right(), depth));
    case Kind::MapsTo: return Term::MapsTo(rec(t.left(), depth), rec(t.right(), depth));
    case Kind::Choice: return Term::Choice(rec(t.left(), depth));
    case Kind::Pow: return Term::Pow(rec(t.left(), depth));
    case Kind::Prod: return Term::Prod(rec(t.left(), depth), rec(t.right(), depth));
    case Kind::Cmp: return Term::Cmp(rec(t.left(), depth), rec(t.right(), depth + 1));
    case Kind::PredVar: return Term::PredVar(PredName(t.name()));
    case Kind::Elem: return Term::Elem(BigName(t.name()));
    case Kind::Big: return Term::Big();
    case Kind::Var: return leaf(t, depth);
  }
  return t;
}

Term deep_copy(const Term& t) {
  return rebuild(t, [](const Term& v, std::uint32_t) { return Term::Var(v.index().value()); }, 0);
}

Term lift_ref(const Term& t, std::uint32_t cutoff) {
  return rebuild(
      t,
      [cutoff](const Term& v, std::uint32_t depth) {
        const std::uint32_t i = v.index().value();
        return Term::Var(i > depth + cutoff ? i + 1 : i);
      },
      0);
}

// Occurrence of #k under at least one binder.
bool pred_under_binder(const Term& t, const std::string& k, std::uint32_t depth) {
  switch (t.kind()) {
    case Kind::PredVar: return depth > 0 && t.name() == k;
    case Kind::Forall: return pred_under_binder(t.left(), k, depth + 1);
    case Kind::Cmp: return pred_under_binder(t.left(), k, depth) || pred_under_binder(t.right(), k, depth + 1);
    default:
      return (t.arity() >= 1 && pred_under_binder(t.left(), k, depth)) ||
             (t.arity() == 2 && pred_under_binder(t.right(), k, depth));
  }
}

// All terms of depth <= 3 over Var 1..3, one BIG element, one predicate
// variable; built here independently of the library enumerator.
struct Terms {
  std::vector<Term> preds;
  std::vector<Term> exprs;
};

Terms enumerate_terms(std::size_t depth) {
  Terms all;
  all.preds = {Term::PredVar(PredName("k"))};
  all.exprs = {var(1), var(2), var(3), Term::Big(), Term::Elem(BigName("j"))};
  for (std::size_t d = 2; d <= depth; ++d) {
    const Terms below = all;
    Terms next;
    next.preds = {Term::PredVar(PredName("k"))};
    next.exprs = {var(1), var(2), var(3), Term::Big(), Term::Elem(BigName("j"))};
    for (const Term& p : below.preds) {
      next.preds.push_back(Term::Not(p));
      next.preds.push_back(Term::Forall(p));
      for (const Term& q : below.preds) {
        next.preds.push_back(Term::And(p, q));
        next.preds.push_back(Term::Implies(p, q));
      }
    }
    for (const Term& e : below.exprs) {
      next.exprs.push_back(Term::Choice(e));
      next.exprs.push_back(Term::Pow(e));
      for (const Term& f : below.exprs) {
        next.preds.push_back(Term::Eq(e, f));
        next.preds.push_back(Term::In(e, f));
        next.exprs.push_back(Term::MapsTo(e, f));
        next.exprs.push_back(Term::Prod(e, f));
      }
      for (const Term& p : below.preds) next.exprs.push_back(Term::Cmp(e, p));
    }
    all = std::move(next);
  }
  return all;
}

// ---------------------------------------------------------------------------
// Subprocesses.

struct RunResult {
  int status = -1;
  std::string output;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

RunResult run(const std::vector<std::string>& argv) {
  std::string cmd;
  for (const auto& a : argv) cmd += quote(a) + " ";
  cmd += "2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// ---------------------------------------------------------------------------
// Criteria.

Verdict binder_laws(const Terms& terms) {
  Verdict v;
  const std::vector<Term> sets{Term::Big(), var(1), Term::Pow(var(2))};
  const std::vector<Term> witnesses{Term::Big(), var(1), var(4), Term::Elem(BigName("j")), Term::Pow(var(2))};

  for (const Term& p : terms.preds) {
    for (std::uint32_t i = 1; i <= 3; ++i) {
      const Index ix(i);
      // Both round trips of universal binding.
      v.expect(inst_forall(var(i), bind_forall(ix, p)) == p, [&] { return "inst after bind: " + show(p); });
      if (p.kind() == Kind::Forall && !free_ref(i, p)) {
        v.expect(bind_forall(ix, inst_forall(var(i), p)) == p, [&] { return "bind after inst: " + show(p); });
      }
      for (const Term& w : witnesses) {
        v.expect(inst_forall(w, bind_forall(ix, p)) == subst(ix, w, p), [&] { return "inst at witness: " + show(p); });
      }
      // Comprehension membership.
      for (const Term& set : sets) {
        for (const Term& w : {var(i), Term::Big()}) {
          v.expect(inst_cmp(w, bind_cmp(ix, set, p)) == Term::And(Term::In(w, set), subst(ix, w, p)),
                   [&] { return "comprehension: " + show(p); });
        }
      }
      // The bound index does not matter.
      for (std::uint32_t j = 1; j <= 4; ++j) {
        if (j == i || free_ref(j, p)) continue;
        const Term renamed = subst(ix, var(j), p);
        v.expect(bind_forall(ix, p) == bind_forall(Index(j), renamed), [&] { return "alpha forall: " + show(p); });
        v.expect(bind_cmp(ix, sets[1], p) == bind_cmp(Index(j), sets[1], renamed),
                 [&] { return "alpha cmp: " + show(p); });
      }
    }
  }

  std::vector<Term> everything = terms.preds;
  everything.insert(everything.end(), terms.exprs.begin(), terms.exprs.end());
  for (const Term& t : everything) {
    const auto d = dangling_ref(t);
    for (std::uint32_t i = 1; i <= 4; ++i) {
      if (d.contains(i)) continue;
      for (const Term& w : witnesses) {
        v.expect(subst(Index(i), w, t) == t, [&] { return "vacuous substitution: " + show(t); });
      }
    }
    for (std::uint32_t c = 0; c <= 3; ++c) {
      const Term lifted = lift(t, c);
      std::set<std::uint32_t> expected;
      for (std::uint32_t x : d) expected.insert(x > c ? x + 1 : x);
      v.expect(lifted == lift_ref(t, c) && dangling_ref(lifted) == expected,
               [&] { return "lift cutoff " + std::to_string(c) + ": " + show(t); });
    }
  }

  const PredName k("k");
  std::vector<Term> payloads;
  for (const Term& p : terms.preds) {
    if (p.depth() <= 2) payloads.push_back(p);
  }
  for (const Term& t : everything) {
    if (!occurs_pred(k, t)) continue;
    const bool under = pred_under_binder(t, "k", 0);
    for (const Term& p : payloads) {
      const bool differ = !(subst_pred(k, p, t) == graft_pred(k, p, t));
      v.expect(differ == (under && !dangling_ref(p).empty()),
               [&] { return "subst_pred vs graft_pred: " + show(t) + " with " + show(p); });
    }
  }
  return v;
}

Verdict deciders(const Terms& terms) {
  Verdict v;
  std::vector<Term> everything = terms.preds;
  everything.insert(everything.end(), terms.exprs.begin(), terms.exprs.end());

  for (const Term& t : everything) {
    for (std::uint32_t i = 1; i <= 4; ++i) {
      const bool structural = not_free(Index(i), t);
      v.expect(structural == oracle::not_free_by_rules(Index(i), t) && structural == !free_ref(i, t),
               [&] { return "not_free " + std::to_string(i) + ": " + show(t); });
    }
  }

  auto compare = [&](const Term& a, const Term& b) {
    const bool reference = oracle::equal_by_text(a, b);
    v.expect(equal(a, b) == reference && (a == b) == reference, [&] { return "equal: " + show(a) + " vs " + show(b); });
  };
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t n = 0; n < everything.size(); ++n) {
    const Term& t = everything[n];
    compare(t, deep_copy(t));
    for (std::size_t m = n + 1; m < everything.size() && m <= n + 8; ++m) compare(t, everything[m]);
    by_hash[t.hash()].push_back(n);
  }
  for (const auto& [h, bucket] : by_hash) {
    for (std::size_t a = 0; a < bucket.size(); ++a) {
      for (std::size_t b = a + 1; b < bucket.size(); ++b) compare(everything[bucket[a]], everything[bucket[b]]);
    }
  }
  std::vector<Term> small;
  for (const Term& t : everything) {
    if (t.depth() <= 2) small.push_back(t);
  }
  for (const Term& a : small) {
    for (const Term& b : small) compare(a, b);
  }

  const auto& ps = terms.preds;
  for (std::size_t n = 3; n < ps.size(); ++n) {
    const std::vector<Term> window{ps[n - 1], ps[n - 2], ps[n - 3], deep_copy(ps[n - 1])};
    for (const Term& p : {ps[n], ps[n - 2], deep_copy(ps[n - 3])}) {
      v.expect(hyp_member(p, window) == oracle::member_by_rules(p, window), [&] { return "member: " + show(p); });
    }
    for (const std::vector<Term>& sub :
         {std::vector<Term>{}, std::vector<Term>{ps[n]}, std::vector<Term>{ps[n - 3], deep_copy(ps[n - 1])},
          std::vector<Term>{ps[n - 1], ps[n]}}) {
      v.expect(hyp_included(sub, window) == oracle::included_by_rules(sub, window),
               [&] { return "included at " + std::to_string(n); });
    }
  }
  return v;
}

Verdict rule_coverage() {
  Verdict v;
  std::set<RuleTag> accepted, rejected;
  for (const auto& c : rule_cases::all()) {
    const std::string name(rule_name(c.tag));
    try {
      const Theorem th = c.positive();
      const bool ok = th.sequent() == c.expected && check(th.proof()).sequent() == c.expected;
      v.expect(ok, [&] { return name + ": wrong conclusion"; });
      if (ok) accepted.insert(c.tag);
    } catch (const std::exception& e) {
      v.expect(false, [&] { return name + ": positive case threw " + e.what(); });
    }
    try {
      c.negative();
      v.expect(false, [&] { return name + ": rejection case accepted"; });
    } catch (const KernelError& e) {
      v.expect(e.code() == c.code, [&] { return name + ": rejected with " + kernel_code_name(e.code()); });
      if (e.code() == c.code) rejected.insert(c.tag);
    }
  }
  v.expect(accepted.size() == kRuleTagCount && rejected.size() == kRuleTagCount,
           [&] { return "covered " + std::to_string(accepted.size()) + "/" + std::to_string(rejected.size()); });
  // A ForallIntro whose index is free must fail; so must BigDistinct on one name.
  const Term e = Term::Eq(var(1), var(1));
  bool forall_refused = false, distinct_refused = false;
  try {
    rules::forall_intro(rules::hyp({e}, e), Index(1));
  } catch (const KernelError&) {
    forall_refused = true;
  }
  try {
    const Arg args[] = {HypList{}, BigName("j"), BigName("j")};
    apply_rule(RuleTag::BigDistinct, {}, args);
  } catch (const KernelError&) {
    distinct_refused = true;
  }
  v.expect(forall_refused && distinct_refused, [] { return "named rejection examples"; });
  return v;
}

const std::vector<std::pair<std::string, std::string>> kCorpus{
    {"identity", "Identity"},
    {"cut", "Cut"},
    {"alpha_forall", "AlphaForallIntro"},
    {"pair_injectivity", "PairInjL"},
    {"product_monotonicity", "ProdChar"},
    {"predicate_variable", ""},
    {"rewrite_under_binders", "SubstEquiv"},
    {"double_negation", "GraftEquiv"},
};

bool uses_rule(const ProofTree& t, const std::string& name) {
  if (rule_name(t.rule()) == name) return true;
  for (const ProofTree& p : t.premises()) {
    if (uses_rule(p, name)) return true;
  }
  return false;
}

Verdict theorem_replay(const std::string& bproof, const fs::path& theorems, const fs::path& tmp) {
  Verdict v;
  for (const auto& [name, rule] : kCorpus) {
    const fs::path goal = theorems / (name + ".bgoal");
    const fs::path script = theorems / (name + ".bscript");
    const fs::path golden = theorems / (name + ".bprf");
    const fs::path emitted = tmp / (name + ".bprf");
    const RunResult proved = run({bproof, "prove", goal.string(), script.string(), "--emit", emitted.string()});
    v.expect(proved.status == 0, [&] { return name + ": prove exited " + std::to_string(proved.status) + ": " + proved.output; });
    const RunResult checked = run({bproof, "check", emitted.string()});
    v.expect(checked.status == 0, [&] { return name + ": check of the emitted proof exited " + std::to_string(checked.status); });
    const RunResult shipped = run({bproof, "check", golden.string()});
    v.expect(shipped.status == 0, [&] { return name + ": check of the shipped proof exited " + std::to_string(shipped.status); });
    v.expect(slurp(emitted) == slurp(golden), [&] { return name + ": emitted proof differs from the shipped one"; });

    ScopeTable scope;
    std::string goal_text = strip_comments(slurp(goal));
    const Sequent expected = parse_sequent(goal_text, scope);
    try {
      const ProofFile file = decode_proof_file(slurp(golden));
      v.expect(file.sequent == expected && check(file.proof).sequent() == expected,
               [&] { return name + ": shipped proof establishes another sequent"; });
      if (!rule.empty()) {
        v.expect(uses_rule(file.proof, rule), [&] { return name + ": proof does not use " + rule; });
      }
    } catch (const std::exception& e) {
      v.expect(false, [&] { return name + ": " + e.what(); });
    }
  }
  {
    ScopeTable scope;
    v.expect(parse_sequent(strip_comments(slurp(theorems / "predicate_variable.bgoal")), scope) ==
                 Sequent({Term::PredVar(PredName("k"))}, Term::PredVar(PredName("k"))),
             [] { return "predicate_variable is not #k |- #k"; });
  }
  // A corrupted side condition is rejected with the failing node.
  std::string text = slurp(theorems / "alpha_forall.bprf");
  const std::string from = "(EqRefl (hyps)";
  const auto at = text.find(from);
  v.expect(at != std::string::npos, [] { return "alpha_forall.bprf has no EqRefl leaf"; });
  if (at != std::string::npos) {
    text.replace(at, from.size(), "(EqRefl (hyps (eq (var 1) (var 1)))");
    const fs::path bad = tmp / "corrupted.bprf";
    spit(bad, text);
    const RunResult r = run({bproof, "check", bad.string()});
    v.expect(r.status == 1 && r.output.find("root") != std::string::npos,
             [&] { return "corrupted proof: exit " + std::to_string(r.status) + ": " + r.output; });
  }
  return v;
}

Verdict prop_agreement(std::size_t& tautologies, std::size_t& total) {
  Verdict v;
  const auto skeletons = truth_table::enumerate(4);
  total = skeletons.size();
  tautologies = 0;
  for (const auto& s : skeletons) {
    const Sequent seq({}, s.term);
    const bool expected = truth_table::tautology(s);
    v.expect(prop_valid(seq) == expected, [&] { return "verdict on " + show(s.term); });
    if (!expected) continue;
    ++tautologies;
    try {
      const auto th = prop_prove(seq);
      v.expect(th && th->sequent() == seq && check(th->proof()).sequent() == seq,
               [&] { return "no checked proof of " + show(s.term); });
    } catch (const std::exception& e) {
      v.expect(false, [&] { return "proof of " + show(s.term) + " threw " + e.what(); });
    }
  }
  return v;
}

// Random goals with scripts written for them.
struct Generated {
  std::string goal;
  std::string script;
};

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  Generated next(std::size_t n) {
    switch (n % 5) {
      case 0: return conjunction();
      case 1: return implication_chain();
      case 2: return tautology();
      case 3: return quantifier();
      default: return pairs();
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::string atom() {
    static const std::vector<std::string> atoms{"#a", "#b", "#c", "x : s", "x = y", "(forall z . z : s)", "@j : BIG"};
    return atoms[pick(atoms.size())];
  }

  // A conjunction tree over atoms; proved by splitting it and citing hypotheses.
  Generated conjunction() {
    std::vector<std::string> leaves;
    std::string script;
    std::function<std::string(std::size_t)> build = [&](std::size_t depth) -> std::string {
      if (depth == 0 || pick(3) == 0) {
        leaves.push_back(atom());
        script += "hyp\n";
        return leaves.back();
      }
      script += "and_intro\n";
      const std::string l = build(depth - 1);
      const std::string r = build(depth - 1);
      return "(" + l + " & " + r + ")";
    };
    const std::string goal = build(1 + pick(3));
    std::string hyps;
    for (const auto& l : leaves) hyps += (hyps.empty() ? "" : ", ") + l;
    return {hyps + " |- " + goal, script};
  }

  Generated implication_chain() {
    const std::size_t n = 1 + pick(4);
    std::vector<std::string> as;
    for (std::size_t i = 0; i < n; ++i) as.push_back(atom());
    std::string goal = as[pick(n)];
    for (std::size_t i = n; i-- > 0;) goal = "(" + as[i] + " => " + goal + ")";
    std::string script;
    for (std::size_t i = 0; i < n; ++i) script += "intro\n";
    return {"|- " + goal, script + "hyp\n"};
  }

  Generated tautology() {
    for (;;) {
      const auto& pool = skeletons();
      const auto& s = pool[pick(pool.size())];
      if (!truth_table::tautology(s)) continue;
      return {"|- " + print_term(s.term, ScopeTable({"x"})), "prop\n"};
    }
  }

  Generated quantifier() {
    static const std::vector<std::string> names{"u", "w", "t1", "n"};
    const std::string name = names[pick(names.size())];
    if (pick(2) == 0) return {"|- forall x . x = x", "alpha_intro " + name + "\nrefl\n"};
    return {"|- forall x . x : s => x : s", "intro " + name + "\nintro\nhyp\n"};
  }

  Generated pairs() {
    static const std::vector<std::string> es{"a", "b", "BIG", "pow a", "@j"};
    const std::string e = es[pick(es.size())], f = es[pick(es.size())];
    const std::string g = es[pick(es.size())], h = es[pick(es.size())];
    const std::string eq = e + " |-> " + f + " = " + g + " |-> " + h;
    return {eq + " |- " + e + " = " + g + " & " + f + " = " + h,
            "and_intro\npair_left " + eq + " then hyp\npair_right " + eq + " then hyp\n"};
  }

  const std::vector<truth_table::Skeleton>& skeletons() {
    if (pool_.empty()) pool_ = truth_table::enumerate(3);
    return pool_;
  }

  std::mt19937 rng_;
  std::vector<truth_table::Skeleton> pool_;
};

Verdict pipeline_closure(const std::string& bproof, const fs::path& tmp) {
  Verdict v;
  Generator gen(20240611);
  for (std::size_t n = 0; n < 100; ++n) {
    const Generated g = gen.next(n);
    const fs::path goal = tmp / ("random" + std::to_string(n) + ".bgoal");
    const fs::path script = tmp / ("random" + std::to_string(n) + ".bscript");
    const fs::path proof = tmp / ("random" + std::to_string(n) + ".bprf");
    spit(goal, g.goal + "\n");
    spit(script, g.script);
    const RunResult proved = run({bproof, "prove", goal.string(), script.string(), "--emit", proof.string()});
    v.expect(proved.status == 0, [&] { return g.goal + ": prove exited " + std::to_string(proved.status) + ": " + proved.output; });
    if (proved.status != 0) continue;
    const RunResult checked = run({bproof, "check", proof.string()});
    v.expect(checked.status == 0, [&] { return g.goal + ": check exited " + std::to_string(checked.status); });
    try {
      const std::string bytes = slurp(proof);
      const ProofFile file = decode_proof_file(bytes);
      v.expect(encode_proof_file(file) == bytes, [&] { return g.goal + ": re-encoding differs"; });
      ScopeTable scope;
      const Sequent expected = parse_sequent(g.goal, scope);
      v.expect(file.sequent == expected && file.scope == scope, [&] { return g.goal + ": file states another goal"; });
      const ProofFile again = decode_proof_file(encode_proof_file(file));
      v.expect(again.proof == file.proof && check(again.proof).sequent() == expected,
               [&] { return g.goal + ": round-tripped proof does not check"; });
    } catch (const std::exception& e) {
      v.expect(false, [&] { return g.goal + ": " + e.what(); });
    }
  }
  return v;
}

Verdict mutation_sentinel(const std::string& bproof, const std::string& mutant) {
  Verdict v;
  const RunResult broken = run({mutant, "selftest"});
  v.expect(broken.status == 1, [&] { return "mutant self-test exited " + std::to_string(broken.status); });
  v.expect(broken.output.find("counterexample:") != std::string::npos, [] { return "no counterexample printed"; });
  const RunResult sound = run({bproof, "selftest"});
  v.expect(sound.status == 0, [&] { return "self-test of the real build exited " + std::to_string(sound.status); });
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string bproof, mutant, theorems;
  app.add_option("--bproof", bproof)->required();
  app.add_option("--mutant", mutant)->required();
  app.add_option("--theorems", theorems)->required();
  CLI11_PARSE(app, argc, argv);

  const fs::path tmp = fs::temp_directory_path() / ("bproof_acceptance_" + std::to_string(getpid()));
  fs::create_directories(tmp);

  bool all = true;
  auto report = [&](const char* id, const std::string& what, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("threw ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && v.passed();
    std::printf("%s %s %s (%zu checks, %.1f s)\n", id, v.passed() ? "PASS" : "FAIL", what.c_str(), v.checks, secs);
    for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  };

  const Terms terms = enumerate_terms(3);
  const auto lib = oracle::enumerate(3);
  std::printf("enumerated %zu predicates and %zu expressions of depth <= 3\n", terms.preds.size(), terms.exprs.size());

  report("AC1", "binder laws on every term of depth <= 3", [&] {
    Verdict v = binder_laws(terms);
    v.expect(lib.predicates_upto(3).size() == terms.preds.size() && lib.expressions_upto(3).size() == terms.exprs.size(),
             [] { return "library enumeration has another size"; });
    return v;
  });
  report("AC2", "structural deciders agree with the rule-based checkers", [&] { return deciders(terms); });
  report("AC3", "every primitive rule accepts and rejects", rule_coverage);
  report("AC4", "shipped theorems prove, emit and check", [&] { return theorem_replay(bproof, theorems, tmp); });
  std::size_t tautologies = 0, skeletons = 0;
  report("AC5", "propositional procedure agrees with truth tables at depth <= 4", [&] {
    Verdict v = prop_agreement(tautologies, skeletons);
    return v;
  });
  std::printf("    %zu skeletons, %zu tautologies proved and checked\n", skeletons, tautologies);
  report("AC6", "100 random scripted proofs survive emit, decode and check", [&] { return pipeline_closure(bproof, tmp); });
  report("AC7", "a broken lift makes the self-test fail with a counterexample",
         [&] { return mutation_sentinel(bproof, mutant); });

  fs::remove_all(tmp);
  return all ? 0 : 1;
}
