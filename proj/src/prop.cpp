#include "bproof/prop.hpp"

#include <unordered_map>

namespace bproof {

namespace {

enum class Value : std::uint8_t { False, True, Unknown };

bool is_connective(const Term& t) {
  return t.kind() == Kind::And || t.kind() == Kind::Implies || t.kind() == Kind::Not;
}

class Atoms {
 public:
  void collect(const Term& t) {
    if (is_connective(t)) {
      collect(t.left());
      if (t.arity() == 2) collect(t.right());
      return;
    }
    if (ids_.emplace(t, static_cast<int>(list_.size())).second) list_.push_back(t);
  }
  int id(const Term& t) const { return ids_.at(t); }
  const std::vector<Term>& list() const { return list_; }

 private:
  std::unordered_map<Term, int> ids_;
  std::vector<Term> list_;
};

// Three-valued (Kleene) evaluation under a partial assignment of the atoms.
class Evaluator {
 public:
  explicit Evaluator(const Atoms& atoms) : atoms_(atoms) {}

  Value eval(const Term& t, const std::vector<Value>& rho) const {
    switch (t.kind()) {
      case Kind::Not: {
        const Value v = eval(t.left(), rho);
        return v == Value::Unknown ? v : (v == Value::True ? Value::False : Value::True);
      }
      case Kind::And: {
        const Value a = eval(t.left(), rho);
        if (a == Value::False) return a;
        const Value b = eval(t.right(), rho);
        if (b == Value::False) return b;
        return a == Value::True && b == Value::True ? Value::True : Value::Unknown;
      }
      case Kind::Implies: {
        const Value a = eval(t.left(), rho);
        if (a == Value::False) return Value::True;
        const Value b = eval(t.right(), rho);
        if (b == Value::True) return b;
        return a == Value::True && b == Value::False ? Value::False : Value::Unknown;
      }
      default:
        return rho[atoms_.id(t)];
    }
  }

  // First unassigned atom of `t`, or -1.
  int unassigned(const Term& t, const std::vector<Value>& rho) const {
    if (is_connective(t)) {
      const int a = unassigned(t.left(), rho);
      if (a >= 0 || t.arity() == 1) return a;
      return unassigned(t.right(), rho);
    }
    const int id = atoms_.id(t);
    return rho[id] == Value::Unknown ? id : -1;
  }

 private:
  const Atoms& atoms_;
};

class Decider {
 public:
  explicit Decider(const Sequent& s) : s_(s), eval_(atoms_) {
    for (const Term& h : s.hyps) atoms_.collect(h);
    atoms_.collect(s.goal);
  }

  const Atoms& atoms() const { return atoms_; }

  // Literal hypotheses fix their atoms from the start.
  std::vector<Value> initial() const {
    std::vector<Value> rho(atoms_.list().size(), Value::Unknown);
    for (const Term& h : s_.hyps) {
      if (!is_connective(h)) {
        rho[atoms_.id(h)] = Value::True;
      } else if (h.kind() == Kind::Not && !is_connective(h.left()) && rho[atoms_.id(h.left())] == Value::Unknown) {
        rho[atoms_.id(h.left())] = Value::False;
      }
    }
    return rho;
  }

  bool valid(std::vector<Value>& rho) const {
    int next = -1;
    switch (status(rho, next)) {
      case Status::Closed: return true;
      case Status::Refuted: return false;
      case Status::Open: break;
    }
    rho[next] = Value::True;
    const bool pos = valid(rho);
    rho[next] = Value::False;
    const bool neg = pos && valid(rho);
    rho[next] = Value::Unknown;
    return pos && neg;
  }

  Theorem prove(const HypList& delta, std::vector<Value>& rho) const {
    for (const Term& h : s_.hyps) {
      if (eval_.eval(h, rho) == Value::False) {
        return rules::absurd(s_.goal, rules::hyp(delta, h), value(delta, h, false, rho));
      }
    }
    if (eval_.eval(s_.goal, rho) == Value::True) return value(delta, s_.goal, true, rho);
    const int a = pick(rho);
    if (a < 0) throw Error("propositional proof search reached a countermodel");
    const Term& atom = atoms_.list()[a];
    rho[a] = Value::True;
    Theorem pos = prove(extend(delta, atom), rho);
    rho[a] = Value::False;
    Theorem neg = prove(extend(delta, Term::Not(atom)), rho);
    rho[a] = Value::Unknown;
    return rules::case_split(atom, pos, neg);
  }

 private:
  enum class Status { Closed, Refuted, Open };

  Status status(const std::vector<Value>& rho, int& next) const {
    bool all_known = true;
    for (const Term& h : s_.hyps) {
      const Value v = eval_.eval(h, rho);
      if (v == Value::False) return Status::Closed;
      if (v == Value::Unknown) all_known = false;
    }
    const Value g = eval_.eval(s_.goal, rho);
    if (g == Value::True) return Status::Closed;
    if (g == Value::False && all_known) return Status::Refuted;
    next = pick(rho);
    return next < 0 ? Status::Refuted : Status::Open;
  }

  int pick(const std::vector<Value>& rho) const {
    if (eval_.eval(s_.goal, rho) == Value::Unknown) return eval_.unassigned(s_.goal, rho);
    for (const Term& h : s_.hyps) {
      if (eval_.eval(h, rho) == Value::Unknown) return eval_.unassigned(h, rho);
    }
    return -1;
  }

  // Proves `f` (or `not f` when v is false) from the literals in `delta`;
  // the value of f under rho must be v.
  Theorem value(const HypList& delta, const Term& f, bool v, const std::vector<Value>& rho) const {
    using namespace rules;
    switch (f.kind()) {
      case Kind::Not:
        if (v) return value(delta, f.left(), false, rho);
        return double_neg_intro(value(delta, f.left(), true, rho));
      case Kind::And: {
        if (v) return and_intro(value(delta, f.left(), true, rho), value(delta, f.right(), true, rho));
        const bool left_false = eval_.eval(f.left(), rho) == Value::False;
        const HypList inner = extend(delta, f);
        Theorem part = left_false ? and_elim_l(hyp(inner, f)) : and_elim_r(hyp(inner, f));
        Theorem refuted = value(delta, left_false ? f.left() : f.right(), false, rho);
        return not_pos(part, weaken(refuted, inner));
      }
      case Kind::Implies: {
        if (v) {
          const HypList inner = extend(delta, f.left());
          if (eval_.eval(f.right(), rho) == Value::True) {
            return imp_intro(weaken(value(delta, f.right(), true, rho), inner));
          }
          Theorem refuted = value(delta, f.left(), false, rho);
          return imp_intro(absurd(f.right(), hyp(inner, f.left()), weaken(refuted, inner)));
        }
        const HypList inner = extend(delta, f);
        Theorem consequent = modus_ponens(hyp(inner, f), weaken(value(delta, f.left(), true, rho), inner));
        return not_pos(consequent, weaken(value(delta, f.right(), false, rho), inner));
      }
      default:
        return v ? hyp(delta, f) : hyp(delta, Term::Not(f));
    }
  }

  const Sequent& s_;
  Atoms atoms_;
  Evaluator eval_;
};

}  // namespace

std::vector<Term> prop_atoms(const Sequent& s) { return Decider(s).atoms().list(); }

bool prop_valid(const Sequent& s) {
  Decider d(s);
  std::vector<Value> rho = d.initial();
  return d.valid(rho);
}

std::optional<Theorem> prop_prove(const Sequent& s) {
  Decider d(s);
  std::vector<Value> rho = d.initial();
  if (!d.valid(rho)) return std::nullopt;
  return d.prove(s.hyps, rho);
}

}  // namespace bproof
