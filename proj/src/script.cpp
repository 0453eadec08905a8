#include "bproof/script.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bproof {

ScriptFailed::ScriptFailed(std::size_t line, const std::string& reason, std::vector<std::string> remaining)
    : Error("script failed at line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(reason),
      remaining_(std::move(remaining)) {}

namespace {

enum class Args {
  None,
  Hint,        // optional name
  Pred,        // one predicate
  Expr,        // one expression
  Number,      // clear N
  Inst,        // P with E
  At,          // [at N]
  Destruct,    // N [name]
  Congr,       // [graft [names]] P <=> Q
  Rewrite,     // [graft [names]] P <=> Q [at N]
};

const std::map<std::string, Args, std::less<>>& signatures() {
  static const std::map<std::string, Args, std::less<>> table = {
      {"id", Args::None},          {"hyp", Args::None},         {"and_intro", Args::None},
      {"identity", Args::None},    {"imp_intro", Args::None},   {"refl", Args::None},
      {"imp_elim", Args::None},    {"ext", Args::None},         {"big", Args::None},
      {"sym", Args::None},         {"left", Args::None},        {"right", Args::None},
      {"prop", Args::None},        {"intro", Args::Hint},       {"forall_intro", Args::Hint},
      {"alpha_intro", Args::Hint}, {"contra", Args::Pred},      {"neg_intro", Args::Pred},
      {"and_left", Args::Pred},    {"and_right", Args::Pred},   {"cut", Args::Pred},
      {"mp", Args::Pred},          {"pair_left", Args::Pred},   {"pair_right", Args::Pred},
      {"leibniz", Args::Pred},     {"clear", Args::Number},     {"inst", Args::Inst},
      {"unfold", Args::At},        {"exists_intro", Args::Expr}, {"destruct", Args::Destruct},
      {"congr", Args::Congr},      {"rewrite", Args::Rewrite},
  };
  return table;
}

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : text_(text), in_(text) {}

  TacticExpr run() {
    TacticExpr e = expr();
    if (!in_.at_end()) in_.fail("unexpected input after the tactic");
    return e;
  }

 private:
  TacticExpr expr() {
    TacticExpr e = alt();
    while (in_.at("then")) {
      const std::size_t pos = in_.next().pos;
      TacticExpr node;
      node.op = TacticExpr::Op::Then;
      node.pos = pos;
      node.children = {std::move(e), alt()};
      e = std::move(node);
    }
    return e;
  }

  TacticExpr alt() {
    TacticExpr e = unary();
    while (in_.at("orelse")) {
      const std::size_t pos = in_.next().pos;
      TacticExpr node;
      node.op = TacticExpr::Op::OrElse;
      node.pos = pos;
      node.children = {std::move(e), unary()};
      e = std::move(node);
    }
    return e;
  }

  TacticExpr unary() {
    const Token& t = in_.peek();
    TacticExpr e;
    e.pos = t.pos;
    if (in_.accept("repeat")) {
      e.op = TacticExpr::Op::Repeat;
      e.children.push_back(unary());
      return e;
    }
    if (in_.accept("try")) {
      e.op = TacticExpr::Op::Try;
      e.children.push_back(unary());
      return e;
    }
    if (in_.accept("focus")) {
      e.op = TacticExpr::Op::Focus;
      e.number = number();
      e.children.push_back(unary());
      return e;
    }
    if (in_.accept("(")) {
      TacticExpr inner = expr();
      in_.expect(")");
      return inner;
    }
    return atom();
  }

  std::size_t number() {
    const Token& t = in_.peek();
    if (t.kind != TokenKind::Number) in_.fail("expected a number");
    const std::size_t n = std::stoul(in_.next().text);
    if (n == 0) throw ParseError(t.pos, "numbers count from 1");
    return n;
  }

  void optional_name(TacticExpr& e) {
    if (in_.peek().kind == TokenKind::Ident) e.words.push_back(in_.next().text);
  }

  void graft_prefix(TacticExpr& e) {
    if (!in_.accept("graft")) return;
    e.graft = true;
    if (!in_.accept("[")) return;
    if (!in_.at("]")) {
      do {
        if (in_.peek().kind != TokenKind::Ident) in_.fail("expected a bound variable name");
        e.words.push_back(in_.next().text);
      } while (in_.accept(","));
    }
    in_.expect("]");
  }

  void at_suffix(TacticExpr& e) {
    if (in_.accept("at")) e.number = number();
  }

  TacticExpr atom() {
    const Token t = in_.peek();
    if (t.kind != TokenKind::Ident) in_.fail("expected a tactic");
    auto it = signatures().find(t.text);
    if (it == signatures().end()) throw ParseError(t.pos, "unknown tactic '" + t.text + "'");
    in_.next();
    TacticExpr e;
    e.name = t.text;
    e.pos = t.pos;
    switch (it->second) {
      case Args::None: break;
      case Args::Hint: optional_name(e); break;
      case Args::Pred: e.terms.push_back(parse_named_predicate(in_)); break;
      case Args::Expr: e.terms.push_back(parse_named_expression(in_)); break;
      case Args::Number: e.number = number(); break;
      case Args::Inst:
        e.terms.push_back(parse_named_predicate(in_));
        in_.expect("with");
        e.terms.push_back(parse_named_expression(in_));
        break;
      case Args::At: at_suffix(e); break;
      case Args::Destruct:
        e.number = number();
        optional_name(e);
        break;
      case Args::Congr:
        graft_prefix(e);
        e.terms.push_back(parse_named_predicate(in_));
        break;
      case Args::Rewrite:
        graft_prefix(e);
        e.terms.push_back(parse_named_predicate(in_));
        at_suffix(e);
        break;
    }
    const std::size_t end = in_.peek().kind == TokenKind::End ? text_.size() : in_.peek().pos;
    std::string_view src = text_.substr(t.pos, end - t.pos);
    while (!src.empty() && (src.back() == ' ' || src.back() == '\t' || src.back() == '\n')) src.remove_suffix(1);
    e.text = std::string(src);
    return e;
  }

  std::string_view text_;
  TokenStream in_;
};

// Free names used by a tactic must not clash with dangling indexes the
// scope does not name yet.
void cover(ScopeTable& scope, const Sequent& s) {
  std::uint32_t top = s.goal.max_dangling();
  for (const Term& h : s.hyps) top = std::max(top, h.max_dangling());
  while (scope.size() < top) scope.fresh();
}

Term resolve_arg(const TacticExpr& e, std::size_t n, TacticContext& ctx, const Sequent& s) {
  cover(ctx.scope, s);
  return e.graft ? resolve_under(e.terms[n], ctx.scope, e.words) : resolve(e.terms[n], ctx.scope);
}

std::pair<Term, Term> equivalence_arg(const TacticExpr& e, TacticContext& ctx, const Sequent& s) {
  const Term p = resolve_arg(e, 0, ctx, s);
  auto sides = match_iff(p);
  if (!sides) throw TacticError(e.name + ": expected an equivalence `P <=> Q`");
  return *sides;
}

// Tactic whose construction needs the goal and the scope at run time.
Tactic deferred(const TacticExpr& e, std::function<Tactic(TacticContext&, const Sequent&)> make) {
  return Tactic(e.name, [make = std::move(make)](const Sequent& s, TacticContext& ctx) { return make(ctx, s)(s, ctx); });
}

std::string hint(const TacticExpr& e) { return e.words.empty() ? std::string() : e.words[0]; }

Tactic compile_atom(const TacticExpr& e) {
  using namespace tactics;
  const std::string& n = e.name;
  if (n == "id") return id();
  if (n == "hyp") return hyp();
  if (n == "and_intro") return and_intro();
  if (n == "identity") return identity();
  if (n == "imp_intro") return imp_intro();
  if (n == "refl") return refl();
  if (n == "imp_elim") return imp_elim();
  if (n == "ext") return ext();
  if (n == "big") return big();
  if (n == "sym") return sym();
  if (n == "left") return left();
  if (n == "right") return right();
  if (n == "prop") return prop();
  if (n == "intro") return intro(hint(e));
  if (n == "forall_intro") return forall_intro(hint(e));
  if (n == "alpha_intro") return alpha_intro(hint(e));
  if (n == "clear") return clear(*e.number);
  if (n == "unfold") return unfold(e.number);
  if (n == "destruct") return destruct(*e.number, hint(e));

  using Make = Tactic (*)(Term);
  static const std::map<std::string, Make, std::less<>> one_pred = {
      {"contra", contra}, {"neg_intro", neg_intro}, {"and_left", and_left}, {"and_right", and_right},
      {"cut", cut},       {"mp", mp},               {"pair_left", pair_left}, {"pair_right", pair_right},
      {"exists_intro", exists_intro},
  };
  if (auto it = one_pred.find(n); it != one_pred.end()) {
    const Make make = it->second;
    return deferred(e, [e, make](TacticContext& ctx, const Sequent& s) { return make(resolve_arg(e, 0, ctx, s)); });
  }
  if (n == "leibniz") {
    return deferred(e, [e](TacticContext& ctx, const Sequent& s) {
      const Term eq = resolve_arg(e, 0, ctx, s);
      if (eq.kind() != Kind::Eq) throw TacticError("leibniz: expected an equality `E = F`");
      return leibniz(eq.left(), eq.right());
    });
  }
  if (n == "inst") {
    return deferred(e, [e](TacticContext& ctx, const Sequent& s) {
      Term q = resolve_arg(e, 0, ctx, s);
      Term w = resolve_arg(e, 1, ctx, s);
      return inst(std::move(q), std::move(w));
    });
  }
  const RewriteMode mode = e.graft ? RewriteMode::Graft : RewriteMode::Subst;
  if (n == "congr") {
    return deferred(e, [e, mode](TacticContext& ctx, const Sequent& s) {
      auto [p1, p2] = equivalence_arg(e, ctx, s);
      return congr(p1, p2, mode);
    });
  }
  if (n == "rewrite") {
    return deferred(e, [e, mode](TacticContext& ctx, const Sequent& s) {
      auto [p1, p2] = equivalence_arg(e, ctx, s);
      return rewrite(p1, p2, mode, e.number);
    });
  }
  throw Error("unknown tactic '" + n + "'");
}

void print_to(const TacticExpr& e, std::string& out, bool nested) {
  switch (e.op) {
    case TacticExpr::Op::Atom:
      out += e.text;
      return;
    case TacticExpr::Op::Then:
    case TacticExpr::Op::OrElse:
      if (nested) out += '(';
      print_to(e.children[0], out, e.children[0].op != e.op);
      out += e.op == TacticExpr::Op::Then ? " then " : " orelse ";
      print_to(e.children[1], out, true);
      if (nested) out += ')';
      return;
    case TacticExpr::Op::Repeat:
      out += "repeat ";
      break;
    case TacticExpr::Op::Try:
      out += "try ";
      break;
    case TacticExpr::Op::Focus:
      out += "focus " + std::to_string(*e.number) + ' ';
      break;
  }
  print_to(e.children[0], out, true);
}

}  // namespace

TacticExpr parse_tactic_expr(std::string_view text) { return ScriptParser(text).run(); }

std::string print_tactic_expr(const TacticExpr& e) {
  std::string out;
  print_to(e, out, false);
  return out;
}

Tactic compile(const TacticExpr& e) {
  switch (e.op) {
    case TacticExpr::Op::Atom:
      return compile_atom(e);
    case TacticExpr::Op::Then: {
      const TacticExpr& rhs = e.children[1];
      if (rhs.op == TacticExpr::Op::Focus) {
        return tactics::then_nth(compile(e.children[0]), *rhs.number, compile(rhs.children[0]));
      }
      return tactics::then(compile(e.children[0]), compile(rhs));
    }
    case TacticExpr::Op::OrElse:
      return tactics::orelse(compile(e.children[0]), compile(e.children[1]));
    case TacticExpr::Op::Repeat:
      return tactics::repeat(compile(e.children[0]));
    case TacticExpr::Op::Try:
      return tactics::try_(compile(e.children[0]));
    case TacticExpr::Op::Focus:
      if (*e.number == 1) return compile(e.children[0]);
      throw Error("focus " + std::to_string(*e.number) +
                  " is only meaningful at the start of a line or right after `then`");
  }
  throw Error("unreachable");
}

const std::vector<std::string>& tactic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, args] : signatures()) out.push_back(name);
    return out;
  }();
  return names;
}

ProofState::ProofState(Sequent root, ScopeTable scope)
    : root_(root),
      root_scope_(scope),
      scope_(std::move(scope)),
      goals_{std::move(root)},
      justify_(std::make_shared<const Justification>([](std::span<const Theorem> ths) { return ths[0]; })) {}

ProofState ProofState::apply(const TacticExpr& e, std::size_t n) const {
  if (e.op == TacticExpr::Op::Focus) return apply(compile(e.children[0]), *e.number);
  return apply(compile(e), n);
}

ProofState ProofState::apply(const Tactic& t, std::size_t n) const {
  if (goals_.empty()) throw TacticError("no goals left");
  if (n == 0 || n > goals_.size()) {
    throw TacticError("no goal " + std::to_string(n) + " (there are " + std::to_string(goals_.size()) + ")");
  }
  TacticContext ctx{scope_};
  Step step = t(goals_[n - 1], ctx);

  ProofState next = *this;
  next.scope_ = std::move(ctx.scope);
  next.goals_.erase(next.goals_.begin() + static_cast<std::ptrdiff_t>(n - 1));
  next.goals_.insert(next.goals_.begin() + static_cast<std::ptrdiff_t>(n - 1), step.subgoals.begin(),
                     step.subgoals.end());
  const std::size_t m = step.subgoals.size();
  next.justify_ = std::make_shared<const Justification>(
      [outer = justify_, inner = std::move(step.justify), n, m](std::span<const Theorem> ths) {
        std::vector<Theorem> mid(ths.begin(), ths.begin() + static_cast<std::ptrdiff_t>(n - 1));
        mid.push_back(inner(ths.subspan(n - 1, m)));
        mid.insert(mid.end(), ths.begin() + static_cast<std::ptrdiff_t>(n - 1 + m), ths.end());
        return (*outer)(mid);
      });
  return next;
}

Theorem ProofState::qed() const {
  if (!goals_.empty()) throw TacticError(std::to_string(goals_.size()) + " goal(s) remain");
  const Theorem built = (*justify_)({});
  Theorem replayed = check(built.proof());
  if (!(replayed.sequent() == root_)) throw Error("the proof establishes a different sequent");
  return replayed;
}

std::vector<std::string> ProofState::print_goals() const {
  std::vector<std::string> out;
  for (const Sequent& g : goals_) out.push_back(print_sequent(g, scope_));
  return out;
}

std::vector<std::pair<std::size_t, TacticExpr>> parse_script(std::string_view text) {
  std::vector<std::pair<std::size_t, TacticExpr>> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = strip_comments(text.substr(start, end - start));
    if (!line.empty()) {
      try {
        out.emplace_back(line_no, parse_tactic_expr(line));
      } catch (const ParseError& e) {
        throw ParseError(e.position(), "line " + std::to_string(line_no) + ": " + e.message());
      }
    }
    start = end + 1;
  }
  return out;
}

ProofState run_script(const ProofState& start, std::string_view script) {
  ProofState state = start;
  for (const auto& [line, e] : parse_script(script)) {
    try {
      state = state.apply(e);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ScriptFailed(line, err.what(), state.print_goals());
    }
  }
  return state;
}

Theorem prove(const Sequent& goal, const ScopeTable& scope, std::string_view script) {
  ProofState end = run_script(ProofState(goal, scope), script);
  if (!end.done()) {
    throw ScriptFailed(0, std::to_string(end.goals().size()) + " goal(s) remain at the end of the script",
                       end.print_goals());
  }
  return end.qed();
}

}  // namespace bproof
