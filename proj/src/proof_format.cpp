#include "bproof/proof_format.hpp"

#include <cctype>
#include <charconv>
#include <memory>
#include <utility>

namespace bproof {

DecodeError::DecodeError(std::size_t offset, const std::string& reason)
    : Error("decode error at offset " + std::to_string(offset) + ": " + reason), offset_(offset), reason_(reason) {}

namespace {

void encode_term_to(const Term& t, std::string& out) {
  auto unary = [&](const char* tag) {
    out += '(';
    out += tag;
    out += ' ';
    encode_term_to(t.left(), out);
    out += ')';
  };
  auto binary = [&](const char* tag) {
    out += '(';
    out += tag;
    out += ' ';
    encode_term_to(t.left(), out);
    out += ' ';
    encode_term_to(t.right(), out);
    out += ')';
  };
  switch (t.kind()) {
    case Kind::And: return binary("and");
    case Kind::Implies: return binary("imp");
    case Kind::Not: return unary("not");
    case Kind::Forall: return unary("all");
    case Kind::Eq: return binary("eq");
    case Kind::In: return binary("in");
    case Kind::PredVar:
      out += "(pv " + t.name() + ")";
      return;
    case Kind::Var:
      out += "(var " + std::to_string(t.index().value()) + ")";
      return;
    case Kind::MapsTo: return binary("map");
    case Kind::Choice: return unary("choice");
    case Kind::Big:
      out += "BIG";
      return;
    case Kind::Pow: return unary("pow");
    case Kind::Prod: return binary("prod");
    case Kind::Cmp: return binary("cmp");
    case Kind::Elem:
      out += "(elem " + t.name() + ")";
      return;
  }
}

void encode_hyps(const HypList& hyps, std::string& out) {
  out += "(hyps";
  for (const Term& h : hyps) {
    out += ' ';
    encode_term_to(h, out);
  }
  out += ')';
}

void encode_arg(const Arg& a, std::string& out) {
  switch (arg_kind(a)) {
    case ArgKind::Hyps:
      encode_hyps(std::get<HypList>(a), out);
      return;
    case ArgKind::Term:
      out += "(term ";
      encode_term_to(std::get<Term>(a), out);
      out += ')';
      return;
    case ArgKind::Index:
      out += "(index " + std::to_string(std::get<Index>(a).value()) + ")";
      return;
    case ArgKind::Big:
      out += "(big " + std::get<BigName>(a).text + ")";
      return;
    case ArgKind::Pred:
      out += "(pvar " + std::get<PredName>(a).text + ")";
      return;
  }
}

void encode_node(const ProofTree& tree, std::size_t indent, std::string& out) {
  out += '(';
  out += rule_name(tree.rule());
  for (const Arg& a : tree.args()) {
    out += ' ';
    encode_arg(a, out);
  }
  for (const ProofTree& p : tree.premises()) {
    out += '\n';
    out.append(indent + 2, ' ');
    encode_node(p, indent + 2, out);
  }
  out += ')';
}

// Generic parenthesised tree, remembering where every piece started.
struct SExpr {
  std::size_t offset = 0;
  std::string atom;
  std::vector<SExpr> items;
  bool is_list = false;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read_all() {
    SExpr e = read();
    skip_space();
    if (pos_ != text_.size()) throw DecodeError(pos_, "trailing input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw DecodeError(pos_, "unexpected end of input");
    SExpr e;
    e.offset = pos_;
    if (text_[pos_] == '(') {
      e.is_list = true;
      ++pos_;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw DecodeError(pos_, "unexpected end of input, missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (text_[pos_] == ')') throw DecodeError(pos_, "unexpected ')'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const std::string& head(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) throw DecodeError(e.offset, "expected a tagged list");
  return e.items[0].atom;
}

void arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1) {
    throw DecodeError(e.offset, "'" + head(e) + "' expects " + std::to_string(n) + " item(s), got " +
                                    std::to_string(e.items.size() - 1));
  }
}

std::uint32_t number(const SExpr& e) {
  if (e.is_list) throw DecodeError(e.offset, "expected a number");
  std::uint32_t v = 0;
  const char* first = e.atom.data();
  const char* last = first + e.atom.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v == 0 || e.atom[0] == '0') {
    throw DecodeError(e.offset, "expected a positive integer, got '" + e.atom + "'");
  }
  return v;
}

std::string name(const SExpr& e) {
  if (e.is_list || !is_identifier(e.atom)) throw DecodeError(e.offset, "expected a name");
  return e.atom;
}

Term term(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "BIG") return Term::Big();
    throw DecodeError(e.offset, "unknown term '" + e.atom + "'");
  }
  const std::string& tag = head(e);
  try {
    auto sub = [&](std::size_t n) { return term(e.items[n]); };
    if (tag == "var") return arity(e, 1), Term::Var(number(e.items[1]));
    if (tag == "pv") return arity(e, 1), Term::PredVar(PredName(name(e.items[1])));
    if (tag == "elem") return arity(e, 1), Term::Elem(BigName(name(e.items[1])));
    if (tag == "not") return arity(e, 1), Term::Not(sub(1));
    if (tag == "all") return arity(e, 1), Term::Forall(sub(1));
    if (tag == "choice") return arity(e, 1), Term::Choice(sub(1));
    if (tag == "pow") return arity(e, 1), Term::Pow(sub(1));
    if (tag == "and") return arity(e, 2), Term::And(sub(1), sub(2));
    if (tag == "imp") return arity(e, 2), Term::Implies(sub(1), sub(2));
    if (tag == "eq") return arity(e, 2), Term::Eq(sub(1), sub(2));
    if (tag == "in") return arity(e, 2), Term::In(sub(1), sub(2));
    if (tag == "map") return arity(e, 2), Term::MapsTo(sub(1), sub(2));
    if (tag == "prod") return arity(e, 2), Term::Prod(sub(1), sub(2));
    if (tag == "cmp") return arity(e, 2), Term::Cmp(sub(1), sub(2));
  } catch (const SortError& err) {
    throw DecodeError(e.offset, std::string("ill-sorted term: ") + err.what());
  }
  throw DecodeError(e.offset, "unknown term tag '" + tag + "'");
}

HypList hyps(const SExpr& e) {
  if (head(e) != "hyps") throw DecodeError(e.offset, "expected (hyps ...)");
  HypList out;
  for (std::size_t n = 1; n < e.items.size(); ++n) {
    Term t = term(e.items[n]);
    if (!t.is_predicate()) throw DecodeError(e.items[n].offset, "hypothesis is not a predicate");
    out.push_back(std::move(t));
  }
  return out;
}

Arg arg(const SExpr& e, ArgKind kind) {
  const std::string& tag = head(e);
  switch (kind) {
    case ArgKind::Hyps:
      return hyps(e);
    case ArgKind::Term:
      if (tag != "term") break;
      arity(e, 1);
      return term(e.items[1]);
    case ArgKind::Index:
      if (tag != "index") break;
      arity(e, 1);
      return Index(number(e.items[1]));
    case ArgKind::Big:
      if (tag != "big") break;
      arity(e, 1);
      return BigName(name(e.items[1]));
    case ArgKind::Pred:
      if (tag != "pvar") break;
      arity(e, 1);
      return PredName(name(e.items[1]));
  }
  throw DecodeError(e.offset, "unexpected argument '" + tag + "'");
}

ProofTree node(const SExpr& e) {
  const std::string& tag = head(e);
  auto rule = rule_from_name(tag);
  if (!rule) throw DecodeError(e.offset, "unknown rule '" + tag + "'");
  const RuleInfo& info = rule_info(*rule);
  if (e.items.size() != 1 + info.args.size() + info.premises) {
    throw DecodeError(e.offset, "'" + tag + "' expects " + std::to_string(info.args.size()) + " argument(s) and " +
                                    std::to_string(info.premises) + " premise(s)");
  }
  std::vector<Arg> args;
  for (std::size_t n = 0; n < info.args.size(); ++n) args.push_back(arg(e.items[1 + n], info.args[n]));
  std::vector<ProofTree> premises;
  for (std::size_t n = 0; n < info.premises; ++n) premises.push_back(node(e.items[1 + info.args.size() + n]));
  return ProofTree(*rule, std::move(args), std::move(premises));
}

}  // namespace

std::string encode_term(const Term& t) {
  std::string out;
  encode_term_to(t, out);
  return out;
}

Term decode_term(std::string_view text) { return term(Reader(text).read_all()); }

std::string encode_proof(const ProofTree& tree) {
  std::string out;
  encode_node(tree, 0, out);
  return out;
}

ProofTree decode_proof(std::string_view text) { return node(Reader(text).read_all()); }

std::string encode_proof_file(const ProofFile& file) {
  std::string out = "(bprf 1\n  (scope";
  for (const std::string& n : file.scope.names()) out += ' ' + n;
  out += ")\n  (sequent ";
  encode_hyps(file.sequent.hyps, out);
  out += ' ';
  encode_term_to(file.sequent.goal, out);
  out += ")\n  (proof\n    ";
  encode_node(file.proof, 4, out);
  out += "))\n";
  return out;
}

ProofFile decode_proof_file(std::string_view text) {
  const SExpr root = Reader(text).read_all();
  if (head(root) != "bprf") throw DecodeError(root.offset, "not a proof file");
  arity(root, 4);
  if (number(root.items[1]) != 1) throw DecodeError(root.items[1].offset, "unsupported format version");

  const SExpr& s = root.items[2];
  if (head(s) != "scope") throw DecodeError(s.offset, "expected (scope ...)");
  ScopeTable scope;
  for (std::size_t n = 1; n < s.items.size(); ++n) {
    try {
      scope.add(name(s.items[n]));
    } catch (const DecodeError&) {
      throw;
    } catch (const Error& e) {
      throw DecodeError(s.items[n].offset, e.what());
    }
  }

  const SExpr& q = root.items[3];
  if (head(q) != "sequent") throw DecodeError(q.offset, "expected (sequent ...)");
  arity(q, 2);
  HypList h = hyps(q.items[1]);
  Term goal = term(q.items[2]);
  if (!goal.is_predicate()) throw DecodeError(q.items[2].offset, "goal is not a predicate");

  const SExpr& p = root.items[4];
  if (head(p) != "proof") throw DecodeError(p.offset, "expected (proof ...)");
  arity(p, 1);
  return ProofFile{std::move(scope), Sequent(std::move(h), std::move(goal)), node(p.items[1])};
}

}  // namespace bproof
