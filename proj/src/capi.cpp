#include "bproof/bproof.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "bproof/selftest.hpp"
#include "bproof/session.hpp"

using namespace bproof;

struct bproof_context {
  std::string output;
  std::string error;
  bool color = false;
};

struct bproof_session {
  Session session;
  std::string output;
  bool color = false;
};

struct bproof_term {
  Term term;
  ScopeTable scope;
};

namespace {

struct IoFailure {
  std::string what;
};

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{std::string("cannot read ") + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string paint(bool color, const char* code, const std::string& text) {
  return color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, mapping exceptions to statuses and messages.
template <typename F>
bproof_status guarded(bproof_context* ctx, F&& body) {
  if (!ctx) return BPROOF_BAD_ARGUMENT;
  ctx->output.clear();
  ctx->error.clear();
  auto fail = [&](bproof_status s, const std::string& msg) {
    ctx->error = paint(ctx->color, "31", "error: ") + msg + "\n";
    return s;
  };
  try {
    return body();
  } catch (const IoFailure& e) {
    return fail(BPROOF_IO_ERROR, e.what);
  } catch (const DecodeError& e) {
    return fail(BPROOF_DECODE_ERROR, e.what());
  } catch (const ParseError& e) {
    return fail(BPROOF_PARSE_ERROR, e.what());
  } catch (const SortError& e) {
    return fail(BPROOF_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(BPROOF_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* bproof_version(void) { return "1.0.0"; }

const char* bproof_status_name(bproof_status status) {
  switch (status) {
    case BPROOF_OK: return "ok";
    case BPROOF_INVALID: return "invalid";
    case BPROOF_IO_ERROR: return "io-error";
    case BPROOF_DECODE_ERROR: return "decode-error";
    case BPROOF_PARSE_ERROR: return "parse-error";
    case BPROOF_BAD_ARGUMENT: return "bad-argument";
    case BPROOF_INTERNAL: return "internal-error";
  }
  return "unknown";
}

int bproof_exit_code(bproof_status status) {
  if (status == BPROOF_OK) return 0;
  if (status == BPROOF_INVALID) return 1;
  return 2;
}

bproof_context* bproof_context_new(void) { return new (std::nothrow) bproof_context(); }
void bproof_context_free(bproof_context* ctx) { delete ctx; }
const char* bproof_context_output(const bproof_context* ctx) { return ctx ? ctx->output.c_str() : ""; }
const char* bproof_context_error(const bproof_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

void bproof_context_set_color(bproof_context* ctx, int enabled) {
  if (ctx) ctx->color = enabled != 0;
}

bproof_status bproof_check_file(bproof_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) return BPROOF_BAD_ARGUMENT;
    const CheckReport r = check_proof_text(read_file(path));
    if (r.outcome == Outcome::Ok) {
      ctx->output = paint(ctx->color, "32", "certified: ") + r.message + "\n";
      return BPROOF_OK;
    }
    ctx->error = paint(ctx->color, "31", "rejected: ") + r.message + "\n";
    return BPROOF_INVALID;
  });
}

bproof_status bproof_prove_files(bproof_context* ctx, const char* goal_path, const char* script_path,
                                 const char* emit_path) {
  return guarded(ctx, [&] {
    if (!goal_path || !script_path) return BPROOF_BAD_ARGUMENT;
    const std::string goal = read_file(goal_path);
    const std::string script = read_file(script_path);
    ProveReport r = prove_text(goal, script);
    if (r.outcome != Outcome::Ok) {
      ctx->error = paint(ctx->color, "31", "not proved: ") + r.message;
      return BPROOF_INVALID;
    }
    ctx->output = paint(ctx->color, "32", "proved: ") + r.message + "\n";
    if (emit_path) {
      std::ofstream out(emit_path, std::ios::binary);
      out << encode_proof_file(*r.proof);
      if (!out) throw IoFailure{std::string("cannot write ") + emit_path};
      ctx->output += std::string("wrote ") + emit_path + "\n";
    }
    return BPROOF_OK;
  });
}

bproof_status bproof_selftest(bproof_context* ctx, unsigned depth) {
  return guarded(ctx, [&] {
    if (depth == 0 || depth > 4) {
      ctx->error = "depth must be between 1 and 4\n";
      return BPROOF_BAD_ARGUMENT;
    }
    std::ostringstream out;
    const std::vector<LawResult> results = run_selftest(depth);
    const bool ok = report_selftest(results, out);
    std::size_t checks = 0;
    for (const LawResult& r : results) checks += r.checks;
    out << (ok ? paint(ctx->color, "32", "all laws hold") : paint(ctx->color, "31", "law violations found"))
        << " (depth " << depth << ", " << checks << " checks)\n";
    ctx->output = out.str();
    return ok ? BPROOF_OK : BPROOF_INVALID;
  });
}

bproof_session* bproof_session_new(void) { return new (std::nothrow) bproof_session(); }
void bproof_session_free(bproof_session* session) { delete session; }

void bproof_session_set_color(bproof_session* session, int enabled) {
  if (session) session->color = enabled != 0;
}

bproof_status bproof_session_exec(bproof_session* session, const char* line) {
  if (!session || !line) return BPROOF_BAD_ARGUMENT;
  try {
    const Session::Reply r = session->session.exec(line);
    session->output = r.ok ? r.text : paint(session->color, "31", "error: ") + r.text;
    return r.ok ? BPROOF_OK : BPROOF_INVALID;
  } catch (const std::exception& e) {
    session->output = std::string("internal error: ") + e.what() + "\n";
    return BPROOF_INTERNAL;
  }
}

const char* bproof_session_output(const bproof_session* session) { return session ? session->output.c_str() : ""; }
int bproof_session_finished(const bproof_session* session) { return session && session->session.finished(); }

bproof_status bproof_term_parse(const char* text, bproof_term** out, char** error) {
  if (!text || !out) return BPROOF_BAD_ARGUMENT;
  *out = nullptr;
  try {
    ParsedTerm p = parse_term(text);
    *out = new bproof_term{std::move(p.term), std::move(p.scope)};
    return BPROOF_OK;
  } catch (const Error& e) {
    if (error) *error = duplicate(e.what());
    return BPROOF_PARSE_ERROR;
  } catch (const std::exception& e) {
    if (error) *error = duplicate(e.what());
    return BPROOF_INTERNAL;
  }
}

char* bproof_term_print(const bproof_term* term) {
  if (!term) return nullptr;
  return duplicate(print_term(term->term, term->scope));
}

int bproof_term_equal(const bproof_term* a, const bproof_term* b) {
  if (!a || !b) return 0;
  return a->term == b->term && a->scope == b->scope;
}

size_t bproof_term_depth(const bproof_term* term) { return term ? term->term.depth() : 0; }
void bproof_term_free(bproof_term* term) { delete term; }
void bproof_string_free(char* text) { std::free(text); }

}  // extern "C"
