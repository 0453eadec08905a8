#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "bproof/bproof.h"

namespace {

bool color_enabled() {
  const char* env = std::getenv("BPROOF_COLOR");
  if (env && std::string(env) == "1") return true;
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

int finish(bproof_context* ctx, bproof_status status) {
  std::cout << bproof_context_output(ctx);
  std::cerr << bproof_context_error(ctx);
  return bproof_exit_code(status);
}

int repl(bool color) {
  std::unique_ptr<bproof_session, decltype(&bproof_session_free)> session(bproof_session_new(),
                                                                          bproof_session_free);
  bproof_session_set_color(session.get(), color);
  const bool interactive = isatty(STDIN_FILENO) != 0;
  if (interactive) std::cout << "bproof " << bproof_version() << ", `help` lists the commands\n";
  std::string line;
  bool failed = false;
  while (!bproof_session_finished(session.get())) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    const bproof_status s = bproof_session_exec(session.get(), line.c_str());
    (s == BPROOF_OK ? std::cout : std::cerr) << bproof_session_output(session.get()) << std::flush;
    if (s != BPROOF_OK) failed = true;
  }
  return interactive || !failed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bproof: proof checker and tactic prover for B logic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bproof_version());

  std::string check_path;
  auto* check = app.add_subcommand("check", "replay a .bprf proof file");
  check->add_option("file", check_path, "proof file")->required();

  std::string goal_path, script_path, emit_path;
  auto* prove = app.add_subcommand("prove", "run a script on a goal");
  prove->add_option("goal", goal_path, "goal file")->required();
  prove->add_option("script", script_path, "script file")->required();
  prove->add_option("--emit", emit_path, "write the proof here on success");

  auto* repl_cmd = app.add_subcommand("repl", "interactive proof session");

  unsigned depth = 3;
  auto* selftest = app.add_subcommand("selftest", "check the binder laws on every small term");
  selftest->add_option("--depth", depth, "term depth bound")->check(CLI::Range(1u, 4u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool color = color_enabled();
  if (repl_cmd->parsed()) return repl(color);

  std::unique_ptr<bproof_context, decltype(&bproof_context_free)> ctx(bproof_context_new(), bproof_context_free);
  bproof_context_set_color(ctx.get(), color);
  if (check->parsed()) return finish(ctx.get(), bproof_check_file(ctx.get(), check_path.c_str()));
  if (prove->parsed()) {
    const char* emit = emit_path.empty() ? nullptr : emit_path.c_str();
    return finish(ctx.get(), bproof_prove_files(ctx.get(), goal_path.c_str(), script_path.c_str(), emit));
  }
  return finish(ctx.get(), bproof_selftest(ctx.get(), depth));
}
