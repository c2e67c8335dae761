// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "liebracket/acceptance.hpp"

namespace {

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s  %s: %s\n", id, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
}

}  // namespace

int main() {
  using namespace liebracket;
  bool all = true;
  for (const CriterionResult& c : run_acceptance(AcceptanceOptions{4, 0})) {
    report(c.id, c.name, c.pass, c.detail);
    all &= c.pass;
  }

  const std::string cmd =
      std::string("\"") + LIEBRACKET_CLI + "\" verify-all --max 4 --seed 0 >/dev/null 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const int code = status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  const bool end_to_end = code == 0 && elapsed.count() < 60.0;
  report(11, "end-to-end verify-all", end_to_end,
         "exit " + std::to_string(code) + " in " + std::to_string(elapsed.count()) + " s");
  all &= end_to_end;

  std::fflush(stdout);
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
