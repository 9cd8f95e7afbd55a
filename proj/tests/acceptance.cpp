// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "tracegeo/reproduce.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen((std::string(TRACEGEO_BIN) + " " + args).c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

int main() {
  int failed = 0;
  for (int id = 1; id <= tracegeo::kNumChecks; ++id) {
    const auto r = tracegeo::run_check(id);
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << r.name << "\n"
              << "     expected: " << r.expected << "\n     actual:   " << r.actual << "\n";
    for (const auto& f : r.failures) std::cout << "     - " << f << "\n";
    if (!r.passed) ++failed;
  }

  // Criterion 12: the shipped binary end to end, under 60 s, exit 0.
  const CliRun run = run_cli("reproduce --json");
  bool ok = run.code == 0 && run.seconds < 60.0;
  std::string detail = "exit " + std::to_string(run.code) + " in " + std::to_string(run.seconds) + " s";
  try {
    const auto j = nlohmann::json::parse(run.out);
    ok = ok && j.at("schema") == "1" && j.at("passed") == true && j.at("checks").size() == 11;
  } catch (const std::exception& e) {
    ok = false;
    detail += "; unreadable report: " + std::string(e.what());
  }
  // The suite must also notice a planted fault.
  const CliRun faulty = run_cli("reproduce --json --inject-fault k-sl4");
  ok = ok && faulty.code == 1;
  detail += "; planted fault exit " + std::to_string(faulty.code);
  std::cout << (ok ? "PASS" : "FAIL") << " criterion 12: reproduce runs checks 1-11 end to end\n"
            << "     expected: exit 0 in < 60 s; exit 1 with a planted fault\n     actual:   " << detail << "\n";
  if (!ok) ++failed;

  std::cout << (failed == 0 ? "all 12 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
