// Runs the acceptance criteria; exit status 0 iff all of them pass.
#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <string>

#include "admcm/acceptance.hpp"

namespace {

int usage() {
  std::fprintf(stderr, "usage: admcm_acceptance [--threads N] [criterion id 1-12 ...]\n");
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  admcm::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    char* end = nullptr;
    if (a == "--threads" && i + 1 < argc) {
      const long t = std::strtol(argv[++i], &end, 10);
      if (*end || t < 1 || t > 256) return usage();
      opt.threads = static_cast<unsigned>(t);
      continue;
    }
    const long id = std::strtol(a.c_str(), &end, 10);
    if (a.empty() || *end || id < 1 || id > 12) return usage();
    opt.only.push_back(static_cast<int>(id));
  }
  int failed = 0;
  for (int id = 1; id <= 12; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    const auto r = admcm::run_criterion(id, opt);
    std::printf("%s\n", admcm::format_result(r).c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
