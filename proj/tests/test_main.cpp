#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"
#include "support.hpp"

#include <cstring>
#include <string>
#include <vector>

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t testsupport::seed() { return g_seed; }

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::stoull(argv[i] + 7);
      continue;
    }
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
      continue;
    }
    rest.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
