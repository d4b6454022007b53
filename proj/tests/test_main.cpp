#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "seed.hpp"

namespace {
std::uint64_t g_seed = 0;
}

std::uint64_t test_seed() { return g_seed; }

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (a.rfind("--seed=", 0) == 0) {
      g_seed = std::strtoull(a.c_str() + 7, nullptr, 10);
    } else {
      rest.push_back(argv[i]);
    }
  }
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
