#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "support.hpp"

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      setenv("A1DEG_TEST_SEED", argv[++i], 1);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      setenv("A1DEG_TEST_SEED", argv[i] + 7, 1);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::fprintf(stderr, "random seed %llu\n", static_cast<unsigned long long>(a1deg::test::seed()));
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
