#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>

int main(int argc, char** argv) {
  // point the solver fallback at the in-tree shim when nothing else is set
#ifdef FPANV_SOLVER_SHIM
  setenv("FPANV_Z3_SHIM", FPANV_SOLVER_SHIM, 0);
#endif
  return doctest::Context(argc, argv).run();
}
