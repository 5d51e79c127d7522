// Experiment harness CLI. Subcommands are filled in alongside the library;
// this stub keeps the target building while modules land.
#include <cstdio>

int main() {
  std::puts("polyinv: not yet wired");
  return 2;
}
