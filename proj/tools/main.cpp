#include "restream/cli.hpp"

int main(int argc, char** argv) {
  return restream::run_cli({argv + 1, argv + argc});
}
