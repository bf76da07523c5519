// golden_gen <dir>: writes the canonical serializations of the construction.

#include "symcert/construction.hpp"
#include "symcert/golden.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: golden_gen <output-dir>\n";
    return 64;
  }
  auto c = symcert::build_all();
  for (const auto& [name, text] : symcert::golden_documents(c, symcert::reduced_system(c))) {
    std::ofstream f(std::string(argv[1]) + "/" + name);
    if (!(f << text << "\n")) {
      std::cerr << "golden_gen: cannot write " << name << "\n";
      return 1;
    }
  }
  return 0;
}
