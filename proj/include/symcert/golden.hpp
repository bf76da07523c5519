#ifndef SYMCERT_GOLDEN_HPP
#define SYMCERT_GOLDEN_HPP

#include "symcert/construction.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symcert {

/// (file name, canonical text) for every committed golden object.
inline std::vector<std::pair<std::string, std::string>> golden_documents(const ConstructionSet& c,
                                                                         const ReducedSystem& rs) {
  return {
      {"psi.txt", c.psi.to_string()},
      {"dpsi.txt", c.dpsi.to_string()},
      {"beta.txt", c.beta.to_string()},
      {"chi.txt", c.chi.to_string()},
      {"sum_sq_reduced.txt", rs.sum_sq_reduced.to_string()},
      {"Q.txt", c.Q.to_string()},
      {"Q_simplex_2d.txt", rs.Q_simplex_2d.to_string()},
  };
}

}  // namespace symcert

#endif  // SYMCERT_GOLDEN_HPP
