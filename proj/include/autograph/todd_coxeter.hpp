#pragma once

#include <string>
#include <vector>

#include "autograph/perm_group.hpp"

namespace autograph {

// Enumerates the cosets of the trivial subgroup in a finitely presented
// group and returns its right regular representation.
//
// Relators are words over the generators: lowercase letter k ('a' + k) is
// generator k, uppercase is its inverse. Throws LimitError if the
// enumeration needs more than max_cosets cosets (infinite or too large).
PermGroup group_from_presentation(int num_generators,
                                  const std::vector<std::string>& relators,
                                  int max_cosets = 200000);

}  // namespace autograph
