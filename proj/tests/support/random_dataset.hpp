#pragma once

#include "collabmkt/dataset.hpp"

namespace collabmkt::testing {

// Seeded generator of small, valid-by-construction datasets that exercise
// the awkward shapes real data can take: publications spanning several
// universities, SDSs and sites; unstable scientists; companies with more
// than one site; repeated impact factors; coincident coordinates. Used by
// the oracle-equivalence and property suites.
Dataset random_dataset(unsigned long seed, int max_publications = 50);

} // namespace collabmkt::testing
