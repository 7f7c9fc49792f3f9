#pragma once

// Bands: isotopy classes of simple paths between two punctures, stored as a
// base adjacent chord plus a conjugating braid word.  The halftwist of the
// band (i, rc) is the word  rc . sigma_i . rc^-1  (words act left to right).
//
// Transporting a band along a motion with braid word d conjugates its
// halftwist to  d^-1 . W . d ;  on the stored conjugator this prepends d^-1.

#include <vector>

#include "bm/braid.hpp"

namespace bm {

enum class Side { Below, Above };

struct Band {
  int strand_count = 0;
  int base = 0;        // adjacent chord index: the chord (base, base+1)
  BraidWord rc;        // conjugator; halftwist = rc . sigma_base . rc^-1

  Band() = default;
  Band(int n, int base_index) : strand_count(n), base(base_index), rc(n) {}
};

// The halftwist braid word of the band.
BraidWord band_halftwist(const Band& b);

// The band of the chord from puncture i to puncture j (i < j) that passes
// the intermediate punctures on `side`, except for the punctures listed in
// `detours`, which are passed on the opposite side.  Adjacent chords
// (j == i+1) take no side.  Intermediate punctures are identified by their
// position in the reference configuration.
Band chord_band(int n, int i, int j, Side side, const std::vector<int>& detours = {});

// The band after the ambient motion with braid word d: halftwist becomes
// d^-1 . W . d.
Band transport(const Band& b, const BraidWord& d);

// The two punctures connected by the band, in increasing order.
std::pair<int, int> band_endpoints(const Band& b);

// True iff the two bands' halftwists are equal braids.
bool band_equal(const Band& a, const Band& b);

}  // namespace bm
