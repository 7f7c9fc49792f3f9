#include "bm/band.hpp"

#include <algorithm>
#include <stdexcept>

namespace bm {

BraidWord band_halftwist(const Band& b) {
  if (b.base < 1 || b.base >= b.strand_count) {
    throw std::invalid_argument("band base chord out of range");
  }
  return compose(compose(b.rc, generator(b.strand_count, b.base)),
                 invert(b.rc));
}

Band chord_band(int n, int i, int j, Side side, const std::vector<int>& detours) {
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("chord endpoints out of range");
  }
  for (int a : detours) {
    if (!(i < a && a < j)) {
      throw std::invalid_argument("detour outside the chord span");
    }
  }
  // The chord is the image of the adjacent chord (i, i+1) under the inverse
  // of the motion m that drags puncture j leftwards to slot i+1, passing
  // each intermediate on the side of the path.  Its halftwist is then
  // m . sigma_i . m^-1, so the stored conjugator is m.
  //
  // A leftward mover passing BELOW a puncture crosses as sigma^-1 (the right
  // strand of the swap travels below, which is the inverse of the positive,
  // counterclockwise halftwist); passing ABOVE crosses as sigma^+1.
  Band b(n, i);
  for (int t = j - 1; t >= i + 1; --t) {
    bool detoured = std::find(detours.begin(), detours.end(), t) != detours.end();
    Side pass = detoured ? (side == Side::Below ? Side::Above : Side::Below) : side;
    b.rc.push(t, pass == Side::Above ? +1 : -1);
  }
  return b;
}

Band transport(const Band& b, const BraidWord& d) {
  Band out = b;
  out.rc = compose(invert(d), b.rc);
  return out;
}

std::pair<int, int> band_endpoints(const Band& b) {
  // The halftwist induces the transposition of the band's endpoints; read
  // it off the word's permutation.
  std::vector<int> p = permutation(band_halftwist(b));
  int a = 0, c = 0;
  for (int q = 1; q <= b.strand_count; ++q) {
    if (p[static_cast<std::size_t>(q - 1)] != q) {
      if (a == 0) {
        a = q;
      } else {
        c = q;
      }
    }
  }
  if (a == 0 || c == 0) throw std::logic_error("band halftwist is not a transposition");
  return {a, c};
}

bool band_equal(const Band& a, const Band& b) {
  return equal(band_halftwist(a), band_halftwist(b));
}

}  // namespace bm
