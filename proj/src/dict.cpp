#include "bm/dict.hpp"

#include <stdexcept>

#include "bm/engine.hpp"
#include "bm/notation.hpp"

namespace bm {

namespace {

std::string num(int v) { return std::to_string(v); }

}  // namespace

std::vector<DictEntry> dictionary_entries(int n, int k) {
  if (k < 3 || k > n - 6) throw std::invalid_argument("dictionary requires 3 <= k <= n-6");
  std::vector<DictEntry> out;
  // 1. Block halftwist moving the right endpoint across the block.
  out.push_back({"block<k,k+1> on ~z[k-2,k]",
                 MoveKind{MoveType::BlockTwist, k, k + 1, 1},
                 0,
                 "~z[" + num(k - 2) + "," + num(k) + "]",
                 "~z(" + num(k) + ")[" + num(k - 2) + "," + num(k + 1) + "]"});
  // 2. I4->I2: the inner pair lands at (k, k+1); reals k.. shift right.
  out.push_back({"I4I2<k> on _z[k-1,k+1]",
                 MoveKind{MoveType::I4toI2, k},
                 2,
                 "_z[" + num(k - 1) + "," + num(k + 1) + "]",
                 "_z(" + num(k + 1) + ")[" + num(k - 1) + "," + num(k + 3) + "]"});
  // 3. I4->I2': the outer pair lands, passing between the inner members.
  out.push_back({"I4I2'<k> on z(k+1)[k-1,k+2]",
                 MoveKind{MoveType::I4toI2p, k},
                 2,
                 "z(" + num(k + 1) + ")[" + num(k - 1) + "," + num(k + 2) + "]",
                 "_z(" + num(k + 1) + ")(" + num(k + 3) + ")[" + num(k - 1) + "," +
                     num(k + 4) + "]"});
  // 4. I2->I4: reals (k, k+1) lift to the inner pair at (n-3, n-2).
  out.push_back({"I2I4<k> on z[k+2,k+3]^Z2[k+1,k+2]",
                 MoveKind{MoveType::I2toI4, k},
                 1,
                 "z[" + num(k + 2) + "," + num(k + 3) + "] ^ Z2[" + num(k + 1) + "," +
                     num(k + 2) + "]",
                 "z[" + num(k) + "," + num(k + 1) + "] ^ ~Z-2[" + num(k + 1) + "," +
                     num(n - 3) + "]"});
  // 5. R->I2: the raising's extra halftwist shifts the detour from k+1
  // (entry 6's image) to k.
  out.push_back({"RI2<k> on _z(k)[k-1,k+2]",
                 MoveKind{MoveType::RtoI2, k},
                 0,
                 "_z(" + num(k) + ")[" + num(k - 1) + "," + num(k + 2) + "]",
                 "z[" + num(k - 1) + "," + num(k) + "]"});
  // 6. I2->R: the pair lands at (k, k+1).
  out.push_back({"I2R<k> on z[k-1,k]",
                 MoveKind{MoveType::I2toR, k},
                 1,
                 "z[" + num(k - 1) + "," + num(k) + "]",
                 "_z(" + num(k + 1) + ")[" + num(k - 1) + "," + num(k + 2) + "]"});
  // 7. I6->I4: the outermost pair lands at (k, k+1).
  out.push_back({"I6I4<k> on z[k-1,k]",
                 MoveKind{MoveType::I6toI4, k},
                 3,
                 "z[" + num(k - 1) + "," + num(k) + "]",
                 "_z(" + num(k + 1) + ")[" + num(k - 1) + "," + num(k + 2) + "]"});
  // 8. I4->I6: reals (k, k+1) lift to the outermost pair at (n-1, n); the
  // image runs below the remaining reals to the new pair's +i member,
  // detouring above reals k+1..n-6 and above the inner pairs' -i members.
  {
    std::string detours;
    for (int a = k + 1; a <= n - 6; ++a) detours += "(" + num(a) + ")";
    detours += "(" + num(n - 4) + ")(" + num(n - 2) + ")";
    out.push_back({"I4I6<k> on z[k+1,k+2]",
                   MoveKind{MoveType::I4toI6, k},
                   2,
                   "z[" + num(k + 1) + "," + num(k + 2) + "]",
                   "_z" + detours + "[" + num(k) + "," + num(n - 1) + "]"});
  }
  return out;
}

std::vector<DictResult> run_dictionary(int n, int k) {
  std::vector<DictResult> results;
  LabelMap labels = numeric_labels(n);
  for (const DictEntry& e : dictionary_entries(n, k)) {
    DictResult r;
    r.name = e.name;
    Model src{n, e.source_level};
    BandResult in = to_band(parse_expr(e.source_expr, labels), labels);
    auto [img, tgt] = apply_move(e.move, src, in.band);
    r.derived = pretty_band(img, in.exponent, labels);
    if (e.expected_expr.empty()) {
      r.ok = !r.derived.empty();
    } else {
      BandResult want = to_band(parse_expr(e.expected_expr, labels), labels);
      r.ok = band_equal(img, want.band);
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace bm
