#pragma once

// The model disks K_1, K_2, K_4, K_6, the flattening convention identifying
// each with the standard n-punctured disk, and the realization of every
// delta-move as an explicit braid word plus a model transition.
//
// Flattening: the n - 2m real punctures keep their order in slots
// 1..n-2m; each conjugate pair occupies two consecutive slots at the right,
// ordered by anchor real part, with the +i member on the left.  The same
// realization serves both base points: local monodromies and the move
// motions are counterclockwise regardless of the direction of travel.

#include <string>
#include <utility>

#include "bm/band.hpp"

namespace bm {

struct Model {
  int n = 0;              // strand count
  int complex_pairs = 0;  // m; complex level is 2m

  int real_count() const { return n - 2 * complex_pairs; }
  bool operator==(const Model&) const = default;
};

enum class MoveType {
  BlockTwist,  // Delta^r<k,l>
  I2toR,       // Delta^{1/2}_{I2 R}<k>
  RtoI2,       // Delta^{1/2}_{R I2}<k>
  I4toI2,      // Delta^{1/2}_{I4 I2}<k>   (the close pair becomes real)
  I4toI2p,     // Delta^{1/2'}_{I4 I2}<k>  (the righter pair becomes real)
  I2toI4,      // Delta^{1/2}_{I2 I4}<k>
  I6toI4,      // Delta^{1/2}_{I6 I4}<k>
  I4toI6,      // Delta^{1/2}_{I4 I6}<k>
};

struct MoveKind {
  MoveType type = MoveType::BlockTwist;
  int k = 0;
  int l = 0;  // BlockTwist only
  int r = 1;  // BlockTwist only

  bool operator==(const MoveKind&) const = default;
};

// Complex level (pair count) before/after the move.
int source_pairs(const MoveKind& mv);
int target_pairs(const MoveKind& mv);

// The braid word in B_n expressing the move's composite motion under the
// flattening, and the target model.  Throws on a level mismatch or
// parameter out of range.
std::pair<BraidWord, Model> realize_move(const MoveKind& mv, const Model& model);

// Transports a band through the move.
std::pair<Band, Model> apply_move(const MoveKind& mv, const Model& model,
                                  const Band& b);

// Table file syntax:  D<k,l>^r  D12R<k>  DR12<k>  D1412<k>  D1412'<k>
//                     D1214<k>  D1614<k>  D1416<k>
std::string format_move(const MoveKind& mv);
MoveKind parse_move(const std::string& text);

}  // namespace bm
