#pragma once

// The eight worked examples of the action of delta-moves on skeletons
// (the calibration dictionary), expressed in flattened slot coordinates.
// Each entry gives a move, the source expression in the move's source
// model, and the expected result in its target model.

#include <string>
#include <vector>

#include "bm/moves.hpp"

namespace bm {

struct DictEntry {
  std::string name;
  MoveKind move;
  int source_level = 0;  // complex pairs of the source model
  std::string source_expr;
  std::string expected_expr;
};

// The eight entries instantiated at strand count n and parameter k.
std::vector<DictEntry> dictionary_entries(int n, int k);

struct DictResult {
  std::string name;
  bool ok = false;
  std::string derived;  // pretty form of the computed image (may be empty)
};

// Applies every entry's move to its source band and compares with the
// expected band under exact braid equality.
std::vector<DictResult> run_dictionary(int n, int k);

}  // namespace bm
