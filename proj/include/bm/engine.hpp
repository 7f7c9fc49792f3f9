#pragma once

// The braid-monodromy algorithm: initial skeletons, accumulation of
// delta-moves, L.V.C., exponentiation by epsilon, the reversed-direction
// mode, and the conjugated-factorization assembly.
//
// Table rows are ordered by distance from the base point (nearest first);
// for a right base point M that is descending x, for a left base point -P
// ascending x.  The L.V.C. of row t seeds the row's skeleton in the model
// of the region between its event and the previous one and applies the
// moves of rows t-1, t-2, ..., 1 in that order, followed by the transport
// beta_base^-1 into the base configuration K(M).

#include <string>
#include <vector>

#include "bm/band.hpp"
#include "bm/moves.hpp"
#include "bm/notation.hpp"

namespace bm {

enum class SingType { a1, a2, b, c, cusp };

// Def 2.27 (and Thm 1.13): a1, a2 -> 1; b -> 4; c -> 2; cusp -> 3 (wired,
// never occurs for line/conic curves).
int epsilon_rule(SingType t);

struct SingularityRow {
  int j = 0;            // index along the axis, nearest the base point = 1
  SingType type = SingType::c;
  int k = 0, l = 0;     // Lefschetz pair; for level rows l = k+1
  MoveKind delta;

  // A c-row with l == k+2 is a double row: two transversal intersections in
  // one fiber; it seeds the chords (k,k+1) and (k+1,k+2) and emits an
  // ordered factor pair.
  bool is_double() const { return type == SingType::c && l == k + 2; }
};

struct SingularityTable {
  int n = 0;
  Model base_model;                 // model of the region adjacent to the base point
  bool reversed = false;            // base point -P << 0 (frame annotation)
  LabelMap labels;                  // labels of K(base), by position
  std::vector<int> pair_positions;  // positions p with a complex pair at (p, p+1)
  std::vector<SingularityRow> rows;
};

struct Factor {
  int j = 0;
  int part = 0;  // 0 for single factors; 1, 2 for double-row pairs
  int epsilon = 0;
  Band band;

  // The monodromy braid: the epsilon-th power of the band's halftwist.
  BraidWord word() const { return power(band_halftwist(band), epsilon); }
};

// The model in which row `index` (0-based) seeds its skeleton.
Model seed_model(const SingularityTable& table, std::size_t index);

// The seed band(s) of a row: the Lefschetz chord, or the created-pair chord
// for level-raising rows; double rows have two.
std::vector<Band> seed_bands(const SingularityTable& table, std::size_t index);

// L.V.C. of one row (part 0, or 1/2 for double rows), expressed in the base
// configuration K(base).
Band lvc(const SingularityTable& table, std::size_t index, int part = 0);

Factor monodromy_factor(const SingularityTable& table, std::size_t index, int part = 0);

// All factors in row order (double rows contribute two factors).
std::vector<Factor> braid_monodromy(const SingularityTable& table);

// Conjugates every factor by the 180-degree rotation of all punctures.
std::vector<Factor> rotate_half(const std::vector<Factor>& factors, int n);

// Replaces every factor F by F^{rho^-1} (halftwist word rho W rho^-1).
std::vector<Factor> conjugate_factorization(const std::vector<Factor>& factors,
                                            const BraidWord& rho);

// ---- table files ------------------------------------------------------
//
// Header:  n=12 model=K2 labels=1,2,...,11' pairs=7 reversed=0 [rho=D<2,3> D<9,10>]
// Rows:    j=5 type=c lpair=(7,8) delta=D<7,8>^1
//          j=11 type=a2 lpair=P5 delta=D1214<5>

struct TableFile {
  SingularityTable table;
  std::vector<MoveKind> rho;  // block twists of the rho directive, if present
  bool s2_mode = false;
};

// The braid word of the rho directive (composition of its block twists).
BraidWord rho_word(const TableFile& tf);

TableFile parse_table(const std::string& text);
std::string format_table(const TableFile& tf);

// Best-effort decorated form of a factor's band in the base labels; returns
// the empty string when no simple pattern matches.
std::string pretty_band(const Band& b, int epsilon, const LabelMap& labels);

}  // namespace bm
