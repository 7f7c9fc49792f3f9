#pragma once

// Parser, AST and printer for the decorated path / halftwist notation, plus
// conversion of decorated expressions to Bands.
//
// ASCII grammar (one expression):
//
//   expr      := body ( '^' conj (' ' conj)* )?
//   body      := side? letter exponent? detours? '[' label ',' label ']'
//   side      := '_'              (below / underline)
//              | '~'              (above / bar)
//   letter    := 'z'              (path)
//              | 'Z'              (halftwist)
//   exponent  := integer          (default 1)
//   detours   := ( '(' label ')' | '(' label ')-(' label ')' )+
//   conj      := body             (halftwist with exponent, applied left to
//                                  right: "b ^ C1 C2" = (b^C1)^C2)
//   label     := integer '\''?    (e.g. 7 or 7')
//
// Examples:  _Z2[3,5]   ~z(7)[4,10] ^ Z2[10,11]   Z[7,7'] ^ ~Z-2[4,7] ~Z-2[3,7]

#include <optional>
#include <string>
#include <vector>

#include "bm/band.hpp"

namespace bm {

// Ordered puncture labels; position p (1-based) holds labels[p-1].
struct LabelMap {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
  // Position of a label (1-based); throws on unknown labels.
  int position(const std::string& label) const;
};

// Identity labels "1".."n".
LabelMap numeric_labels(int n);

enum class ExprKind { Path, Halftwist };
enum class ExprSide { Below, Above, Plain };

struct DecoratedExpr {
  ExprKind kind = ExprKind::Halftwist;
  ExprSide side = ExprSide::Plain;
  std::string left_label, right_label;
  std::vector<std::string> detours;   // passed on the side opposite to `side`
  int exponent = 1;
  // Conjugators, applied left to right; each is a halftwist body with its
  // own exponent and no nested conjugators.
  std::vector<DecoratedExpr> conjugators;

  bool operator==(const DecoratedExpr&) const = default;
};

// Parses one expression; throws std::invalid_argument with a position on
// syntax errors.  Labels are validated against `labels` when provided.
DecoratedExpr parse_expr(const std::string& text);
DecoratedExpr parse_expr(const std::string& text, const LabelMap& labels);

// Canonical text; parse_expr(render_expr(e)) == e.
std::string render_expr(const DecoratedExpr& e);

struct BandResult {
  Band band;
  int exponent = 1;
  // True when a "plain" side was defaulted to below for a non-adjacent
  // chord with undecorated intermediate punctures.
  bool convention_defaulted = false;
};

// Realizes the expression as a band (with its exponent) in the
// configuration described by `labels`.
BandResult to_band(const DecoratedExpr& e, const LabelMap& labels);

}  // namespace bm
