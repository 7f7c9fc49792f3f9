#pragma once

// Exact geometric front-end: lines and conics with rational coefficients,
// singular-fiber detection and classification, Lefschetz pairs, and table
// emission.  All arithmetic is exact; x-coordinates of events are algebraic
// of degree <= 2 over Q.

#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bm/engine.hpp"

namespace bm {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// p + q*sqrt(d) with rational p, q and integer d >= 0; q == 0 implies d == 0
// and square factors of d are folded into q on construction.
struct Alg {
  Rat p;
  Rat q;
  Int d;

  Alg() = default;
  Alg(Rat p_, Rat q_, Int d_);
  Alg(const Rat& r) : p(r), q(0), d(0) {}  // NOLINT: implicit by design
  bool is_rational() const { return q == 0; }
};

// Sign of the value (-1, 0, +1); exact.
int sign_of(const Alg& a);
// Sign of a - b; exact for any pair of radicands.
int cmp(const Alg& a, const Alg& b);
std::string format_alg(const Alg& a);

struct Line {
  Rat a, b;  // y = a x + b
};
struct Conic {
  Rat A, B, C, D, E, F;  // A x^2 + B xy + C y^2 + D x + E y + F = 0; C != 0
};
using Component = std::variant<Line, Conic>;

struct CurveSpec {
  std::vector<Component> components;
  int exclude_right = 0;  // rightmost events outside the disk E
  int exclude_left = 0;   // leftmost events outside the disk E
  // Curve invariant under a half turn: analyze emits only the near half of
  // the rows, and (from the right base point) the s2mode/rho directives so
  // the far half is recovered as the rho-conjugate of the near half.
  bool symmetric = false;

  int degree() const;  // #lines + 2 * #conics
};

CurveSpec parse_curve(const std::string& text);

enum class EventKind { Branch, Tangency, Crossing, Triple };

// A branch tag: which y-root of a component (lines have branch 0; conic
// branches are 0 = lower, 1 = upper relative to the conic's axis).
struct BranchRef {
  int component = 0;
  int branch = 0;
  bool operator==(const BranchRef&) const = default;
};

struct SingularEvent {
  Alg x;
  EventKind kind = EventKind::Crossing;
  // Branches meeting at the event: 2 for branch/tangency/crossing, 3 for
  // triple points.  For Branch events both entries name the same conic.
  std::vector<BranchRef> branches;
  Alg y;  // y-coordinate of the singular point (branch events: the vertex)
};

// All singular fibers, sorted by x ascending.  Throws on unsupported
// geometry (coincident event x-coordinates that do not form a triple point,
// conic-conic tangencies, event x of degree > 2).
std::vector<SingularEvent> singular_events(const CurveSpec& c);

struct FiberPoint {
  Alg y;
  BranchRef branch;
};

struct Fiber {
  std::vector<FiberPoint> real;  // sorted by y ascending
  // Conics with a non-real fiber, sorted by the real part of the conjugate
  // pair ascending; each entry is (component index, real part).
  std::vector<std::pair<int, Rat>> complex_pairs;
};

// Exact fiber at a rational x that is not an event coordinate.
Fiber fiber(const CurveSpec& c, const Rat& x);

// The full table as seen from a base point right of every event
// (base_right = true, the point M) or left of every event (-P).
SingularityTable lefschetz_table(const CurveSpec& c, bool base_right);

// The rho block twists of the excluded rightmost events, nearest first, as
// MoveKinds in the base fiber positions (only meaningful with
// base_right = true and exclude_right > 0).
std::vector<MoveKind> rho_moves(const CurveSpec& c);

// analyze: table file text for the given base side, including the rho and
// s2mode directives when events are excluded.
std::string analyze(const CurveSpec& c, bool base_right);

}  // namespace bm
