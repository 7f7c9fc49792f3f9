#include "bm/moves.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bm {

namespace {

// Strand ids used by the motion simulator: reals are 1..n-2m; pair p has
// members plus_id(p) / minus_id(p) (p = 1 is the pair with the leftmost
// anchor).
constexpr int kPlusBase = 1000;
constexpr int kMinusBase = 2000;
int plus_id(int p) { return kPlusBase + p; }
int minus_id(int p) { return kMinusBase + p; }

// Records the crossings of strands moved one at a time.  Sign convention:
// the positive generator is the counterclockwise halftwist, whose left
// strand travels below and right strand above.  Hence a leftward mover
// passing ABOVE a stationary strand crosses positively, and a rightward
// mover passing BELOW crosses positively.
struct Sim {
  int n;
  std::vector<int> order;  // order[slot-1] = strand id
  BraidWord w;

  explicit Sim(const Model& model) : n(model.n), w(model.n) {
    for (int r = 1; r <= model.real_count(); ++r) order.push_back(r);
    for (int p = 1; p <= model.complex_pairs; ++p) {
      order.push_back(plus_id(p));
      order.push_back(minus_id(p));
    }
  }

  int slot_of(int id) const {
    for (int s = 1; s <= n; ++s) {
      if (order[static_cast<std::size_t>(s - 1)] == id) return s;
    }
    throw std::logic_error("strand id not found");
  }

  // Moves strand `id` to slot `to`; `side(passed_id)` gives the side on
  // which the mover passes each stationary strand.
  void move(int id, int to, const std::function<Side(int)>& side) {
    int cur = slot_of(id);
    while (cur > to) {
      int passed = order[static_cast<std::size_t>(cur - 2)];
      // leftward mover: above = positive
      w.push(cur - 1, side(passed) == Side::Above ? +1 : -1);
      std::swap(order[static_cast<std::size_t>(cur - 2)],
                order[static_cast<std::size_t>(cur - 1)]);
      --cur;
    }
    while (cur < to) {
      int passed = order[static_cast<std::size_t>(cur)];
      // rightward mover: below = positive
      w.push(cur, side(passed) == Side::Below ? +1 : -1);
      std::swap(order[static_cast<std::size_t>(cur - 1)],
                order[static_cast<std::size_t>(cur)]);
      ++cur;
    }
  }
};

void check_range(bool ok, const MoveKind& mv) {
  if (!ok) {
    throw std::invalid_argument("move parameter out of range: " + format_move(mv));
  }
}

// The level-lowering motion: pair `moving` travels left and rotates down
// onto slots k, k+1, the +i member above the reals it passes and the -i
// member below.  `pass_side(passed_id)` refines the travel sides for the
// members of other pairs the mover crosses (heights differ between models).
BraidWord lowering_word(const Model& model, int k, int moving,
                        const std::function<Side(int, bool)>& pass_side) {
  Sim sim(model);
  sim.move(plus_id(moving), k,
           [&](int id) { return pass_side(id, /*mover_plus=*/true); });
  sim.move(minus_id(moving), k + 1,
           [&](int id) { return pass_side(id, /*mover_plus=*/false); });
  return sim.w;
}

BraidWord realize_forward(const MoveKind& mv, const Model& model) {
  const int n = model.n;
  switch (mv.type) {
    case MoveType::BlockTwist: {
      check_range(1 <= mv.k && mv.k < mv.l && mv.l <= n, mv);
      return power(block_halftwist(mv.k, mv.l, n), mv.r);
    }
    case MoveType::I2toR: {
      check_range(1 <= mv.k && mv.k <= n - 1, mv);
      // Def of Delta^{1/2}_{I2 R}: the single pair becomes real at k, k+1.
      return lowering_word(model, mv.k, /*moving=*/1,
                           [](int, bool plus) { return plus ? Side::Above : Side::Below; });
    }
    case MoveType::I4toI2: {
      check_range(1 <= mv.k && mv.k <= n - 3, mv);
      // The close (inner-anchored) pair 1 becomes real; pair 2 shifts to the
      // outer anchor without crossings.
      return lowering_word(model, mv.k, /*moving=*/1,
                           [](int, bool plus) { return plus ? Side::Above : Side::Below; });
    }
    case MoveType::I4toI2p: {
      check_range(1 <= mv.k && mv.k <= n - 3, mv);
      // The righter (outer-anchored) pair 2, lowered to heights +-i/2,
      // becomes real; it passes between the members of pair 1 (at +-i):
      // above the -i member, below the +i member.
      return lowering_word(model, mv.k, /*moving=*/2, [](int id, bool plus) {
        if (id == plus_id(1)) return Side::Below;
        if (id == minus_id(1)) return Side::Above;
        return plus ? Side::Above : Side::Below;
      });
    }
    case MoveType::I6toI4: {
      check_range(1 <= mv.k && mv.k <= n - 5, mv);
      // The outermost pair 3 (at +-2i), lowered to +-i/2, travels between
      // the members of pairs 1 and 2 (at +-i) and becomes real; pairs 1, 2
      // shift right to the I4 anchors without crossings.
      return lowering_word(model, mv.k, /*moving=*/3, [](int id, bool plus) {
        if (id == plus_id(1) || id == plus_id(2)) return Side::Below;
        if (id == minus_id(1) || id == minus_id(2)) return Side::Above;
        return plus ? Side::Above : Side::Below;
      });
    }
    // Raising moves.  Tracked below the real axis, both branch-point
    // rotations are counterclockwise quarter turns, so the raising motion is
    // the inverse lowering preceded by one full positive halftwist of the
    // two merging points at their real slots (k, k+1): the lowering brings
    // the +i member to the left slot, while raising sends the right point up
    // to +i.
    case MoveType::RtoI2: {
      check_range(1 <= mv.k && mv.k <= n - 1, mv);
      MoveKind fwd{MoveType::I2toR, mv.k, 0, 1};
      BraidWord w(n);
      w.push(mv.k, +1);
      return compose(w, invert(realize_forward(fwd, Model{n, 1})));
    }
    case MoveType::I2toI4: {
      check_range(1 <= mv.k && mv.k <= n - 3, mv);
      MoveKind fwd{MoveType::I4toI2, mv.k, 0, 1};
      BraidWord w(n);
      w.push(mv.k, +1);
      return compose(w, invert(realize_forward(fwd, Model{n, 2})));
    }
    case MoveType::I4toI6: {
      check_range(1 <= mv.k && mv.k <= n - 5, mv);
      MoveKind fwd{MoveType::I6toI4, mv.k, 0, 1};
      BraidWord w(n);
      w.push(mv.k, +1);
      return compose(w, invert(realize_forward(fwd, Model{n, 3})));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int source_pairs(const MoveKind& mv) {
  switch (mv.type) {
    case MoveType::BlockTwist: return -1;  // any
    case MoveType::I2toR: return 1;
    case MoveType::RtoI2: return 0;
    case MoveType::I4toI2: return 2;
    case MoveType::I4toI2p: return 2;
    case MoveType::I2toI4: return 1;
    case MoveType::I6toI4: return 3;
    case MoveType::I4toI6: return 2;
  }
  throw std::logic_error("unreachable");
}

int target_pairs(const MoveKind& mv) {
  switch (mv.type) {
    case MoveType::BlockTwist: return -1;  // unchanged
    case MoveType::I2toR: return 0;
    case MoveType::RtoI2: return 1;
    case MoveType::I4toI2: return 1;
    case MoveType::I4toI2p: return 1;
    case MoveType::I2toI4: return 2;
    case MoveType::I6toI4: return 2;
    case MoveType::I4toI6: return 3;
  }
  throw std::logic_error("unreachable");
}

std::pair<BraidWord, Model> realize_move(const MoveKind& mv, const Model& model) {
  int src = source_pairs(mv);
  if (src >= 0 && model.complex_pairs != src) {
    throw std::invalid_argument("model level mismatch: move " + format_move(mv) +
                                " requires complex level " + std::to_string(2 * src) +
                                ", model has level " +
                                std::to_string(2 * model.complex_pairs));
  }
  BraidWord w = realize_forward(mv, model);
  Model out = model;
  int tgt = target_pairs(mv);
  if (tgt >= 0) out.complex_pairs = tgt;
  return {std::move(w), out};
}

std::pair<Band, Model> apply_move(const MoveKind& mv, const Model& model,
                                  const Band& b) {
  auto [w, out] = realize_move(mv, model);
  return {transport(b, w), out};
}

std::string format_move(const MoveKind& mv) {
  std::ostringstream os;
  switch (mv.type) {
    case MoveType::BlockTwist:
      os << "D<" << mv.k << ',' << mv.l << ">^" << mv.r;
      return os.str();
    case MoveType::I2toR: os << "D12R"; break;
    case MoveType::RtoI2: os << "DR12"; break;
    case MoveType::I4toI2: os << "D1412"; break;
    case MoveType::I4toI2p: os << "D1412'"; break;
    case MoveType::I2toI4: os << "D1214"; break;
    case MoveType::I6toI4: os << "D1614"; break;
    case MoveType::I4toI6: os << "D1416"; break;
  }
  os << '<' << mv.k << '>';
  return os.str();
}

MoveKind parse_move(const std::string& text) {
  MoveKind mv;
  auto open = text.find('<');
  auto close = text.find('>');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("bad move syntax: " + text);
  }
  std::string name = text.substr(0, open);
  std::string args = text.substr(open + 1, close - open - 1);
  std::string tail = text.substr(close + 1);
  if (name == "D") {
    mv.type = MoveType::BlockTwist;
    auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad move syntax: " + text);
    mv.k = std::stoi(args.substr(0, comma));
    mv.l = std::stoi(args.substr(comma + 1));
    mv.r = 1;
    if (!tail.empty()) {
      if (tail[0] != '^') throw std::invalid_argument("bad move syntax: " + text);
      mv.r = std::stoi(tail.substr(1));
    }
    return mv;
  }
  if (!tail.empty()) throw std::invalid_argument("bad move syntax: " + text);
  if (name == "D12R") mv.type = MoveType::I2toR;
  else if (name == "DR12") mv.type = MoveType::RtoI2;
  else if (name == "D1412") mv.type = MoveType::I4toI2;
  else if (name == "D1412'") mv.type = MoveType::I4toI2p;
  else if (name == "D1214") mv.type = MoveType::I2toI4;
  else if (name == "D1614") mv.type = MoveType::I6toI4;
  else if (name == "D1416") mv.type = MoveType::I4toI6;
  else throw std::invalid_argument("unknown move: " + text);
  mv.k = std::stoi(args);
  return mv;
}

}  // namespace bm
