#include "bm/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bm {

int epsilon_rule(SingType t) {
  switch (t) {
    case SingType::a1:
    case SingType::a2: return 1;
    case SingType::b: return 4;
    case SingType::c: return 2;
    case SingType::cusp: return 3;
  }
  throw std::logic_error("unreachable");
}

namespace {

bool is_level_move(const MoveKind& mv) { return mv.type != MoveType::BlockTwist; }

bool is_raising(const MoveKind& mv) {
  return is_level_move(mv) && source_pairs(mv) < target_pairs(mv);
}

void check_row(const SingularityTable& table, const SingularityRow& row) {
  bool level = is_level_move(row.delta);
  if ((row.type == SingType::a1 || row.type == SingType::a2) != level) {
    throw std::invalid_argument("row j=" + std::to_string(row.j) +
                                ": delta kind inconsistent with singularity type");
  }
  if (row.type == SingType::b && !(row.delta.type == MoveType::BlockTwist && row.delta.r == 2)) {
    throw std::invalid_argument("row j=" + std::to_string(row.j) +
                                ": b rows take a squared block twist");
  }
  if (row.type == SingType::c && !(row.delta.type == MoveType::BlockTwist && row.delta.r == 1)) {
    throw std::invalid_argument("row j=" + std::to_string(row.j) +
                                ": c rows take a single block twist");
  }
  if ((row.type == SingType::a1 || row.type == SingType::a2 || row.type == SingType::b) &&
      row.l != row.k + 1) {
    throw std::invalid_argument("row j=" + std::to_string(row.j) +
                                ": a/b rows take l = k+1");
  }
  if (row.type == SingType::c && row.l != row.k + 1 && row.l != row.k + 2) {
    throw std::invalid_argument("row j=" + std::to_string(row.j) + ": bad c-row span");
  }
  if (row.k < 1 || row.l > table.n) {
    throw std::invalid_argument("row j=" + std::to_string(row.j) + ": L-pair out of range");
  }
}

// The transport beta_base^-1: every complex pair of the base model slides
// from its model slots at the right edge to its geometric position among
// the punctures of K(base), the +i member passing above the real punctures
// it crosses.
BraidWord beta_inverse_word(const SingularityTable& table) {
  const Model& m = table.base_model;
  if (static_cast<int>(table.pair_positions.size()) != m.complex_pairs) {
    throw std::invalid_argument("pair position count does not match the base model level");
  }
  BraidWord w(m.n);
  // Pairs are processed inner anchor first; target positions must ascend in
  // the same order, so movers cross real punctures only.
  std::vector<int> targets = table.pair_positions;
  if (!std::is_sorted(targets.begin(), targets.end())) {
    throw std::invalid_argument("pair positions must be ascending");
  }
  int real_count = m.real_count();
  for (int p = 1; p <= m.complex_pairs; ++p) {
    int plus_slot = real_count + 2 * p - 1;  // current slot of the +i member
    int target = targets[static_cast<std::size_t>(p - 1)];
    if (target > plus_slot) {
      throw std::invalid_argument("pair target position beyond its model slot");
    }
    // +i member leftwards above: positive crossings at plus_slot-1 .. target.
    for (int t = plus_slot - 1; t >= target; --t) w.push(t, +1);
    // -i member leftwards below: negative crossings.
    for (int t = plus_slot; t >= target + 1; --t) w.push(t, -1);
  }
  return w;
}

}  // namespace

Model seed_model(const SingularityTable& table, std::size_t index) {
  if (index >= table.rows.size()) throw std::out_of_range("row index");
  Model m = table.base_model;
  // Walking away from the base point, the region left behind row t has the
  // source level of row t's move.
  for (std::size_t t = 0; t < index; ++t) {
    const MoveKind& mv = table.rows[t].delta;
    if (is_level_move(mv)) {
      if (m.complex_pairs != target_pairs(mv)) {
        throw std::invalid_argument("model threading violation at row j=" +
                                    std::to_string(table.rows[t].j));
      }
      m.complex_pairs = source_pairs(mv);
    }
  }
  return m;
}

std::vector<Band> seed_bands(const SingularityTable& table, std::size_t index) {
  const SingularityRow& row = table.rows[index];
  check_row(table, row);
  Model m = seed_model(table, index);
  const int n = table.n;
  std::vector<Band> out;
  if (row.is_double()) {
    out.emplace_back(n, row.k);
    out.emplace_back(n, row.k + 1);
    return out;
  }
  if (is_raising(row.delta)) {
    // The vanishing cycle of an a2 row connects the two points its move
    // turns complex: the chord (k, k+1) of the source model, carried by the
    // row's own move into the region where the skeleton lives.
    if (m.complex_pairs != target_pairs(row.delta)) {
      throw std::invalid_argument("model threading violation at row j=" +
                                  std::to_string(row.j));
    }
    Model src{n, source_pairs(row.delta)};
    out.push_back(apply_move(row.delta, src, Band(n, row.k)).first);
    return out;
  }
  // Lefschetz chord (k, k+1); for level-lowering rows these are the slots
  // where the pair just became real.
  out.emplace_back(n, row.k);
  return out;
}

Band lvc(const SingularityTable& table, std::size_t index, int part) {
  std::vector<Band> seeds = seed_bands(table, index);
  std::size_t which = 0;
  if (table.rows[index].is_double()) {
    if (part != 1 && part != 2) throw std::invalid_argument("double row needs part 1 or 2");
    which = static_cast<std::size_t>(part - 1);
  } else if (part != 0) {
    throw std::invalid_argument("single row takes part 0");
  }
  Band b = seeds[which];
  Model m = seed_model(table, index);
  for (std::size_t t = index; t-- > 0;) {
    std::tie(b, m) = apply_move(table.rows[t].delta, m, b);
  }
  if (m != table.base_model) {
    throw std::invalid_argument("model threading violation: accumulation did not "
                                "return to the base model");
  }
  return transport(b, beta_inverse_word(table));
}

Factor monodromy_factor(const SingularityTable& table, std::size_t index, int part) {
  Factor f;
  f.j = table.rows[index].j;
  f.part = part;
  f.epsilon = epsilon_rule(table.rows[index].type);
  f.band = lvc(table, index, part);
  return f;
}

std::vector<Factor> braid_monodromy(const SingularityTable& table) {
  std::vector<Factor> out;
  for (std::size_t t = 0; t < table.rows.size(); ++t) {
    if (table.rows[t].is_double()) {
      out.push_back(monodromy_factor(table, t, 1));
      out.push_back(monodromy_factor(table, t, 2));
    } else {
      out.push_back(monodromy_factor(table, t, 0));
    }
  }
  return out;
}

std::vector<Factor> rotate_half(const std::vector<Factor>& factors, int n) {
  BraidWord rot = block_halftwist(1, n, n);
  std::vector<Factor> out = factors;
  for (auto& f : out) f.band = transport(f.band, rot);
  return out;
}

std::vector<Factor> conjugate_factorization(const std::vector<Factor>& factors,
                                            const BraidWord& rho) {
  std::vector<Factor> out = factors;
  BraidWord inv = invert(rho);
  for (auto& f : out) f.band = transport(f.band, inv);
  return out;
}

// ---- table files ------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SingType parse_sing_type(const std::string& s) {
  if (s == "a1") return SingType::a1;
  if (s == "a2") return SingType::a2;
  if (s == "b") return SingType::b;
  if (s == "c") return SingType::c;
  throw std::invalid_argument("unknown singularity type: " + s);
}

std::string sing_type_name(SingType t) {
  switch (t) {
    case SingType::a1: return "a1";
    case SingType::a2: return "a2";
    case SingType::b: return "b";
    case SingType::c: return "c";
    case SingType::cusp: return "cusp";
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BraidWord rho_word(const TableFile& tf) {
  BraidWord w(tf.table.n);
  for (const auto& mv : tf.rho) {
    w = compose(w, power(block_halftwist(mv.k, mv.l, tf.table.n), mv.r));
  }
  return w;
}

TableFile parse_table(const std::string& text) {
  TableFile tf;
  bool have_header = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::pair<std::string, std::string>> kv;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) {
        // continuation of the previous value (e.g. rho=D<2,3> D<9,10>)
        if (kv.empty()) throw std::invalid_argument("bad table line: " + line);
        kv.back().second += ' ' + tok;
      } else {
        kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
      }
    }
    if (kv.empty()) continue;
    if (!have_header) {
      for (const auto& [key, val] : kv) {
        if (key == "n") {
          tf.table.n = std::stoi(val);
        } else if (key == "model") {
          if (val.size() != 2 || val[0] != 'K') {
            throw std::invalid_argument("bad model: " + val);
          }
          tf.table.base_model.complex_pairs = (val[1] - '0') / 2;
          if (val != "K1" && val != "K2" && val != "K4" && val != "K6") {
            throw std::invalid_argument("bad model: " + val);
          }
        } else if (key == "labels") {
          tf.table.labels.labels = split(val, ',');
        } else if (key == "pairs") {
          if (!val.empty()) {
            for (const auto& p : split(val, ',')) {
              tf.table.pair_positions.push_back(std::stoi(p));
            }
          }
        } else if (key == "reversed") {
          tf.table.reversed = val == "1";
        } else if (key == "s2mode") {
          tf.s2_mode = val == "1";
        } else if (key == "rho") {
          std::istringstream rs(val);
          std::string mtok;
          while (rs >> mtok) {
            MoveKind mv = parse_move(mtok);
            if (mv.type != MoveType::BlockTwist) {
              throw std::invalid_argument("rho must be a product of block twists");
            }
            tf.rho.push_back(mv);
          }
        } else {
          throw std::invalid_argument("unknown header key: " + key);
        }
      }
      if (tf.table.n <= 0) throw std::invalid_argument("table header missing n");
      tf.table.base_model.n = tf.table.n;
      if (tf.table.labels.labels.empty()) tf.table.labels = numeric_labels(tf.table.n);
      if (tf.table.labels.size() != tf.table.n) {
        throw std::invalid_argument("label count does not match n");
      }
      have_header = true;
      continue;
    }
    SingularityRow row;
    bool have_delta = false;
    for (const auto& [key, val] : kv) {
      if (key == "j") {
        row.j = std::stoi(val);
      } else if (key == "type") {
        row.type = parse_sing_type(val);
      } else if (key == "lpair") {
        if (!val.empty() && val[0] == 'P') {
          row.k = std::stoi(val.substr(1));
          row.l = row.k + 1;
        } else if (val.size() >= 5 && val.front() == '(' && val.back() == ')') {
          auto parts = split(val.substr(1, val.size() - 2), ',');
          if (parts.size() != 2) throw std::invalid_argument("bad lpair: " + val);
          row.k = std::stoi(parts[0]);
          row.l = std::stoi(parts[1]);
        } else {
          throw std::invalid_argument("bad lpair: " + val);
        }
      } else if (key == "delta") {
        row.delta = parse_move(val);
        have_delta = true;
      } else {
        throw std::invalid_argument("unknown row key: " + key);
      }
    }
    if (row.j == 0 || !have_delta) throw std::invalid_argument("bad table row: " + line);
    tf.table.rows.push_back(row);
  }
  if (!have_header) throw std::invalid_argument("table file has no header");
  for (const auto& row : tf.table.rows) check_row(tf.table, row);
  return tf;
}

std::string format_table(const TableFile& tf) {
  std::ostringstream os;
  os << "n=" << tf.table.n << " model=K"
     << (tf.table.base_model.complex_pairs == 0 ? 1 : 2 * tf.table.base_model.complex_pairs);
  // The labels token is omitted when the labels are the numeric default.
  if (tf.table.labels.labels != numeric_labels(tf.table.n).labels) {
    os << " labels=";
    for (int i = 0; i < tf.table.labels.size(); ++i) {
      if (i) os << ',';
      os << tf.table.labels.labels[static_cast<std::size_t>(i)];
    }
  }
  os << " pairs=";
  for (std::size_t i = 0; i < tf.table.pair_positions.size(); ++i) {
    if (i) os << ',';
    os << tf.table.pair_positions[i];
  }
  os << " reversed=" << (tf.table.reversed ? 1 : 0);
  if (tf.s2_mode) os << " s2mode=1";
  if (!tf.rho.empty()) {
    os << " rho=";
    for (std::size_t i = 0; i < tf.rho.size(); ++i) {
      if (i) os << ' ';
      os << format_move(tf.rho[i]);
    }
  }
  os << '\n';
  for (const auto& row : tf.table.rows) {
    os << "j=" << row.j << " type=" << sing_type_name(row.type);
    if (is_level_move(row.delta) && is_raising(row.delta)) {
      os << " lpair=P" << row.k;
    } else {
      os << " lpair=(" << row.k << ',' << row.l << ')';
    }
    os << " delta=" << format_move(row.delta) << '\n';
  }
  return os.str();
}

std::string pretty_band(const Band& b, int epsilon, const LabelMap& labels) {
  auto [x, y] = band_endpoints(b);
  int span = y - x - 1;
  if (span > 10) return "";
  for (int side_i = 0; side_i < 2; ++side_i) {
    Side side = side_i == 0 ? Side::Below : Side::Above;
    for (unsigned mask = 0; mask < (1u << span); ++mask) {
      std::vector<int> detours;
      for (int t = 0; t < span; ++t) {
        if (mask & (1u << t)) detours.push_back(x + 1 + t);
      }
      Band cand = chord_band(b.strand_count, x, y, side, detours);
      if (!band_equal(cand, b)) continue;
      DecoratedExpr e;
      e.kind = ExprKind::Halftwist;
      e.exponent = epsilon;
      e.left_label = labels.labels[static_cast<std::size_t>(x - 1)];
      e.right_label = labels.labels[static_cast<std::size_t>(y - 1)];
      if (span == 0 && detours.empty()) {
        e.side = ExprSide::Plain;
      } else {
        e.side = side == Side::Below ? ExprSide::Below : ExprSide::Above;
      }
      for (int d : detours) {
        e.detours.push_back(labels.labels[static_cast<std::size_t>(d - 1)]);
      }
      return render_expr(e);
    }
  }
  return "";
}

}  // namespace bm
