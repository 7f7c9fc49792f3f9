#include "bm/notation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bm {

int LabelMap::position(const std::string& label) const {
  for (int p = 1; p <= size(); ++p) {
    if (labels[static_cast<std::size_t>(p - 1)] == label) return p;
  }
  throw std::invalid_argument("unknown puncture label: " + label);
}

LabelMap numeric_labels(int n) {
  LabelMap m;
  for (int i = 1; i <= n; ++i) m.labels.push_back(std::to_string(i));
  return m;
}

namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("syntax error at position " + std::to_string(pos) +
                              " in '" + text + "': " + what);
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  std::string label() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(text, pos, "expected a label");
    std::string out = text.substr(start, pos - start);
    if (eat('\'')) out += '\'';
    return out;
  }

  std::optional<int> integer() {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      return std::nullopt;
    }
    return std::stoi(text.substr(start, pos - start));
  }
};

// body := side? letter exponent? detours? '[' label ',' label ']'
DecoratedExpr parse_body(Cursor& c) {
  DecoratedExpr e;
  c.skip_ws();
  if (c.eat('_')) {
    e.side = ExprSide::Below;
  } else if (c.eat('~')) {
    e.side = ExprSide::Above;
  }
  if (c.eat('z')) {
    e.kind = ExprKind::Path;
  } else if (c.eat('Z')) {
    e.kind = ExprKind::Halftwist;
  } else {
    fail(c.text, c.pos, "expected 'z' or 'Z'");
  }
  if (auto exp = c.integer()) e.exponent = *exp;
  while (c.peek() == '(') {
    c.eat('(');
    std::string a = c.label();
    if (!c.eat(')')) fail(c.text, c.pos, "expected ')'");
    // Range form (a)-(b): expand to every integer label in between.
    if (c.peek() == '-' && c.pos + 1 < c.text.size() && c.text[c.pos + 1] == '(') {
      c.eat('-');
      c.eat('(');
      std::string b = c.label();
      if (!c.eat(')')) fail(c.text, c.pos, "expected ')'");
      int lo = std::stoi(a), hi = std::stoi(b);
      for (int v = lo; v <= hi; ++v) e.detours.push_back(std::to_string(v));
    } else {
      e.detours.push_back(a);
    }
  }
  if (!c.eat('[')) fail(c.text, c.pos, "expected '['");
  e.left_label = c.label();
  if (!c.eat(',')) fail(c.text, c.pos, "expected ','");
  e.right_label = c.label();
  if (!c.eat(']')) fail(c.text, c.pos, "expected ']'");
  return e;
}

void validate(const DecoratedExpr& e, const LabelMap& labels) {
  int pi = labels.position(e.left_label);
  int pj = labels.position(e.right_label);
  if (pi == pj) throw std::invalid_argument("chord endpoints coincide");
  int lo = std::min(pi, pj), hi = std::max(pi, pj);
  for (const auto& d : e.detours) {
    int pd = labels.position(d);
    if (!(lo < pd && pd < hi)) {
      throw std::invalid_argument("detour label " + d + " outside the chord span");
    }
  }
  for (const auto& conj : e.conjugators) validate(conj, labels);
}

}  // namespace

DecoratedExpr parse_expr(const std::string& text) {
  Cursor c{text};
  DecoratedExpr e = parse_body(c);
  c.skip_ws();
  if (c.eat('^')) {
    c.skip_ws();
    while (c.pos < text.size()) {
      DecoratedExpr conj = parse_body(c);
      if (conj.kind != ExprKind::Halftwist) {
        fail(text, c.pos, "conjugators must be halftwists");
      }
      e.conjugators.push_back(std::move(conj));
      c.skip_ws();
    }
    if (e.conjugators.empty()) fail(text, c.pos, "expected a conjugator after '^'");
  }
  c.skip_ws();
  if (c.pos != text.size()) fail(text, c.pos, "trailing input");
  return e;
}

DecoratedExpr parse_expr(const std::string& text, const LabelMap& labels) {
  DecoratedExpr e = parse_expr(text);
  validate(e, labels);
  return e;
}

namespace {

std::string render_body(const DecoratedExpr& e) {
  std::ostringstream os;
  if (e.side == ExprSide::Below) os << '_';
  if (e.side == ExprSide::Above) os << '~';
  os << (e.kind == ExprKind::Path ? 'z' : 'Z');
  if (e.exponent != 1) os << e.exponent;
  for (const auto& d : e.detours) os << '(' << d << ')';
  os << '[' << e.left_label << ',' << e.right_label << ']';
  return os.str();
}

}  // namespace

std::string render_expr(const DecoratedExpr& e) {
  std::string out = render_body(e);
  if (!e.conjugators.empty()) {
    out += " ^";
    for (const auto& c : e.conjugators) {
      out += ' ';
      out += render_body(c);
    }
  }
  return out;
}

BandResult to_band(const DecoratedExpr& e, const LabelMap& labels) {
  validate(e, labels);
  int n = labels.size();
  int pi = labels.position(e.left_label);
  int pj = labels.position(e.right_label);
  int lo = std::min(pi, pj), hi = std::max(pi, pj);

  BandResult r;
  r.exponent = e.exponent;
  Side side = e.side == ExprSide::Above ? Side::Above : Side::Below;
  if (e.side == ExprSide::Plain && hi > lo + 1) {
    // The plain form only determines the chord when every intermediate
    // puncture is covered by a detour; otherwise default to below and flag.
    if (e.detours.size() + 1 < static_cast<std::size_t>(hi - lo)) {
      r.convention_defaulted = true;
    }
  }
  std::vector<int> detours;
  for (const auto& d : e.detours) detours.push_back(labels.position(d));
  r.band = chord_band(n, lo, hi, side, detours);

  for (const auto& cexpr : e.conjugators) {
    DecoratedExpr body = cexpr;
    body.conjugators.clear();
    body.exponent = 1;
    BandResult cb = to_band(body, labels);
    r.convention_defaulted = r.convention_defaulted || cb.convention_defaulted;
    r.band = transport(r.band, power(band_halftwist(cb.band), cexpr.exponent));
  }
  return r;
}

}  // namespace bm
