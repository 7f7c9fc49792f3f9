#include "bm/arrangement.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace bm {

namespace {

int rat_sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

Int isqrt_floor(const Int& v) { return boost::multiprecision::sqrt(v); }

}  // namespace

Alg::Alg(Rat p_, Rat q_, Int d_) : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  if (q == 0 || d == 0) {
    q = 0;
    d = 0;
    return;
  }
  // Fold square factors of d into q.
  for (Int f = 2; f * f <= d && f < 100000; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      q *= f;
    }
  }
  if (d == 1) {
    p += q;
    q = 0;
    d = 0;
  }
}

namespace {

// Sign of p + q sqrt(d).
int sign1(const Rat& p, const Rat& q, const Int& d) {
  if (q == 0 || d == 0) return rat_sign(p);
  if (p == 0) return rat_sign(q);
  int sp = rat_sign(p), sq = rat_sign(q);
  if (sp == sq) return sp;
  Rat t = p * p - q * q * Rat(d);
  return sp * rat_sign(t);
}

// Sign of p + q1 sqrt(d1) + q2 sqrt(d2) with q1, q2 != 0 and d1 != d2.
int sign2(const Rat& p, const Rat& q1, const Int& d1, const Rat& q2, const Int& d2) {
  int s1 = rat_sign(q1), s2 = rat_sign(q2);
  int su;
  if (s1 == s2) {
    su = s1;
  } else {
    Rat t = q1 * q1 * Rat(d1) - q2 * q2 * Rat(d2);
    su = t == 0 ? 0 : s1 * rat_sign(t);
  }
  if (su == 0) return rat_sign(p);
  if (p == 0) return su;
  int sp = rat_sign(p);
  if (sp == su) return sp;
  Rat head = p * p - q1 * q1 * Rat(d1) - q2 * q2 * Rat(d2);
  return sp * sign1(head, -2 * q1 * q2, d1 * d2);
}

}  // namespace

int sign_of(const Alg& a) {
  if (a.q == 0) return rat_sign(a.p);
  return sign1(a.p, a.q, a.d);
}

int cmp(const Alg& a, const Alg& b) {
  if (a.q == 0 && b.q == 0) return rat_sign(a.p - b.p);
  if (b.q == 0) return sign1(a.p - b.p, a.q, a.d);
  if (a.q == 0) return -sign1(b.p - a.p, b.q, b.d);
  if (a.d == b.d) return sign1(a.p - b.p, a.q - b.q, a.d);
  return sign2(a.p - b.p, a.q, a.d, -b.q, b.d);
}

std::string format_alg(const Alg& a) {
  std::ostringstream os;
  os << a.p;
  if (a.q != 0) {
    os << (a.q > 0 ? "+" : "") << a.q << "*sqrt(" << a.d << ")";
  }
  return os.str();
}

namespace {

// ---- Alg arithmetic (compatible radicands only) ------------------------

bool compatible(const Alg& a, const Alg& b) {
  return a.q == 0 || b.q == 0 || a.d == b.d;
}

Alg alg_add(const Alg& a, const Alg& b) {
  if (!compatible(a, b)) throw std::logic_error("incompatible radicands in add");
  Int d = a.q != 0 ? a.d : b.d;
  return Alg(a.p + b.p, a.q + b.q, d);
}

Alg alg_neg(const Alg& a) { return Alg(-a.p, -a.q, a.d); }

Alg alg_mul(const Alg& a, const Alg& b) {
  if (!compatible(a, b)) throw std::logic_error("incompatible radicands in mul");
  Int d = a.q != 0 ? a.d : b.d;
  return Alg(a.p * b.p + a.q * b.q * Rat(d), a.p * b.q + a.q * b.p, d);
}

Alg alg_scale(const Alg& a, const Rat& r) { return Alg(a.p * r, a.q * r, a.d); }

Alg alg_inv(const Alg& a) {
  Rat norm = a.p * a.p - a.q * a.q * Rat(a.d);
  if (norm == 0) throw std::logic_error("division by zero algebraic number");
  return Alg(a.p / norm, -a.q / norm, a.d);
}

// Evaluates a rational-coefficient polynomial at an algebraic point.
Alg alg_eval(const std::vector<Rat>& poly, const Alg& x) {
  Alg acc{Rat(0), Rat(0), Int(0)};
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = alg_add(alg_mul(acc, x), Alg(poly[i]));
  }
  return acc;
}

// Rational bounds of sqrt(d) with error < 1/2^prec.
std::pair<Rat, Rat> sqrt_bounds(const Int& d, int prec) {
  Int scale = Int(1) << (2 * prec);
  Int s = isqrt_floor(d * scale);
  Rat denom = Rat(Int(1) << prec);
  return {Rat(s) / denom, Rat(s + 1) / denom};
}

std::pair<Rat, Rat> alg_bounds(const Alg& a, int prec) {
  if (a.q == 0) return {a.p, a.p};
  auto [lo, hi] = sqrt_bounds(a.d, prec);
  if (a.q > 0) return {a.p + a.q * lo, a.p + a.q * hi};
  return {a.p + a.q * hi, a.p + a.q * lo};
}

// A rational strictly between lo and hi (exact midpoint when both are
// rational; otherwise a refined separating rational).
Rat rational_between(const Alg& lo, const Alg& hi) {
  if (cmp(lo, hi) >= 0) throw std::logic_error("empty interval");
  if (lo.q == 0 && hi.q == 0) return (lo.p + hi.p) / 2;
  for (int prec = 4;; prec += 8) {
    Rat upper = alg_bounds(lo, prec).second;
    Rat lower = alg_bounds(hi, prec).first;
    if (upper < lower) return (upper + lower) / 2;
    if (prec > 4096) throw std::logic_error("interval refinement failed");
  }
}

Rat rational_below(const Alg& x) {
  Rat b = alg_bounds(x, 16).first;
  return b - 1;
}

Rat rational_above(const Alg& x) {
  Rat b = alg_bounds(x, 16).second;
  return b + 1;
}

// ---- polynomials over Q ------------------------------------------------

using Poly = std::vector<Rat>;  // coefficient of x^i at index i

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly padd(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Poly pscale(Poly a, const Rat& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

Rat peval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Divides p by (x - r); requires r to be a root.
Poly deflate(const Poly& p, const Rat& r) {
  Poly out(p.size() - 1, Rat(0));
  Rat carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry;
    out[i - 1] = carry;
    carry *= r;
  }
  if (p[0] + carry != 0) throw std::logic_error("deflation by a non-root");
  trim(out);
  return out;
}

std::vector<Int> divisors_of(Int v, std::size_t cap) {
  if (v < 0) v = -v;
  std::vector<Int> out;
  for (Int i = 1; i * i <= v; ++i) {
    if (static_cast<std::size_t>(out.size()) > cap) {
      throw std::runtime_error("unsupported: coefficient too large for root search");
    }
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
    if (i > 2000000) {
      throw std::runtime_error("unsupported: coefficient too large for root search");
    }
  }
  return out;
}

// All rational roots with multiplicity; deflates them out of p.
// Number of distinct real roots of p, by the sign variation count of the
// Sturm chain at -infinity and +infinity.
int count_real_roots(const Poly& p) {
  auto variations = [](const std::vector<Poly>& chain, int at_inf) {
    int prev = 0, count = 0;
    for (const Poly& q : chain) {
      if (q.empty()) continue;
      int sg = q.back() > 0 ? 1 : -1;
      if (at_inf < 0 && degree(q) % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  };
  std::vector<Poly> chain;
  Poly a = p;
  trim(a);
  if (degree(a) <= 0) return 0;
  Poly b(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = a[i] * static_cast<int>(i);
  trim(b);
  chain.push_back(a);
  while (!b.empty()) {
    chain.push_back(b);
    // rem = -(a mod b)
    Poly r = a;
    while (degree(r) >= degree(b) && !r.empty()) {
      Rat f = r.back() / b.back();
      std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
      r.pop_back();
      trim(r);
    }
    for (auto& c : r) c = -c;
    a = std::move(b);
    b = std::move(r);
  }
  return variations(chain, -1) - variations(chain, +1);
}

std::vector<std::pair<Rat, int>> extract_rational_roots(Poly& p) {
  std::vector<std::pair<Rat, int>> roots;
  trim(p);
  // Roots at zero.
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    if (!roots.empty() && roots.back().first == 0) {
      ++roots.back().second;
    } else {
      roots.emplace_back(Rat(0), 1);
    }
  }
  if (degree(p) < 1) return roots;
  // Clear denominators.
  Int denom = 1;
  for (const auto& c : p) denom = boost::multiprecision::lcm(denom, denominator(c));
  std::vector<Int> ip;
  for (const auto& c : p) ip.push_back(numerator(c * Rat(denom)));
  std::vector<Int> nums = divisors_of(ip.front(), 4096);
  std::vector<Int> dens = divisors_of(ip.back(), 4096);
  for (const Int& nu : nums) {
    for (const Int& de : dens) {
      for (int s : {1, -1}) {
        Rat cand(s * nu, de);
        while (degree(p) >= 1 && peval(p, cand) == 0) {
          p = deflate(p, cand);
          if (!roots.empty() && roots.back().first == cand) {
            ++roots.back().second;
          } else {
            roots.emplace_back(cand, 1);
          }
        }
      }
    }
  }
  return roots;
}

struct QuadraticRoots {
  int disc_sign = 0;        // sign of b^2 - 4ac
  std::vector<Alg> real;    // ascending (two roots, or one double root)
  Rat center;               // -b / 2a (real part of the conjugate pair)
};

QuadraticRoots solve_quadratic(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0) throw std::logic_error("not a quadratic");
  QuadraticRoots out;
  Rat disc = b * b - 4 * a * c;
  out.disc_sign = rat_sign(disc);
  out.center = -b / (2 * a);
  if (out.disc_sign < 0) return out;
  if (out.disc_sign == 0) {
    out.real.push_back(Alg(out.center));
    return out;
  }
  // sqrt(disc) = sqrt(num*den)/den for disc = num/den.
  Rat half(1, 2);
  Rat coef = half / a / Rat(denominator(disc));
  Alg lo(out.center, -boost::multiprecision::abs(coef), numerator(disc) * denominator(disc));
  Alg hi(out.center, boost::multiprecision::abs(coef), numerator(disc) * denominator(disc));
  out.real.push_back(lo);
  out.real.push_back(hi);
  return out;
}

// ---- components --------------------------------------------------------

bool is_line(const Component& c) { return std::holds_alternative<Line>(c); }

// Fiber polynomial of a conic in y at rational x.
void conic_fiber(const Conic& k, const Rat& x, Rat& a, Rat& b, Rat& c) {
  a = k.C;
  b = k.B * x + k.E;
  c = k.A * x * x + k.D * x + k.F;
}

// The conic's axis height -(Bx+E)/(2C) at an algebraic x.
Alg conic_axis(const Conic& k, const Alg& x) {
  return alg_scale(alg_add(alg_scale(x, k.B), Alg(k.E)), Rat(-1) / (2 * k.C));
}

// Branch index (0 lower, 1 upper) of the point (x, y) on the conic.
int conic_branch(const Conic& k, const Alg& x, const Alg& y) {
  int s = cmp(y, conic_axis(k, x));
  if (s == 0) throw std::runtime_error("unsupported: intersection on a conic axis");
  return s < 0 ? 0 : 1;
}

// y-value of a line at an algebraic x.
Alg line_at(const Line& l, const Alg& x) {
  return alg_add(alg_scale(x, l.a), Alg(l.b));
}

}  // namespace

int CurveSpec::degree() const {
  int n = 0;
  for (const auto& c : components) n += is_line(c) ? 1 : 2;
  return n;
}

CurveSpec parse_curve(const std::string& text) {
  CurveSpec spec;
  std::istringstream is(text);
  std::string line;
  auto read_rat = [](std::istringstream& ls, const std::string& ctx) {
    std::string tok;
    if (!(ls >> tok)) throw std::invalid_argument("missing coefficient in " + ctx);
    auto slash = tok.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(tok));
      return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational '" + tok + "' in " + ctx);
    }
  };
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "line") {
      Line l;
      l.a = read_rat(ls, line);
      l.b = read_rat(ls, line);
      spec.components.emplace_back(l);
    } else if (head == "conic") {
      Conic k;
      k.A = read_rat(ls, line);
      k.B = read_rat(ls, line);
      k.C = read_rat(ls, line);
      k.D = read_rat(ls, line);
      k.E = read_rat(ls, line);
      k.F = read_rat(ls, line);
      if (k.C == 0) throw std::invalid_argument("conic with C = 0 has a non-finite fiber");
      spec.components.emplace_back(k);
    } else if (head == "exclude_right") {
      std::string v;
      if (!(ls >> v)) throw std::invalid_argument("exclude_right needs a count");
      spec.exclude_right = std::stoi(v);
    } else if (head == "exclude_left") {
      std::string v;
      if (!(ls >> v)) throw std::invalid_argument("exclude_left needs a count");
      spec.exclude_left = std::stoi(v);
    } else if (head == "symmetric") {
      std::string v;
      if (!(ls >> v)) throw std::invalid_argument("symmetric needs 0 or 1");
      spec.symmetric = v != "0";
    } else {
      throw std::invalid_argument("unknown curve directive: " + head);
    }
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("trailing tokens in: " + line);
  }
  // Duplicate detection (up to scaling for conics).
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.components.size(); ++j) {
      const auto &ci = spec.components[i], &cj = spec.components[j];
      if (is_line(ci) != is_line(cj)) continue;
      if (is_line(ci)) {
        const auto &a = std::get<Line>(ci), &b = std::get<Line>(cj);
        if (a.a == b.a && a.b == b.b) throw std::invalid_argument("duplicate component");
      } else {
        const auto &a = std::get<Conic>(ci), &b = std::get<Conic>(cj);
        Rat s = a.C / b.C;
        if (a.A == s * b.A && a.B == s * b.B && a.D == s * b.D && a.E == s * b.E &&
            a.F == s * b.F) {
          throw std::invalid_argument("duplicate component");
        }
      }
    }
  }
  return spec;
}

namespace {

// Crossing events of a component pair, before genericity checks.
void pair_events(const CurveSpec& spec, int i, int j, std::vector<SingularEvent>& out) {
  const Component &ci = spec.components[static_cast<std::size_t>(i)];
  const Component &cj = spec.components[static_cast<std::size_t>(j)];
  if (is_line(ci) && is_line(cj)) {
    const auto &a = std::get<Line>(ci), &b = std::get<Line>(cj);
    if (a.a == b.a) return;  // parallel, distinct
    Rat x = (b.b - a.b) / (a.a - b.a);
    SingularEvent e;
    e.x = Alg(x);
    e.kind = EventKind::Crossing;
    e.y = line_at(a, e.x);
    e.branches = {{i, 0}, {j, 0}};
    out.push_back(std::move(e));
    return;
  }
  if (is_line(ci) != is_line(cj)) {
    int li = is_line(ci) ? i : j;
    int ki = is_line(ci) ? j : i;
    const auto& l = std::get<Line>(spec.components[static_cast<std::size_t>(li)]);
    const auto& k = std::get<Conic>(spec.components[static_cast<std::size_t>(ki)]);
    // Substitute y = ax + b.
    Rat c2 = k.C * l.a * l.a + k.B * l.a + k.A;
    Rat c1 = 2 * k.C * l.a * l.b + k.B * l.b + k.D + k.E * l.a;
    Rat c0 = k.C * l.b * l.b + k.E * l.b + k.F;
    if (c2 == 0) {
      if (c1 == 0) {
        if (c0 == 0) throw std::invalid_argument("line is a component of the conic");
        return;
      }
      SingularEvent e;
      e.x = Alg(-c0 / c1);
      e.kind = EventKind::Crossing;
      e.y = line_at(l, e.x);
      e.branches = {{li, 0}, {ki, conic_branch(k, e.x, e.y)}};
      out.push_back(std::move(e));
      return;
    }
    QuadraticRoots qr = solve_quadratic(c2, c1, c0);
    if (qr.disc_sign < 0) return;
    if (qr.disc_sign == 0) {
      SingularEvent e;
      e.x = qr.real[0];
      e.kind = EventKind::Tangency;
      e.y = line_at(l, e.x);
      e.branches = {{li, 0}, {ki, conic_branch(k, e.x, e.y)}};
      out.push_back(std::move(e));
      return;
    }
    for (const Alg& x : qr.real) {
      SingularEvent e;
      e.x = x;
      e.kind = EventKind::Crossing;
      e.y = line_at(l, e.x);
      e.branches = {{li, 0}, {ki, conic_branch(k, e.x, e.y)}};
      out.push_back(std::move(e));
    }
    return;
  }
  // conic-conic
  const auto &k1 = std::get<Conic>(ci), &k2 = std::get<Conic>(cj);
  // Eliminate y^2: C2*f1 - C1*f2 = L(x) y + M(x).
  Poly L = {k2.C * k1.E - k1.C * k2.E, k2.C * k1.B - k1.C * k2.B};
  trim(L);
  Poly M = {k2.C * k1.F - k1.C * k2.F, k2.C * k1.D - k1.C * k2.D,
            k2.C * k1.A - k1.C * k2.A};
  trim(M);
  if (L.empty()) {
    // Fibers proportional exactly where M vanishes: two symmetric common
    // points in one fiber, which the catalog does not cover (unless the
    // common fiber points are complex there).
    if (M.empty()) throw std::invalid_argument("duplicate component");
    Poly m = M;
    std::vector<std::pair<Rat, int>> rr = extract_rational_roots(m);
    std::vector<Alg> xs;
    for (const auto& [r, mult] : rr) xs.emplace_back(r);
    if (degree(m) == 2) {
      QuadraticRoots qr = solve_quadratic(m[2], m[1], m[0]);
      for (const Alg& r : qr.real) xs.push_back(r);
    } else if (degree(m) >= 1 && count_real_roots(m) > 0) {
      throw std::runtime_error("unsupported: conic-conic event of degree > 2 over Q");
    }
    Poly disc1 = {k1.E * k1.E - 4 * k1.C * k1.F, 2 * k1.B * k1.E - 4 * k1.C * k1.D,
                  k1.B * k1.B - 4 * k1.C * k1.A};
    for (const Alg& x : xs) {
      if (sign_of(alg_eval(disc1, x)) >= 0) {
        throw std::runtime_error(
            "unsupported: two conic-conic intersections share a fiber");
      }
    }
    return;
  }
  // Common points satisfy y = -M/L; substitute into f1 scaled by L^2.
  Poly f1c = {k1.F, k1.D, k1.A};   // y-free part
  Poly f1b = {k1.E, k1.B};         // y coefficient
  Poly R = padd(padd(pscale(pmul(M, M), k1.C), pscale(pmul(pmul(f1b, M), L), Rat(-1))),
                pmul(f1c, pmul(L, L)));
  trim(R);
  if (R.empty()) throw std::invalid_argument("duplicate component");
  Poly rem = R;
  std::vector<std::pair<Rat, int>> rr = extract_rational_roots(rem);
  std::vector<std::pair<Alg, int>> roots;
  for (const auto& [r, mult] : rr) roots.emplace_back(Alg(r), mult);
  if (degree(rem) == 2) {
    QuadraticRoots qr = solve_quadratic(rem[2], rem[1], rem[0]);
    if (qr.disc_sign == 0) {
      roots.emplace_back(qr.real[0], 2);
    } else if (qr.disc_sign > 0) {
      roots.emplace_back(qr.real[0], 1);
      roots.emplace_back(qr.real[1], 1);
    }
  } else if (degree(rem) >= 1 && count_real_roots(rem) > 0) {
    // A real x here would name a common point with real y (y = -M/L is a
    // rational function of x), so complex-only remainders are safe to drop.
    throw std::runtime_error("unsupported: conic-conic event of degree > 2 over Q");
  }
  for (const auto& [x, mult] : roots) {
    Alg Lx = alg_eval(L, x);
    if (sign_of(Lx) == 0) {
      // L and R vanish together: proportional fibers at this x.
      throw std::runtime_error(
          "unsupported: two conic-conic intersections share a fiber");
    }
    if (mult > 1) {
      throw std::runtime_error("unsupported: conic-conic tangency");
    }
    SingularEvent e;
    e.x = x;
    e.kind = EventKind::Crossing;
    e.y = alg_mul(alg_neg(alg_eval(M, x)), alg_inv(Lx));
    e.branches = {{i, conic_branch(k1, e.x, e.y)}, {j, conic_branch(k2, e.x, e.y)}};
    out.push_back(std::move(e));
  }
}

void branch_events(const CurveSpec& spec, int i, std::vector<SingularEvent>& out) {
  const auto& k = std::get<Conic>(spec.components[static_cast<std::size_t>(i)]);
  // Discriminant of the fiber quadratic in y.
  Rat c2 = k.B * k.B - 4 * k.C * k.A;
  Rat c1 = 2 * k.B * k.E - 4 * k.C * k.D;
  Rat c0 = k.E * k.E - 4 * k.C * k.F;
  auto push = [&](const Alg& x) {
    SingularEvent e;
    e.x = x;
    e.kind = EventKind::Branch;
    e.y = conic_axis(k, x);
    e.branches = {{i, 0}, {i, 1}};
    out.push_back(std::move(e));
  };
  if (c2 == 0) {
    if (c1 == 0) {
      if (c0 <= 0) throw std::invalid_argument("conic with empty or degenerate real part");
      return;  // always two real branches, no branch point
    }
    push(Alg(-c0 / c1));
    return;
  }
  QuadraticRoots qr = solve_quadratic(c2, c1, c0);
  if (qr.disc_sign == 0) throw std::invalid_argument("degenerate conic (double branch point)");
  if (qr.disc_sign < 0) {
    // Discriminant of constant sign: either always real or never real.
    if (c2 < 0) throw std::invalid_argument("conic with empty real part");
    return;
  }
  push(qr.real[0]);
  push(qr.real[1]);
}

}  // namespace

std::vector<SingularEvent> singular_events(const CurveSpec& c) {
  std::vector<SingularEvent> raw;
  int nc = static_cast<int>(c.components.size());
  for (int i = 0; i < nc; ++i) {
    if (!is_line(c.components[static_cast<std::size_t>(i)])) branch_events(c, i, raw);
    for (int j = i + 1; j < nc; ++j) pair_events(c, i, j, raw);
  }
  std::sort(raw.begin(), raw.end(),
            [](const SingularEvent& a, const SingularEvent& b) { return cmp(a.x, b.x) < 0; });
  // Group events sharing an x-coordinate; only triple points may share.
  std::vector<SingularEvent> out;
  std::size_t s = 0;
  while (s < raw.size()) {
    std::size_t e = s + 1;
    while (e < raw.size() && cmp(raw[e].x, raw[s].x) == 0) ++e;
    if (e - s == 1) {
      out.push_back(raw[s]);
    } else if (e - s == 3) {
      // Candidate triple point: three pairwise crossings at one point.
      for (std::size_t t = s; t < e; ++t) {
        if (raw[t].kind != EventKind::Crossing || cmp(raw[t].y, raw[s].y) != 0) {
          throw std::runtime_error("colliding singular fibers at x = " +
                                   format_alg(raw[s].x));
        }
      }
      std::map<int, int> branches;  // component -> branch
      for (std::size_t t = s; t < e; ++t) {
        for (const BranchRef& br : raw[t].branches) {
          auto it = branches.find(br.component);
          if (it == branches.end()) {
            branches.emplace(br.component, br.branch);
          } else if (it->second != br.branch) {
            throw std::runtime_error("inconsistent triple point at x = " +
                                     format_alg(raw[s].x));
          }
        }
      }
      if (branches.size() != 3) {
        throw std::runtime_error("colliding singular fibers at x = " + format_alg(raw[s].x));
      }
      SingularEvent tp;
      tp.x = raw[s].x;
      tp.y = raw[s].y;
      tp.kind = EventKind::Triple;
      for (const auto& [comp, br] : branches) tp.branches.push_back({comp, br});
      out.push_back(std::move(tp));
    } else {
      throw std::runtime_error("colliding singular fibers at x = " + format_alg(raw[s].x));
    }
    s = e;
  }
  return out;
}

Fiber fiber(const CurveSpec& c, const Rat& x) {
  Fiber f;
  for (int i = 0; i < static_cast<int>(c.components.size()); ++i) {
    const Component& comp = c.components[static_cast<std::size_t>(i)];
    if (is_line(comp)) {
      const auto& l = std::get<Line>(comp);
      f.real.push_back({Alg(l.a * x + l.b), {i, 0}});
      continue;
    }
    const auto& k = std::get<Conic>(comp);
    Rat a, b, cc;
    conic_fiber(k, x, a, b, cc);
    QuadraticRoots qr = solve_quadratic(a, b, cc);
    if (qr.disc_sign < 0) {
      f.complex_pairs.emplace_back(i, qr.center);
      continue;
    }
    if (qr.disc_sign == 0) throw std::runtime_error("fiber taken at a branch point");
    f.real.push_back({qr.real[0], {i, 0}});
    f.real.push_back({qr.real[1], {i, 1}});
  }
  std::sort(f.real.begin(), f.real.end(),
            [](const FiberPoint& a, const FiberPoint& b) { return cmp(a.y, b.y) < 0; });
  for (std::size_t i = 0; i + 1 < f.real.size(); ++i) {
    if (cmp(f.real[i].y, f.real[i + 1].y) == 0) {
      throw std::runtime_error("fiber taken at a singular x");
    }
  }
  std::sort(f.complex_pairs.begin(), f.complex_pairs.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (std::size_t i = 0; i + 1 < f.complex_pairs.size(); ++i) {
    if (f.complex_pairs[i].second == f.complex_pairs[i + 1].second) {
      throw std::runtime_error("unsupported: coincident complex-pair anchors");
    }
  }
  return f;
}

namespace {

// 1-based rank of a branch among the real points of a fiber; throws when
// the branch is not real there.
int real_rank(const Fiber& f, const BranchRef& br) {
  for (std::size_t i = 0; i < f.real.size(); ++i) {
    if (f.real[i].branch == br) return static_cast<int>(i) + 1;
  }
  throw std::runtime_error("branch not real in fiber");
}

bool branch_is_real(const Fiber& f, int component) {
  for (const auto& p : f.real) {
    if (p.branch.component == component) return true;
  }
  return false;
}

// 1-based index of a conic among the complex pairs of a fiber.
int pair_index(const Fiber& f, int component) {
  for (std::size_t i = 0; i < f.complex_pairs.size(); ++i) {
    if (f.complex_pairs[i].first == component) return static_cast<int>(i) + 1;
  }
  throw std::runtime_error("conic not complex in fiber");
}

// Consecutive ranks of the event's branches in a fiber, ascending.
std::pair<int, int> cluster(const Fiber& f, const SingularEvent& e) {
  std::vector<int> ranks;
  for (const BranchRef& br : e.branches) ranks.push_back(real_rank(f, br));
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    if (ranks[i + 1] != ranks[i] + 1) {
      throw std::runtime_error("ambiguous cluster: event branches not consecutive");
    }
  }
  return {ranks.front(), ranks.back()};
}

struct Analysis {
  std::vector<SingularEvent> events;  // ascending x, the excluded events removed
  std::vector<SingularEvent> rho_events;   // excluded on the right, nearest first
  std::vector<SingularEvent> left_events;  // excluded on the left, nearest first
  std::vector<Fiber> samples;         // samples[i] left of events[i]; last = base side
  std::vector<Rat> sample_x;
};

Analysis analyze_geometry(const CurveSpec& c) {
  Analysis a;
  a.events = singular_events(c);
  if (c.exclude_right < 0 || c.exclude_left < 0 ||
      static_cast<std::size_t>(c.exclude_right) + static_cast<std::size_t>(c.exclude_left) >=
          a.events.size()) {
    throw std::invalid_argument("excluded event count out of range");
  }
  for (int t = 0; t < c.exclude_right; ++t) {
    a.rho_events.insert(a.rho_events.begin(), a.events.back());
    a.events.pop_back();
  }
  for (int t = 0; t < c.exclude_left; ++t) {
    a.left_events.insert(a.left_events.begin(), a.events.front());
    a.events.erase(a.events.begin());
  }
  if (a.events.empty()) {
    a.sample_x.push_back(0);
    a.samples.push_back(fiber(c, Rat(0)));
    return a;
  }
  if (a.left_events.empty()) {
    a.sample_x.push_back(rational_below(a.events.front().x));
  } else {
    a.sample_x.push_back(rational_between(a.left_events.front().x, a.events.front().x));
  }
  for (std::size_t i = 0; i + 1 < a.events.size(); ++i) {
    a.sample_x.push_back(rational_between(a.events[i].x, a.events[i + 1].x));
  }
  if (a.rho_events.empty()) {
    a.sample_x.push_back(rational_above(a.events.back().x));
  } else {
    a.sample_x.push_back(rational_between(a.events.back().x, a.rho_events.front().x));
  }
  for (const Rat& x : a.sample_x) a.samples.push_back(fiber(c, x));
  return a;
}

SingularityRow classify(const Analysis& a, std::size_t idx, bool base_right, int j) {
  const SingularEvent& e = a.events[idx];
  const Fiber& left = a.samples[idx];
  const Fiber& right = a.samples[idx + 1];
  const Fiber& near = base_right ? right : left;
  const Fiber& far = base_right ? left : right;
  SingularityRow row;
  row.j = j;
  switch (e.kind) {
    case EventKind::Crossing:
    case EventKind::Triple: {
      auto [k, l] = cluster(near, e);
      if (l - k != (e.kind == EventKind::Triple ? 2 : 1)) {
        throw std::runtime_error("ambiguous cluster: event branches not consecutive");
      }
      row.type = SingType::c;
      row.k = k;
      row.l = l;
      row.delta = MoveKind{MoveType::BlockTwist, k, l, 1};
      return row;
    }
    case EventKind::Tangency: {
      auto [k, l] = cluster(near, e);
      row.type = SingType::b;
      row.k = k;
      row.l = l;
      row.delta = MoveKind{MoveType::BlockTwist, k, l, 2};
      return row;
    }
    case EventKind::Branch: {
      int comp = e.branches.front().component;
      bool real_near = branch_is_real(near, comp);
      const Fiber& real_side = real_near ? near : far;
      const Fiber& complex_side = real_near ? far : near;
      auto [k, l] = cluster(real_side, e);
      if (l != k + 1) throw std::runtime_error("ambiguous branch cluster");
      int pairs_on_complex_side = static_cast<int>(complex_side.complex_pairs.size());
      int idx_in_pairs = pair_index(complex_side, comp);
      // Pair nesting is read in the base point's frame; from -P the frame is
      // the half-turn rotation of the one at M, so anchor ranks count from
      // the top there.
      if (!base_right) idx_in_pairs = pairs_on_complex_side + 1 - idx_in_pairs;
      row.k = k;
      row.l = l;
      if (real_near) {
        // Lowering toward the base point: a1 relative to the base.
        row.type = SingType::a1;
        switch (pairs_on_complex_side) {
          case 1: row.delta = MoveKind{MoveType::I2toR, k}; break;
          case 2:
            row.delta = MoveKind{idx_in_pairs == 1 ? MoveType::I4toI2 : MoveType::I4toI2p, k};
            break;
          case 3:
            if (idx_in_pairs != 3) {
              throw std::runtime_error(
                  "unsupported: level-6 regeneration of a non-outer pair");
            }
            row.delta = MoveKind{MoveType::I6toI4, k};
            break;
          default:
            throw std::runtime_error("unsupported complex level");
        }
      } else {
        // Raising toward the base point: a2 relative to the base.
        row.type = SingType::a2;
        switch (pairs_on_complex_side) {
          case 1: row.delta = MoveKind{MoveType::RtoI2, k}; break;
          case 2:
            if (idx_in_pairs != 1) {
              throw std::runtime_error(
                  "unsupported: pair creation at a non-inner anchor");
            }
            row.delta = MoveKind{MoveType::I2toI4, k};
            break;
          case 3:
            if (idx_in_pairs != 3) {
              throw std::runtime_error(
                  "unsupported: pair creation at a non-outer anchor");
            }
            row.delta = MoveKind{MoveType::I4toI6, k};
            break;
          default:
            throw std::runtime_error("unsupported complex level");
        }
      }
      return row;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SingularityTable lefschetz_table(const CurveSpec& c, bool base_right) {
  Analysis a = analyze_geometry(c);
  SingularityTable table;
  table.n = c.degree();
  table.reversed = !base_right;
  const Fiber& base = base_right ? a.samples.back() : a.samples.front();
  table.base_model.n = table.n;
  table.base_model.complex_pairs = static_cast<int>(base.complex_pairs.size());
  table.labels = numeric_labels(table.n);
  // Geometric travel positions of the base-fiber complex pairs: each pair
  // occupies (p, p+1) where p counts the points below its anchor.
  {
    std::size_t ri = 0;
    int placed = 0;
    for (const auto& [comp, anchor] : base.complex_pairs) {
      while (ri < base.real.size() && cmp(base.real[ri].y, Alg(anchor)) < 0) ++ri;
      table.pair_positions.push_back(static_cast<int>(ri) + 2 * placed + 1);
      ++placed;
    }
  }
  // Primed labels: a conic whose two fiber points sit at adjacent positions
  // (p, p+1) is written p, p' in the tables.
  {
    std::vector<int> comp;
    comp.reserve(static_cast<std::size_t>(table.n));
    for (const FiberPoint& fp : base.real) comp.push_back(fp.branch.component);
    for (std::size_t k = 0; k < base.complex_pairs.size(); ++k) {
      auto at = comp.begin() + (table.pair_positions[k] - 1);
      comp.insert(at, 2, base.complex_pairs[k].first);
    }
    for (std::size_t p = 0; p + 1 < comp.size(); ++p) {
      if (comp[p] == comp[p + 1]) {
        table.labels.labels[p + 1] = table.labels.labels[p] + "'";
        ++p;
      }
    }
  }
  // A symmetric curve's table is presented as its near half only; the far
  // half is recovered from the half-turn symmetry.
  std::size_t keep = a.events.size();
  if (c.symmetric) {
    if (keep % 2 != 0) {
      throw std::invalid_argument("symmetric curve with an odd event count");
    }
    keep /= 2;
  }
  if (base_right) {
    for (std::size_t t = a.events.size(); t-- > a.events.size() - keep;) {
      table.rows.push_back(classify(a, t, true, static_cast<int>(a.events.size() - t)));
    }
  } else {
    // Reversed numbering counts down from the total so that the two half
    // tables of a symmetric curve share one j range.
    for (std::size_t t = 0; t < keep; ++t) {
      table.rows.push_back(classify(a, t, false, static_cast<int>(a.events.size() - t)));
    }
  }
  // Threading sanity: complex level transitions must match the move kinds.
  {
    Model m = table.base_model;
    for (const auto& row : table.rows) {
      if (row.delta.type != MoveType::BlockTwist) {
        if (m.complex_pairs != target_pairs(row.delta)) {
          throw std::runtime_error("model threading violation in geometric table");
        }
        m.complex_pairs = source_pairs(row.delta);
      }
    }
    const Fiber& far_end =
        base_right ? a.samples[a.events.size() - keep] : a.samples[keep];
    if (m.complex_pairs != static_cast<int>(far_end.complex_pairs.size())) {
      throw std::runtime_error("model threading violation in geometric table");
    }
  }
  return table;
}

std::vector<MoveKind> rho_moves(const CurveSpec& c) {
  Analysis a = analyze_geometry(c);
  std::vector<MoveKind> out;
  // Each excluded event's positions are read in the gap on its own left.
  std::vector<Alg> xs;
  for (const auto& e : a.rho_events) xs.push_back(e.x);
  for (std::size_t t = 0; t < a.rho_events.size(); ++t) {
    Rat sample = t == 0 ? a.sample_x.back()
                        : rational_between(xs[t - 1], xs[t]);
    Fiber f = fiber(c, sample);
    auto [k, l] = cluster(f, a.rho_events[t]);
    if (a.rho_events[t].kind != EventKind::Crossing || l != k + 1) {
      throw std::runtime_error("excluded events must be simple crossings");
    }
    out.push_back(MoveKind{MoveType::BlockTwist, k, l, 1});
  }
  return out;
}

std::string analyze(const CurveSpec& c, bool base_right) {
  TableFile tf;
  tf.table = lefschetz_table(c, base_right);
  if (c.symmetric && c.exclude_right > 0 && base_right) {
    tf.s2_mode = true;
    tf.rho = rho_moves(c);
  }
  return format_table(tf);
}

}  // namespace bm
