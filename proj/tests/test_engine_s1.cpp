#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bm/engine.hpp"
#include "bm/notation.hpp"

using namespace bm;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture(const std::string& name) {
  return std::string(BM_FIXTURES_DIR) + "/" + name;
}

std::vector<std::string> expected_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

// For the accumulation of gamma_{rows[index].j}: which of the earlier rows'
// moves actually change the band (keyed by row j).
std::map<int, bool> trace_changes(const SingularityTable& table, std::size_t index) {
  std::map<int, bool> changed;
  Band b = seed_bands(table, index)[0];
  Model m = seed_model(table, index);
  for (std::size_t t = index; t-- > 0;) {
    Band before = b;
    std::tie(b, m) = apply_move(table.rows[t].delta, m, b);
    changed[table.rows[t].j] = !band_equal(before, b);
  }
  return changed;
}

}  // namespace

TEST_CASE("S1: all 28 factors match the printed braids") {
  TableFile tf = parse_table(slurp(fixture("s1_table.txt")));
  std::vector<Factor> factors = braid_monodromy(tf.table);
  std::vector<std::string> lines = expected_lines(slurp(fixture("s1_expected.txt")));
  REQUIRE(factors.size() == 28);
  REQUIRE(lines.size() == 28);
  int eps_total = 0;
  for (std::size_t i = 0; i < 28; ++i) {
    CAPTURE(i);
    CAPTURE(lines[i]);
    BandResult want = to_band(parse_expr(lines[i], tf.table.labels), tf.table.labels);
    CHECK(want.exponent == factors[i].epsilon);
    CHECK(band_equal(want.band, factors[i].band));
    eps_total += factors[i].epsilon;
  }
  CHECK(eps_total == 62);
}

TEST_CASE("S1: factor words satisfy the exponent and permutation invariants") {
  TableFile tf = parse_table(slurp(fixture("s1_table.txt")));
  for (const Factor& f : braid_monodromy(tf.table)) {
    CAPTURE(f.j);
    BraidWord w = f.word();
    CHECK(exponent_sum(w) == f.epsilon);
    auto [x, y] = band_endpoints(f.band);
    std::vector<int> p = permutation(w);
    if (f.epsilon % 2 == 0) {
      // even power of a halftwist: pure braid
      for (int i = 1; i <= 12; ++i) CHECK(p[static_cast<std::size_t>(i - 1)] == i);
    } else {
      CHECK(p[static_cast<std::size_t>(x - 1)] == y);
      CHECK(p[static_cast<std::size_t>(y - 1)] == x);
      for (int i = 1; i <= 12; ++i) {
        if (i != x && i != y) CHECK(p[static_cast<std::size_t>(i - 1)] == i);
      }
    }
  }
}

TEST_CASE("S1: the four worked traces change the band exactly where printed") {
  TableFile tf = parse_table(slurp(fixture("s1_table.txt")));
  const auto& rows = tf.table.rows;
  auto index_of = [&](int j) {
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (rows[t].j == j) return t;
    }
    REQUIRE(false);
    return std::size_t{0};
  };

  // gamma_5: every accumulated move is shown acting.
  {
    std::map<int, bool> ch = trace_changes(tf.table, index_of(5));
    CHECK(ch.size() == 4);
  }
  // gamma_11: "Delta<2,3> doesn't change it"; the Delta^2<8,9>, Delta<7,8>,
  // Delta<6,7> block leaves it fixed; Delta<4,5> and Delta<3,4> act.
  {
    std::map<int, bool> ch = trace_changes(tf.table, index_of(11));
    for (int j : {10, 6, 5, 4, 3}) {
      CAPTURE(j);
      CHECK_FALSE(ch.at(j));
    }
    for (int j : {9, 8}) {
      CAPTURE(j);
      CHECK(ch.at(j));
    }
  }
  // gamma_16.
  {
    std::map<int, bool> ch = trace_changes(tf.table, index_of(16));
    for (int j : {15, 14, 13, 10, 6, 5, 4}) {
      CAPTURE(j);
      CHECK_FALSE(ch.at(j));
    }
  }
  // gamma_26.
  {
    std::map<int, bool> ch = trace_changes(tf.table, index_of(26));
    for (int j : {25, 24, 22, 19, 18, 17, 13, 6}) {
      CAPTURE(j);
      CHECK_FALSE(ch.at(j));
    }
    CHECK(ch.at(4));
  }
}
