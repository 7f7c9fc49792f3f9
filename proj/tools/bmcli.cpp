#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bm/arrangement.hpp"
#include "bm/dict.hpp"
#include "bm/engine.hpp"
#include "bm/notation.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct PrintedFactor {
  std::string tag;
  bm::Factor factor;
};

// All factors of a table file, including the conjugated second half in
// s2 mode.
std::vector<PrintedFactor> all_factors(const bm::TableFile& tf) {
  std::vector<PrintedFactor> out;
  std::vector<bm::Factor> first = bm::braid_monodromy(tf.table);
  auto tag_of = [](const bm::Factor& f, bool second) {
    std::string t = (second ? "j'=" : "j=") + std::to_string(f.j);
    if (f.part) t += "." + std::to_string(f.part);
    return t;
  };
  for (const auto& f : first) out.push_back({tag_of(f, false), f});
  if (tf.s2_mode) {
    std::vector<bm::Factor> second = bm::conjugate_factorization(first, bm::rho_word(tf));
    for (const auto& f : second) out.push_back({tag_of(f, true), f});
  }
  return out;
}

void print_factors(std::ostream& os, const bm::TableFile& tf, const std::string& format) {
  for (const auto& [tag, f] : all_factors(tf)) {
    os << tag << " eps=" << f.epsilon;
    if (format == "pretty" || format == "both") {
      std::string pretty = bm::pretty_band(f.band, f.epsilon, tf.table.labels);
      os << " pretty=" << (pretty.empty() ? "-" : pretty);
    }
    if (format == "words" || format == "both") {
      os << " word=" << bm::format_braid(f.word());
    }
    os << '\n';
  }
}

// Expected file: one expression per non-comment line, or the word "skip".
std::vector<std::string> read_expected(const std::string& text) {
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

int run_check(const bm::TableFile& tf, const std::string& expected_text) {
  std::vector<std::string> expected = read_expected(expected_text);
  std::vector<PrintedFactor> factors = all_factors(tf);
  if (expected.size() != factors.size()) {
    std::cerr << "expected " << expected.size() << " entries for " << factors.size()
              << " factors\n";
    return 3;
  }
  int mismatches = 0, defaulted = 0, skipped = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [tag, f] = factors[i];
    if (expected[i] == "skip") {
      std::cout << tag << " skipped\n";
      ++skipped;
      continue;
    }
    bm::DecoratedExpr e = bm::parse_expr(expected[i], tf.table.labels);
    bm::BandResult want = bm::to_band(e, tf.table.labels);
    bool ok = want.exponent == f.epsilon && bm::band_equal(want.band, f.band);
    if (want.convention_defaulted) ++defaulted;
    std::cout << tag << (ok ? " ok" : " MISMATCH")
              << (want.convention_defaulted ? " (defaulted side)" : "") << '\n';
    if (!ok) ++mismatches;
  }
  std::cout << factors.size() - static_cast<std::size_t>(skipped) << " checked, "
            << mismatches << " mismatches, " << defaulted << " defaulted, " << skipped
            << " skipped\n";
  return mismatches ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid monodromy of line-conic arrangements"};
  app.require_subcommand(1);

  std::string curve_path, table_path, expected_path, out_path, basepoint = "right";
  std::string format = "both";

  CLI::App* analyze = app.add_subcommand("analyze", "curve file -> singularity table");
  analyze->add_option("curve", curve_path)->required();
  analyze->add_option("--basepoint", basepoint)->check(CLI::IsMember({"right", "left"}));
  analyze->add_option("--out", out_path);

  CLI::App* monodromy = app.add_subcommand("monodromy", "table file -> factor list");
  monodromy->add_option("table", table_path)->required();
  monodromy->add_option("--format", format)->check(CLI::IsMember({"words", "pretty", "both"}));

  CLI::App* check = app.add_subcommand("check", "compare factors against expected bands");
  check->add_option("table", table_path)->required();
  check->add_option("expected", expected_path)->required();

  app.add_subcommand("dict", "run the eight dictionary calibration entries");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      bm::CurveSpec spec = bm::parse_curve(read_file(curve_path));
      std::string table = bm::analyze(spec, basepoint == "right");
      if (out_path.empty()) {
        std::cout << table;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << table;
      }
      return 0;
    }
    if (monodromy->parsed()) {
      bm::TableFile tf = bm::parse_table(read_file(table_path));
      print_factors(std::cout, tf, format);
      return 0;
    }
    if (check->parsed()) {
      bm::TableFile tf = bm::parse_table(read_file(table_path));
      return run_check(tf, read_file(expected_path));
    }
    // dict
    int passed = 0, total = 0;
    for (int n : {10, 12}) {
      for (int k = 3; k <= n - 6; ++k) {
        for (const auto& r : bm::run_dictionary(n, k)) {
          ++total;
          if (r.ok) ++passed;
          else std::cout << "n=" << n << " k=" << k << " FAIL " << r.name << '\n';
        }
      }
    }
    std::cout << passed / (total / 8) << "/8 entries hold ("
              << passed << "/" << total << " instances)\n";
    return passed == total ? 0 : 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
