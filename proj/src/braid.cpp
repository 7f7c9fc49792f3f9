#include "bm/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace bm {

namespace {

void check_letter(int n, int index, int sign) {
  if (index < 1 || index > n - 1) {
    throw std::invalid_argument("generator index " + std::to_string(index) +
                                " out of range for B_" + std::to_string(n));
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<BraidLetter> ls)
    : strand_count(n), letters(std::move(ls)) {
  for (const auto& l : letters) check_letter(n, l.index, l.sign);
}

void BraidWord::push(int index, int sign) {
  check_letter(strand_count, index, sign);
  letters.push_back({index, sign});
}

BraidWord identity_braid(int n) { return BraidWord(n); }

BraidWord generator(int n, int index, int sign) {
  BraidWord w(n);
  w.push(index, sign);
  return w;
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strand_count != w2.strand_count) {
    throw std::invalid_argument("strand-count mismatch in compose");
  }
  BraidWord out = w1;
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  return out;
}

BraidWord invert(const BraidWord& w) {
  BraidWord out(w.strand_count);
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back({it->index, -it->sign});
  }
  return out;
}

BraidWord power(const BraidWord& w, int e) {
  BraidWord base = e < 0 ? invert(w) : w;
  int reps = e < 0 ? -e : e;
  BraidWord out(w.strand_count);
  out.letters.reserve(base.letters.size() * static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    out.letters.insert(out.letters.end(), base.letters.begin(),
                       base.letters.end());
  }
  return out;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (const auto& l : w.letters) s += l.sign;
  return s;
}

void FreeWord::push(int index, int sign) {
  if (!letters.empty() && letters.back().first == index &&
      letters.back().second == -sign) {
    letters.pop_back();
    return;
  }
  letters.emplace_back(index, sign);
}

void FreeWord::push_word(const FreeWord& w) {
  for (const auto& [i, s] : w.letters) push(i, s);
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push(it->first, -it->second);
  }
  return out;
}

namespace {

// Substitutes one sigma_i^sign into a free word (x_j -> image).
FreeWord apply_letter(const FreeWord& w, int i, int sign) {
  FreeWord out;
  for (const auto& [j, s] : w.letters) {
    // Images of the generator x_j under sigma_i^sign.
    FreeWord img;
    if (sign > 0) {
      if (j == i) {
        img.push(i, +1);
        img.push(i + 1, +1);
        img.push(i, -1);
      } else if (j == i + 1) {
        img.push(i, +1);
      } else {
        img.push(j, +1);
      }
    } else {
      if (j == i) {
        img.push(i + 1, +1);
      } else if (j == i + 1) {
        img.push(i + 1, -1);
        img.push(i, +1);
        img.push(i + 1, +1);
      } else {
        img.push(j, +1);
      }
    }
    out.push_word(s > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace

ArtinAutomorphism artin_action(const BraidWord& w) {
  ArtinAutomorphism a;
  a.images.resize(static_cast<std::size_t>(w.strand_count));
  for (int i = 1; i <= w.strand_count; ++i) {
    FreeWord x;
    x.push(i, +1);
    // Letters act left to right: the first letter of the word acts first,
    // so its substitution is applied first.
    for (const auto& l : w.letters) x = apply_letter(x, l.index, l.sign);
    a.images[static_cast<std::size_t>(i - 1)] = std::move(x);
  }
  return a;
}

bool equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strand_count != w2.strand_count) {
    throw std::invalid_argument("strand-count mismatch in equal");
  }
  // Compare images generator by generator; bail out early on a mismatch.
  const BraidWord probe = compose(w1, invert(w2));
  ArtinAutomorphism a = artin_action(probe);
  for (int i = 1; i <= probe.strand_count; ++i) {
    FreeWord x;
    x.push(i, +1);
    if (a.images[static_cast<std::size_t>(i - 1)] != x) return false;
  }
  return true;
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> pos(static_cast<std::size_t>(w.strand_count));
  for (int i = 0; i < w.strand_count; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  // pos[p-1] = puncture currently at position p; apply letters in order.
  for (const auto& l : w.letters) {
    std::swap(pos[static_cast<std::size_t>(l.index - 1)],
              pos[static_cast<std::size_t>(l.index)]);
  }
  std::vector<int> out(static_cast<std::size_t>(w.strand_count));
  for (int p = 1; p <= w.strand_count; ++p) {
    out[static_cast<std::size_t>(pos[static_cast<std::size_t>(p - 1)] - 1)] = p;
  }
  return out;
}

BraidWord block_halftwist(int k, int l, int n) {
  if (!(1 <= k && k < l && l <= n)) {
    throw std::invalid_argument("block_halftwist indices out of range");
  }
  // Standard positive word (sigma_k)(sigma_{k+1} sigma_k)...(sigma_{l-1}...sigma_k).
  BraidWord w(n);
  for (int top = k; top <= l - 1; ++top) {
    for (int i = top; i >= k; --i) w.push(i, +1);
  }
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    int exp = static_cast<int>(j - i) * w.letters[i].sign;
    if (!first) os << ' ';
    first = false;
    os << 's' << w.letters[i].index;
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text, int n) {
  BraidWord w(n);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.empty() || tok[0] != 's') {
      throw std::invalid_argument("bad braid token: " + tok);
    }
    std::size_t caret = tok.find('^');
    int index = 0;
    int exp = 1;
    try {
      index = std::stoi(tok.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1));
      if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid token: " + tok);
    }
    int sign = exp < 0 ? -1 : +1;
    for (int r = 0; r < (exp < 0 ? -exp : exp); ++r) w.push(index, sign);
  }
  return w;
}

}  // namespace bm
