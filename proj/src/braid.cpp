#include "lh/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace lh {

namespace {

void check_strands(int n) {
  if (n < 1) throw InvalidInput("strand count must be positive, got " + std::to_string(n));
}

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

struct Token {
  bool pure = false;
  int a = 0;
  int b = 0;
  int sign = 1;
};

int parse_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw InvalidInput("malformed token '" + std::string(token) + "'");
  }
  return v;
}

Token parse_token(std::string_view tok) {
  Token t;
  std::string_view body = tok;
  if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
    t.sign = -1;
    body.remove_suffix(3);
  }
  if (body.empty()) throw InvalidInput("malformed token '" + std::string(tok) + "'");
  if (body[0] == 's') {
    t.a = parse_int(body.substr(1), tok);
  } else if (body[0] == 'a') {
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw InvalidInput("malformed token '" + std::string(tok) + "'");
    }
    t.pure = true;
    t.a = parse_int(body.substr(1, comma - 1), tok);
    t.b = parse_int(body.substr(comma + 1), tok);
  } else {
    throw InvalidInput("malformed token '" + std::string(tok) + "'");
  }
  return t;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw InvalidInput("generator index " + std::to_string(l.index) + " out of range for " +
                         std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw InvalidInput("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int k = 0; k < n; ++k) p.images[k] = k + 1;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) p.images[images[k] - 1] = static_cast<int>(k) + 1;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation p;
  p.images.resize(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) p.images[k] = other(images[k]);
  return p;
}

BraidWord parse_braid_word(std::string_view text, int n) {
  check_strands(n);
  std::vector<Letter> letters;
  for (auto tok : split_ws(text)) {
    Token t = parse_token(tok);
    if (!t.pure) {
      if (t.a > n - 1) {
        throw InvalidInput("token '" + std::string(tok) + "' out of range for " +
                           std::to_string(n) + " strands");
      }
      push_reduced(letters, {t.a, t.sign});
      continue;
    }
    if (t.a >= t.b || t.b > n) {
      throw InvalidInput("token '" + std::string(tok) + "' is not a pure generator for " +
                         std::to_string(n) + " strands");
    }
    BraidWord g = expand_pure_generator({t.a, t.b}, n);
    if (t.sign < 0) g = invert(g);
    for (const auto& l : g.letters()) push_reduced(letters, l);
  }
  return BraidWord(n, std::move(letters));
}

std::string format_braid_word(const BraidWord& b) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : b.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

int infer_strand_count(std::string_view text) {
  int n = 1;
  for (auto tok : split_ws(text)) {
    Token t = parse_token(tok);
    n = std::max(n, t.pure ? t.b : t.a + 1);
  }
  return n;
}

BraidWord expand_pure_generator(PureGenerator g, int n) {
  check_strands(n);
  if (g.i < 1 || g.i >= g.j || g.j > n) {
    throw InvalidInput("pure generator A(" + std::to_string(g.i) + "," + std::to_string(g.j) +
                       ") invalid for " + std::to_string(n) + " strands");
  }
  std::vector<Letter> letters;
  for (int k = g.j - 1; k > g.i; --k) letters.push_back({k, 1});
  letters.push_back({g.i, 1});
  letters.push_back({g.i, 1});
  for (int k = g.i + 1; k < g.j; ++k) letters.push_back({k, -1});
  return BraidWord(n, std::move(letters));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw InvalidInput("strand count mismatch: " + std::to_string(a.strands()) + " vs " +
                       std::to_string(b.strands()));
  }
  std::vector<Letter> out = a.letters();
  out.reserve(a.size() + b.size());
  for (const auto& l : b.letters()) push_reduced(out, l);
  return BraidWord(a.strands(), std::move(out));
}

BraidWord invert(const BraidWord& a) {
  std::vector<Letter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    out.push_back({it->index, -it->sign});
  }
  return BraidWord(a.strands(), std::move(out));
}

BraidWord power(const BraidWord& a, Int e) {
  const BraidWord base = e < 0 ? invert(a) : a;
  BraidWord out(a.strands());
  for (Int k = 0; k < (e < 0 ? -e : e); ++k) out = compose(out, base);
  return out;
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return compose(compose(compose(a, b), invert(a)), invert(b));
}

Permutation permutation_of(const BraidWord& a) {
  // strand_at[k]: strand (labelled by start position) now at position k+1
  std::vector<int> strand_at(a.strands());
  for (int k = 0; k < a.strands(); ++k) strand_at[k] = k + 1;
  for (const auto& l : a.letters()) std::swap(strand_at[l.index - 1], strand_at[l.index]);
  Permutation p;
  p.images.resize(a.strands());
  for (int pos = 0; pos < a.strands(); ++pos) p.images[strand_at[pos] - 1] = pos + 1;
  return p;
}

bool is_pure(const BraidWord& a) { return permutation_of(a).is_identity(); }

BraidWord forget_strands(const BraidWord& b, const std::vector<int>& keep) {
  const int n = b.strands();
  std::vector<int> label(n + 1, 0);
  int kept = 0;
  for (int s : keep) {
    if (s < 1 || s > n || label[s] != 0 || (kept > 0 && s <= keep[kept - 1])) {
      throw InvalidInput("strand list must be strictly increasing within 1.." + std::to_string(n));
    }
    label[s] = ++kept;
  }
  if (kept == 0) throw InvalidInput("cannot forget every strand");
  // Strands are identified by their starting position.
  std::vector<int> strand_at(n);
  for (int k = 0; k < n; ++k) strand_at[k] = k + 1;
  std::vector<Letter> out;
  for (const auto& l : b.letters()) {
    int left = strand_at[l.index - 1];
    int right = strand_at[l.index];
    if (label[left] != 0 && label[right] != 0) {
      int new_index = 0;
      for (int pos = 0; pos < l.index; ++pos) {
        if (label[strand_at[pos]] != 0) ++new_index;
      }
      push_reduced(out, {new_index, l.sign});
    }
    std::swap(strand_at[l.index - 1], strand_at[l.index]);
  }
  return BraidWord(kept, std::move(out));
}

}  // namespace lh
