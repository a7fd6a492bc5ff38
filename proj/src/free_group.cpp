#include "lh/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace lh {

namespace {

void push_reduced(std::vector<GenLetter>& out, GenLetter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void append(std::vector<GenLetter>& out, const std::vector<GenLetter>& w, int sign) {
  if (sign > 0) {
    for (const auto& l : w) push_reduced(out, l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, {it->gen, -it->sign});
  }
}

GenLetter parse_letter(std::string_view tok) {
  std::string_view body = tok;
  int sign = 1;
  if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
    sign = -1;
    body.remove_suffix(3);
  }
  int k = 0;
  if (body.size() < 2 || body[0] != 'x') throw InvalidInput("malformed token '" + std::string(tok) + "'");
  auto [ptr, ec] = std::from_chars(body.data() + 1, body.data() + body.size(), k);
  if (ec != std::errc() || ptr != body.data() + body.size() || k < 1) {
    throw InvalidInput("malformed token '" + std::string(tok) + "'");
  }
  return {k, sign};
}

std::vector<std::string_view> tokens(std::string_view text) {
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

// Image of the generator x_k under one Artin letter.
std::vector<GenLetter> letter_image(Letter s, int k) {
  const int i = s.index;
  if (s.sign > 0) {
    if (k == i) return {{i + 1, 1}};
    if (k == i + 1) return {{i + 1, -1}, {i, 1}, {i + 1, 1}};
  } else {
    if (k == i + 1) return {{i, 1}};
    if (k == i) return {{i, 1}, {i + 1, 1}, {i, -1}};
  }
  return {{k, 1}};
}

}  // namespace

ReducedWord::ReducedWord(int rank) : rank_(rank) {
  if (rank < 1) throw InvalidInput("rank must be positive, got " + std::to_string(rank));
}

ReducedWord::ReducedWord(int rank, const std::vector<GenLetter>& letters) : ReducedWord(rank) {
  for (const auto& l : letters) {
    if (l.gen < 1 || l.gen > rank) {
      throw InvalidInput("generator x" + std::to_string(l.gen) + " out of range for rank " +
                         std::to_string(rank));
    }
    if (l.sign != 1 && l.sign != -1) throw InvalidInput("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

ReducedWord ReducedWord::generator(int rank, int k, int sign) { return ReducedWord(rank, {{k, sign}}); }

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank() != b.rank()) {
    throw InvalidInput("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
  std::vector<GenLetter> out = a.letters();
  append(out, b.letters(), 1);
  return ReducedWord(a.rank(), out);
}

ReducedWord inverse(const ReducedWord& a) {
  std::vector<GenLetter> out;
  append(out, a.letters(), -1);
  return ReducedWord(a.rank(), out);
}

ReducedWord power(const ReducedWord& a, Int e) {
  std::vector<GenLetter> out;
  for (Int k = 0; k < (e < 0 ? -e : e); ++k) append(out, a.letters(), e < 0 ? -1 : 1);
  return ReducedWord(a.rank(), out);
}

ReducedWord commutator(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank() != b.rank()) throw InvalidInput("rank mismatch in commutator");
  std::vector<GenLetter> out = a.letters();
  append(out, b.letters(), 1);
  append(out, a.letters(), -1);
  append(out, b.letters(), -1);
  return ReducedWord(a.rank(), out);
}

ReducedWord commutator_word(int rank, const std::vector<int>& sequence) {
  if (sequence.empty()) throw InvalidInput("empty commutator sequence");
  ReducedWord w = ReducedWord::generator(rank, sequence[0]);
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    w = commutator(w, ReducedWord::generator(rank, sequence[k]));
  }
  return w;
}

ReducedWord parse_reduced_word(std::string_view text, int rank) {
  std::vector<GenLetter> letters;
  for (auto tok : tokens(text)) letters.push_back(parse_letter(tok));
  return ReducedWord(rank, letters);
}

std::string format_reduced_word(const ReducedWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters().size(); ++k) {
    if (k) os << ' ';
    os << 'x' << w.letters()[k].gen;
    if (w.letters()[k].sign < 0) os << "^-1";
  }
  return os.str();
}

int infer_rank(std::string_view text) {
  int n = 1;
  for (auto tok : tokens(text)) n = std::max(n, parse_letter(tok).gen);
  return n;
}

ReducedWord artin_act(const BraidWord& b, const ReducedWord& w) {
  if (b.strands() != w.rank()) {
    throw InvalidInput("braid has " + std::to_string(b.strands()) + " strands but word has rank " +
                       std::to_string(w.rank()));
  }
  std::vector<GenLetter> cur = w.letters();
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    std::vector<GenLetter> next;
    next.reserve(cur.size());
    for (const auto& l : cur) append(next, letter_image(*it, l.gen), l.sign);
    cur = std::move(next);
  }
  return ReducedWord(w.rank(), cur);
}

}  // namespace lh
