#include "wordmeasure/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace wm {

char Letter::display() const {
  const char c = static_cast<char>('a' + generator);
  return sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

bool FreeWord::is_reduced() const {
  for (size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  return true;
}

bool FreeWord::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  return letters_.size() < 2 || !(letters_.front() == letters_.back().inverse());
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (const auto& l : letters_) s.push_back(l.display());
  return s;
}

FreeWord reduce(const FreeWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return FreeWord(std::move(stack));
}

CyclicReduction cyclically_reduce(const FreeWord& w) {
  const auto& ls = w.letters();
  size_t lo = 0;
  size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {FreeWord(std::vector<Letter>(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi))),
          FreeWord(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(lo)))};
}

FreeWord invert(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord concat(const FreeWord& w, const FreeWord& v) {
  std::vector<Letter> out = w.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return reduce(FreeWord(std::move(out)));
}

FreeWord power(const FreeWord& w, int exponent) {
  const FreeWord base = exponent < 0 ? invert(w) : w;
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(exponent); ++i) out.insert(out.end(), base.letters().begin(), base.letters().end());
  return reduce(FreeWord(std::move(out)));
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

FreeWord substitute(const FreeWord& w, const std::map<int, FreeWord>& images) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    auto it = images.find(l.generator);
    if (it == images.end()) {
      out.push_back(l);
      continue;
    }
    const FreeWord piece = l.sign > 0 ? it->second : invert(it->second);
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return reduce(FreeWord(std::move(out)));
}

FreeWord rotate(const FreeWord& w, int shift) {
  if (w.is_identity()) return w;
  const int len = static_cast<int>(w.length());
  shift = ((shift % len) + len) % len;
  std::vector<Letter> out(w.letters().begin() + shift, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + shift);
  return reduce(FreeWord(std::move(out)));
}

std::string WordTuple::to_string() const {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s += ",";
    s += w.to_string();
  }
  for (int i = 0; i < trivial; ++i) {
    if (!s.empty()) s += ",";
    s += "1";
  }
  return s;
}

WordTuple make_word_tuple(const std::vector<FreeWord>& words) {
  WordTuple t;
  for (const auto& w : words) {
    FreeWord r = reduce(w);
    if (r.is_identity())
      ++t.trivial;
    else
      t.words.push_back(std::move(r));
  }
  return t;
}

bool TupleStats::balanced() const {
  return std::all_of(generators.begin(), generators.end(), [](const GeneratorStats& g) { return g.balanced(); });
}

const GeneratorStats* TupleStats::find(int generator) const {
  for (const auto& g : generators)
    if (g.generator == generator) return &g;
  return nullptr;
}

int TupleStats::total_positive() const {
  int total = 0;
  for (const auto& g : generators) total += g.positive_count;
  return total;
}

TupleStats letter_stats(const WordTuple& t) {
  std::map<int, GeneratorStats> by_gen;
  for (size_t wi = 0; wi < t.words.size(); ++wi) {
    const auto& ls = t.words[wi].letters();
    for (size_t li = 0; li < ls.size(); ++li) {
      auto& g = by_gen[ls[li].generator];
      g.generator = ls[li].generator;
      LetterPosition pos{static_cast<int>(wi), static_cast<int>(li)};
      if (ls[li].sign > 0) {
        ++g.positive_count;
        g.positive.push_back(pos);
      } else {
        ++g.negative_count;
        g.negative.push_back(pos);
      }
    }
  }
  TupleStats stats;
  for (auto& [gen, g] : by_gen) stats.generators.push_back(std::move(g));
  return stats;
}

ParseError::ParseError(const std::string& message, size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::string_view> alphabet) : text_(text), alphabet_(alphabet) {}

  WordTuple tuple() {
    std::vector<FreeWord> words;
    words.push_back(word());
    while (peek() == ',') {
      ++pos_;
      words.push_back(word());
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return make_word_tuple(words);
  }

  FreeWord single_word() {
    FreeWord w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return reduce(w);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_atom(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '[' || c == '(';
  }

  FreeWord word() {
    if (peek() == '1') {
      ++pos_;
      return FreeWord();
    }
    if (!starts_atom(peek())) fail(pos_ < text_.size() ? "expected a word" : "unexpected end of input");
    std::vector<Letter> out;
    while (starts_atom(peek())) {
      FreeWord f = factor();
      out.insert(out.end(), f.letters().begin(), f.letters().end());
    }
    return reduce(FreeWord(std::move(out)));
  }

  FreeWord factor() {
    FreeWord a = atom();
    if (peek() != '^') return a;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_space();
    const size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max() / 2) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected digits after '^'");
    return power(a, static_cast<int>(negative ? -value : value));
  }

  FreeWord atom() {
    const char c = peek();
    if (c == '[') {
      ++pos_;
      FreeWord u = word();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      FreeWord v = word();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      FreeWord u = word();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return u;
    }
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (alphabet_ && alphabet_->find(lower) == std::string_view::npos)
      throw UnknownGenerator("unknown generator '" + std::string(1, lower) + "' at position " + std::to_string(pos_));
    ++pos_;
    return FreeWord({Letter{lower - 'a', c == lower ? 1 : -1}});
  }

  std::string_view text_;
  std::optional<std::string_view> alphabet_;
  size_t pos_ = 0;
};

}  // namespace

WordTuple parse(std::string_view text, std::optional<std::string_view> alphabet) {
  return Parser(text, alphabet).tuple();
}

FreeWord parse_word(std::string_view text) { return Parser(text, std::nullopt).single_word(); }

std::string_view grammar_help() {
  return "word tuple syntax: words separated by ',', each a product of letters "
         "(a-z generators, A-Z inverses), '[u,v]' commutators, '(u)' groups, "
         "optional '^k' or '^-k' powers, or '1' for the identity; e.g. \"[x,y]^2\" or \"x^2y^2,xy^-3x^-3y\"";
}

}  // namespace wm
