// Free-group words over single-letter generators, and tuples of them.
//
// Generators are the lowercase ASCII letters; the basis position of a
// generator is its alphabet index. An uppercase letter is the inverse of the
// corresponding lowercase generator.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wm {

struct Letter {
  int generator = 0;  // 0 = 'a', ..., 25 = 'z'
  int sign = 1;       // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  char display() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  /// Compact form: "xyXY"; the identity renders as "1".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction.
FreeWord reduce(const FreeWord& w);

struct CyclicReduction {
  FreeWord core;        // cyclically reduced
  FreeWord conjugator;  // w = conjugator * core * conjugator^-1
};
/// Requires a reduced word.
CyclicReduction cyclically_reduce(const FreeWord& w);

FreeWord invert(const FreeWord& w);
FreeWord concat(const FreeWord& w, const FreeWord& v);
/// Any integer exponent; negative powers invert.
FreeWord power(const FreeWord& w, int exponent);
/// Commutator u v u^-1 v^-1, reduced.
FreeWord commutator(const FreeWord& u, const FreeWord& v);
/// Applies the endomorphism sending each generator g in `images` to images[g]
/// (other generators fixed), then reduces.
FreeWord substitute(const FreeWord& w, const std::map<int, FreeWord>& images);
/// Cyclic rotation by `shift` letters to the left.
FreeWord rotate(const FreeWord& w, int shift);

/// Reduced non-trivial words plus the number of identity words removed.
struct WordTuple {
  std::vector<FreeWord> words;
  int trivial = 0;

  /// Words joined by ',' followed by "1" for each trivial word.
  std::string to_string() const;
  friend bool operator==(const WordTuple&, const WordTuple&) = default;
};

/// Reduces every word and moves identities into the trivial count.
WordTuple make_word_tuple(const std::vector<FreeWord>& words);

struct LetterPosition {
  int word = 0;    // 0-based word index in the tuple
  int letter = 0;  // 0-based letter index within the word
  friend auto operator<=>(const LetterPosition&, const LetterPosition&) = default;
};

struct GeneratorStats {
  int generator = 0;
  int positive_count = 0;  // L_x
  int negative_count = 0;
  std::vector<LetterPosition> positive;  // word-then-letter order
  std::vector<LetterPosition> negative;
  bool balanced() const { return positive_count == negative_count; }
};

struct TupleStats {
  std::vector<GeneratorStats> generators;  // ascending generator index, only those that occur
  bool balanced() const;
  const GeneratorStats* find(int generator) const;
  int total_positive() const;
};

TupleStats letter_stats(const WordTuple& t);

/// Syntax error carrying the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class UnknownGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses the tuple grammar
///   tuple  := word (',' word)*
///   word   := '1' | factor+
///   factor := atom power?      power := '^' '-'? digits
///   atom   := lowercase | uppercase | '[' word ',' word ']' | '(' word ')'
/// Whitespace is ignored. When `alphabet` is given, generators outside it
/// raise UnknownGenerator.
WordTuple parse(std::string_view text, std::optional<std::string_view> alphabet = std::nullopt);
FreeWord parse_word(std::string_view text);

/// One-line help for the grammar, used by the CLI on usage errors.
std::string_view grammar_help();

}  // namespace wm
