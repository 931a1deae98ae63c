#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbicurve {

/// One syllable g^e of a word. The exponent is never zero in a reduced word.
struct Letter {
  std::size_t generator = 0;
  long exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Merges adjacent syllables on the same generator and drops zero exponents,
/// repeatedly, so that no two consecutive syllables share a generator.
Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Total number of letters, i.e. the sum of |exponent|.
std::size_t letter_length(const Word& w);

/// Generators plus freely reduced relator words.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  /// Throws UnknownGenerator if a word refers to a generator out of range.
  FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::optional<std::size_t> find_generator(std::string_view name) const;
  /// Throws UnknownGenerator if any letter is out of range.
  void check_word(const Word& w) const;

  /// Parses whitespace-separated tokens `name` or `name^<int>`.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Contents of a presentation text file: `gens`, `rel` and `sub` lines.
struct PresentationFile {
  FinitePresentation presentation;
  std::vector<Word> subgroup_generators;
};

/// Parses the line-oriented presentation format. `#` starts a comment.
PresentationFile parse_presentation_text(std::string_view text);

}  // namespace orbicurve
