#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hardimer {

/// Vertex colour. Blue orders before Red in every canonical listing.
enum class Colour : std::uint8_t { Blue = 0, Red = 1 };

constexpr Colour swap(Colour c) noexcept {
  return c == Colour::Blue ? Colour::Red : Colour::Blue;
}

constexpr char to_char(Colour c) noexcept { return c == Colour::Blue ? 'b' : 'r'; }

/// Finite sequence of coloured vertices, serialized as a string over {'b','r'}.
///
/// Indexing through operator[] is 0-based; dimer positions elsewhere are
/// 1-based, matching "first vertex after the root".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Colour> letters) : letters_(std::move(letters)) {}

  /// Parses `^[br]*$`. Throws Error(Input) naming the first offending character.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Colour operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Colour> letters() const noexcept { return letters_; }

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t start) const;
  Word swapped() const;
  Word concat(const Word& other) const;

  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Colour> letters_;
};

/// Position of a word in length-then-lexicographic order (b < r):
/// "" -> 0, "b" -> 1, "r" -> 2, "bb" -> 3, ...
/// Only defined for words of length <= 62.
std::uint64_t word_index(const Word& w);
Word word_from_index(std::uint64_t index);

/// Bits of a word with the first letter as most significant bit (b = 0, r = 1).
std::uint64_t word_bits(const Word& w);
Word word_from_bits(std::uint64_t bits, std::size_t length);

/// Every word of exactly the given length, in lexicographic order.
std::vector<Word> all_words(std::size_t length);

}  // namespace hardimer
