#include "hardimer/word.hpp"

#include <string>

#include "hardimer/error.hpp"

namespace hardimer {

Word Word::parse(std::string_view text) {
  std::vector<Colour> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == 'b') {
      letters.push_back(Colour::Blue);
    } else if (ch == 'r') {
      letters.push_back(Colour::Red);
    } else {
      std::string shown = (ch >= 0x20 && ch < 0x7f) ? std::string(1, ch)
                                                     : "\\x" + std::to_string(static_cast<unsigned char>(ch));
      fail(ErrorKind::Input, "invalid character '" + shown + "' at offset " + std::to_string(i) +
                                 " in word (expected only 'b' or 'r')");
    }
  }
  return Word(std::move(letters));
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Colour>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size()))));
}

Word Word::suffix_from(std::size_t start) const {
  start = std::min(start, size());
  return Word(std::vector<Colour>(letters_.begin() + static_cast<std::ptrdiff_t>(start), letters_.end()));
}

Word Word::swapped() const {
  std::vector<Colour> out(letters_);
  for (auto& c : out) c = swap(c);
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Colour> out(letters_);
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (Colour c : letters_) s.push_back(to_char(c));
  return s;
}

std::uint64_t word_bits(const Word& w) {
  if (w.size() > 62) fail(ErrorKind::Resource, "word longer than 62 letters cannot be indexed");
  std::uint64_t bits = 0;
  for (Colour c : w.letters()) bits = (bits << 1) | static_cast<std::uint64_t>(c);
  return bits;
}

Word word_from_bits(std::uint64_t bits, std::size_t length) {
  std::vector<Colour> letters(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters[length - 1 - i] = ((bits >> i) & 1U) ? Colour::Red : Colour::Blue;
  }
  return Word(std::move(letters));
}

std::uint64_t word_index(const Word& w) {
  return ((std::uint64_t{1} << w.size()) - 1) + word_bits(w);
}

Word word_from_index(std::uint64_t index) {
  std::size_t length = 0;
  while (index >= ((std::uint64_t{1} << (length + 1)) - 1)) ++length;
  return word_from_bits(index - ((std::uint64_t{1} << length) - 1), length);
}

std::vector<Word> all_words(std::size_t length) {
  if (length > 30) fail(ErrorKind::Resource, "all_words: length above 30");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    out.push_back(word_from_bits(bits, length));
  }
  return out;
}

}  // namespace hardimer
