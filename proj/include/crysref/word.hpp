#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crysref {

/// Signed letter code: +(g+1) for generator g, -(g+1) for its inverse.
using LetterCode = std::int32_t;

struct Letter {
  int generator = 0;
  int sign = 1;
  LetterCode code() const { return sign > 0 ? generator + 1 : -(generator + 1); }
  static Letter from_code(LetterCode c) { return c > 0 ? Letter{c - 1, 1} : Letter{-c - 1, -1}; }
  bool operator==(const Letter& o) const { return generator == o.generator && sign == o.sign; }
};

/// A freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  /// Reduces the input.
  explicit Word(const std::vector<LetterCode>& codes);
  Word(std::initializer_list<LetterCode> codes) : Word(std::vector<LetterCode>(codes)) {}
  static Word from_letters(const std::vector<Letter>& letters);
  static Word generator(int g, int power = 1);

  const std::vector<LetterCode>& codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter letter(std::size_t i) const { return Letter::from_code(codes_[i]); }

  Word inverse() const;
  Word pow(int k) const;
  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o) { return *this = *this * o; }
  /// Rotation starting at position k.
  Word rotate(std::size_t k) const;
  /// Largest generator index + 1 appearing in the word.
  int max_generator() const;

  bool operator==(const Word& o) const { return codes_ == o.codes_; }
  bool operator!=(const Word& o) const { return codes_ != o.codes_; }
  bool operator<(const Word& o) const { return codes_ < o.codes_; }

  std::string to_string(const std::vector<std::string>& names) const;
  /// Whitespace-separated letters, `^-1` for inverses, `^k` powers accepted.
  /// Name matching is case-insensitive.
  static Word parse(const std::string& text, const std::vector<std::string>& names);

 private:
  std::vector<LetterCode> codes_;
};

/// Free reduction of an arbitrary code sequence (stack based).
std::vector<LetterCode> free_reduce_codes(const std::vector<LetterCode>& codes);
Word free_reduce(const std::vector<Letter>& letters);
Word free_reduce(const Word& w);
/// Removes matching first/last inverse pairs.
Word cyclic_reduce(const Word& w);
/// Exponent sum per generator.
std::vector<long long> exponent_sums(const Word& w, int generators);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

class WordParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crysref
