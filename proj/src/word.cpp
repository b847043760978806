#include "crysref/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace crysref {

std::vector<LetterCode> free_reduce_codes(const std::vector<LetterCode>& codes) {
  std::vector<LetterCode> out;
  out.reserve(codes.size());
  for (LetterCode c : codes) {
    if (c == 0) throw std::invalid_argument("zero letter code");
    if (!out.empty() && out.back() == -c) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

Word::Word(const std::vector<LetterCode>& codes) : codes_(free_reduce_codes(codes)) {}

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::vector<LetterCode> c;
  c.reserve(letters.size());
  for (const auto& l : letters) c.push_back(l.code());
  return Word(c);
}

Word Word::generator(int g, int power) {
  std::vector<LetterCode> c(static_cast<std::size_t>(std::abs(power)), power > 0 ? g + 1 : -(g + 1));
  return Word(c);
}

Word Word::inverse() const {
  Word w;
  w.codes_.reserve(codes_.size());
  for (auto it = codes_.rbegin(); it != codes_.rend(); ++it) w.codes_.push_back(-*it);
  return w;
}

Word Word::pow(int k) const {
  Word base = k >= 0 ? *this : inverse();
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

Word Word::operator*(const Word& o) const {
  std::vector<LetterCode> c = codes_;
  for (LetterCode x : o.codes_) {
    if (!c.empty() && c.back() == -x) c.pop_back();
    else c.push_back(x);
  }
  Word w;
  w.codes_ = std::move(c);
  return w;
}

Word Word::rotate(std::size_t k) const {
  if (codes_.empty()) return *this;
  std::vector<LetterCode> c(codes_.begin() + static_cast<long>(k % codes_.size()), codes_.end());
  c.insert(c.end(), codes_.begin(), codes_.begin() + static_cast<long>(k % codes_.size()));
  return Word(c);
}

int Word::max_generator() const {
  int m = 0;
  for (LetterCode c : codes_) m = std::max(m, std::abs(c));
  return m;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  std::string s;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    Letter l = letter(i);
    if (i) s += ' ';
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= names.size())
      throw std::out_of_range("letter outside generator list");
    s += names[static_cast<std::size_t>(l.generator)];
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Word Word::parse(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream in(text);
  std::string tok;
  std::vector<LetterCode> codes;
  while (in >> tok) {
    int power = 1;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        power = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw WordParseError("bad exponent in '" + tok + "'");
      }
    }
    int g = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) g = static_cast<int>(i);
    if (g < 0) {
      std::string ln = lower(name);
      for (std::size_t i = 0; i < names.size(); ++i)
        if (lower(names[i]) == ln) g = static_cast<int>(i);
    }
    if (g < 0) throw WordParseError("unknown generator '" + name + "'");
    for (int k = 0; k < std::abs(power); ++k) codes.push_back(power > 0 ? g + 1 : -(g + 1));
  }
  return Word(codes);
}

Word free_reduce(const std::vector<Letter>& letters) { return Word::from_letters(letters); }
Word free_reduce(const Word& w) { return Word(w.codes()); }

Word cyclic_reduce(const Word& w) {
  const auto& c = w.codes();
  std::size_t i = 0, j = c.size();
  while (j - i >= 2 && c[i] == -c[j - 1]) {
    ++i;
    --j;
  }
  return Word(std::vector<LetterCode>(c.begin() + static_cast<long>(i), c.begin() + static_cast<long>(j)));
}

std::vector<long long> exponent_sums(const Word& w, int generators) {
  std::vector<long long> e(static_cast<std::size_t>(generators), 0);
  for (LetterCode c : w.codes()) {
    auto g = static_cast<std::size_t>(std::abs(c) - 1);
    if (g >= e.size()) throw std::out_of_range("letter outside generator list");
    e[g] += c > 0 ? 1 : -1;
  }
  return e;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (LetterCode c : w.codes()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace crysref
