#include "gradedgrowth/words.hpp"

#include <algorithm>
#include <cctype>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

std::size_t Alphabet::add_generator(const std::string& symbol, const std::string& inverse_symbol,
                                    bool involution) {
  if (symbol.empty() || contains(symbol))
    throw ParseError("duplicate or empty generator symbol '" + symbol + "'");
  const std::size_t index = symbols_.size();
  symbols_.push_back(symbol);
  generators_.push_back(index);
  if (involution) {
    inverse_.push_back(index);
    return index;
  }
  if (inverse_symbol.empty() || contains(inverse_symbol) || inverse_symbol == symbol)
    throw ParseError("bad inverse symbol for '" + symbol + "'");
  symbols_.push_back(inverse_symbol);
  inverse_.push_back(index + 1);
  inverse_.push_back(index);
  return index;
}

Alphabet Alphabet::letters(const std::vector<std::string>& names) {
  Alphabet a;
  for (const auto& name : names) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    a.add_generator(name, upper);
  }
  return a;
}

bool Alphabet::contains(const std::string& symbol) const noexcept {
  return std::find(symbols_.begin(), symbols_.end(), symbol) != symbols_.end();
}

std::size_t Alphabet::find(const std::string& symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) throw ParseError("unknown generator symbol '" + symbol + "'");
  return static_cast<std::size_t>(it - symbols_.begin());
}

Word Alphabet::inverse(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_.at(*it));
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t s : w) out += symbols_.at(s);
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const Alphabet& alphabet, const std::string& text)
      : alphabet_(alphabet), text_(text) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "' in word '" + text_ + "'");
    return w;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '*' || text_[pos_] == '.'))
      ++pos_;
  }

  Word sequence() {
    Word out;
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')' || text_[pos_] == ']' || text_[pos_] == ',')
        return out;
      Word f = power();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  Word power() {
    Word base = atom();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits = text_.substr(start, pos_ - start);
      if (digits.empty() || digits == "-" || digits == "+")
        throw ParseError("missing exponent in '" + text_ + "'");
      const long e = std::stol(digits);
      Word unit = e < 0 ? alphabet_.inverse(base) : base;
      Word out;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), unit.begin(), unit.end());
      return out;
    }
    return base;
  }

  Word atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of word '" + text_ + "'");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word u = sequence();
      expect(',');
      Word v = sequence();
      expect(']');
      Word out = alphabet_.inverse(u);
      Word vi = alphabet_.inverse(v);
      out.insert(out.end(), vi.begin(), vi.end());
      out.insert(out.end(), u.begin(), u.end());
      out.insert(out.end(), v.begin(), v.end());
      return out;
    }
    std::size_t best_len = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      const std::string& s = alphabet_.symbol(i);
      if (s.size() > best_len && text_.compare(pos_, s.size(), s) == 0) {
        best_len = s.size();
        best = i;
      }
    }
    if (best_len == 0) {
      if (c == '1' || c == 'e') {
        ++pos_;
        return {};
      }
      throw ParseError("unknown symbol at '" + text_.substr(pos_) + "'");
    }
    pos_ += best_len;
    return {best};
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' in word '" + text_ + "'");
    ++pos_;
  }

  const Alphabet& alphabet_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Alphabet::parse(const std::string& text) const { return WordParser(*this, text).parse(); }

Word free_reduce(const Alphabet& alphabet, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (std::size_t s : w) {
    if (!out.empty() && alphabet.inverse(out.back()) == s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

}  // namespace gradedgrowth
