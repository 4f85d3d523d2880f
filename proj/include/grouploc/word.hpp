#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace grouploc
{

/// A word in abstract generators: letter +k is generator k-1, -k its inverse.
class Word
{
public:
  Word() = default;
  explicit Word(std::vector<int> letters) : _letters(std::move(letters)) {}

  static Word generator(std::size_t g) { return Word({static_cast<int>(g) + 1}); }

  std::vector<int> const &letters() const { return _letters; }
  std::size_t length() const { return _letters.size(); }
  bool empty() const { return _letters.empty(); }

  /// Largest generator index used, plus one.
  std::size_t generator_span() const
  {
    std::size_t m = 0;
    for (int l : _letters)
      m = std::max<std::size_t>(m, static_cast<std::size_t>(std::abs(l)));
    return m;
  }

  Word inverse() const
  {
    Word w;
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it)
      w._letters.push_back(-*it);
    return w;
  }

  Word power(long n) const
  {
    Word base = n < 0 ? inverse() : *this;
    Word w;
    for (long i = 0; i < std::labs(n); ++i)
      w._letters.insert(w._letters.end(), base._letters.begin(), base._letters.end());
    return w.freely_reduced();
  }

  Word freely_reduced() const
  {
    Word w;
    for (int l : _letters) {
      if (!w._letters.empty() && w._letters.back() == -l)
        w._letters.pop_back();
      else
        w._letters.push_back(l);
    }
    return w;
  }

  /// Freely and cyclically reduced form (a conjugate of this word).
  Word cyclically_reduced() const
  {
    Word w = freely_reduced();
    std::size_t b = 0;
    std::size_t e = w._letters.size();
    while (e - b >= 2 && w._letters[b] == -w._letters[e - 1]) {
      ++b;
      --e;
    }
    return Word(std::vector<int>(w._letters.begin() + static_cast<long>(b),
                                 w._letters.begin() + static_cast<long>(e)));
  }

  friend Word operator*(Word const &a, Word const &b)
  {
    Word w = a;
    w._letters.insert(w._letters.end(), b._letters.begin(), b._letters.end());
    return w.freely_reduced();
  }

  friend bool operator==(Word const &, Word const &) = default;

  /// Left-normed commutator [a,b] = a^-1 b^-1 a b.
  static Word commutator(Word const &a, Word const &b)
  { return a.inverse() * b.inverse() * a * b; }

  std::string to_string(std::vector<std::string> const &names) const
  {
    if (_letters.empty())
      return "1";
    std::string out;
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (i)
        out += '*';
      int l = _letters[i];
      out += names.at(static_cast<std::size_t>(std::abs(l) - 1));
      if (l < 0)
        out += "^-1";
    }
    return out;
  }

private:
  std::vector<int> _letters;
};

/// Parse words such as "a^2", "(a*b)^5", "[a,b]^4", "a b a^-1" over the given
/// single-letter generator names. Whitespace is ignored; juxtaposition and '*'
/// both denote the product.
inline Word parse_word(std::string_view text, std::vector<std::string> const &names)
{
  std::size_t pos = 0;
  auto fail = [&](std::string const &msg) -> Word {
    throw ParseError("word \"" + std::string(text) + "\" at offset " + std::to_string(pos) +
                     ": " + msg);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto peek = [&]() -> char {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };

  auto parse_int = [&]() -> long {
    skip();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
      skip();
    }
    std::size_t start = pos;
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000)
        fail("exponent too large");
      ++pos;
    }
    if (pos == start)
      fail("expected an exponent");
    return neg ? -v : v;
  };

  std::function<Word()> parse_product;

  auto parse_factor = [&]() -> Word {
    char c = peek();
    Word base;
    if (c == '(') {
      ++pos;
      base = parse_product();
      if (peek() != ')')
        return fail("expected ')'");
      ++pos;
    } else if (c == '[') {
      ++pos;
      base = parse_product();
      bool any = false;
      while (peek() == ',') {
        ++pos;
        base = Word::commutator(base, parse_product());
        any = true;
      }
      if (!any)
        return fail("commutator needs at least two entries");
      if (peek() != ']')
        return fail("expected ']'");
      ++pos;
    } else if (c == '1') {
      ++pos;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name(1, c);
      ++pos;
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        return fail("unknown generator '" + name + "'");
      base = Word::generator(static_cast<std::size_t>(it - names.begin()));
    } else {
      return fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    }
    while (peek() == '^') {
      ++pos;
      base = base.power(parse_int());
    }
    return base;
  };

  parse_product = [&]() -> Word {
    Word w = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        w = w * parse_factor();
      } else if (c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c))) {
        w = w * parse_factor();
      } else {
        return w;
      }
    }
  };

  if (peek() == '\0')
    return Word();
  Word w = parse_product();
  if (peek() != '\0')
    fail("trailing input");
  return w;
}

/// Substitution homomorphism from the free group: evaluate(uv) = evaluate(u) * evaluate(v).
inline Permutation evaluate(Word const &w, std::vector<Permutation> const &images)
{
  if (images.empty())
    throw PreconditionError("evaluate: no generator images");
  if (w.generator_span() > images.size())
    throw PreconditionError("evaluate: word uses more generators than images given");
  std::vector<Permutation> inverses;
  inverses.reserve(images.size());
  for (auto const &im : images)
    inverses.push_back(im.inverse());
  Permutation result(images.front().degree());
  std::vector<Point> tmp(result.degree());
  for (int l : w.letters()) {
    auto const &f = l > 0 ? images[static_cast<std::size_t>(l - 1)]
                          : inverses[static_cast<std::size_t>(-l - 1)];
    compose_into(tmp, result.images(), f.images());
    std::copy(tmp.begin(), tmp.end(), result.mutable_images().begin());
  }
  return result;
}

} // namespace grouploc
