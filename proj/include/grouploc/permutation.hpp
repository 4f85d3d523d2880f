#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace grouploc
{

using Point = std::uint16_t;

inline constexpr std::size_t max_degree = 1u << 16;

/// A permutation of {0, ..., degree-1}, stored as its image sequence.
///
/// Products follow the right-factor-first convention: (a * b)(x) = a(b(x)).
/// Cycle strings are 1-based, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree)
  : _images(check_degree(degree))
  {
    std::iota(_images.begin(), _images.end(), Point{0});
  }

  /// Throws PreconditionError unless `images` is a bijection of its index set.
  explicit Permutation(std::vector<Point> images)
  : _images(std::move(images))
  {
    check_degree(_images.size());
    std::vector<bool> seen(_images.size(), false);
    for (Point p : _images) {
      if (p >= _images.size() || seen[p])
        throw PreconditionError("image sequence is not a bijection");
      seen[p] = true;
    }
  }

  static Permutation from_span_unchecked(std::span<Point const> images)
  {
    Permutation p;
    p._images.assign(images.begin(), images.end());
    return p;
  }

  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return _images.size(); }

  Point operator[](Point x) const { return _images[x]; }

  std::span<Point const> images() const { return _images; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  Permutation inverse() const
  {
    Permutation inv;
    inv._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      inv._images[_images[i]] = static_cast<Point>(i);
    return inv;
  }

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t s = 0; s < _images.size(); ++s) {
      if (seen[s])
        continue;
      std::uint64_t len = 0;
      for (std::size_t x = s; !seen[x]; x = _images[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return i;
    return _images.size();
  }

  /// The same permutation on a larger domain; new points are fixed.
  Permutation extended(std::size_t degree) const
  {
    if (degree < _images.size())
      throw DegreeMismatch("cannot shrink a permutation");
    Permutation p(degree);
    std::copy(_images.begin(), _images.end(), p._images.begin());
    return p;
  }

  /// The permutation moved onto points offset, ..., offset+degree()-1 of a
  /// domain of size `degree`.
  Permutation shifted(std::size_t offset, std::size_t degree) const
  {
    if (offset + _images.size() > degree)
      throw DegreeMismatch("shifted permutation does not fit");
    Permutation p(degree);
    for (std::size_t i = 0; i < _images.size(); ++i)
      p._images[offset + i] = static_cast<Point>(offset + _images[i]);
    return p;
  }

  std::string to_cycle_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &lhs, Permutation const &rhs)
  {
    return std::lexicographical_compare_three_way(
      lhs._images.begin(), lhs._images.end(), rhs._images.begin(), rhs._images.end());
  }

  std::vector<Point> &mutable_images() { return _images; }

private:
  static std::size_t check_degree(std::size_t degree)
  {
    if (degree == 0 || degree > max_degree)
      throw PreconditionError("permutation degree out of range");
    return degree;
  }

  std::vector<Point> _images;
};

/// out(x) = a(b(x)); all spans must have equal length, `out` may alias neither.
inline void compose_into(std::span<Point> out, std::span<Point const> a, std::span<Point const> b)
{
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a[b[i]];
}

inline Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degree " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  Permutation out(a.degree());
  compose_into(out.mutable_images(), a.images(), b.images());
  return out;
}

inline Permutation operator*(Permutation const &a, Permutation const &b)
{ return compose(a, b); }

/// g x g^-1
inline Permutation conjugate(Permutation const &g, Permutation const &x)
{ return g * x * g.inverse(); }

inline std::uint64_t hash_images(std::span<Point const> images)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 29);
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const { return hash_images(p.images()); }
};

inline std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t s = 0; s < _images.size(); ++s) {
    if (seen[s] || _images[s] == s)
      continue;
    out += '(';
    bool first = true;
    for (std::size_t x = s; !seen[x]; x = _images[x]) {
      seen[x] = true;
      if (!first)
        out += ',';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline Permutation Permutation::from_cycles(std::size_t degree, std::string_view text)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;

  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](std::string const &msg) {
    throw ParseError("cycle string \"" + std::string(text) + "\": " + msg);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > max_degree)
          fail("point out of range");
        ++pos;
        ++digits;
      }
      if (digits == 0)
        fail("expected a point");
      if (value == 0 || value > degree)
        fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1])
        fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p._images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

inline std::ostream &operator<<(std::ostream &os, Permutation const &p)
{ return os << p.to_cycle_string(); }

} // namespace grouploc
