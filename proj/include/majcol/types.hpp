#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace majcol {

using Vertex = std::uint32_t;

/// One of the three colours of a 3-colouring. Numeric values follow the
/// 1-based convention used in reports and files.
enum class Colour : std::uint8_t { One = 1, Two = 2, Three = 3 };

inline constexpr std::array<Colour, 3> kAllColours{Colour::One, Colour::Two, Colour::Three};

constexpr int index_of(Colour c) { return static_cast<int>(c) - 1; }
constexpr Colour colour_at(int index) { return static_cast<Colour>(index + 1); }
constexpr int to_int(Colour c) { return static_cast<int>(c); }

/// c + 1 mod 3, staying inside {1,2,3}.
constexpr Colour next_colour(Colour c) { return colour_at((index_of(c) + 1) % 3); }

using Colouring3 = std::vector<Colour>;

/// Per-colour tallies, indexed by index_of(Colour).
using ColourCounts = std::array<std::uint32_t, 3>;

/// Side of a 2-colouring / partition.
enum class Side : std::uint8_t { One = 1, Two = 2 };

constexpr Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }

using Partition2 = std::vector<Side>;

/// Subset of {1,2,3}, stored as a bitmask (bit i <-> colour i+1).
class ColourList {
 public:
  constexpr ColourList() = default;
  constexpr explicit ColourList(std::uint8_t bits) : bits_(bits & 0x7u) {}
  static constexpr ColourList all() { return ColourList(0x7u); }
  static constexpr ColourList of(Colour a) { return ColourList(bit(a)); }
  static constexpr ColourList of(Colour a, Colour b) {
    return ColourList(static_cast<std::uint8_t>(bit(a) | bit(b)));
  }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
  constexpr bool contains(Colour c) const { return (bits_ & bit(c)) != 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr ColourList without(Colour c) const {
    return ColourList(static_cast<std::uint8_t>(bits_ & ~bit(c)));
  }
  constexpr ColourList intersect(ColourList o) const {
    return ColourList(static_cast<std::uint8_t>(bits_ & o.bits_));
  }

  std::vector<Colour> colours() const {
    std::vector<Colour> out;
    for (Colour c : kAllColours)
      if (contains(c)) out.push_back(c);
    return out;
  }

  friend constexpr bool operator==(ColourList, ColourList) = default;

 private:
  static constexpr std::uint8_t bit(Colour c) {
    return static_cast<std::uint8_t>(1u << index_of(c));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace majcol
