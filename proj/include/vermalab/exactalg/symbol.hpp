#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vermalab::exact {

/// Largest rank supported by the fixed exponent layout.
inline constexpr int kMaxRank = 8;
/// Exponent slots: x1..x8, hbar, q2..q8.
inline constexpr int kNumSlots = 16;
inline constexpr int kHbarSlot = kMaxRank;

enum class SymbolKind : std::uint8_t { X, Hbar, Q };

/// A generator of the coefficient field.  The slot number realises the
/// fixed variable order x1 < ... < x8 < h < q2 < ... < q8.
struct Symbol {
  SymbolKind kind = SymbolKind::X;
  int index = 1;

  static Symbol x(int i);
  static Symbol hbar() { return {SymbolKind::Hbar, 0}; }
  static Symbol q(int l);
  static Symbol from_slot(int slot);
  static std::optional<Symbol> parse(std::string_view name);

  int slot() const;
  std::string name() const;

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.slot() == b.slot(); }
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.slot() <=> b.slot();
  }
};

}  // namespace vermalab::exact
