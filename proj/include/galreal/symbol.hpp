#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace galreal {

/// A named indeterminate.
///
/// Symbols are totally ordered: coordinates x1, x2, ... come first by index,
/// every other symbol follows in lexicographic order of its name. The order
/// fixes the canonical layout of expressions, so printed forms are reproducible.
class Symbol {
public:
  Symbol() = default;
  explicit Symbol(std::string name);

  static Symbol coordinate(int index);

  const std::string & name() const { return name_; }
  bool is_coordinate() const { return coord_index_ > 0; }
  /// 1-based index for coordinates, 0 otherwise.
  int coordinate_index() const { return coord_index_; }

  friend std::strong_ordering operator<=>(const Symbol & a, const Symbol & b)
  {
    const bool ca = a.is_coordinate();
    const bool cb = b.is_coordinate();
    if (ca != cb) {
      return ca ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ca) {
      return a.coord_index_ <=> b.coord_index_;
    }
    const int c = a.name_.compare(b.name_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  friend bool operator==(const Symbol & a, const Symbol & b) { return a.name_ == b.name_; }

private:
  std::string name_;
  int coord_index_ = 0;
};

/// True for names matching [A-Za-z][A-Za-z0-9_]*.
bool is_valid_symbol_name(std::string_view name);

}  // namespace galreal
