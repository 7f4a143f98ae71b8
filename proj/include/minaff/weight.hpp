#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace minaff {

/// Integral weight in the fundamental-weight basis: coords[i] = lambda(h_{i+1}).
///
/// Storage is 0-based; everything else in the library that names a Dynkin
/// node uses 1-based Bourbaki labels. Arithmetic is overflow-checked.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight fundamental(std::size_t rank, int node);

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  /// Value on the coroot of a 1-based node.
  std::int64_t at_node(int node) const { return coords_.at(static_cast<std::size_t>(node - 1)); }

  bool is_dominant() const noexcept;
  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight operator-() const;
  Weight scaled(std::int64_t factor) const;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace minaff
