#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace chromatic {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored by its image sequence.
///
/// Products compose left to right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Product of the given cycles on `degree` points.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Same permutation on `degree` >= this->degree() points, fixing the new ones.
  Permutation extended(std::size_t degree) const;

  /// Acts on points [offset, offset + this->degree()) of a `degree`-point set.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  /// Disjoint cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace chromatic
