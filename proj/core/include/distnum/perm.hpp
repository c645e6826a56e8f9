#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace distnum {

using Point = std::uint32_t;

// Permutation of {0, ..., degree-1} stored as an image array.
//
// Action is on the right: the image of x under g is written x^g and
// computed as g[x]. Products compose left to right, x^(g*h) = (x^g)^h.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);                 // identity
  explicit Perm(std::vector<Point> images);          // validates bijection

  // Builds from disjoint-cycle notation on 0..degree-1.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }

  bool is_identity() const;

  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;  // apply *this first, then rhs

  bool operator==(const Perm& rhs) const = default;
  bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

  const std::vector<Point>& images() const { return images_; }

  std::string to_cycle_string() const;

private:
  std::vector<Point> images_;
};

}  // namespace distnum
