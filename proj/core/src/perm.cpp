#include "distnum/perm.hpp"

#include <numeric>

#include "distnum/errors.hpp"

namespace distnum {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw precondition_error("permutation image array is not a bijection");
    seen[img] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i];
      Point to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree)
        throw precondition_error("cycle point out of range");
      if (p.images_[from] != from)
        throw precondition_error("cycles are not disjoint");
      p.images_[from] = to;
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<Point> prod(images_.size());
  for (Point x = 0; x < images_.size(); ++x) prod[x] = rhs.images_[images_[x]];
  Perm p;
  p.images_ = std::move(prod);
  return p;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (done[x] || images_[x] == x) continue;
    out += '(';
    Point y = x;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(y);
      done[y] = true;
      y = images_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace distnum
