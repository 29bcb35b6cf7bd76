#include "chromatic/permutation.hpp"

#include <sstream>

#include "chromatic/error.hpp"

namespace chromatic {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidPermutation("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree) {
  Permutation p = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> in_cycle(degree, false);
    for (Point x : cycle) {
      if (x >= degree) throw InvalidPermutation("cycle point " + std::to_string(x) + " out of range");
      if (in_cycle[x]) throw InvalidPermutation("repeated point in cycle");
      in_cycle[x] = true;
    }
    if (cycle.size() < 2) continue;
    Permutation c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    p = p * c;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::extended(std::size_t degree) const {
  Permutation p = identity(degree < images_.size() ? images_.size() : degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  Permutation p = identity(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    os << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  std::string out = os.str();
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidPermutation("degree mismatch in product");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chromatic
