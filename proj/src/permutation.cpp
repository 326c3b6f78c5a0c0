#include "autograph/permutation.hpp"

#include <numeric>
#include <sstream>

#include "autograph/error.hpp"

namespace autograph {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      throw ParameterError("image sequence is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree || used[static_cast<std::size_t>(from)]) {
        throw ParameterError("invalid cycle list");
      }
      used[static_cast<std::size_t>(from)] = 1;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) {
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  }
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

long long Permutation::order() const {
  long long result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long long len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)];
         j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Permutation::support_size() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) ++moved;
  }
  return moved;
}

std::string Permutation::to_cycle_string(int offset) const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) {
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[static_cast<std::size_t>(j)];
         j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      if (!first) out << ' ';
      out << j + offset;
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw ParameterError("degree mismatch in permutation product");
  }
  std::vector<int> images(p.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
  }
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace autograph
