#include "deza/permutation.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "deza/error.hpp"

namespace deza {

VertexPermutation::VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || seen[v])
      throw DomainError("not-bijection", "image list is not a permutation of 0.." +
                                             std::to_string(image_.size()) + "-1");
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  for (Vertex v = 0; v < n; ++v) image[v] = v;
  return VertexPermutation(std::move(image));
}

VertexPermutation VertexPermutation::from_cycles(std::size_t n, std::string_view cycles) {
  std::vector<Vertex> image(n);
  for (Vertex v = 0; v < n; ++v) image[v] = v;
  std::vector<bool> used(n, false);

  auto fail = [&](const std::string& why) -> DomainError {
    return DomainError("malformed-cycles", "cannot parse \"" + std::string(cycles) + "\": " + why);
  };

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Vertex> cycle;
    while (true) {
      while (pos < cycles.size() &&
             (std::isspace(static_cast<unsigned char>(cycles[pos])) || cycles[pos] == ','))
        ++pos;
      if (pos >= cycles.size()) throw fail("unterminated cycle");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      Vertex v = 0;
      const auto [end, ec] = std::from_chars(cycles.data() + pos, cycles.data() + cycles.size(), v);
      if (ec != std::errc{}) throw fail("expected a vertex index");
      pos = static_cast<std::size_t>(end - cycles.data());
      if (v >= n) throw fail("vertex " + std::to_string(v) + " out of range");
      if (used[v]) throw fail("vertex " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return VertexPermutation(std::move(image));
}

bool VertexPermutation::is_identity() const noexcept {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

bool VertexPermutation::is_involution() const noexcept {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[image_[v]] != v) return false;
  return true;
}

std::size_t VertexPermutation::fixed_points() const noexcept {
  std::size_t c = 0;
  for (Vertex v = 0; v < image_.size(); ++v) c += image_[v] == v;
  return c;
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
  if (other.size() != size()) throw DomainError("size-mismatch", "composing permutations of different sizes");
  std::vector<Vertex> out(size());
  for (Vertex v = 0; v < size(); ++v) out[v] = image_[other.image_[v]];
  return VertexPermutation(std::move(out));
}

std::string VertexPermutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(size(), false);
  for (Vertex v = 0; v < size(); ++v) {
    if (seen[v] || image_[v] == v) continue;
    os << '(';
    for (Vertex w = v; !seen[w]; w = image_[w]) {
      if (w != v) os << ' ';
      os << w;
      seen[w] = true;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace deza
