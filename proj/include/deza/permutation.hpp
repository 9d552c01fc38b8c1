#ifndef DEZA_PERMUTATION_HPP
#define DEZA_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace deza {

using Vertex = std::size_t;

/// Bijection on 0..n-1.
class VertexPermutation {
 public:
  VertexPermutation() = default;

  /// Throws DomainError unless `image` is a bijection on 0..image.size()-1.
  explicit VertexPermutation(std::vector<Vertex> image);

  static VertexPermutation identity(std::size_t n);

  /// Parses cycle notation such as "(0 3)(1 2)"; omitted points are fixed.
  static VertexPermutation from_cycles(std::size_t n, std::string_view cycles);

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const noexcept { return image_[v]; }
  const std::vector<Vertex>& image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  /// p∘p = id (the identity counts).
  bool is_involution() const noexcept;
  std::size_t fixed_points() const noexcept;

  VertexPermutation inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  VertexPermutation compose(const VertexPermutation& other) const;

  std::string to_cycles() const;

  bool operator==(const VertexPermutation&) const = default;
  auto operator<=>(const VertexPermutation&) const = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace deza

#endif  // DEZA_PERMUTATION_HPP
