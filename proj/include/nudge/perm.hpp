#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace nudge {

// Degrees above 64 are rejected everywhere; the pair universe then stays
// within 2016 bits.
inline constexpr int kMaxDegree = 64;

// A permutation of {1..n} in one-line form: images()[k-1] is the image of k.
// Immutable after construction; safe to share across threads.
class Perm {
public:
  // Validates that `images` is a bijection of {1..n}.
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }

  // 1-based application p(k).
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;

  Perm inverse() const;

  // (a*b)(x) = a(b(x)); b is applied first.
  friend Perm operator*(const Perm& a, const Perm& b);

  friend bool operator==(const Perm&, const Perm&) = default;

  // Lexicographic on the one-line form.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<std::uint8_t> images) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

// The order-reversing permutation [n, n-1, ..., 1]; every pair is an inversion.
Perm omega0(int n);

}  // namespace nudge
