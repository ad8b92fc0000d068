// Copyright 2026 The nncp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nncp {

using Point = std::uint32_t;

// Permutation of {0..n-1} in one-line notation. As a qubit order it maps a
// location to the qubit stored there.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }
  bool is_identity() const;

  // Swaps the images at positions i and j, i.e. right multiplication by (i j).
  void swap_positions(Point i, Point j) { std::swap(images_[i], images_[j]); }

  // "(3,1,2)" with 1-based images.
  std::string one_line() const;
  // "(1 3 2)" style, 1-based, identity prints "()".
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

// compose(p, q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

struct Transposition {
  Point i = 0;
  Point j = 1;

  Transposition() = default;
  // Stored with i < j; throws InvalidArgument when i == j.
  Transposition(Point a, Point b);

  Permutation as_permutation(std::size_t n) const;
  std::string str() const;  // "(1 2)", 1-based

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// (b(i) b(j))
Transposition conjugate_transposition(const Transposition& t, const Permutation& b);

// Lehmer rank in [0, n!) for n <= 20.
std::uint64_t perm_rank(const std::vector<Point>& images);
std::vector<Point> perm_unrank(std::uint64_t rank, std::size_t n);

}  // namespace nncp
