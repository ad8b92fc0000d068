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

#include "nncp/perm.hpp"

#include <algorithm>
#include <numeric>

#include "nncp/error.hpp"

namespace nncp {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      fail(ErrorKind::InvalidArgument, "images do not form a permutation");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::one_line() const {
  std::string s = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i] + 1);
  }
  return s + ")";
}

std::string Permutation::cycles() const {
  std::string s;
  std::vector<char> done(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    s += "(";
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) s += ' ';
      s += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) fail(ErrorKind::InvalidArgument, "compose: degree mismatch");
  std::vector<Point> im(p.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = p.images_[q.images_[x]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> im(p.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[p.images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Transposition::Transposition(Point a, Point b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) fail(ErrorKind::InvalidArgument, "transposition needs two distinct points");
}

Permutation Transposition::as_permutation(std::size_t n) const {
  Permutation p = Permutation::identity(n);
  p.swap_positions(i, j);
  return p;
}

std::string Transposition::str() const {
  return "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
}

Transposition conjugate_transposition(const Transposition& t, const Permutation& b) {
  if (t.j >= b.size()) fail(ErrorKind::InvalidArgument, "conjugate: degree mismatch");
  return Transposition(b(t.i), b(t.j));
}

std::uint64_t perm_rank(const std::vector<Point>& images) {
  const std::size_t n = images.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Count smaller, still-unused values.
    std::uint32_t below = images[i] ? (~used & ((1u << images[i]) - 1u)) : 0u;
    rank = rank * (n - i) + static_cast<std::uint64_t>(__builtin_popcount(below));
    used |= 1u << images[i];
  }
  return rank;
}

std::vector<Point> perm_unrank(std::uint64_t rank, std::size_t n) {
  std::vector<Point> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    std::size_t base = n - i;
    digits[i] = static_cast<Point>(rank % base);
    rank /= base;
  }
  std::vector<Point> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return out;
}

}  // namespace nncp
