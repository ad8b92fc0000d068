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

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nncp {

using BigInt = boost::multiprecision::cpp_int;

// Numeric values double as CLI exit codes.
enum class ErrorKind {
  Parse = 1,
  Cap = 2,
  Solver = 3,
  Verify = 4,
  InvalidArgument = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace nncp
