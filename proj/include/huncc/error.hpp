// Copyright 2026 The HUNCC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace huncc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on arguments or parameters was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A square matrix that had to be inverted is singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A ciphertext could not be decoded (too many errors or corruption).
class DecodingFailure : public Error {
 public:
  using Error::Error;
};

/// A serialized container (key, transmission, blob, CSV) is malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace huncc
