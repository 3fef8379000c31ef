// Copyright 2026 The NVSR Authors
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

namespace nvsr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad rate, bad cutoff, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands that must agree in shape do not.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A file was readable but its contents do not follow the expected format.
class MalformedFile : public Error {
 public:
  using Error::Error;
};

/// An external process did not answer an exchange request in time.
class ExchangeTimeout : public Error {
 public:
  using Error::Error;
};

}  // namespace nvsr
