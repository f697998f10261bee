// Copyright 2026 The cliffload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFLOAD_ERROR_HPP
#define CLIFFLOAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cliffload {

/// Raised when an input exceeds a hard size guard (dense matrices, oracle
/// enumeration, statevector width). Callers map this to a resource error
/// rather than an input error.
class ResourceLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

}  // namespace cliffload

#endif  // CLIFFLOAD_ERROR_HPP
