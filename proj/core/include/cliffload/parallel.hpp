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

#ifndef CLIFFLOAD_PARALLEL_HPP
#define CLIFFLOAD_PARALLEL_HPP

namespace cliffload {

/// Worker count for data-parallel kernels. Defaults to the OpenMP maximum and
/// is capped by the CLIFFLOAD_THREADS environment variable when set.
int thread_count();

/// Overrides the thread count for the current process (0 restores the default).
void set_thread_count(int n);

}  // namespace cliffload

#endif  // CLIFFLOAD_PARALLEL_HPP
