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

#include "cliffload/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliffload {

namespace {

std::atomic<int> g_override{0};

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int thread_count() {
    if (int o = g_override.load(); o > 0) {
        return o;
    }
    int n = hardware_threads();
    if (const char *env = std::getenv("CLIFFLOAD_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap > 0) {
                n = std::min(n, cap);
            }
        } catch (const std::exception &) {
            // Ignore malformed values.
        }
    }
    return std::max(n, 1);
}

void set_thread_count(int n) { g_override.store(std::max(n, 0)); }

}  // namespace cliffload
