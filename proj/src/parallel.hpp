// Copyright 2026 The qromlab Authors
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

#include <exception>
#include <mutex>

#include "qromlab/common.hpp"

namespace qromlab::detail {

/// Runs body(k) for k in [0, n) across OpenMP threads. The first exception
/// thrown by any iteration is rethrown on the calling thread once the loop
/// ends. Results must be written to per-index slots.
template <class Body> void parallel_for(index_t n, Body &&body) {
    std::exception_ptr error;
    std::mutex error_mutex;

#pragma omp parallel for schedule(dynamic)
    for (index_t k = 0; k < n; ++k) {
        try {
            body(k);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace qromlab::detail
