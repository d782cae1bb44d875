// SPDX-License-Identifier: Apache-2.0
//
// thinarray: network-level design of thinned antenna arrays
// Copyright (C) 2026 The thinarray Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef THINARRAY_PARALLEL_HPP
#define THINARRAY_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace thinarray
{
    // Worker count used when a caller passes 0: THINARRAY_THREADS if set to a
    // positive integer, otherwise std::thread::hardware_concurrency() (min 1).
    std::size_t default_thread_count();

    // 0 means default_thread_count().
    std::size_t resolve_thread_count(std::size_t requested);

    // Calls fn(i) for every i in [0, count) using up to `threads` workers.
    // Worker t handles indices t, t + T, t + 2T, ... so the assignment is
    // static. Callers write results into index-addressed slots; any reduction
    // happens afterwards in index order. The first exception thrown by any
    // worker is rethrown on the calling thread after all workers join.
    void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &fn);

} // namespace thinarray

#endif
