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

#include "thinarray/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace thinarray
{
    std::size_t default_thread_count()
    {
        if (const char *env = std::getenv("THINARRAY_THREADS"))
        {
            std::size_t value = 0;
            const char *end = env + std::strlen(env);
            auto [ptr, ec] = std::from_chars(env, end, value);
            if (ec == std::errc() && ptr == end && value > 0)
                return value;
        }
        return std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }

    std::size_t resolve_thread_count(std::size_t requested)
    {
        return requested == 0 ? default_thread_count() : requested;
    }

    void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &fn)
    {
        const std::size_t workers = std::min(resolve_thread_count(threads), count);
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::exception_ptr first_error;
        std::mutex error_mutex;
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t t = 0; t < workers; ++t)
            {
                pool.emplace_back([&, t]
                                  {
                    try
                    {
                        for (std::size_t i = t; i < count; i += workers)
                            fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                    } });
            }
        }
        if (first_error)
            std::rethrow_exception(first_error);
    }

} // namespace thinarray
