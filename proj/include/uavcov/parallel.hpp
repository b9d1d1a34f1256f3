// SPDX-License-Identifier: Apache-2.0
//
// uavcov: air-to-ground coverage modelling for UAV base stations
// Copyright (C) 2026 The uavcov authors
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


#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace uavcov
{

/// 0 means one worker per hardware thread.
inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/*!
 * Splits [0, n) into fixed-size chunks and calls fn(chunk, begin, end) for
 * each of them on up to `workers` threads. Chunk boundaries depend only on
 * n and chunk_size, so any per-chunk result stored by chunk index is the
 * same for every worker count.
 */
template <typename Fn>
void for_each_chunk(std::size_t n, std::size_t chunk_size, unsigned workers, Fn &&fn)
{
    if (n == 0)
        return;
    chunk_size = std::max<std::size_t>(chunk_size, 1);
    const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
    const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), n_chunks));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
        {
            const std::size_t begin = c * chunk_size;
            fn(c, begin, std::min(n, begin + chunk_size));
        }
    };

    if (n_threads <= 1)
    {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(n_threads - 1);
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(work);
    work();
}

inline std::size_t chunk_count(std::size_t n, std::size_t chunk_size)
{
    chunk_size = std::max<std::size_t>(chunk_size, 1);
    return (n + chunk_size - 1) / chunk_size;
}

} // namespace uavcov
