#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace sq {

int default_threads();

// Split [0,n) into contiguous chunks, run f(begin,end) per chunk on up to
// `threads` workers, return chunk results in index order.
template <class T, class F>
std::vector<T> parallel_chunks(size_t n, int threads, F f) {
    threads = std::max(1, threads);
    size_t chunks = std::min<size_t>(std::max<size_t>(n, 1), static_cast<size_t>(threads) * 4);
    std::vector<T> out(chunks);
    std::vector<std::exception_ptr> errs(chunks);
    auto run = [&](size_t c) {
        size_t b = n * c / chunks, e = n * (c + 1) / chunks;
        try {
            out[c] = f(b, e);
        } catch (...) {
            errs[c] = std::current_exception();
        }
    };
    if (threads == 1) {
        for (size_t c = 0; c < chunks; ++c) run(c);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (size_t c = t; c < chunks; c += threads) run(c);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace sq
