#pragma once

#include "deltasets/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace deltasets {

/// Pulls the corpus in batches, evaluates `work` on up to `jobs` threads and
/// hands the results to `sink` in corpus order. Each worker gets its own
/// `State` (e.g. a cache), so `work` may mutate it without locking.
template <typename State, typename Result>
void ordered_map(Corpus& corpus, std::size_t jobs,
                 const std::function<Result(State&, const CorpusItem&)>& work,
                 const std::function<void(const CorpusItem&, Result&)>& sink,
                 std::size_t batch = 4096) {
    jobs = std::max<std::size_t>(1, jobs);
    std::vector<State> states(jobs);
    std::vector<CorpusItem> items;
    std::vector<std::optional<Result>> results;
    bool more = true;
    while (more) {
        items.clear();
        CorpusItem item;
        while (items.size() < batch && (more = corpus.next(item))) items.push_back(std::move(item));
        if (items.empty()) break;
        results.assign(items.size(), std::nullopt);

        if (jobs == 1) {
            for (std::size_t i = 0; i < items.size(); ++i) results[i] = work(states[0], items[i]);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::vector<std::exception_ptr> errors(jobs);
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < jobs; ++w)
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i; (i = cursor.fetch_add(1)) < items.size();)
                            results[i] = work(states[w], items[i]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                        cursor = items.size();
                    }
                });
            for (auto& t : pool) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (std::size_t i = 0; i < items.size(); ++i) sink(items[i], *results[i]);
    }
}

}  // namespace deltasets
