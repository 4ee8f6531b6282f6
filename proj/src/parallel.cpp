#include "vrpath/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace vrpath {

static int g_threads = 0;

void set_thread_count(int n) { g_threads = n < 0 ? 0 : n; }

int effective_thread_count() {
	if (g_threads > 0) return g_threads;
	unsigned hw = std::thread::hardware_concurrency();
	return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
	int workers = effective_thread_count();
	if (workers <= 1 || n < 2) {
		for (size_t i = 0; i < n; ++i) fn(i);
		return;
	}
	std::atomic<size_t> next{0};
	const size_t chunk = std::max<size_t>(1, n / (static_cast<size_t>(workers) * 8));
	std::vector<std::thread> pool;
	std::exception_ptr err;
	std::atomic<bool> failed{false};
	for (int w = 0; w < workers; ++w)
		pool.emplace_back([&] {
			while (!failed.load(std::memory_order_relaxed)) {
				size_t begin = next.fetch_add(chunk);
				if (begin >= n) break;
				size_t end = std::min(n, begin + chunk);
				try {
					for (size_t i = begin; i < end; ++i) fn(i);
				} catch (...) {
					if (!failed.exchange(true)) err = std::current_exception();
					break;
				}
			}
		});
	for (auto& t : pool) t.join();
	if (err) std::rethrow_exception(err);
}

} // namespace vrpath
