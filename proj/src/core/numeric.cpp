#include "core/numeric.hpp"

#include <cstdlib>
#include <thread>

namespace gcdsum {

Real to_real(const Rat& q) {
    // First pass through double gives 53 bits; subtracting that approximation
    // back out of the rational and converting the residue recovers the rest.
    const double head = mpq_get_d(q.get_mpq_t());
    Rat residue = q - Rat(head);
    const double tail = mpq_get_d(residue.get_mpq_t());
    return static_cast<Real>(head) + static_cast<Real>(tail);
}

Real to_real(const Int& z) {
    const double head = mpz_get_d(z.get_mpz_t());
    Int residue = z - Int(head);
    const double tail = mpz_get_d(residue.get_mpz_t());
    return static_cast<Real>(head) + static_cast<Real>(tail);
}

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

unsigned thread_budget() {
    const char* env = std::getenv("GCDSUM_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return 1;
    if (v > 64) return 64;
    return static_cast<unsigned>(v);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = thread_budget();
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gcdsum
