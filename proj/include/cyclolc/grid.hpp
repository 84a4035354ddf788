#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cyclolc/common.hpp"
#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/lc.hpp"
#include "cyclolc/number_theory.hpp"

namespace cyclolc {

enum class BSweep {
    standard,  // b in {0, 1, d_n/2}
    edges,     // b in {0, 1, d_n/2, d_n - 1}
    all,       // every b in [0, d_n)
};

struct GridSpec {
    u64 p_max = 17;
    unsigned n_max = 0;   // 0: bounded by period_max alone
    u64 period_max = 0;   // 0: the period cap
    BSweep b_sweep = BSweep::standard;
    bool with_roots = true;
    bool orbit_fold = false;
    Caps caps;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct GridResult {
    std::vector<LcReport> rows;
    std::vector<u64> skipped_wieferich;

    bool all_agree() const {
        for (const auto& r : rows)
            if (!r.agree) return false;
        return true;
    }
};

// Measures every admissible (p, e, n, b) with p <= p_max and p^n within the
// period bound. Wieferich primes have no closed form and are skipped, not
// failed. Rows come out sorted by (p, e, n, b).
inline GridResult run_grid(const GridSpec& spec) {
    GridResult out;
    const u64 period_max =
        std::min(spec.period_max ? spec.period_max : spec.caps.period, spec.caps.period);

    std::vector<CyclotomicParams> tasks;
    for (u64 p = 3; p <= spec.p_max; p += 2) {
        if (!is_prime(p) || p > period_max) continue;
        if (is_wieferich(p)) {
            out.skipped_wieferich.push_back(p);
            continue;
        }
        const u64 g = find_primitive_root(p);
        for (u64 f = 2; (p - 1) % f == 0; f *= 2) {
            const u64 e = (p - 1) / f;
            u64 period = p;
            for (unsigned n = 1; (spec.n_max == 0 || n <= spec.n_max) && period <= period_max;
                 ++n, period *= p) {
                const u64 dn = f * (period / p);
                std::vector<u64> bs;
                switch (spec.b_sweep) {
                    case BSweep::standard:
                        bs = {0, 1, dn / 2};
                        break;
                    case BSweep::edges:
                        bs = {0, 1, dn / 2, dn - 1};
                        break;
                    case BSweep::all:
                        bs.resize(dn);
                        for (u64 b = 0; b < dn; ++b) bs[b] = b;
                        break;
                }
                std::sort(bs.begin(), bs.end());
                bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
                for (u64 b : bs) tasks.push_back(CyclotomicParams::make(p, n, e, b, g, spec.caps));
            }
        }
    }
    std::sort(tasks.begin(), tasks.end(), [](const CyclotomicParams& a, const CyclotomicParams& b) {
        return std::tie(a.p, a.e, a.n, a.b) < std::tie(b.p, b.e, b.n, b.b);
    });

    out.rows.resize(tasks.size());
    MeasureOptions opt;
    opt.roots = spec.with_roots;
    opt.orbit_fold = spec.orbit_fold;
    opt.caps = spec.caps;

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                out.rows[i] = measure(tasks[i], opt);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned nthreads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(tasks.size(), 1)));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace cyclolc
