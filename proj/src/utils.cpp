#include "ringshaper/utils.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace ringshaper {

double integrate_trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / (n - 1);
    double acc = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n - 1; ++i) acc += f(a + i * h);
    return acc * h;
}

void parallel_for(int n, const std::function<void(int)>& fn, int max_threads) {
    int hw = (int)std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    int cap = max_threads > 0 ? max_threads : hw;
    if (const char* env = std::getenv("RINGSHAPER_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) cap = std::min(cap, v);
    }
    const int workers = std::min(cap, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(bytes));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> unwrap_phase(const std::vector<double>& phase) {
    std::vector<double> out(phase.size());
    if (phase.empty()) return out;
    out[0] = phase[0];
    for (std::size_t i = 1; i < phase.size(); ++i) {
        double d = phase[i] - phase[i - 1];
        d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
        out[i] = out[i - 1] + d;
    }
    return out;
}

}  // namespace ringshaper
