#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ringshaper {

// Composite trapezoid of f over [a, b] with n nodes (n >= 2).
double integrate_trapezoid(const std::function<double(double)>& f, double a, double b, int n);

// Runs fn(i) for i in [0, n) on up to max_threads workers (block partition).
// Caps at the RINGSHAPER_THREADS environment variable when set. Results must
// be written to disjoint slots; the partition is deterministic.
void parallel_for(int n, const std::function<void(int)>& fn, int max_threads = 0);

// FNV-1a 64-bit over a byte string; stable across platforms and runs.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

// Shortest round-trip decimal form of a double (max_digits10).
std::string format_double(double v);

// Removes 2 pi jumps so consecutive differences lie in (-pi, pi].
std::vector<double> unwrap_phase(const std::vector<double>& phase);

}  // namespace ringshaper
