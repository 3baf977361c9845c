#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unitlift::bench {

// Benchmark of the three inversion kernels over Z_{p^k} (p^k < 2^63) on
// identical seeded pseudorandom invertible matrices:
//   adjugate   det(f)^{-1} adj(f), cofactors by fraction-free integer
//              elimination (n <= 12)
//   gauss      Gauss-Jordan with unit pivots mod p^k
//   lift       invert mod p, then g (fg)^{p^{k-1}-1}
// Every trial's outputs are cross-asserted equal entrywise.

struct BenchSuite {
    int n = 3;
    std::int64_t p = 3;
    int k = 3;
    int trials = 100;
    std::uint64_t seed = 1;
};

struct BenchRecord {
    std::string method;
    int n;
    std::int64_t p;
    int k;
    int trial;
    std::int64_t nanoseconds;
    std::uint64_t mulcount;
};

struct BenchReport {
    BenchSuite suite;
    std::vector<BenchRecord> records;
    bool all_methods_agree = false;
    bool adjugate_included = false;

    std::string to_csv() const;       // method,n,p,k,trial,nanoseconds,mulcount
    std::string to_markdown() const;  // summary table
};

BenchReport bench_inversion(const BenchSuite& suite);

}  // namespace unitlift::bench
