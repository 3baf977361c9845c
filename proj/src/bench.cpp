#include "unitlift/bench.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "unitlift/error.hpp"

namespace unitlift::bench {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

constexpr int kAdjugateDimCap = 12;

struct Kernel {
    u64 m;  // p^k
    u64 p;
    int n;
    mutable u64 mulcount = 0;

    u64 mulmod(u64 a, u64 b) const {
        ++mulcount;
        return static_cast<u64>(static_cast<u128>(a) * b % m);
    }

    std::vector<u64> matmul(const std::vector<u64>& a, const std::vector<u64>& b) const {
        std::vector<u64> c(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int kk = 0; kk < n; ++kk) {
                u64 aik = a[static_cast<std::size_t>(i) * n + kk];
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j) {
                    u64& cij = c[static_cast<std::size_t>(i) * n + j];
                    cij = (cij + static_cast<u128>(aik) * b[static_cast<std::size_t>(kk) * n + j] %
                                     m) %
                          m;
                    ++mulcount;
                }
            }
        return c;
    }
};

u64 egcd_inverse(u64 a, u64 m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return 0;  // not a unit; callers guarantee otherwise
    std::int64_t result = old_s % static_cast<std::int64_t>(m);
    if (result < 0) result += static_cast<std::int64_t>(m);
    return static_cast<u64>(result);
}

// Gauss-Jordan with unit pivots (entries not divisible by p).
bool gauss_inverse(const Kernel& krn, std::vector<u64> a, std::vector<u64>& out) {
    const int n = krn.n;
    out.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i) * n + i] = 1 % krn.m;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[static_cast<std::size_t>(r) * n + col] % krn.p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                          a[static_cast<std::size_t>(col) * n + j]);
                std::swap(out[static_cast<std::size_t>(pivot) * n + j],
                          out[static_cast<std::size_t>(col) * n + j]);
            }
        u64 inv = egcd_inverse(a[static_cast<std::size_t>(col) * n + col], krn.m);
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(col) * n + j] =
                krn.mulmod(a[static_cast<std::size_t>(col) * n + j], inv);
            out[static_cast<std::size_t>(col) * n + j] =
                krn.mulmod(out[static_cast<std::size_t>(col) * n + j], inv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            u64 f = a[static_cast<std::size_t>(r) * n + col];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                u64 sub_a = krn.mulmod(f, a[static_cast<std::size_t>(col) * n + j]);
                a[static_cast<std::size_t>(r) * n + j] =
                    (a[static_cast<std::size_t>(r) * n + j] + krn.m - sub_a) % krn.m;
                u64 sub_i = krn.mulmod(f, out[static_cast<std::size_t>(col) * n + j]);
                out[static_cast<std::size_t>(r) * n + j] =
                    (out[static_cast<std::size_t>(r) * n + j] + krn.m - sub_i) % krn.m;
            }
        }
    }
    return true;
}

// Integer determinant (fraction-free), counted as one mul per product.
BigInt integer_det(std::vector<std::vector<BigInt>> a, const Kernel& krn) {
    const std::size_t n = a.size();
    BigInt divisor = 1;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) / divisor;
                krn.mulcount += 2;
            }
            a[i][col] = 0;
        }
        divisor = a[col][col];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

u64 reduce_bigint(const BigInt& v, u64 m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

bool adjugate_inverse(const Kernel& krn, const std::vector<u64>& f, std::vector<u64>& out) {
    const int n = krn.n;
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                f[static_cast<std::size_t>(i) * n + j];
    u64 det = reduce_bigint(integer_det(a, krn), krn.m);
    u64 det_inv = egcd_inverse(det, krn.m);
    if (det_inv == 0) return false;
    out.assign(static_cast<std::size_t>(n) * n, 0);
    if (n == 1) {
        out[0] = det_inv;
        return true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<BigInt>> minor;
            minor.reserve(static_cast<std::size_t>(n) - 1);
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<BigInt> row;
                row.reserve(static_cast<std::size_t>(n) - 1);
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(f[static_cast<std::size_t>(r) * n + c]);
                minor.push_back(std::move(row));
            }
            u64 cof = reduce_bigint(integer_det(std::move(minor), krn), krn.m);
            if ((i + j) % 2 != 0 && cof != 0) cof = krn.m - cof;
            out[static_cast<std::size_t>(j) * n + i] = krn.mulmod(cof, det_inv);
        }
    return true;
}

bool lift_kernel_inverse(const Kernel& krn, const std::vector<u64>& f, int k,
                         std::vector<u64>& out) {
    const int n = krn.n;
    // step 1+2: invert f mod p
    Kernel field{krn.p, krn.p, n, 0};
    std::vector<u64> fbar(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = f[i] % krn.p;
    std::vector<u64> gbar;
    if (!gauss_inverse(field, fbar, gbar)) return false;
    krn.mulcount += field.mulcount;
    // step 3: g (fg)^{p^{k-1}-1} mod p^k
    std::vector<u64> g = gbar;  // zero-extension lift
    std::vector<u64> fg = krn.matmul(f, g);
    u64 exponent = 1;
    for (int i = 0; i + 1 < k; ++i) exponent *= krn.p;  // p^{k-1} < 2^63
    u64 e = exponent - 1;
    std::vector<u64> acc(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] = 1 % krn.m;
    std::vector<u64> base = fg;
    while (e > 0) {
        if (e & 1) acc = krn.matmul(acc, base);
        if ((e >>= 1) != 0) base = krn.matmul(base, base);
    }
    out = krn.matmul(g, acc);
    return true;
}

}  // namespace

BenchReport bench_inversion(const BenchSuite& suite) {
    if (suite.n < 1 || suite.n > 64) throw ResourceError("bench: n must be in [1, 64]");
    if (suite.trials < 1) throw ValidationError("bench: trials must be >= 1");
    if (suite.p < 2) throw ValidationError("bench: p must be prime");
    u64 m = 1;
    for (int i = 0; i < suite.k; ++i) {
        if (m > (std::uint64_t{1} << 63) / static_cast<u64>(suite.p))
            throw ResourceError("bench: p^k must be < 2^63");
        m *= static_cast<u64>(suite.p);
    }

    BenchReport report;
    report.suite = suite;
    report.adjugate_included = suite.n <= kAdjugateDimCap;
    report.all_methods_agree = true;

    const int n = suite.n;
    for (int trial = 0; trial < suite.trials; ++trial) {
        // independent stream per trial, derived from the suite seed
        std::seed_seq seq{suite.seed, static_cast<u64>(trial)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<u64> dist(0, m - 1);

        // rejection-sample an invertible matrix: det(f mod p) != 0
        std::vector<u64> f(static_cast<std::size_t>(n) * n);
        while (true) {
            for (auto& v : f) v = dist(rng);
            Kernel probe{static_cast<u64>(suite.p), static_cast<u64>(suite.p), n, 0};
            std::vector<u64> fbar(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = f[i] % probe.m;
            std::vector<u64> tmp;
            if (gauss_inverse(probe, fbar, tmp)) break;
        }

        auto time_method = [&](const char* name, auto&& fn) -> std::vector<u64> {
            Kernel krn{m, static_cast<u64>(suite.p), n, 0};
            std::vector<u64> inv;
            auto start = std::chrono::steady_clock::now();
            bool ok = fn(krn, inv);
            auto stop = std::chrono::steady_clock::now();
            if (!ok) throw InternalError("bench: method failed on an invertible input");
            report.records.push_back(
                {name, n, suite.p, suite.k, trial,
                 std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
                 krn.mulcount});
            return inv;
        };

        std::vector<u64> gauss_result = time_method(
            "gauss", [&](const Kernel& krn, std::vector<u64>& inv) {
                return gauss_inverse(krn, f, inv);
            });
        std::vector<u64> lift_result = time_method(
            "lift", [&](const Kernel& krn, std::vector<u64>& inv) {
                return lift_kernel_inverse(krn, f, suite.k, inv);
            });
        if (lift_result != gauss_result) report.all_methods_agree = false;
        if (report.adjugate_included) {
            std::vector<u64> adj_result = time_method(
                "adjugate", [&](const Kernel& krn, std::vector<u64>& inv) {
                    return adjugate_inverse(krn, f, inv);
                });
            if (adj_result != gauss_result) report.all_methods_agree = false;
        }

        // soundness: f * inverse = I mod m
        Kernel check{m, static_cast<u64>(suite.p), n, 0};
        std::vector<u64> prod = check.matmul(f, gauss_result);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (prod[static_cast<std::size_t>(i) * n + j] !=
                    (i == j ? 1 % m : 0))
                    throw InternalError("bench: inverse check failed");
    }
    return report;
}

std::string BenchReport::to_csv() const {
    std::ostringstream os;
    os << "method,n,p,k,trial,nanoseconds,mulcount\n";
    for (const auto& r : records)
        os << r.method << "," << r.n << "," << r.p << "," << r.k << "," << r.trial << ","
           << r.nanoseconds << "," << r.mulcount << "\n";
    return os.str();
}

std::string BenchReport::to_markdown() const {
    struct Agg {
        std::int64_t ns = 0;
        std::uint64_t muls = 0;
        int count = 0;
    };
    std::map<std::string, Agg> agg;
    for (const auto& r : records) {
        auto& a = agg[r.method];
        a.ns += r.nanoseconds;
        a.muls += r.mulcount;
        ++a.count;
    }
    std::ostringstream os;
    os << "# Matrix inversion benchmark\n\n";
    os << "n = " << suite.n << ", p = " << suite.p << ", k = " << suite.k
       << ", trials = " << suite.trials << ", seed = " << suite.seed << "\n\n";
    os << "| method | trials | mean ns | mean mulmod |\n";
    os << "|--------|--------|---------|-------------|\n";
    for (const auto& [name, a] : agg)
        os << "| " << name << " | " << a.count << " | " << a.ns / a.count << " | "
           << a.muls / static_cast<std::uint64_t>(a.count) << " |\n";
    os << "\nall methods agree: " << (all_methods_agree ? "yes" : "NO") << "\n";
    if (!adjugate_included)
        os << "adjugate method skipped (n > " << kAdjugateDimCap << ")\n";
    return os.str();
}

}  // namespace unitlift::bench
