#include "jg/exactmath.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace jg {

BigInt binom(long n, long k) {
    if (n < 0)
        throw std::domain_error("binom: negative n = " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

namespace {
std::mutex row_mutex;
// std::map nodes are stable, so handing out references is safe while the
// cache only ever grows.
std::map<long, std::vector<BigInt>> row_cache;
}  // namespace

const std::vector<BigInt>& binom_row(long n) {
    if (n < 0)
        throw std::domain_error("binom_row: negative n = " + std::to_string(n));
    std::lock_guard<std::mutex> lock(row_mutex);
    auto it = row_cache.find(n);
    if (it != row_cache.end()) return it->second;

    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long k = 1; k <= n; ++k) {
        // C(n,k) = C(n,k-1) * (n-k+1) / k; the division is always exact.
        row[static_cast<std::size_t>(k)] =
            row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    }
    return row_cache.emplace(n, std::move(row)).first->second;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace jg
