#include "zm/nt_core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace zm {

SievedTables build_sieves(std::size_t limit)
{
    if (limit == 0) throw std::invalid_argument("build_sieves: limit must be >= 1");
    SievedTables t;
    t.limit = limit;
    t.mobius.assign(limit + 1, 0);
    t.divisor_count.assign(limit + 1, 0);
    t.mertens.assign(limit + 1, 0);

    // linear sieve; cnt[n] is the exponent of the smallest prime in n
    std::vector<std::uint32_t> primes;
    std::vector<std::uint8_t> cnt(limit + 1, 0);
    t.mobius[1] = 1;
    t.divisor_count[1] = 1;
    for (std::size_t i = 2; i <= limit; ++i) {
        if (cnt[i] == 0) {
            primes.push_back(static_cast<std::uint32_t>(i));
            t.mobius[i] = -1;
            t.divisor_count[i] = 2;
            cnt[i] = 1;
        }
        for (std::uint32_t p : primes) {
            std::size_t ip = i * p;
            if (ip > limit) break;
            if (i % p == 0) {
                cnt[ip] = cnt[i] + 1;
                t.mobius[ip] = 0;
                t.divisor_count[ip] = t.divisor_count[i] / (cnt[i] + 1) * (cnt[i] + 2);
                break;
            }
            cnt[ip] = 1;
            t.mobius[ip] = static_cast<std::int8_t>(-t.mobius[i]);
            t.divisor_count[ip] = t.divisor_count[i] * 2;
        }
    }
    std::int32_t m = 0;
    for (std::size_t i = 1; i <= limit; ++i) {
        m += t.mobius[i];
        t.mertens[i] = m;
    }
    return t;
}

std::complex<double> DirichletCharacter::operator()(long long n) const
{
    long long r = n % static_cast<long long>(modulus);
    if (r < 0) r += modulus;
    return values[static_cast<std::size_t>(r)];
}

DirichletCharacter DirichletCharacter::conj() const
{
    DirichletCharacter c = *this;
    for (std::size_t r = 0; r < exponent.size(); ++r) {
        if (exponent[r] < 0) continue;
        c.exponent[r] = static_cast<int>((order - exponent[r]) % order);
        c.values[r] = std::conj(values[r]);
    }
    return c;
}

bool DirichletCharacter::is_real() const
{
    for (int e : exponent)
        if (e > 0 && 2 * static_cast<unsigned>(e) != order) return false;
    return true;
}

unsigned euler_phi(unsigned k)
{
    unsigned r = k;
    for (unsigned p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        while (k % p == 0) k /= p;
        r -= r / p;
    }
    if (k > 1) r -= r / k;
    return r;
}

namespace {

struct CyclicFactor {
    unsigned gen;   // generator as residue mod k
    unsigned size;  // order of the factor
};

unsigned mult_order(unsigned g, unsigned k)
{
    unsigned long long x = g % k;
    unsigned ord = 1;
    while (x != 1 % k) {
        x = x * g % k;
        ++ord;
    }
    return ord;
}

// Brute-force decomposition of (Z/kZ)* into cyclic factors: repeatedly pick
// the element whose cyclic subgroup meets the current subgroup trivially and
// has the largest order.
std::vector<CyclicFactor> unit_group_factors(unsigned k)
{
    std::vector<CyclicFactor> out;
    if (k <= 2) return out;
    const unsigned phi = euler_phi(k);
    std::vector<char> in_h(k, 0);
    in_h[1] = 1;
    unsigned h_size = 1;
    while (h_size < phi) {
        unsigned best = 0, best_ord = 0;
        for (unsigned g = 2; g < k; ++g) {
            if (std::gcd(g, k) != 1 || in_h[g]) continue;
            unsigned ord = mult_order(g, k);
            if (ord <= best_ord) continue;
            // <g> intersect H must be trivial
            bool ok = true;
            unsigned long long x = g;
            for (unsigned e = 1; e < ord; ++e, x = x * g % k)
                if (in_h[x]) { ok = false; break; }
            if (ok) { best = g; best_ord = ord; }
        }
        if (best == 0) throw std::logic_error("characters_mod: unit group decomposition failed");
        // H <- H x <best>
        std::vector<unsigned> elems;
        for (unsigned r = 0; r < k; ++r)
            if (in_h[r]) elems.push_back(r);
        unsigned long long x = best;
        for (unsigned e = 1; e < best_ord; ++e, x = x * best % k)
            for (unsigned h : elems) in_h[(x * h) % k] = 1;
        h_size *= best_ord;
        out.push_back({best, best_ord});
    }
    return out;
}

}  // namespace

std::vector<DirichletCharacter> characters_mod(unsigned k)
{
    if (k == 0) throw std::invalid_argument("characters_mod: modulus must be >= 1");
    if (k > 10000) throw std::invalid_argument("characters_mod: modulus capped at 10000");

    const auto factors = unit_group_factors(k);
    unsigned order = 1;
    for (const auto& f : factors) order = std::lcm(order, f.size);

    // discrete-log coordinates of each unit
    std::vector<std::vector<unsigned>> coords(k);
    std::vector<unsigned> idx(factors.size(), 0);
    std::size_t total = 1;
    for (const auto& f : factors) total *= f.size;
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t rem = c;
        unsigned long long v = 1 % k;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            idx[i] = static_cast<unsigned>(rem % factors[i].size);
            rem /= factors[i].size;
            for (unsigned e = 0; e < idx[i]; ++e) v = v * factors[i].gen % k;
        }
        coords[v] = idx;
    }

    std::vector<DirichletCharacter> chars;
    for (std::size_t c = 0; c < total; ++c) {
        std::vector<unsigned> j(factors.size());
        std::size_t rem = c;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            j[i] = static_cast<unsigned>(rem % factors[i].size);
            rem /= factors[i].size;
        }
        DirichletCharacter chi;
        chi.modulus = k;
        chi.order = order;
        chi.exponent.assign(k, -1);
        chi.values.assign(k, 0.0);
        chi.is_principal = (c == 0);
        for (unsigned r = 0; r < k; ++r) {
            if (std::gcd(r, k) != 1) continue;
            unsigned long long e = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                e += static_cast<unsigned long long>(j[i]) * coords[r][i] * (order / factors[i].size);
            int ex = static_cast<int>(e % order);
            chi.exponent[r] = ex;
            if (ex == 0)
                chi.values[r] = 1.0;
            else if (2 * ex == static_cast<int>(order))
                chi.values[r] = -1.0;
            else if (4 * ex == static_cast<int>(order))
                chi.values[r] = {0.0, 1.0};
            else if (4 * ex == 3 * static_cast<int>(order))
                chi.values[r] = {0.0, -1.0};
            else
                chi.values[r] = std::polar(1.0, 2.0 * std::numbers::pi * ex / order);
        }
        if (k == 1) {
            chi.exponent[0] = 0;
            chi.values[0] = 1.0;
        }
        chars.push_back(std::move(chi));
    }
    return chars;
}

long double harmonic(unsigned long long k)
{
    if (k == 0) throw std::invalid_argument("harmonic: k must be >= 1");
    long double s = 0.0L;
    for (unsigned long long l = k; l >= 1; --l) s += 1.0L / static_cast<long double>(l);
    return s;
}

BernoulliTable::BernoulliTable(unsigned max_index)
{
    using boost::multiprecision::cpp_rational;
    // Akiyama-Tanigawa gives B_1 = +1/2; flip it afterwards
    std::vector<cpp_rational> a(max_index + 1);
    nums_.resize(max_index + 1);
    for (unsigned m = 0; m <= max_index; ++m) {
        a[m] = cpp_rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
        nums_[m] = static_cast<long double>(a[0]);
    }
    if (max_index >= 1) nums_[1] = -0.5L;
}

const BernoulliTable& BernoulliTable::instance()
{
    static const BernoulliTable table(60);
    return table;
}

long double BernoulliTable::polynomial(unsigned j, long double x) const
{
    // B_j(x) = sum_k C(j,k) B_k x^{j-k}
    long double s = 0.0L, binom = 1.0L;
    for (unsigned k = 0; k <= j; ++k) {
        s += binom * nums_.at(k) * std::pow(x, static_cast<long double>(j - k));
        binom = binom * (j - k) / (k + 1);
    }
    return s;
}

}  // namespace zm
