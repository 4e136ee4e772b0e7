#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zm {

struct SievedTables {
    std::size_t limit = 0;
    // index 0 is unused so that mobius[n] is mu(n)
    std::vector<std::int8_t> mobius;
    std::vector<std::uint32_t> divisor_count;
    std::vector<std::int32_t> mertens;
};

SievedTables build_sieves(std::size_t limit);

struct DirichletCharacter {
    unsigned modulus = 1;
    unsigned order = 1;  // values are order-th roots of unity
    // exponent[n] = e means chi(n) = exp(2 pi i e / order); -1 marks gcd(n,k) > 1
    std::vector<int> exponent;
    std::vector<std::complex<double>> values;
    bool is_principal = true;

    std::complex<double> operator()(long long n) const;
    DirichletCharacter conj() const;
    bool is_real() const;
};

std::vector<DirichletCharacter> characters_mod(unsigned k);
unsigned euler_phi(unsigned k);

long double harmonic(unsigned long long k);

// B_0..B_max as long double, B_1 = -1/2
class BernoulliTable {
public:
    static const BernoulliTable& instance();

    long double number(unsigned j) const { return nums_.at(j); }
    unsigned max_index() const { return static_cast<unsigned>(nums_.size()) - 1; }
    long double polynomial(unsigned j, long double x) const;

private:
    explicit BernoulliTable(unsigned max_index);
    std::vector<long double> nums_;
};

}  // namespace zm
