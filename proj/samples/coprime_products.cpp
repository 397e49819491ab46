// Prints, for each n, the product of Gamma(k/n) over k coprime to n divided
// by (2 pi)^(phi(n)/2). The quotient is 1/sqrt(p) when n is a power of p and
// 1 otherwise.

#include "gammaprod/gammaprod.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace gammaprod;
    const std::int64_t n_max = argc > 1 ? std::atoll(argv[1]) : 30;
    const PrecisionContext ctx(128);
    const int w = ctx.working_bits();

    for (std::int64_t n = 2; n <= std::min<std::int64_t>(n_max, kDenominatorCap); ++n) {
        BigFloat log_product(w);
        for (std::int64_t k : coprime_residues(n)) log_product += lngamma_rational(reduce(k, n), ctx);
        const BigFloat excess = log_product - constants::log_two_pi(w) * static_cast<long>(phi(n)) / 2L;
        std::cout << n << "\t" << exp(excess).to_string(20) << "\tPhi_n(1) = " << cyclotomic_at_one(n) << '\n';
    }
}
