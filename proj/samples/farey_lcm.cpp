// lcm[1..N] recovered from Gamma values on the Farey fractions of order N:
// prod_{r in F_N} Gamma(r) / sqrt(2 pi) = lcm[1..N]^(-1/2).

#include "gammaprod/gammaprod.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace gammaprod;
    const std::int64_t order = argc > 1 ? std::atoll(argv[1]) : 20;
    const PrecisionContext ctx(192);
    const int w = ctx.working_bits();

    BigFloat sum(w);
    const BigFloat half_log_two_pi = constants::log_two_pi(w) / 2L;
    for_each_farey(order, [&](std::int64_t num, std::int64_t den) {
        sum += lngamma_rational(Rational(num, den), ctx) - half_log_two_pi;
    });
    const BigFloat recovered = exp(sum * -2L);
    std::cout << "from Gamma values: " << recovered.to_string(40) << '\n'
              << "exact lcm[1.." << order << "]: " << lcm_upto(order) << '\n';
}
