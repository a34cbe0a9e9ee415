// Minimal library use: boundary gap at the origin for two coupling profiles.

#include <cstdio>

#include "ichain/exact.hpp"

int main() {
    using namespace ichain;
    const Beta beta(3);
    for (const char* spec : {"abs", "constant:1"}) {
        const auto profile = parse_profile(spec);
        for (int n : {10, 100, 1000}) {
            const Volume v(n);
            std::printf("%-10s n=%-5d plus=%.6e minus=%.6f gap=%.6e\n", spec, n,
                        site_marginal(profile, v, beta, Spin::plus, 0, Spin::minus),
                        site_marginal(profile, v, beta, Spin::minus, 0, Spin::minus),
                        magnetization_gap(profile, v, beta));
        }
    }
}
