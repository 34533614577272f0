#include "puritydyn/coupling.hpp"

#include <stdexcept>

namespace puritydyn {

Rational alpha(int d) {
    if (d < 2) throw std::invalid_argument("alpha: local dimension d must be >= 2");
    return make_rational(d, static_cast<long>(d) * d + 1);
}

Rational lubkin_purity(int d, int n, int w) {
    if (d < 2) throw std::invalid_argument("lubkin_purity: d must be >= 2");
    if (n < 1) throw std::invalid_argument("lubkin_purity: n must be >= 1");
    if (w < 0 || w > n) throw std::invalid_argument("lubkin_purity: subsystem size outside [0, n]");
    BigInt dz(d);
    BigInt num = bigint_pow(dz, static_cast<unsigned long>(w)) +
                 bigint_pow(dz, static_cast<unsigned long>(n - w));
    BigInt den = 1 + bigint_pow(dz, static_cast<unsigned long>(n));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace puritydyn
