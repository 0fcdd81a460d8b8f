#include "pendmel/elliptic.hpp"

namespace pendmel::elliptic {

double eval_K(double k)
{
    return complete<double>(k).K;
}

double eval_E(double k)
{
    if (k == 1.0)
        return 1.0;
    if (!(k >= 0) || !(k <= 1))
        throw DomainError("E(k) needs 0 <= k <= 1");
    return complete<double>(k).E;
}

namespace {

void require_open_unit(double k)
{
    if (!(k > 0) || !(k < 1))
        throw DomainError("elliptic derivatives need 0 < k < 1");
}

}  // namespace

double deriv_K(double k)
{
    require_open_unit(k);
    auto [K, E] = complete<double>(k);
    const double kc2 = (1 - k) * (1 + k);
    return (E - kc2 * K) / (k * kc2);
}

double deriv_E(double k)
{
    require_open_unit(k);
    auto [K, E] = complete<double>(k);
    return (E - K) / k;
}

}  // namespace pendmel::elliptic
