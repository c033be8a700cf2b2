#include "dfun/polar_identity.hpp"

#include "dfun/families.hpp"

namespace dfun {

PolarIdentityResult polar_identity_check(const Polytope& p, double half_width, std::size_t nodes) {
    const Polytope dual = polar(p);
    const GridFunction f = sample(AnalyticFamily(SupportExp{p}), BoxDomain::centered(p.dim(), half_width, nodes));
    const Integral in = integrate(f);
    PolarIdentityResult r;
    r.integral = in.value;
    r.tail_estimate = in.tail_estimate;
    r.expected = factorial(p.dim()) * volume(dual);
    r.ratio = r.integral / r.expected;
    return r;
}

} // namespace dfun
