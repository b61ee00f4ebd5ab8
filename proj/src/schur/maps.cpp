#include "qschur/qnumbers.hpp"
#include "qschur/schur.hpp"
#include "qschur/udot.hpp"

namespace qschur {

RationalFunction phi_d_scale(int d) { return RationalFunction(Laurent::t(-(d + parity(d)) / 2)); }

SchurElement phi_d(const UdotElement& x, int d) {
    if (x.flavor() != Flavor::Osp) throw FlavorMismatch("phi_d expects an osp element");
    const RationalFunction c = phi_d_scale(d);
    SchurElement out(d);
    for (const auto& [m, coeff] : x.terms()) {
        if (parity(d - m.lambda) != 0) continue;
        const int r0 = (d - m.lambda) / 2;
        const int r1 = r0 - m.b;
        const int r2 = r1 + m.a;
        if (r0 < 0 || r0 > d || r1 < 0 || r2 > d) continue;
        // F^(a) E^(b) 1_l -> c^{a+b} F_{r2,r1} E_{r1,r0}
        out += divided_generator(d, r2, m.a, Direction::F) * divided_generator(d, r1, m.b, Direction::E) * (coeff * c.pow(m.a + m.b));
    }
    return out;
}

}  // namespace qschur
