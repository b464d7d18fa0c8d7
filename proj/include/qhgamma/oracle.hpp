#pragma once

#include "qhgamma/algebra.hpp"

#include <vector>

namespace qhgamma {

/// Independent oracle for powers of u in the odd-Hirzebruch algebra: computes
/// u^p inside Lambda[u] / (u^4 t^{2mu} + u^3 t^{mu} - t^{-1}) by naive
/// polynomial multiplication and long division against the relation, then
/// converts the degree <= 3 remainder back to the {1, u, u3, u0} basis via
/// u^2 = u3 t^{-mu} and u^3 = u0 t^{-mu} - u3 t^{-2mu}. Uses Novikov scalar
/// arithmetic only; never touches the presentation table or mul/power.
inline QuantumClass odd_u_power_reduced(const AlgebraPresentation::Ptr& p, long pow) {
    if (p->kind != ManifoldKind::OddHirzebruch)
        throw InvalidParameterError("odd_u_power_reduced: odd-Hirzebruch presentation required");
    if (pow < 0) throw InvalidParameterError("odd_u_power_reduced: nonnegative power required");

    // poly[k] = coefficient of u^k
    std::vector<NovikovScalar> poly{p->one_scalar()};
    const NovikovScalar head = p->mono(1, -1, -2);   // u^4 = t^{-2mu-1} - u^3 t^{-mu}
    const NovikovScalar drop = p->mono(-1, 0, -1);

    for (long step = 0; step < pow; ++step) {
        // multiply by u
        poly.insert(poly.begin(), p->zero_scalar());
        // reduce the (single) degree-4 coefficient
        while (poly.size() > 4) {
            NovikovScalar lead = poly.back();
            poly.pop_back();
            if (lead.is_zero()) continue;
            std::size_t d = poly.size();  // lead was coefficient of u^d with d >= 4
            poly[d - 4] = scalar_add(poly[d - 4], scalar_mul(lead, head));
            poly[d - 1] = scalar_add(poly[d - 1], scalar_mul(lead, drop));
        }
    }
    poly.resize(4, p->zero_scalar());

    std::vector<NovikovScalar> coords(p->size(), p->zero_scalar());
    coords[0] = poly[0];
    coords[1] = poly[1];
    coords[2] = scalar_mul(poly[2], p->mono(1, 0, -1));
    coords[2] = scalar_add(coords[2], scalar_mul(poly[3], p->mono(-1, 0, -2)));
    coords[3] = scalar_mul(poly[3], p->mono(1, 0, -1));
    return {p, std::move(coords)};
}

}  // namespace qhgamma
