#include "addbasis/report.hpp"

namespace addbasis {

BasisReport make_report(const IntSet& basis) {
    BasisReport rep;
    rep.n = range_n(basis); // also enforces 0 in basis
    rep.k = std::int64_t(basis.size());
    rep.ratio = Rational(rep.n) / Rational(rep.k * rep.k);
    return rep;
}

BasisReport make_report(const IntSet& basis, int t) {
    if (t < 2) throw InputError("segment parameter t must be at least 2");
    BasisReport rep = make_report(basis);
    rep.t = t;
    rep.r = Rational(std::int64_t(t) * t, std::int64_t(t + 1) * (t + 1));
    return rep;
}

} // namespace addbasis
