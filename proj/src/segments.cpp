#include "addbasis/segments.hpp"

namespace addbasis {

namespace {

void check_t(int t) {
    if (t < 2) throw InputError("segment parameter t must be at least 2");
    if (t > kMaxSegmentT) throw InputError("segment parameter t exceeds 2^20-1");
}

} // namespace

const char* to_string(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::V: return "V";
    case SegmentKind::H: return "H";
    case SegmentKind::S: return "S";
    }
    throw InputError("unknown segment kind");
}

IntSet build_segment(SegmentKind kind, int t) {
    check_t(t);
    Elem tt = Elem(t) * t;
    switch (kind) {
    case SegmentKind::V: return IntSet::interval(0, t);
    case SegmentKind::H: return IntSet::ap(0, t, tt - t);
    case SegmentKind::S: return IntSet::ap(0, t + 1, tt - 1);
    }
    throw InputError("unknown segment kind");
}

IntSet square(int t) {
    check_t(t);
    return IntSet::interval(0, Elem(t) * t - 1);
}

IntSet parallelogram(int t) {
    return sumset(build_segment(SegmentKind::H, t), build_segment(SegmentKind::S, t));
}

IntSet build_basis(const Placement& p, int t) {
    check_t(t);
    if (p.total_segments() == 0) throw InputError("placement has no segments");
    Elem tt = Elem(t) * t;
    IntSet basis;
    auto add_copies = [&](SegmentKind kind, const IntSet& locs) {
        if (locs.empty()) return;
        IntSet seg = build_segment(kind, t);
        for (Elem loc : locs.elements()) {
            if (loc > kMaxElement / tt)
                throw InputError("segment location " + std::to_string(loc) +
                                 " overflows capacity at t=" + std::to_string(t));
            basis = basis.unite(translate(seg, tt * loc));
        }
    };
    add_copies(SegmentKind::V, p.v_locs);
    add_copies(SegmentKind::H, p.h_locs);
    add_copies(SegmentKind::S, p.s_locs);
    return basis;
}

IntSet simple_basis(int t) {
    check_t(t);
    return IntSet::interval(0, t).unite(IntSet::ap(2 * Elem(t), t, Elem(t) * t));
}

} // namespace addbasis
