#include "addbasis/int_set.hpp"

#include <algorithm>
#include <bit>

namespace addbasis {

namespace {

void check_element(Elem x) {
    if (x < 0) throw InputError("set element " + std::to_string(x) + " is negative");
    if (x > kMaxElement)
        throw InputError("set element " + std::to_string(x) + " exceeds capacity 2^40-1");
}

// Word-aligned bit array over [0, limit]; the workhorse behind sumset and
// range_n.  All sets handled here are dense relative to their span, so one
// bit per value beats any comparison-based merge.
class BitVec {
  public:
    explicit BitVec(Elem limit) : bits_(std::size_t(limit / 64 + 1), 0), limit_(limit) {}

    void set(Elem i) { bits_[std::size_t(i >> 6)] |= std::uint64_t{1} << (i & 63); }

    [[nodiscard]] bool test(Elem i) const {
        return (bits_[std::size_t(i >> 6)] >> (i & 63)) & 1u;
    }

    // *this |= other << shift, truncated at the limit.
    void or_shifted(const BitVec& other, Elem shift) {
        std::size_t wq = std::size_t(shift >> 6);
        int r = int(shift & 63);
        std::size_t nw = bits_.size();
        for (std::size_t i = 0; i < other.bits_.size(); ++i) {
            std::uint64_t w = other.bits_[i];
            if (w == 0) continue;
            if (i + wq < nw) bits_[i + wq] |= w << r;
            if (r != 0 && i + wq + 1 < nw) bits_[i + wq + 1] |= w >> (64 - r);
        }
    }

    // First index in [0, limit] whose bit is clear, or limit+1 if none.
    [[nodiscard]] Elem first_clear() const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] != ~std::uint64_t{0}) {
                Elem idx = Elem(i) * 64 + std::countr_one(bits_[i]);
                return std::min(idx, limit_ + 1);
            }
        }
        return limit_ + 1;
    }

    [[nodiscard]] std::vector<Elem> to_elements() const {
        std::vector<Elem> out;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                Elem v = Elem(i) * 64 + b;
                if (v <= limit_) out.push_back(v);
                w &= w - 1;
            }
        }
        return out;
    }

  private:
    std::vector<std::uint64_t> bits_;
    Elem limit_;
};

BitVec sum_bits(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) throw InputError("sumset of an empty set");
    Elem top = a.max() + b.max();
    if (top >= kMaxDenseSum)
        throw InputError("sumset span " + std::to_string(top) +
                         " exceeds dense capacity 2^33");
    BitVec bs(top);
    // One shifted OR per element of the smaller operand.
    const IntSet& small = a.size() <= b.size() ? a : b;
    const IntSet& large = a.size() <= b.size() ? b : a;
    BitVec large_bits(large.max());
    for (Elem x : large.elements()) large_bits.set(x);
    for (Elem x : small.elements()) bs.or_shifted(large_bits, x);
    return bs;
}

} // namespace

IntSet::IntSet(std::initializer_list<Elem> xs) : elems_(xs) { normalize_and_check(); }

IntSet::IntSet(std::vector<Elem> xs) : elems_(std::move(xs)) { normalize_and_check(); }

void IntSet::normalize_and_check() {
    for (Elem x : elems_) check_element(x);
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::ap(Elem first, Elem step, Elem last) {
    check_element(first);
    check_element(last);
    if (last < first) throw InputError("progression with last < first");
    if (first == last) return IntSet{first};
    if (step <= 0) throw InputError("progression step must be positive");
    if ((last - first) % step != 0)
        throw InputError("progression step " + std::to_string(step) + " does not divide " +
                         std::to_string(last - first));
    std::vector<Elem> xs;
    xs.reserve(std::size_t((last - first) / step + 1));
    for (Elem x = first; x <= last; x += step) xs.push_back(x);
    IntSet s;
    s.elems_ = std::move(xs); // already sorted, unique, in range
    return s;
}

IntSet IntSet::interval(Elem first, Elem last) { return ap(first, 1, last); }

bool IntSet::contains(Elem x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

Elem IntSet::min() const {
    if (elems_.empty()) throw InputError("min of an empty set");
    return elems_.front();
}

Elem IntSet::max() const {
    if (elems_.empty()) throw InputError("max of an empty set");
    return elems_.back();
}

IntSet IntSet::unite(const IntSet& other) const {
    std::vector<Elem> out;
    out.reserve(elems_.size() + other.elems_.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(out));
    IntSet s;
    s.elems_ = std::move(out);
    return s;
}

bool IntSet::includes(const IntSet& other) const {
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                         other.elems_.end());
}

std::string IntSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i != 0) out += ", ";
        out += std::to_string(elems_[i]);
    }
    out += "}";
    return out;
}

IntSet translate(const IntSet& a, Elem offset) {
    if (offset > kMaxElement || offset < -kMaxElement)
        throw InputError("translation offset exceeds capacity 2^40-1");
    std::vector<Elem> out;
    out.reserve(a.size());
    for (Elem x : a.elements()) {
        check_element(x + offset); // rejects both negative and overflowing shifts
        out.push_back(x + offset);
    }
    IntSet s(std::move(out));
    return s;
}

IntSet scale(Elem factor, const IntSet& a) {
    if (factor < 0) throw InputError("scale factor must be non-negative");
    std::vector<Elem> out;
    out.reserve(a.size());
    for (Elem x : a.elements()) {
        if (factor != 0 && x > kMaxElement / factor)
            throw InputError("scaled element exceeds capacity 2^40-1");
        out.push_back(x * factor);
    }
    return IntSet(std::move(out));
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    BitVec bs = sum_bits(a, b);
    IntSet s(bs.to_elements());
    return s;
}

Elem range_n(const IntSet& a) {
    if (!a.contains(0)) throw InputError("range of a basis requires 0 as an element");
    BitVec bs = sum_bits(a, a);
    return bs.first_clear() - 1;
}

} // namespace addbasis
