#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "addbasis/errors.hpp"

namespace addbasis {

using Elem = std::int64_t;

// Elements live in [0, 2^40) so that sums, differences and bit-array sizes
// stay far away from 64-bit overflow.
inline constexpr Elem kMaxElement = (Elem{1} << 40) - 1;

// Dense sumset arithmetic allocates one bit per value up to max(A)+max(B);
// inputs whose sums would exceed this are rejected rather than silently
// eating memory.
inline constexpr Elem kMaxDenseSum = Elem{1} << 33;

// A finite set of non-negative integers with value semantics.  Elements are
// stored sorted and deduplicated; every constructor and mutator enforces the
// [0, kMaxElement] capacity window up front.
class IntSet {
  public:
    IntSet() = default;
    IntSet(std::initializer_list<Elem> xs);
    explicit IntSet(std::vector<Elem> xs);

    // Arithmetic progression {first, first+step, ..., last}; step must divide
    // last-first exactly.  interval(a, b) is the step-1 shorthand.
    static IntSet ap(Elem first, Elem step, Elem last);
    static IntSet interval(Elem first, Elem last);

    [[nodiscard]] const std::vector<Elem>& elements() const { return elems_; }
    [[nodiscard]] std::size_t size() const { return elems_.size(); }
    [[nodiscard]] bool empty() const { return elems_.empty(); }
    [[nodiscard]] bool contains(Elem x) const;
    [[nodiscard]] Elem min() const; // throws InputError on the empty set
    [[nodiscard]] Elem max() const; // throws InputError on the empty set

    [[nodiscard]] IntSet unite(const IntSet& other) const;
    [[nodiscard]] bool includes(const IntSet& other) const;

    bool operator==(const IntSet& o) const = default;
    // Lexicographic on the sorted element sequences, so {0,2} < {1} < {1,5}.
    std::strong_ordering operator<=>(const IntSet& o) const = default;

    // "{0, 1, 3, 4}" — for diagnostics and error messages.
    [[nodiscard]] std::string str() const;

  private:
    std::vector<Elem> elems_;

    void normalize_and_check();
};

// Element-wise shift by `offset` (may be negative as long as the result stays
// non-negative).
IntSet translate(const IntSet& a, Elem offset);

// Element-wise multiplication by a non-negative factor.
IntSet scale(Elem factor, const IntSet& a);

// {a + b : a in A, b in B}.  Both operands must be non-empty and the largest
// sum must stay below kMaxDenseSum.
IntSet sumset(const IntSet& a, const IntSet& b);

// Largest n with [0, n] contained in A+A (and n+1 missing); A must contain 0.
Elem range_n(const IntSet& a);

} // namespace addbasis
