#include "addbasis/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace addbasis {

namespace {

// k <= 31 keeps every element and every relevant sum below 512: a prefix
// with i+1 elements covers [0, g-1] only if g <= (i+1)(i+2)/2, so gaps and
// useful sums never pass k(k+1)/2 <= 496.  Eight words cover the window.
constexpr int kMaxK = 31;
constexpr int kWindow = 512;

struct Mask {
    std::array<std::uint64_t, 8> w{};

    [[nodiscard]] bool test(int i) const { return (w[std::size_t(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[std::size_t(i) >> 6] |= std::uint64_t{1} << (i & 63); }

    // *this |= other << k, truncated at the window.
    void or_shifted(const Mask& other, int k) {
        std::size_t wq = std::size_t(k) >> 6;
        int r = k & 63;
        for (std::size_t i = 0; i + wq < w.size(); ++i) {
            std::uint64_t x = other.w[i];
            if (x == 0) continue;
            w[i + wq] |= x << r;
            if (r != 0 && i + wq + 1 < w.size()) w[i + wq + 1] |= x >> (64 - r);
        }
    }

    [[nodiscard]] int first_clear() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != ~std::uint64_t{0}) return int(i) * 64 + std::countr_one(w[i]);
        return kWindow;
    }

    // Number of set bits with index in [lo, hi].
    [[nodiscard]] int count_between(int lo, int hi) const {
        if (lo > hi) return 0;
        int total = 0;
        for (int i = lo >> 6; i <= hi >> 6; ++i) {
            std::uint64_t x = w[std::size_t(i)];
            if (i == lo >> 6) x &= ~std::uint64_t{0} << (lo & 63);
            if (i == hi >> 6 && (hi & 63) != 63) x &= (std::uint64_t{1} << ((hi & 63) + 1)) - 1;
            total += std::popcount(x);
        }
        return total;
    }
};

struct Prefix {
    Mask elems, sums;
    int count = 1;
    int last = 0;
    int gap = 1; // first value missing from the prefix sums
};

Prefix root_prefix() {
    Prefix p;
    p.elems.set(0);
    p.sums.set(0);
    return p;
}

Prefix extended(const Prefix& p, int e) {
    Prefix q = p;
    q.sums.or_shifted(p.elems, e);
    if (2 * e < kWindow) q.sums.set(2 * e);
    q.elems.set(e);
    ++q.count;
    q.last = e;
    q.gap = q.sums.first_clear();
    return q;
}

// The prefix covers [0, gap-1]; a completion with r more elements can add at
// most r*count + r*(r+1)/2 new sums at or past the gap, and reuse whatever
// prefix sums already sit in (gap, cap].
Elem completion_bound(const Prefix& p, int k, int cap) {
    int r = k - p.count;
    int carried = p.sums.count_between(p.gap + 1, cap);
    Elem u = Elem(p.gap) - 1 + Elem(r) * p.count + Elem(r) * (r + 1) / 2 + carried;
    return std::min<Elem>(u, cap);
}

// The k-element completion of p that keeps its range exactly gap-1: fill
// with elements past the gap (they only create sums past the gap).
IntSet padded_witness(const Prefix& p, int k) {
    std::vector<Elem> xs;
    for (int i = 0; i < kWindow; ++i)
        if (p.elems.test(i)) xs.push_back(i);
    int need = k - p.count;
    for (Elem c = Elem(p.gap) + 1; need > 0; ++c) {
        if (c < kWindow && p.elems.test(int(c))) continue;
        xs.push_back(c);
        --need;
    }
    return IntSet(std::move(xs));
}

constexpr std::size_t kWitnessCap = 16;

struct Best {
    Elem n = -1;
    std::vector<IntSet> witnesses; // sorted ascending, at most kWitnessCap
};

void merge_witness(Best& b, const IntSet& w) {
    auto it = std::lower_bound(b.witnesses.begin(), b.witnesses.end(), w);
    if (it != b.witnesses.end() && *it == w) return;
    if (b.witnesses.size() >= kWitnessCap) {
        if (it == b.witnesses.end()) return;
        b.witnesses.pop_back();
        it = std::lower_bound(b.witnesses.begin(), b.witnesses.end(), w);
    }
    b.witnesses.insert(it, w);
}

void merge_candidate(Best& b, Elem v, const IntSet& w) {
    if (v < b.n) return;
    if (v > b.n) {
        b.n = v;
        b.witnesses.clear();
    }
    merge_witness(b, w);
}

void merge_best(Best& into, const Best& other) {
    if (other.n < into.n) return;
    if (other.n > into.n) {
        into.n = other.n;
        into.witnesses.clear();
    }
    for (const IntSet& w : other.witnesses) merge_witness(into, w);
}

struct NkShared {
    int k = 0;
    int cap = 0;
    std::atomic<Elem> best_n{-1};
    std::mutex mu;
    Best best;

    // Budgeted (sequential) runs only.
    std::uint64_t budget = 0;
    std::uint64_t visits = 0;
    bool stopped = false;
};

void raise_best(NkShared& sh, Elem v) {
    Elem prev = sh.best_n.load(std::memory_order_relaxed);
    while (v > prev && !sh.best_n.compare_exchange_weak(prev, v, std::memory_order_relaxed)) {
    }
}

void nk_dfs(const Prefix& p, NkShared& sh, Best& local) {
    if (sh.budget != 0) {
        if (sh.stopped) return;
        if (++sh.visits >= sh.budget) sh.stopped = true;
    }
    Elem v = Elem(p.gap) - 1;
    if (v >= sh.best_n.load(std::memory_order_relaxed)) {
        merge_candidate(local, v, padded_witness(p, sh.k));
        raise_best(sh, v);
    }
    if (p.count == sh.k) return;
    for (int e = p.last + 1; e <= p.gap; ++e) {
        Prefix child = extended(p, e);
        if (completion_bound(child, sh.k, sh.cap) < sh.best_n.load(std::memory_order_relaxed))
            continue;
        nk_dfs(child, sh, local);
        if (sh.budget != 0 && sh.stopped) return;
    }
}

void flush_local(NkShared& sh, const Best& local) {
    std::lock_guard<std::mutex> lk(sh.mu);
    merge_best(sh.best, local);
}

} // namespace

ExtremalRecord n_of_k(int k, const NkOptions& opts) {
    if (k < 2 || k > kMaxK)
        throw InputError("k must lie in [2, " + std::to_string(kMaxK) + "]");
    if (opts.threads < 1 || opts.threads > 256)
        throw InputError("thread count must lie in [1, 256]");

    NkShared sh;
    sh.k = k;
    sh.cap = k * (k + 1) / 2;
    sh.budget = opts.node_budget;

    bool complete = true;
    if (opts.node_budget != 0 || opts.threads == 1) {
        Best local;
        nk_dfs(root_prefix(), sh, local);
        flush_local(sh, local);
        complete = !sh.stopped;
    } else {
        // Grow a deterministic frontier wide enough to feed the workers, then
        // split.  Interior nodes contribute their padded candidates as they
        // are expanded, so nothing is lost in the handoff.
        std::vector<Prefix> frontier{root_prefix()};
        Best expand_local;
        std::size_t want = std::size_t(opts.threads) * 8;
        while (!frontier.empty() && frontier.size() < want) {
            std::vector<Prefix> next;
            for (const Prefix& p : frontier) {
                Elem v = Elem(p.gap) - 1;
                merge_candidate(expand_local, v, padded_witness(p, k));
                raise_best(sh, v);
                if (p.count == k) continue;
                for (int e = p.last + 1; e <= p.gap; ++e) {
                    Prefix child = extended(p, e);
                    if (completion_bound(child, k, sh.cap) <
                        sh.best_n.load(std::memory_order_relaxed))
                        continue;
                    next.push_back(child);
                }
            }
            frontier = std::move(next);
        }
        flush_local(sh, expand_local);

        std::atomic<std::size_t> idx{0};
        auto worker = [&] {
            Best local;
            for (;;) {
                std::size_t i = idx.fetch_add(1);
                if (i >= frontier.size()) break;
                nk_dfs(frontier[i], sh, local);
            }
            flush_local(sh, local);
        };
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(opts.threads));
        for (int i = 0; i < opts.threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ExtremalRecord rec;
    rec.k = k;
    rec.n = sh.best.n;
    rec.witnesses = std::move(sh.best.witnesses);
    rec.exhaustive = complete;
    return rec;
}

} // namespace addbasis
