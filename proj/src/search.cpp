#include "addbasis/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace addbasis {

namespace {

// Locations are capped at 127 so that a part fits in two words and every
// location sum (<= 254) in four; the whole search state is then a handful of
// flat words that copy for free down the DFS stack.
constexpr int kLocCap = 127;

using LocBits = std::array<std::uint64_t, 2>;
using SumBits = std::array<std::uint64_t, 4>;

template <std::size_t W>
bool test_bit(const std::array<std::uint64_t, W>& a, int i) {
    return (a[std::size_t(i) >> 6] >> (i & 63)) & 1u;
}

template <std::size_t W>
void set_bit(std::array<std::uint64_t, W>& a, int i) {
    a[std::size_t(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

// dst |= src << k, truncating at dst's top.
template <std::size_t DW, std::size_t SW>
void or_shift(std::array<std::uint64_t, DW>& dst, const std::array<std::uint64_t, SW>& src,
              int k) {
    std::size_t wq = std::size_t(k) >> 6;
    int r = k & 63;
    for (std::size_t i = 0; i < SW; ++i) {
        std::uint64_t w = src[i];
        if (w == 0) continue;
        if (i + wq < DW) dst[i + wq] |= w << r;
        if (r != 0 && i + wq + 1 < DW) dst[i + wq + 1] |= w >> (64 - r);
    }
}

// Segment parts as bitmasks over locations plus incrementally maintained
// pairwise location sums.  m is the covered prefix; it only ever grows as
// segments are added.
struct Node {
    LocBits v{}, h{}, s{};
    SumBits vh{}, vs{}, hs{};
    int used = 0;
    int nv = 0, nh = 0, ns = 0;
    int m = 0;
};

enum : int { kKindV = 0, kKindH = 1, kKindS = 2 };

void apply_add(Node& nd, int kind, int loc) {
    switch (kind) {
    case kKindV:
        or_shift(nd.vh, nd.h, loc);
        or_shift(nd.vs, nd.s, loc);
        set_bit(nd.v, loc);
        ++nd.nv;
        break;
    case kKindH:
        or_shift(nd.vh, nd.v, loc);
        or_shift(nd.hs, nd.s, loc);
        set_bit(nd.h, loc);
        ++nd.nh;
        break;
    default:
        or_shift(nd.vs, nd.v, loc);
        or_shift(nd.hs, nd.h, loc);
        set_bit(nd.s, loc);
        ++nd.ns;
        break;
    }
    ++nd.used;
}

bool loc_covered(const Node& nd, int x) {
    if (test_bit(nd.vh, x) || test_bit(nd.vs, x)) return true;
    return x >= 1 && test_bit(nd.hs, x - 1) && test_bit(nd.hs, x);
}

void settle(Node& nd) {
    while (nd.m < 2 * kLocCap + 1 && loc_covered(nd, nd.m)) ++nd.m;
}

// A branch: at most four segment additions that together cover the frontier.
struct Add {
    std::int16_t kind = 3;
    std::int16_t loc = 999; // sentinel sorts after every real location

    bool operator==(const Add& o) const = default;
    auto operator<=>(const Add& o) const = default;
};

struct Branch {
    std::array<Add, 4> adds{};
    int n = 0;

    void push(int kind, int loc) {
        adds[std::size_t(n)] = {std::int16_t(kind), std::int16_t(loc)};
        ++n;
    }

    void canon() {
        std::sort(adds.begin(), adds.begin() + n, [](const Add& a, const Add& b) {
            return a.kind != b.kind ? a.kind < b.kind : a.loc < b.loc;
        });
    }

    bool operator==(const Branch& o) const = default;
    auto operator<=>(const Branch& o) const = default;
};

Node child_of(const Node& nd, const Branch& br) {
    Node child = nd;
    for (int i = 0; i < br.n; ++i) apply_add(child, br.adds[std::size_t(i)].kind, br.adds[std::size_t(i)].loc);
    settle(child);
    return child;
}

// All minimal ways to cover the frontier nd.m with at most the remaining
// budget of segments.  At the root only V+S branches are kept: any placement
// covering location 0 has a V copy at 0 and an H or S copy at 0, and the
// J <-> K exchange turns the H form into the S form, so the reduction loses
// no value and no orbit.
std::vector<Branch> frontier_branches(const Node& nd, int l, int L) {
    std::vector<Branch> out;
    int x = nd.m;
    int u = l - nd.used;
    if (u <= 0 || x > 2 * L) return out;

    auto square_rule = [&](const LocBits& other, int other_kind) {
        for (int i = std::max(0, x - L); i <= std::min(x, L); ++i) {
            int j = x - i;
            bool need_v = !test_bit(nd.v, i);
            bool need_o = !test_bit(other, j);
            int cost = int(need_v) + int(need_o);
            if (cost == 0 || cost > u) continue;
            Branch b;
            if (need_v) b.push(kKindV, i);
            if (need_o) b.push(other_kind, j);
            b.canon();
            out.push_back(b);
        }
    };
    square_rule(nd.h, kKindH);
    square_rule(nd.s, kKindS);

    if (x >= 1) {
        // First make x-1 a location sum of H and S copies, then x.
        std::vector<Branch> firsts;
        if (test_bit(nd.hs, x - 1)) {
            firsts.emplace_back();
        } else {
            int y = x - 1;
            for (int j = std::max(0, y - L); j <= std::min(y, L); ++j) {
                int k = y - j;
                bool need_h = !test_bit(nd.h, j);
                bool need_s = !test_bit(nd.s, k);
                if (int(need_h) + int(need_s) > u) continue;
                Branch b;
                if (need_h) b.push(kKindH, j);
                if (need_s) b.push(kKindS, k);
                firsts.push_back(b);
            }
        }
        for (const Branch& f : firsts) {
            Node nd1 = nd;
            for (int i = 0; i < f.n; ++i) apply_add(nd1, f.adds[std::size_t(i)].kind, f.adds[std::size_t(i)].loc);
            if (test_bit(nd1.hs, x)) {
                if (f.n > 0) {
                    Branch b = f;
                    b.canon();
                    out.push_back(b);
                }
                continue;
            }
            int u1 = u - f.n;
            if (u1 <= 0) continue;
            for (int j = std::max(0, x - L); j <= std::min(x, L); ++j) {
                int k = x - j;
                bool need_h = !test_bit(nd1.h, j);
                bool need_s = !test_bit(nd1.s, k);
                int cost = int(need_h) + int(need_s);
                if (cost == 0 || cost > u1) continue;
                Branch b = f;
                if (need_h) b.push(kKindH, j);
                if (need_s) b.push(kKindS, k);
                b.canon();
                out.push_back(b);
            }
        }
    }

    if (nd.used == 0) {
        std::erase_if(out, [](const Branch& b) {
            for (int i = 0; i < b.n; ++i)
                if (b.adds[std::size_t(i)].kind == kKindH) return true;
            return false;
        });
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Upper bound on the final covered prefix from this subtree: the counting
// bound maximized over every way to spend the remaining segment budget,
// capped by the largest location sum available under L.
int subtree_bound(int nv, int nh, int ns, int u, int L) {
    int best = 0;
    for (int a = 0; a <= u; ++a) {
        for (int b = 0; a + b <= u; ++b) {
            int c = u - a - b;
            int vi = nv + a, vj = nh + b, vk = ns + c;
            best = std::max(best, vi * vj + vi * vk + vj * vk);
        }
    }
    return std::min(best, 2 * L + 1);
}

int branch_bound(const Node& nd, const Branch& br, int l, int L) {
    int dv = 0, dh = 0, ds = 0;
    for (int i = 0; i < br.n; ++i) {
        int kind = br.adds[std::size_t(i)].kind;
        dv += kind == kKindV;
        dh += kind == kKindH;
        ds += kind == kKindS;
    }
    return subtree_bound(nd.nv + dv, nd.nh + dh, nd.ns + ds, l - nd.used - br.n, L);
}

IntSet bits_to_set(const LocBits& bits) {
    std::vector<Elem> xs;
    for (int w = 0; w < 2; ++w) {
        std::uint64_t word = bits[std::size_t(w)];
        while (word != 0) {
            int b = std::countr_zero(word);
            xs.push_back(Elem(w) * 64 + b);
            word &= word - 1;
        }
    }
    return IntSet(std::move(xs));
}

Placement placement_from(const Node& nd) {
    return Placement{bits_to_set(nd.v), bits_to_set(nd.h), bits_to_set(nd.s)};
}

void merge_min_witness(std::optional<Placement>& into, const Placement& candidate) {
    if (!into || candidate < *into) into = candidate;
}

// --- value pass: find the best reachable m (parallel, order-independent) ---

struct ValueShared {
    int l, L;
    bool prune;
    std::atomic<int> best{0};
};

void value_dfs(const Node& nd, ValueShared& sh) {
    int prev = sh.best.load(std::memory_order_relaxed);
    while (nd.m > prev && !sh.best.compare_exchange_weak(prev, nd.m, std::memory_order_relaxed)) {
    }
    for (const Branch& br : frontier_branches(nd, sh.l, sh.L)) {
        if (sh.prune &&
            branch_bound(nd, br, sh.l, sh.L) <= sh.best.load(std::memory_order_relaxed))
            continue;
        Node child = child_of(nd, br);
        value_dfs(child, sh);
    }
}

int value_pass(int l, int L, bool prune, int threads) {
    ValueShared sh{l, L, prune};
    Node root;
    std::vector<Branch> top = frontier_branches(root, l, L);
    if (threads <= 1 || top.size() <= 1) {
        for (const Branch& br : top) {
            Node child = child_of(root, br);
            value_dfs(child, sh);
        }
        return sh.best.load();
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= top.size()) return;
            Node child = child_of(root, top[i]);
            value_dfs(child, sh);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return sh.best.load();
}

// --- certification pass: fixed bound B, so the explored set, the node
// counters and the witness pool are the same whatever the thread count ---

struct CertShared {
    int l, L;
    bool prune;
    int bound;
    std::atomic<std::uint64_t> expanded{0}, pruned{0};
    std::mutex mu;
    std::optional<Placement> witness;
};

struct CertLocal {
    std::uint64_t expanded = 0, pruned = 0;
    std::optional<Placement> witness;
};

void cert_dfs(const Node& nd, CertShared& sh, CertLocal& loc) {
    ++loc.expanded;
    if (nd.m == sh.bound) merge_min_witness(loc.witness, normalize(placement_from(nd)));
    for (const Branch& br : frontier_branches(nd, sh.l, sh.L)) {
        if (sh.prune && branch_bound(nd, br, sh.l, sh.L) < sh.bound) {
            ++loc.pruned;
            continue;
        }
        Node child = child_of(nd, br);
        cert_dfs(child, sh, loc);
    }
}

void cert_flush(CertShared& sh, CertLocal& loc) {
    sh.expanded += loc.expanded;
    sh.pruned += loc.pruned;
    if (loc.witness) {
        std::lock_guard<std::mutex> lk(sh.mu);
        merge_min_witness(sh.witness, *loc.witness);
    }
}

void cert_pass(int l, int L, bool prune, int bound, int threads, SearchOutcome& out) {
    CertShared sh{l, L, prune, bound};
    Node root;
    // The root counts as one visited node; its children are the work units.
    CertLocal root_loc;
    ++root_loc.expanded;
    if (root.m == bound) merge_min_witness(root_loc.witness, normalize(placement_from(root)));
    std::vector<Branch> top = frontier_branches(root, l, L);

    std::vector<Branch> kept;
    for (const Branch& br : top) {
        if (prune && branch_bound(root, br, l, L) < bound) {
            ++root_loc.pruned;
            continue;
        }
        kept.push_back(br);
    }
    cert_flush(sh, root_loc);

    if (threads <= 1 || kept.size() <= 1) {
        CertLocal loc;
        for (const Branch& br : kept) {
            Node child = child_of(root, br);
            cert_dfs(child, sh, loc);
        }
        cert_flush(sh, loc);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            CertLocal loc;
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= kept.size()) break;
                Node child = child_of(root, kept[i]);
                cert_dfs(child, sh, loc);
            }
            cert_flush(sh, loc);
        };
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    out.nodes_expanded = sh.expanded.load();
    out.nodes_pruned = sh.pruned.load();
    if (bound == 0)
        out.witness = Placement{IntSet{0}, IntSet{}, IntSet{}};
    else if (sh.witness)
        out.witness = *sh.witness;
}

// --- sequential single pass used when a budget or target ratio truncates
// the run; keeps truncation order-deterministic ---

struct BoundedState {
    int l, L;
    bool prune;
    std::uint64_t budget = 0;
    std::optional<Rational> target;
    std::uint64_t visits = 0;
    std::uint64_t pruned = 0;
    int best = 0;
    Placement witness{IntSet{0}, IntSet{}, IntSet{}};
    bool stopped = false;
};

void bounded_dfs(const Node& nd, BoundedState& st) {
    if (st.stopped) return;
    ++st.visits;
    if (st.budget != 0 && st.visits >= st.budget) st.stopped = true;
    if (nd.m > st.best) {
        st.best = nd.m;
        st.witness = normalize(placement_from(nd));
        if (st.target &&
            Rational(st.best) >= *st.target * Rational(std::int64_t(st.l) * st.l))
            st.stopped = true;
    }
    if (st.stopped) return;
    for (const Branch& br : frontier_branches(nd, st.l, st.L)) {
        if (st.prune && branch_bound(nd, br, st.l, st.L) <= st.best) {
            ++st.pruned;
            continue;
        }
        Node child = child_of(nd, br);
        bounded_dfs(child, st);
        if (st.stopped) return;
    }
}

SearchOutcome run_bounded(const SearchConfig& cfg) {
    BoundedState st;
    st.l = cfg.total_segments;
    st.L = cfg.max_location;
    st.prune = cfg.counting_prune;
    st.budget = cfg.node_budget;
    st.target = cfg.target_ratio;
    Node root;
    bounded_dfs(root, st);

    SearchOutcome out;
    out.best_m = st.best;
    out.witness = st.witness;
    out.complete = !st.stopped;
    out.nodes_expanded = st.visits;
    out.nodes_pruned = st.pruned;
    return out;
}

// --- beam search ---

SearchOutcome run_beam(const SearchConfig& cfg, int width) {
    int l = cfg.total_segments, L = cfg.max_location;
    SearchOutcome out;
    int best = 0;
    std::optional<Placement> witness;
    std::uint64_t expanded = 0, dropped = 0;

    std::vector<Node> states{Node{}};
    while (!states.empty()) {
        std::vector<Node> children;
        for (const Node& nd : states) {
            ++expanded;
            for (const Branch& br : frontier_branches(nd, l, L))
                children.push_back(child_of(nd, br));
        }
        for (const Node& c : children) {
            if (c.m > best) {
                best = c.m;
                witness.reset();
            }
            if (c.m == best) merge_min_witness(witness, normalize(placement_from(c)));
        }
        auto key_less = [](const Node& a, const Node& b) {
            if (a.m != b.m) return a.m > b.m;
            if (a.used != b.used) return a.used < b.used;
            if (a.v != b.v) return a.v < b.v;
            if (a.h != b.h) return a.h < b.h;
            return a.s < b.s;
        };
        std::sort(children.begin(), children.end(), key_less);
        children.erase(std::unique(children.begin(), children.end(),
                                   [](const Node& a, const Node& b) {
                                       return a.v == b.v && a.h == b.h && a.s == b.s;
                                   }),
                       children.end());
        if (int(children.size()) > width) {
            dropped += children.size() - std::size_t(width);
            children.resize(std::size_t(width));
        }
        states = std::move(children);
    }

    out.best_m = best;
    out.witness = best == 0 ? Placement{IntSet{0}, IntSet{}, IntSet{}} : *witness;
    out.nodes_expanded = expanded;
    out.nodes_pruned = dropped;
    out.complete = false;
    return out;
}

// --- random restarts ---

SearchOutcome run_restarts(const SearchConfig& cfg, const RestartMode& mode) {
    int l = cfg.total_segments, L = cfg.max_location;
    std::mt19937_64 rng(mode.seed);
    int best = 0;
    std::optional<Placement> witness;
    std::uint64_t steps = 0;

    for (int r = 0; r < mode.restarts; ++r) {
        Node nd;
        for (;;) {
            std::vector<Branch> branches = frontier_branches(nd, l, L);
            if (branches.empty()) break;
            nd = child_of(nd, branches[std::size_t(rng() % branches.size())]);
            ++steps;
            if (nd.m > best) {
                best = nd.m;
                witness.reset();
            }
            if (nd.m == best && best > 0)
                merge_min_witness(witness, normalize(placement_from(nd)));
        }
    }

    SearchOutcome out;
    out.best_m = best;
    out.witness = best == 0 ? Placement{IntSet{0}, IntSet{}, IntSet{}} : *witness;
    out.nodes_expanded = steps;
    out.nodes_pruned = 0;
    out.complete = false;
    return out;
}

} // namespace

Placement normalize(const Placement& p) {
    if (p.s_locs < p.h_locs) return Placement{p.v_locs, p.s_locs, p.h_locs};
    return p;
}

SearchOutcome search(const SearchConfig& cfg) {
    int l = cfg.total_segments, L = cfg.max_location;
    if (l < 1) throw InputError("search needs at least one segment");
    if (L < 0 || L > kLocCap)
        throw InputError("max location must lie in [0, " + std::to_string(kLocCap) + "]");
    if (std::int64_t(l) > 3 * (std::int64_t(L) + 1))
        throw InputError("cannot place " + std::to_string(l) + " segments on locations 0.." +
                         std::to_string(L));
    if (cfg.threads < 1 || cfg.threads > 256)
        throw InputError("thread count must lie in [1, 256]");
    if (cfg.target_ratio && (*cfg.target_ratio < Rational(0)))
        throw InputError("target ratio must be non-negative");

    SearchOutcome out;
    if (const auto* beam = std::get_if<BeamMode>(&cfg.mode)) {
        if (beam->width < 1) throw InputError("beam width must be positive");
        out = run_beam(cfg, beam->width);
    } else if (const auto* rs = std::get_if<RestartMode>(&cfg.mode)) {
        if (rs->restarts < 1) throw InputError("restart count must be positive");
        out = run_restarts(cfg, *rs);
    } else if (cfg.node_budget != 0 || cfg.target_ratio) {
        out = run_bounded(cfg);
    } else {
        int best = value_pass(l, L, cfg.counting_prune, cfg.threads);
        out.best_m = best;
        cert_pass(l, L, cfg.counting_prune, best, cfg.threads, out);
        out.complete = true;
    }
    out.best_m = std::max<Elem>(out.best_m, 0);
    out.ratio = Rational(out.best_m, std::int64_t(l) * l);
    return out;
}

} // namespace addbasis
