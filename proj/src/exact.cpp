#include "tcc/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "tcc/error.hpp"

namespace tcc {

namespace {

using Clock = std::chrono::steady_clock;

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    int count_and_not(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(o.words_[i] & ~words_[i]);
        return c;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

std::vector<Bits> closed_masks(const Graph& g) {
    std::vector<Bits> out(g.order(), Bits(g.order()));
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        out[v].set(v);
        for (Vertex w : g.neighbors(v)) out[v].set(w);
    }
    return out;
}

void guard_bruteforce(const Graph& g) {
    if (g.order() > kBruteforceLimit)
        throw GuardError("brute force is limited to " + std::to_string(kBruteforceLimit) + " vertices, graph has " +
                         std::to_string(g.order()));
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Calls f on every k-subset of 0..n-1 as a bitmask, in lexicographic order of the sorted
// vertex lists, until f returns true.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        if (f(mask)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet out;
    for (Vertex v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

void verify_witness(const Graph& g, const SolveResult& r, bool domination) {
    const bool ok = domination ? is_dominating(g, r.witness) : is_independent(g, r.witness);
    if (!ok || static_cast<int>(r.witness.size()) != r.value)
        throw VerificationError(std::string(domination ? "dominating" : "independent") +
                                " set witness failed verification");
}

class Timer {
public:
    explicit Timer(const Budget& b) : budget_(b), start_(Clock::now()) {}

    // Counts one node; true once the budget is spent.
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) exhausted_ = true;
        if ((nodes_ & 1023) == 0 && seconds_since(start_) > budget_.max_seconds) exhausted_ = true;
        return exhausted_;
    }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    double elapsed() const { return seconds_since(start_); }

private:
    Budget budget_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

class GammaSearch {
public:
    GammaSearch(const Graph& g, const Budget& budget) : n_(g.order()), closed_(closed_masks(g)), timer_(budget) {}

    SolveResult run() {
        greedy_incumbent();
        Bits dominated(n_), forbidden(n_);
        std::vector<Vertex> chosen;
        if (n_ > 0) search(dominated, forbidden, chosen);
        SolveResult r;
        r.witness = make_vertex_set(best_);
        r.value = static_cast<int>(r.witness.size());
        r.nodes_explored = timer_.nodes();
        r.elapsed_seconds = timer_.elapsed();
        r.status = timer_.exhausted() ? SolveStatus::budget_exceeded : SolveStatus::optimal;
        return r;
    }

private:
    void greedy_incumbent() {
        Bits dominated(n_);
        best_.clear();
        while (dominated.count() < static_cast<int>(n_)) {
            Vertex pick = 0;
            int gain = -1;
            for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
                const int gv = dominated.count_and_not(closed_[v]);
                if (gv > gain) gain = gv, pick = v;
            }
            best_.push_back(pick);
            dominated |= closed_[pick];
        }
    }

    int packing_bound(const Bits& dominated) const {
        Bits used(n_);
        int bound = 0;
        for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
            if (dominated.test(u) || used.intersects(closed_[u])) continue;
            used |= closed_[u];
            ++bound;
        }
        return bound;
    }

    void search(const Bits& dominated, Bits forbidden, std::vector<Vertex>& chosen) {
        if (timer_.tick()) return;
        // Undominated vertex with the fewest allowed dominators.
        Vertex pivot = -1;
        int options = 0;
        for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
            if (dominated.test(u)) continue;
            const int k = forbidden.count_and_not(closed_[u]);
            if (k == 0) return;
            if (pivot < 0 || k < options) pivot = u, options = k;
        }
        if (pivot < 0) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (static_cast<int>(chosen.size()) + packing_bound(dominated) >= static_cast<int>(best_.size())) return;

        std::vector<std::pair<int, Vertex>> branches;
        closed_[pivot].for_each([&](Vertex w) {
            if (!forbidden.test(w)) branches.emplace_back(-dominated.count_and_not(closed_[w]), w);
        });
        std::sort(branches.begin(), branches.end());
        for (const auto& [neg_gain, w] : branches) {
            Bits next = dominated;
            next |= closed_[w];
            chosen.push_back(w);
            search(next, forbidden, chosen);
            chosen.pop_back();
            if (timer_.exhausted()) return;
            forbidden.set(w);
        }
    }

    std::size_t n_;
    std::vector<Bits> closed_;
    Timer timer_;
    std::vector<Vertex> best_;
};

class AlphaSearch {
public:
    AlphaSearch(const Graph& g, const Budget& budget) : n_(g.order()), closed_(closed_masks(g)), timer_(budget) {}

    SolveResult run() {
        greedy_incumbent();
        Bits candidates(n_);
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) candidates.set(v);
        std::vector<Vertex> chosen;
        search(candidates, chosen);
        SolveResult r;
        r.witness = make_vertex_set(best_);
        r.value = static_cast<int>(r.witness.size());
        r.nodes_explored = timer_.nodes();
        r.elapsed_seconds = timer_.elapsed();
        r.status = timer_.exhausted() ? SolveStatus::budget_exceeded : SolveStatus::optimal;
        return r;
    }

private:
    void greedy_incumbent() {
        Bits candidates(n_);
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) candidates.set(v);
        best_.clear();
        while (!candidates.none()) {
            Vertex pick = -1;
            int deg = 0;
            candidates.for_each([&](Vertex v) {
                const int d = candidates.count_and(closed_[v]);
                if (pick < 0 || d < deg) pick = v, deg = d;
            });
            best_.push_back(pick);
            candidates.subtract(closed_[pick]);
        }
    }

    // Number of cliques in a greedy clique cover of the candidates.
    int clique_cover_bound(const Bits& candidates) const {
        std::vector<Bits> cliques;  // common neighbourhood of each clique's members
        candidates.for_each([&](Vertex v) {
            for (auto& common : cliques)
                if (common.test(v)) {
                    common &= closed_[v];
                    return;
                }
            cliques.push_back(closed_[v]);
        });
        return static_cast<int>(cliques.size());
    }

    void search(Bits candidates, std::vector<Vertex>& chosen) {
        if (timer_.tick()) return;
        const std::size_t base = chosen.size();
        // Vertices with at most one candidate neighbour belong to some maximum set.
        bool reduced = true;
        while (reduced) {
            reduced = false;
            candidates.for_each([&](Vertex v) {
                if (reduced || !candidates.test(v)) return;
                if (candidates.count_and(closed_[v]) <= 2) {
                    chosen.push_back(v);
                    candidates.subtract(closed_[v]);
                    reduced = true;
                }
            });
        }
        if (candidates.none()) {
            if (chosen.size() > best_.size()) best_ = chosen;
            chosen.resize(base);
            return;
        }
        if (static_cast<int>(chosen.size()) + clique_cover_bound(candidates) <= static_cast<int>(best_.size())) {
            chosen.resize(base);
            return;
        }
        Vertex pivot = -1;
        int deg = -1;
        candidates.for_each([&](Vertex v) {
            const int d = candidates.count_and(closed_[v]);
            if (d > deg) pivot = v, deg = d;
        });

        Bits with = candidates;
        with.subtract(closed_[pivot]);
        chosen.push_back(pivot);
        search(with, chosen);
        chosen.pop_back();
        if (!timer_.exhausted()) {
            candidates.reset(pivot);
            search(candidates, chosen);
        }
        chosen.resize(base);
    }

    std::size_t n_;
    std::vector<Bits> closed_;
    Timer timer_;
    std::vector<Vertex> best_;
};

}  // namespace

std::string_view to_string(SolveStatus s) { return s == SolveStatus::optimal ? "optimal" : "budget_exceeded"; }

SolveResult gamma_bruteforce(const Graph& g) {
    guard_bruteforce(g);
    const auto start = Clock::now();
    const int n = static_cast<int>(g.order());
    std::vector<std::uint32_t> closed(n);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= 1u << w;
    }
    const std::uint32_t all = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
    SolveResult r;
    for (int k = 0; k <= n; ++k) {
        const bool found = for_each_subset(n, k, [&](std::uint32_t mask) {
            ++r.nodes_explored;
            std::uint32_t cover = 0;
            for (std::uint32_t m = mask; m; m &= m - 1) cover |= closed[std::countr_zero(m)];
            if (cover != all) return false;
            r.witness = mask_to_set(mask);
            return true;
        });
        if (found) {
            r.value = k;
            break;
        }
    }
    r.elapsed_seconds = seconds_since(start);
    verify_witness(g, r, true);
    return r;
}

SolveResult alpha_bruteforce(const Graph& g) {
    guard_bruteforce(g);
    const auto start = Clock::now();
    const int n = static_cast<int>(g.order());
    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;
    SolveResult r;
    for (int k = n; k >= 0; --k) {
        const bool found = for_each_subset(n, k, [&](std::uint32_t mask) {
            ++r.nodes_explored;
            for (std::uint32_t m = mask; m; m &= m - 1)
                if (nbr[std::countr_zero(m)] & mask) return false;
            r.witness = mask_to_set(mask);
            return true;
        });
        if (found) {
            r.value = k;
            break;
        }
    }
    r.elapsed_seconds = seconds_since(start);
    verify_witness(g, r, false);
    return r;
}

SolveResult gamma_exact(const Graph& g, const Budget& budget) {
    SolveResult r = GammaSearch(g, budget).run();
    verify_witness(g, r, true);
    return r;
}

SolveResult alpha_exact(const Graph& g, const Budget& budget) {
    SolveResult r = AlphaSearch(g, budget).run();
    verify_witness(g, r, false);
    return r;
}

}  // namespace tcc
