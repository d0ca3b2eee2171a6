#include "betapack/packing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>

#include "betapack/error.hpp"
#include "betapack/kernels.hpp"
#include "search_common.hpp"

namespace betapack {

std::string_view to_string(Method m) {
    return m == Method::brute_force ? "brute_force" : "branch_and_bound";
}

Method parse_method(std::string_view text) {
    if (text == "brute_force" || text == "brute") return Method::brute_force;
    if (text == "branch_and_bound" || text == "bnb") return Method::branch_and_bound;
    throw InputError("unknown method '" + std::string(text) + "'; use brute_force or branch_and_bound");
}

void SearchLimits::require(std::size_t order, std::string_view what) const {
    const auto cap = std::clamp<std::size_t>(exhaustive_cap, 1, kHardCap);
    if (order > cap) {
        throw CapExceeded(std::string(what) + ": graph has " + std::to_string(order) + " vertices, above the exhaustive cap " +
                          std::to_string(cap) + " (raise it with --cap or BETAPACK_CAP)");
    }
}

std::size_t PackingProfile::value_at(const Rational& beta) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < breakpoints.size() && breakpoints[i] <= beta; ++i) out = values[i];
    return out;
}

bool satisfies_packing(const Graph& g, const VertexSet& s, const Rational& beta) {
    detail::require_unit_interval(beta, "beta");
    detail::require_universe(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        const auto inside = detail::count_inside(g, v, s);
        if (static_cast<unsigned __int128>(inside) * beta.den() >
            static_cast<unsigned __int128>(beta.num()) * g.degree(v)) {
            return false;
        }
    }
    return true;
}

Rational threshold(const Graph& g, const VertexSet& s) {
    detail::require_universe(g, s);
    if (!s.is_proper()) throw InputError("threshold needs a proper subset; S = V has no outside vertex");
    Rational best(0, 1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v) || g.degree(v) == 0) continue;
        best = std::max(best, Rational(detail::count_inside(g, v, s), g.degree(v)));
    }
    return best;
}

bool is_packing_set(const Graph& g, const VertexSet& s, const Rational& beta, const SearchLimits& limits) {
    if (!satisfies_packing(g, s, beta) || !s.is_proper()) return false;
    // A disconnected outside part always admits a whole component as an
    // extension: the remaining outside vertices see nothing new.
    if (!is_connected_induced(g, s.complement())) return false;
    limits.require(g.order(), "maximality check");
    const auto dense = simd::make_dense(g);
    const auto window = simd::packing_window(dense, beta);
    const Mask base = s.to_mask();
    const Mask outside = detail::full_mask(g.order()) & ~base;
    // Every nonempty U strictly inside the outside part.
    for (Mask u = (outside - 1) & outside; u != 0; u = (u - 1) & outside) {
        if (detail::mask_feasible(dense, window, base | u)) return false;
    }
    return true;
}

namespace {

PackingSolveResult solve_brute(const Graph& g, const Rational& beta) {
    const auto dense = simd::make_dense(g);
    const auto window = simd::packing_window(dense, beta);
    const auto& kernels = simd::active_kernels();
    const std::size_t n = g.order();
    const Mask full = detail::full_mask(n);
    detail::BestSet best(detail::Prefer::larger);
    for (Mask first = 0;; first += simd::kBlock) {
        Mask bits = kernels.feasible_block(dense, window, first) & simd::valid_bits(n, first);
        if (full - first < simd::kBlock) bits &= ~(Mask{1} << (full - first));
        for (; bits != 0; bits &= bits - 1) best.offer(first + static_cast<Mask>(std::countr_zero(bits)));
        if (full - first < simd::kBlock) break;
    }
    return {static_cast<std::size_t>(std::popcount(best.mask())), VertexSet::from_mask(n, best.mask()), beta,
            Method::brute_force};
}

// Depth-first include/exclude in index order. Include-first visits equal-size
// sets in lexicographic order, and the bound only admits strict
// improvements, so the first maximum found is the lexicographically smallest.
class PackingSearch {
public:
    PackingSearch(const simd::DenseGraph& g, const simd::CountWindow& w) : g_(g), w_(w) {}

    Mask run() {
        descend(0, 0, 0, 0);
        return best_;
    }

private:
    void descend(std::size_t i, Mask chosen, Mask outside, std::size_t size) {
        const std::size_t n = g_.order;
        if (found_ && std::min(size + (n - i), n - 1) <= best_size_) return;
        if (i == n) {
            if (size == n) return;
            best_ = chosen;
            best_size_ = size;
            found_ = true;
            return;
        }
        const Mask bit = Mask{1} << i;
        const Mask nbrs = g_.neighbors[i];

        // Counts of outside vertices only grow with further inclusions, so a
        // violation here is final.
        bool fits = true;
        for (Mask m = nbrs & outside; m != 0 && fits; m &= m - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(m));
            fits = count_[u] + 1 <= w_.hi[u];
        }
        if (fits) {
            for (Mask m = nbrs; m != 0; m &= m - 1) ++count_[static_cast<std::size_t>(std::countr_zero(m))];
            descend(i + 1, chosen | bit, outside, size + 1);
            for (Mask m = nbrs; m != 0; m &= m - 1) --count_[static_cast<std::size_t>(std::countr_zero(m))];
        }
        if (count_[i] <= w_.hi[i]) descend(i + 1, chosen, outside | bit, size);
    }

    const simd::DenseGraph& g_;
    const simd::CountWindow& w_;
    std::array<std::uint64_t, simd::kMaxOrder> count_{};
    Mask best_ = 0;
    std::size_t best_size_ = 0;
    bool found_ = false;
};

PackingSolveResult solve_branch_and_bound(const Graph& g, const Rational& beta) {
    const auto dense = simd::make_dense(g);
    const auto window = simd::packing_window(dense, beta);
    const Mask best = PackingSearch(dense, window).run();
    return {static_cast<std::size_t>(std::popcount(best)), VertexSet::from_mask(g.order(), best), beta,
            Method::branch_and_bound};
}

}  // namespace

PackingSolveResult beta_pack_number(const Graph& g, const Rational& beta, Method method, const SearchLimits& limits) {
    detail::require_unit_interval(beta, "beta");
    if (g.order() == 0) throw InputError("beta-pack of the empty graph is undefined");
    limits.require(g.order(), "beta-pack");
    return method == Method::brute_force ? solve_brute(g, beta) : solve_branch_and_bound(g, beta);
}

std::vector<VertexSet> enumerate_maximal_packings(const Graph& g, const Rational& beta, const SearchLimits& limits) {
    detail::require_unit_interval(beta, "beta");
    if (g.order() == 0) throw InputError("no vertex sets to enumerate on the empty graph");
    limits.require(g.order(), "maximal packing enumeration");
    const std::size_t n = g.order();
    const auto dense = simd::make_dense(g);
    const auto window = simd::packing_window(dense, beta);
    const auto& kernels = simd::active_kernels();

    // feasible[S] for every proper S, one bit per subset.
    const std::size_t words = n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
    std::vector<Mask> feasible(words);
    for (std::size_t w = 0; w < words; ++w) {
        const Mask first = static_cast<Mask>(w) * simd::kBlock;
        feasible[w] = kernels.feasible_block(dense, window, first) & simd::valid_bits(n, first);
    }
    const Mask full = detail::full_mask(n);
    feasible[full / 64] &= ~(Mask{1} << (full % 64));

    // reach[S]: some proper T containing S is feasible.
    std::vector<Mask> reach = feasible;
    constexpr std::array<Mask, 6> kBitClear{0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                            0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 6); ++i) {
        for (auto& word : reach) word |= (word >> (std::size_t{1} << i)) & kBitClear[i];
    }
    for (std::size_t i = 6; i < n; ++i) {
        const std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t w = 0; w < words; ++w) {
            if ((w & stride) == 0) reach[w] |= reach[w | stride];
        }
    }
    auto reachable = [&reach](Mask s) { return ((reach[s / 64] >> (s % 64)) & 1U) != 0; };

    std::vector<Mask> found;
    for (std::size_t w = 0; w < words; ++w) {
        for (Mask bits = feasible[w]; bits != 0; bits &= bits - 1) {
            const Mask s = static_cast<Mask>(w) * 64 + static_cast<Mask>(std::countr_zero(bits));
            bool maximal = true;
            for (Mask out = full & ~s; out != 0 && maximal; out &= out - 1) maximal = !reachable(s | (out & -out));
            if (maximal) found.push_back(s);
        }
    }
    std::sort(found.begin(), found.end(), detail::larger_then_lex);
    std::vector<VertexSet> result;
    result.reserve(found.size());
    for (Mask s : found) result.push_back(VertexSet::from_mask(n, s));
    return result;
}

std::vector<Rational> interesting_betas(const Graph& g) {
    std::vector<Rational> out{Rational(1)};
    for (auto d : distinct_degrees(g)) {
        for (std::size_t k = 1; k <= d; ++k) out.emplace_back(k, d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PackingProfile packing_profile(const Graph& g, const SearchLimits& limits) {
    if (g.order() == 0) throw InputError("profile of the empty graph is undefined");
    limits.require(g.order(), "packing profile");
    const std::size_t n = g.order();
    const auto dense = simd::make_dense(g);
    const auto& kernels = simd::active_kernels();
    const Mask full = detail::full_mask(n);

    // least threshold over proper subsets of each cardinality
    std::vector<std::optional<simd::Ratio>> least(n);
    std::array<simd::Ratio, simd::kBlock> block{};
    for (Mask first = 0;; first += simd::kBlock) {
        kernels.threshold_block(dense, first, block);
        const Mask bits = simd::valid_bits(n, first);
        for (std::size_t i = 0; i < simd::kBlock; ++i) {
            const Mask s = first + i;
            if (((bits >> i) & 1U) == 0 || s == full) continue;
            auto& slot = least[static_cast<std::size_t>(std::popcount(s))];
            const auto r = block[i];
            if (!slot || std::uint64_t{r.num} * slot->den < std::uint64_t{slot->num} * r.den) slot = r;
        }
        if (full - first < simd::kBlock) break;
    }

    std::vector<std::pair<Rational, std::size_t>> by_threshold;
    for (std::size_t k = 0; k < n; ++k) {
        if (least[k]) by_threshold.emplace_back(Rational(least[k]->num, least[k]->den), k);
    }
    std::sort(by_threshold.begin(), by_threshold.end());
    PackingProfile profile;
    std::size_t current = 0;
    for (std::size_t i = 0; i < by_threshold.size(); ++i) {
        const auto& [t, k] = by_threshold[i];
        current = std::max(current, k);
        const bool last_at_t = i + 1 == by_threshold.size() || by_threshold[i + 1].first != t;
        if (last_at_t && current > (profile.values.empty() ? 0 : profile.values.back())) {
            profile.breakpoints.push_back(t);
            profile.values.push_back(current);
        }
    }
    return profile;
}

}  // namespace betapack
