#include "carousel/closure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace carousel {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > max_ground_size) {
        throw std::invalid_argument("ground set size must be between 1 and 16");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty element name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate element name: " + n);
    }
}

int GroundSet::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown element: " + std::string(name));
}

std::optional<int> GroundSet::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i) {
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    }
    return std::nullopt;
}

Mask GroundSet::mask_of(std::span<const std::string> names) const {
    Mask m = 0;
    for (const auto& n : names) m |= bit(index(n));
    return m;
}

std::vector<std::string> GroundSet::names_of(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i) {
        if (m & bit(i)) out.push_back(name(i));
    }
    return out;
}

std::string GroundSet::format(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (m & bit(i)) {
            if (!first) out += ",";
            out += name(i);
            first = false;
        }
    }
    return out + "}";
}

ClosedFamily::ClosedFamily(GroundSet ground, std::vector<Mask> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
    const Mask full = ground_.full();
    for (Mask s : sets_) {
        if (s & ~full) throw std::invalid_argument("set references elements outside the ground set");
    }
    std::sort(sets_.begin(), sets_.end(), [](Mask a, Mask b) {
        return std::pair(popcount(a), a) < std::pair(popcount(b), b);
    });
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    member_.assign(std::size_t{1} << ground_.size(), false);
    for (Mask s : sets_) member_[s] = true;
}

Mask ClosedFamily::closure(Mask y) const {
    if (y & ~ground_.full()) throw std::invalid_argument("subset references unknown elements");
    Mask acc = ground_.full();
    for (Mask s : sets_) {
        if ((s & y) == y) acc &= s;
    }
    return acc;
}

namespace {

std::string describe_pair(const GroundSet& g, Mask a, Mask b) {
    return g.format(a) + ", " + g.format(b);
}

AxiomReport check_closure_operator(const ClosedFamily& f) {
    const int n = f.ground().size();
    const Mask full = f.ground().full();
    std::vector<Mask> phi(std::size_t{1} << n);
    for (Mask y = 0; y <= full; ++y) phi[y] = f.closure(y);
    for (Mask y = 0; y <= full; ++y) {
        if ((phi[y] & y) != y) {
            return {false, "extensivity fails on " + f.ground().format(y)};
        }
        if (phi[phi[y]] != phi[y]) {
            return {false, "idempotence fails on " + f.ground().format(y)};
        }
    }
    // monotonicity: for every Z, every subset Y of Z
    for (Mask z = 0; z <= full; ++z) {
        for (Mask y = z;; y = (y - 1) & z) {
            if ((phi[y] & ~phi[z]) != 0) {
                return {false, "monotonicity fails on " + describe_pair(f.ground(), y, z)};
            }
            if (y == 0) break;
        }
    }
    return {};
}

AxiomReport check_alignment(const ClosedFamily& f) {
    if (!f.contains(f.ground().full())) {
        return {false, "full set " + f.ground().format(f.ground().full()) + " is not a member"};
    }
    const auto& sets = f.sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            Mask m = sets[i] & sets[j];
            if (!f.contains(m)) {
                return {false, "intersection of " + describe_pair(f.ground(), sets[i], sets[j]) +
                                   " is not a member"};
            }
        }
    }
    return {};
}

AxiomReport check_convex_geometry(const ClosedFamily& f) {
    if (!f.contains(0)) return {false, "empty set is not a member"};
    const Mask full = f.ground().full();
    for (Mask s : f.sets()) {
        if (s == full) continue;
        bool extended = false;
        for (int i = 0; i < f.ground().size() && !extended; ++i) {
            if (!(s & bit(i)) && f.contains(s | bit(i))) extended = true;
        }
        if (!extended) {
            return {false, "no one-point extension of " + f.ground().format(s)};
        }
    }
    return {};
}

AxiomReport check_anti_exchange(const ClosedFamily& f) {
    const int n = f.ground().size();
    for (Mask y : f.sets()) {
        for (int x = 0; x < n; ++x) {
            if (y & bit(x)) continue;
            Mask with_x = f.closure(y | bit(x));
            for (int z = 0; z < n; ++z) {
                if (z == x || (y & bit(z))) continue;
                if (!(with_x & bit(z))) continue;
                Mask with_z = f.closure(y | bit(z));
                if (with_z & bit(x)) {
                    return {false, "anti-exchange fails: Y=" + f.ground().format(y) +
                                       ", x=" + f.ground().name(x) + ", z=" + f.ground().name(z)};
                }
            }
        }
    }
    return {};
}

}  // namespace

AxiomReport verify_axioms(const ClosedFamily& family, AxiomMode mode) {
    switch (mode) {
        case AxiomMode::ClosureOperator: return check_closure_operator(family);
        case AxiomMode::Alignment: return check_alignment(family);
        case AxiomMode::ConvexGeometry: return check_convex_geometry(family);
        case AxiomMode::AntiExchange: return check_anti_exchange(family);
    }
    throw std::logic_error("unreachable");
}

FiniteClosureSystem FiniteClosureSystem::from(ClosedFamily family) {
    auto report = verify_axioms(family, AxiomMode::Alignment);
    if (!report.pass) {
        throw std::invalid_argument("not a closure system: " + report.violation);
    }
    return FiniteClosureSystem(std::move(family));
}

FiniteClosureSystem closure_from_implications(const GroundSet& ground,
                                              std::span<const Implication> implications) {
    const Mask full = ground.full();
    for (const auto& imp : implications) {
        if ((imp.lhs | imp.rhs) & ~full) {
            throw std::invalid_argument("implication references unknown elements");
        }
    }
    std::vector<Mask> sets;
    for (Mask s = 0;; ++s) {
        bool ok = true;
        for (const auto& imp : implications) {
            if ((s & imp.lhs) == imp.lhs && (s & imp.rhs) != imp.rhs) {
                ok = false;
                break;
            }
        }
        if (ok) sets.push_back(s);
        if (s == full) break;
    }
    return FiniteClosureSystem::from(ClosedFamily(ground, std::move(sets)));
}

ClosedFamily join_alignments(const ClosedFamily& f1, const ClosedFamily& f2) {
    if (!(f1.ground() == f2.ground())) {
        throw std::invalid_argument("join of alignments over different ground sets");
    }
    std::vector<bool> seen(std::size_t{1} << f1.ground().size(), false);
    std::vector<Mask> out;
    for (Mask u : f1.sets()) {
        for (Mask v : f2.sets()) {
            Mask s = u | v;
            if (!seen[s]) {
                seen[s] = true;
                out.push_back(s);
            }
        }
    }
    return ClosedFamily(f1.ground(), std::move(out));
}

ClosedFamily monotone_alignment(const GroundSet& ground, const Order& order) {
    const int n = ground.size();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("order must be a permutation of the whole ground set");
    }
    Mask seen = 0;
    std::vector<Mask> sets{0};
    for (int i : order) {
        if (i < 0 || i >= n || (seen & bit(i))) throw std::invalid_argument("order is not a permutation");
        seen |= bit(i);
        sets.push_back(seen);
    }
    return ClosedFamily(ground, std::move(sets));
}

ClosedFamily chain_join(const GroundSet& ground, std::span<const Order> orders) {
    if (orders.empty()) throw std::invalid_argument("chain_join of no chains");
    std::vector<bool> cur(std::size_t{1} << ground.size(), false);
    cur[ground.full()] = true;
    std::vector<Mask> acc{ground.full()};
    for (const Order& o : orders) {
        ClosedFamily chain = monotone_alignment(ground, o);
        std::vector<bool> next(cur.size(), false);
        std::vector<Mask> out;
        for (Mask a : acc) {
            for (Mask b : chain.sets()) {
                Mask s = a & b;
                if (!next[s]) {
                    next[s] = true;
                    out.push_back(s);
                }
            }
        }
        cur = std::move(next);
        acc = std::move(out);
    }
    return ClosedFamily(ground, std::move(acc));
}

namespace {

struct Chain {
    Order order;
    std::vector<Mask> prefixes;  // proper nonempty prefixes, sizes 1..n-1
};

void collect_chains(const ClosedFamily& f, Mask cur, Order& order, std::vector<Chain>& out) {
    const int n = f.ground().size();
    if (static_cast<int>(order.size()) == n) {
        Chain c;
        c.order = order;
        Mask m = 0;
        for (int i = 0; i + 1 < n; ++i) {
            m |= bit(order[static_cast<std::size_t>(i)]);
            c.prefixes.push_back(m);
        }
        out.push_back(std::move(c));
        return;
    }
    for (int i = 0; i < n; ++i) {
        if (cur & bit(i)) continue;
        Mask ext = cur | bit(i);
        if (!f.contains(ext)) continue;
        order.push_back(i);
        collect_chains(f, ext, order, out);
        order.pop_back();
    }
}

// Meet-irreducible members: S != X that are not the intersection of the
// members strictly above them. Every realization by chains must expose each
// of them as a chain prefix.
std::vector<Mask> meet_irreducibles(const ClosedFamily& f) {
    std::vector<Mask> out;
    const Mask full = f.ground().full();
    for (Mask s : f.sets()) {
        if (s == full || s == 0) continue;
        Mask acc = full;
        for (Mask t : f.sets()) {
            if (t != s && (t & s) == s) acc &= t;
        }
        if (acc != s) out.push_back(s);
    }
    return out;
}

struct CoverSearch {
    const std::vector<Chain>& chains;
    const std::vector<std::vector<int>>& covers;  // irreducible -> chain indices containing it
    std::vector<bool> covered;
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    std::chrono::steady_clock::time_point deadline;
    bool out_of_budget = false;

    bool exhausted_budget() {
        if (out_of_budget) return true;
        if (++nodes % 4096 == 0 && std::chrono::steady_clock::now() > deadline) {
            out_of_budget = true;
        }
        if (nodes > node_budget) out_of_budget = true;
        return out_of_budget;
    }

    // Find a set of at most k chains covering all irreducibles.
    bool search(int k, const std::vector<Mask>& irreducibles) {
        if (exhausted_budget()) return false;
        int next = -1;
        std::size_t best = 0;
        for (std::size_t i = 0; i < irreducibles.size(); ++i) {
            if (covered[i]) continue;
            std::size_t options = covers[i].size();
            if (next < 0 || options < best) {
                next = static_cast<int>(i);
                best = options;
            }
        }
        if (next < 0) return true;  // everything covered
        if (k == 0) return false;
        for (int ci : covers[static_cast<std::size_t>(next)]) {
            bool already = false;
            for (int c : chosen) {
                if (c == ci) { already = true; break; }
            }
            if (already) continue;
            std::vector<std::size_t> newly;
            for (std::size_t i = 0; i < irreducibles.size(); ++i) {
                if (covered[i]) continue;
                for (Mask p : chains[static_cast<std::size_t>(ci)].prefixes) {
                    if (p == irreducibles[i]) {
                        covered[i] = true;
                        newly.push_back(i);
                        break;
                    }
                }
            }
            chosen.push_back(ci);
            if (search(k - 1, irreducibles)) return true;
            chosen.pop_back();
            for (std::size_t i : newly) covered[i] = false;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ConvexDimensionResult convex_dimension(const ClosedFamily& geometry, int k_max,
                                       std::chrono::milliseconds budget) {
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    if (geometry.ground().size() > 8) throw std::invalid_argument("ground set too large for convex_dimension");
    if (auto r = verify_axioms(geometry, AxiomMode::Alignment); !r.pass) {
        throw std::invalid_argument("not a convex geometry: " + r.violation);
    }
    if (auto r = verify_axioms(geometry, AxiomMode::ConvexGeometry); !r.pass) {
        throw std::invalid_argument("not a convex geometry: " + r.violation);
    }

    std::vector<Chain> chains;
    Order scratch;
    collect_chains(geometry, 0, scratch, chains);
    std::vector<Mask> irr = meet_irreducibles(geometry);

    std::vector<std::vector<int>> covers(irr.size());
    for (std::size_t i = 0; i < irr.size(); ++i) {
        for (std::size_t c = 0; c < chains.size(); ++c) {
            for (Mask p : chains[c].prefixes) {
                if (p == irr[i]) {
                    covers[i].push_back(static_cast<int>(c));
                    break;
                }
            }
        }
        if (covers[i].empty()) {
            throw std::logic_error("meet-irreducible not on any maximal chain");
        }
    }

    // Each chain exposes exactly one prefix of each cardinality, so the number
    // of irreducibles of any one cardinality lower-bounds the answer.
    std::vector<int> per_size(static_cast<std::size_t>(geometry.ground().size()) + 1, 0);
    for (Mask s : irr) per_size[static_cast<std::size_t>(popcount(s))]++;
    int lower_bound = 1;
    for (int c : per_size) lower_bound = std::max(lower_bound, c);

    ConvexDimensionResult result;
    auto deadline = std::chrono::steady_clock::now() + budget;
    for (int k = 1; k <= k_max; ++k) {
        if (k < lower_bound) {
            result.refuted_below = k;
            continue;
        }
        CoverSearch search{chains, covers, std::vector<bool>(irr.size(), false), {}, 0,
                           100'000'000ULL, deadline, false};
        bool found = search.search(k, irr);
        if (search.out_of_budget) {
            result.budget_exhausted = true;
            result.exhaustive_below = false;
            return result;
        }
        if (found) {
            result.k = k;
            for (int ci : search.chosen) result.chains.push_back(chains[static_cast<std::size_t>(ci)].order);
            while (static_cast<int>(result.chains.size()) < k) {
                result.chains.push_back(chains.front().order);  // pad when fewer chains suffice
            }
            result.exhaustive_below = true;
            if (!(chain_join(geometry.ground(), result.chains) == geometry)) {
                throw std::logic_error("convex_dimension witness fails re-join check");
            }
            return result;
        }
        result.refuted_below = k;
    }
    result.exhaustive_below = true;
    return result;
}

namespace {

// Subsets of s with exactly t bits, ascending.
void for_each_subset_of_size(Mask s, int t, const std::vector<int>& elems,
                             std::vector<int>& pick, std::size_t start, auto&& fn) {
    if (static_cast<int>(pick.size()) == t) {
        Mask m = 0;
        for (int e : pick) m |= bit(e);
        fn(m);
        return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) {
        pick.push_back(elems[i]);
        for_each_subset_of_size(s, t, elems, pick, i + 1, fn);
        pick.pop_back();
    }
}

}  // namespace

CarouselVerdict carousel_check(const ClosedFamily& geometry, CarouselRule rule, int n) {
    if (n < 1) throw std::invalid_argument("carousel parameter n must be positive");
    if (rule == CarouselRule::Weak2x3) n = 2;
    const Mask full = geometry.ground().full();
    CarouselVerdict verdict;

    for (Mask s = 0; s <= full; ++s) {
        if (rule == CarouselRule::Weak2x3 && popcount(s) != 3) continue;
        Mask cl = geometry.closure(s);
        std::vector<int> selems;
        for (int i = 0; i < geometry.ground().size(); ++i) {
            if (s & bit(i)) selems.push_back(i);
        }
        const int t = std::min<int>(n, popcount(s));
        for (int x = 0; x < geometry.ground().size(); ++x) {
            if (!(cl & bit(x))) continue;
            for (int y = 0; y < geometry.ground().size(); ++y) {
                if (y == x || !(cl & bit(y))) continue;
                std::optional<CarouselWitness> found;
                std::vector<std::pair<Mask, Mask>> candidates;
                auto try_side = [&](int target, int base, bool x_side) {
                    std::vector<int> pick;
                    for_each_subset_of_size(s, t, selems, pick, 0, [&](Mask tuple) {
                        if (found) return;
                        Mask c = geometry.closure(bit(base) | tuple);
                        candidates.emplace_back(bit(base) | tuple, c);
                        if (c & bit(target)) {
                            found = CarouselWitness{x, y, s, tuple, x_side};
                        }
                    });
                };
                try_side(x, y, true);
                const bool weak = rule != CarouselRule::Carousel;
                if (weak && !found) try_side(y, x, false);
                if (!found) {
                    verdict.holds = false;
                    verdict.witness.reset();
                    verdict.counterexample =
                        CarouselCounterexample{x, y, s, std::move(candidates)};
                    return verdict;
                }
                if (!verdict.witness && popcount(s) > 0) verdict.witness = *found;
            }
        }
    }
    return verdict;
}

std::vector<ClosedFamily> enumerate_convex_geometries(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("enumerate_convex_geometries supports n in 1..4");
    static const char* const names[] = {"a", "b", "c", "d"};
    GroundSet ground(std::vector<std::string>(names, names + n));
    const Mask full = ground.full();
    // Candidate families are selections of the intermediate subsets, always
    // together with the empty set and the full set.
    const int intermediates = static_cast<int>(full) - 1;
    std::vector<ClosedFamily> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << intermediates); ++pick) {
        std::vector<Mask> sets{0, full};
        for (int i = 0; i < intermediates; ++i) {
            if (pick & (std::uint64_t{1} << i)) sets.push_back(static_cast<Mask>(i + 1));
        }
        ClosedFamily f(ground, std::move(sets));
        if (!verify_axioms(f, AxiomMode::Alignment).pass) continue;
        if (!verify_axioms(f, AxiomMode::ConvexGeometry).pass) continue;
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

struct EmbeddingSearchState {
    const std::vector<Mask>& s1;
    const std::vector<Mask>& s2;
    const ClosedFamily& f1;
    const ClosedFamily& f2;
    std::vector<int> map;        // s1 index -> s2 index or -1
    std::vector<bool> used;      // s2 index taken
    std::vector<int> down1, down2, up1, up2;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool truncated = false;

    int index2(Mask m) const {
        auto it = std::lower_bound(s2.begin(), s2.end(), m, [](Mask a, Mask b) {
            return std::pair(popcount(a), a) < std::pair(popcount(b), b);
        });
        if (it != s2.end() && *it == m) return static_cast<int>(it - s2.begin());
        return -1;
    }

    bool consistent(std::size_t i, int j) const {
        for (std::size_t k = 0; k < i; ++k) {
            int jk = map[k];
            Mask meet1 = s1[i] & s1[k];
            Mask meet2 = s2[static_cast<std::size_t>(j)] & s2[static_cast<std::size_t>(jk)];
            // meets of members are members in an alignment
            int m1 = -1;
            for (std::size_t t = 0; t <= i; ++t) {
                if (s1[t] == meet1) { m1 = static_cast<int>(t); break; }
            }
            if (m1 >= 0 && map[static_cast<std::size_t>(m1)] >= 0) {
                if (s2[static_cast<std::size_t>(map[static_cast<std::size_t>(m1)])] != meet2) return false;
            }
            Mask join1 = f1.closure(s1[i] | s1[k]);
            Mask join2 = f2.closure(s2[static_cast<std::size_t>(j)] | s2[static_cast<std::size_t>(jk)]);
            int j1 = -1;
            for (std::size_t t = 0; t < s1.size(); ++t) {
                if (s1[t] == join1) { j1 = static_cast<int>(t); break; }
            }
            if (j1 >= 0 && static_cast<std::size_t>(j1) < map.size() && map[static_cast<std::size_t>(j1)] >= 0) {
                if (s2[static_cast<std::size_t>(map[static_cast<std::size_t>(j1)])] != join2) return false;
            }
        }
        return true;
    }

    bool search(std::size_t i) {
        if (nodes++ > budget) {
            truncated = true;
            return false;
        }
        if (i == s1.size()) return true;
        for (int j = 0; j < static_cast<int>(s2.size()); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            if (down1[i] > down2[static_cast<std::size_t>(j)] || up1[i] > up2[static_cast<std::size_t>(j)]) continue;
            if (!consistent(i, j)) continue;
            map[i] = j;
            used[static_cast<std::size_t>(j)] = true;
            if (search(i + 1)) return true;
            used[static_cast<std::size_t>(j)] = false;
            map[i] = -1;
            if (truncated) return false;
        }
        return false;
    }
};

std::vector<int> containment_counts(const std::vector<Mask>& sets, bool below) {
    std::vector<int> out(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (below ? ((sets[j] & sets[i]) == sets[j]) : ((sets[i] & sets[j]) == sets[i])) out[i]++;
        }
    }
    return out;
}

}  // namespace

EmbeddingResult embedding_search(const ClosedFamily& f1, const ClosedFamily& f2,
                                 EmbeddingMode mode, std::uint64_t node_budget) {
    if (f1.size() > 64 || f2.size() > 64) throw std::invalid_argument("family too large for embedding search");
    if (!verify_axioms(f1, AxiomMode::Alignment).pass || !verify_axioms(f2, AxiomMode::Alignment).pass) {
        throw std::invalid_argument("embedding search requires alignments");
    }
    EmbeddingResult result;
    if (f1.size() > f2.size() || (mode == EmbeddingMode::Strong && f1.size() != f2.size())) {
        result.status = EmbeddingResult::Status::ProvenAbsent;
        return result;
    }

    EmbeddingSearchState st{f1.sets(),
                            f2.sets(),
                            f1,
                            f2,
                            std::vector<int>(f1.sets().size(), -1),
                            std::vector<bool>(f2.sets().size(), false),
                            containment_counts(f1.sets(), true),
                            containment_counts(f2.sets(), true),
                            containment_counts(f1.sets(), false),
                            containment_counts(f2.sets(), false),
                            0,
                            node_budget,
                            false};
    bool found = st.search(0);
    result.nodes = st.nodes;
    if (found) {
        result.status = EmbeddingResult::Status::Found;
        result.map = st.map;
        if (mode == EmbeddingMode::Strong) {
            const int n1 = f1.ground().size();
            result.ground_map.assign(static_cast<std::size_t>(n1), -1);
            for (int x = 0; x < n1; ++x) {
                Mask img = 0;
                Mask cx = f1.closure(bit(x));
                for (std::size_t i = 0; i < f1.sets().size(); ++i) {
                    if (f1.sets()[i] == cx) img = f2.sets()[static_cast<std::size_t>(st.map[i])];
                }
                for (int y = 0; y < f2.ground().size(); ++y) {
                    if (f2.closure(bit(y)) == img) {
                        result.ground_map[static_cast<std::size_t>(x)] = y;
                        break;
                    }
                }
            }
        }
    } else if (st.truncated) {
        result.status = EmbeddingResult::Status::BudgetExhausted;
    } else {
        result.status = EmbeddingResult::Status::ProvenAbsent;
    }
    return result;
}

std::pair<ClosedFamily, ClosedFamily> counterexample_geometries() {
    GroundSet ground(std::vector<std::string>{"a0", "a1", "a2", "x", "y"});
    const Mask full = ground.full();
    const Mask e = ground.mask_of(std::vector<std::string>{"a0", "a1", "a2"});
    const Mask ex = e | bit(ground.index("x"));
    const Mask ey = e | bit(ground.index("y"));
    const Mask a0a2x = bit(0) | bit(2) | bit(3);
    const Mask a0a1y = bit(0) | bit(1) | bit(4);

    std::vector<Mask> gp, g;
    for (Mask s = 0; s <= full; ++s) {
        if (s != e && s != ex && s != ey) {
            g.push_back(s);
            if (s != a0a2x && s != a0a1y) gp.push_back(s);
        }
    }
    return {ClosedFamily(ground, std::move(gp)), ClosedFamily(ground, std::move(g))};
}

}  // namespace carousel
