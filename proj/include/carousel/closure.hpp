#pragma once

// Finite closure systems on ground sets of at most 16 elements: alignments,
// convex-geometry axioms, joins, monotone alignments, convex dimension,
// carousel rules, implications, enumeration and embedding search.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carousel {

// Subsets of a ground set as bit masks, element index -> bit.
using Mask = std::uint32_t;

constexpr int max_ground_size = 16;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }

class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    Mask full() const { return (Mask{1} << size()) - 1; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    int index(std::string_view name) const;  // throws on unknown name
    std::optional<int> find(std::string_view name) const;

    Mask mask_of(std::span<const std::string> names) const;
    std::vector<std::string> names_of(Mask m) const;
    std::string format(Mask m) const;  // "{a,b}" for diagnostics

    bool operator==(const GroundSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

struct Implication {
    Mask lhs = 0;
    Mask rhs = 0;
};

// A total order on the ground set, as a permutation of element indices.
using Order = std::vector<int>;

// A family of subsets, deduplicated, sorted by (cardinality, mask).
// The induced closure phi(Y) is the intersection of all members containing Y
// (the full set when no member does).
class ClosedFamily {
public:
    ClosedFamily(GroundSet ground, std::vector<Mask> sets);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Mask>& sets() const { return sets_; }
    int size() const { return static_cast<int>(sets_.size()); }

    bool contains(Mask m) const { return member_[m]; }
    Mask closure(Mask y) const;

    bool operator==(const ClosedFamily& other) const {
        return ground_ == other.ground_ && sets_ == other.sets_;
    }

private:
    GroundSet ground_;
    std::vector<Mask> sets_;
    std::vector<bool> member_;  // indexed by mask
};

enum class AxiomMode { ClosureOperator, Alignment, ConvexGeometry, AntiExchange };

struct AxiomReport {
    bool pass = true;
    std::string violation;  // first violating instance, empty when pass
};

AxiomReport verify_axioms(const ClosedFamily& family, AxiomMode mode);

// An intersection-closed family containing the full set; closure of any
// subset is itself a member.
class FiniteClosureSystem {
public:
    static FiniteClosureSystem from(ClosedFamily family);  // throws if not intersection-closed

    const ClosedFamily& family() const { return family_; }
    Mask closure(Mask y) const { return family_.closure(y); }

private:
    explicit FiniteClosureSystem(ClosedFamily f) : family_(std::move(f)) {}
    ClosedFamily family_;
};

FiniteClosureSystem closure_from_implications(const GroundSet& ground,
                                              std::span<const Implication> implications);

// Join of two alignments as the family of pairwise unions {U | V}.
ClosedFamily join_alignments(const ClosedFamily& f1, const ClosedFamily& f2);

// Chain of prefixes of a total order, plus the empty set.
ClosedFamily monotone_alignment(const GroundSet& ground, const Order& order);

// Join of monotone alignments in the lattice of alignments: all intersections
// of one prefix per chain. This is the join under which every convex geometry
// is realized by its maximal chains; convex_dimension certificates are checked
// against it.
ClosedFamily chain_join(const GroundSet& ground, std::span<const Order> orders);

struct ConvexDimensionResult {
    int k = 0;                      // realized dimension, 0 if none found within k_max
    std::vector<Order> chains;      // k orders whose chain_join equals the family
    bool exhaustive_below = false;  // all k' < k (or <= k_max when k == 0) refuted
    int refuted_below = 0;          // largest k' with every candidate refuted
    bool budget_exhausted = false;
};

ConvexDimensionResult convex_dimension(
    const ClosedFamily& geometry, int k_max,
    std::chrono::milliseconds budget = std::chrono::minutes(30));

enum class CarouselRule { Carousel, WeakCarousel, Weak2x3 };

struct CarouselWitness {
    int x = -1;
    int y = -1;
    Mask s = 0;
    Mask tuple = 0;    // the covering elements drawn from s
    bool x_side = true;  // true: x in phi({y} | tuple), false: the y side
};

struct CarouselCounterexample {
    int x = -1;
    int y = -1;
    Mask s = 0;
    // every candidate ({y} | tuple, phi) closure examined, both sides
    std::vector<std::pair<Mask, Mask>> candidate_closures;
};

struct CarouselVerdict {
    bool holds = true;
    std::optional<CarouselWitness> witness;
    std::optional<CarouselCounterexample> counterexample;
};

CarouselVerdict carousel_check(const ClosedFamily& geometry, CarouselRule rule, int n = 2);

// All convex geometries over {e0,...,e(n-1)}, n <= 4, in deterministic order.
std::vector<ClosedFamily> enumerate_convex_geometries(int n);

enum class EmbeddingMode { Weak, Strong };

struct EmbeddingResult {
    enum class Status { Found, ProvenAbsent, BudgetExhausted };
    Status status = Status::ProvenAbsent;
    std::vector<int> map;         // F1 set index -> F2 set index
    std::vector<int> ground_map;  // strong mode: ground index -> ground index
    std::uint64_t nodes = 0;
};

EmbeddingResult embedding_search(const ClosedFamily& f1, const ClosedFamily& f2,
                                 EmbeddingMode mode, std::uint64_t node_budget = 1'000'000);

// The two five-element geometries used by the counterexample suite:
// G' = P(X) minus {a0a1a2, a0a2x, a0a1y, a0a1a2x, a0a1a2y},
// G  = P(X) minus {a0a1a2, a0a1a2x, a0a1a2y}, X = {a0,a1,a2,x,y}.
std::pair<ClosedFamily, ClosedFamily> counterexample_geometries();

}  // namespace carousel
