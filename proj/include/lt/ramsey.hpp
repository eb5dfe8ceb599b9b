#pragma once

#include "lt/grouping.hpp"

namespace lt {

struct EvalMode {
    bool sampled = false;
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    std::uint64_t ceiling = 1u << 20;  // most colorings/partitions an exact enumeration may visit
    unsigned threads = 1;
};

struct TriResult {
    Tri value = Tri::Inconclusive;
    std::string reason;
};

// every f:[Z]^n -> k has an (omega^r * s)-large(T) Y with Psi(f,Y)
TriResult is_large_gamma(const FinSet& z, std::uint64_t r, std::uint64_t s, const Pi03Sentence& T,
                         const RtLikeStatement& gamma, const EvalMode& mode = {});

struct DensityParams {
    RtLikeStatement statement;
    Pi03Sentence sentence = Pi03Sentence::top();
    std::uint64_t m = 0;
    EvalMode mode;
};

TriResult is_n_dense(const FinSet& z, const DensityParams& p);

// scaled-down constants for the EM procedure; the unscaled chain is astronomically larger
struct EmOptions {
    std::uint64_t transversal_exp = 2;   // grouping transversals must be omega^this-large
    std::vector<std::uint64_t> block_exp = {0, 2, 4, 6};  // block exponent k_{n-1}, indexed by n-1
};

struct ExtractionOutcome {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<FinSet> set;
    std::optional<Certificate> cert;
    std::string stage;   // where it stopped, or the route that succeeded
    std::string reason;
};

bool is_em_transitive(const ColoringTable& f, const FinSet& y);

ExtractionOutcome em_extract(const FinSet& x, const ColoringTable& f, std::uint64_t n, const Pi03Sentence& T,
                             Budget& budget, const EmOptions& opt = {});

// how omega^k + 1 is read inside the long(T) predicate
enum class SuccessorReading { DropMax, ApartPoint };
SuccessorReading parse_successor_reading(const std::string& s);

// alpha = omega^k (plus_one false) or omega^k + 1 (plus_one true)
std::optional<FinSet> long_interval(const FinSet& x, const ColoringTable& f, const Nat& lo, const Nat& hi, unsigned i,
                                    std::uint64_t k, bool plus_one, const Pi03Sentence& T,
                                    SuccessorReading reading = SuccessorReading::DropMax);

struct QColoring {
    ColoringTable q;
    // set when some interval is (i, omega^n)-long: H is f-homogeneous and omega^n-large(T)
    std::optional<FinSet> homogeneous;
    unsigned homogeneous_color = 0;
};

QColoring ads_q_coloring(const FinSet& x, const ColoringTable& f, std::uint64_t n, const Pi03Sentence& T,
                         SuccessorReading reading = SuccessorReading::DropMax);

struct AdsOutcome {
    ExtractionOutcome result;
    std::optional<FinSet> q_homogeneous;  // omega-large Q-homogeneous set, when found
};

AdsOutcome ads_extract(const FinSet& x, const ColoringTable& f, std::uint64_t n, const Pi03Sentence& T, Budget& budget,
                       SuccessorReading reading = SuccessorReading::DropMax);

struct BoundsRow {
    std::uint64_t n = 0;
    Nat pigeonhole;
    std::vector<Nat> grouping_chain;  // 2n, 4n+1, 16n+5, 16^k (n+1)
    Nat em, ads, rt22;
    std::optional<Nat> lower;  // 2n-1, undefined at n = 0
};

std::vector<BoundsRow> bounds_table(std::uint64_t n_max, std::uint64_t k);
std::string bounds_tsv(const std::vector<BoundsRow>& rows);

}  // namespace lt
