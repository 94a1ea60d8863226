#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corona/corona.hpp"
#include "corona/graph.hpp"
#include "corona/solvers.hpp"

namespace corona {

/// Closed catalog of the identities and bounds checked by this tool.
enum class TheoremId {
    ChromaticOfProduct,
    TreeTwoDistance,
    TreeTwoDistanceUniform,
    MatchingOfComplete,
    KnTwoDistanceUpper,
    KnTwoDistanceUniformExact,
    GeneralTwoDistanceBounds,
    DiameterOfProduct,
    KnThreeDistance,
    KmnThreeDistance,
    DominatingSetCharacterization,
    DominationEqualsVertexCover,
    IndependenceSum,
};

enum class Relation { Equal, UpperBound, LowerBound, Interval };

/// Closed-form predicted value or bound. Equal/UpperBound/LowerBound carry
/// `value`; Interval carries [lower, upper].
struct Prediction {
    Relation relation = Relation::Equal;
    long long value = 0;
    long long lower = 0;
    long long upper = 0;

    static Prediction equal(long long v) { return {Relation::Equal, v, v, v}; }
    static Prediction upper_bound(long long v) { return {Relation::UpperBound, v, 0, v}; }
    static Prediction lower_bound(long long v) { return {Relation::LowerBound, v, v, 0}; }
    static Prediction interval(long long lo, long long hi) {
        return {Relation::Interval, 0, lo, hi};
    }
};

/// A base graph together with one factor per edge (in edge order).
struct Instance {
    Graph g;
    std::vector<Graph> factors;
};

struct TheoremInfo {
    TheoremId id;
    std::string_view key;        // CLI identifier, kebab-case
    std::string_view statement;  // the claim, in ascii math
    std::string_view hypotheses;
    Relation relation;
};

/// Stable-order catalog; 13 entries.
const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo& theorem_info(TheoremId id);
std::optional<TheoremId> theorem_from_key(std::string_view key);

enum class VerdictKind { Holds, Refuted, Inconclusive };
enum class InconclusiveReason { HypothesisViolation, SolverBracket };

/// Outcome of checking one theorem on one instance. Refuted verdicts always
/// carry the replayable instance and, when the violation is witnessed by a
/// feasible solution, its certificate.
struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<Prediction> prediction;
    std::optional<long long> observed;
    std::optional<Certificate> witness;
    std::optional<Instance> witness_instance;
    std::optional<InconclusiveReason> reason;
    std::optional<std::pair<long long, long long>> bracket;
    std::string detail;  // violation text or refutation explanation
    std::string note;    // extra metadata, e.g. alternate reading values
    std::int64_t nodes_explored = 0;
};

/// Closed-form prediction. Pure arithmetic plus exact solves on the factors
/// (and on G itself); never constructs or solves the product. Throws
/// std::invalid_argument naming the violated hypothesis.
Prediction predict(TheoremId id, const Instance& inst);

/// Builds the product, runs the relevant exact solver on it, and compares
/// against the prediction. Hypothesis violations yield Inconclusive, never
/// a crash; solver timeouts whose bracket cannot decide yield Inconclusive
/// with the bracket.
Verdict verify(TheoremId id, const Instance& inst, const Budget& budget);

}  // namespace corona
