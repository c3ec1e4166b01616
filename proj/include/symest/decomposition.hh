// decomposition.hh -- equivalence relations on the external alphabet,
// labeled aggregation maps, the joint-separation (consistency) condition,
// and their lift to strings.
#ifndef SYMEST_DECOMPOSITION_HH_
#define SYMEST_DECOMPOSITION_HH_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symest/machine.hh"

namespace symest {

/// Total map from an alphabet W onto a label alphabet V_k. Encodes an
/// equivalence relation on W together with its labeling; the label
/// preimages partition W and every label has a non-empty preimage.
class AggregationMap {
public:
    /// table pairs each alphabet symbol (in order) with its label.
    /// Labels are collected in first-appearance order.
    AggregationMap(int index, std::vector<std::string> alphabet,
                   std::vector<std::string> labels_per_symbol);

    int index() const { return index_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::string& label_of(std::string_view symbol) const;
    std::uint32_t label_id_of_symbol(std::uint32_t symbol_pos) const {
        return label_of_[symbol_pos];
    }
    /// Symbols mapped to the label, in alphabet order.
    const std::vector<std::string>& preimage(std::string_view label) const;

    std::optional<std::uint32_t> find_symbol(std::string_view name) const;
    std::optional<std::uint32_t> find_label(std::string_view name) const;

    bool operator==(const AggregationMap& o) const {
        return alphabet_ == o.alphabet_ && labels_ == o.labels_ && label_of_ == o.label_of_;
    }

private:
    int index_;
    std::vector<std::string> alphabet_;
    std::vector<std::string> labels_;
    std::vector<std::uint32_t> label_of_;            // symbol pos -> label pos
    std::vector<std::vector<std::string>> preimages_; // label pos -> symbols
    std::unordered_map<std::string, std::uint32_t> symbol_pos_;
    std::unordered_map<std::string, std::uint32_t> label_pos_;
};

/// Ordered family of aggregation maps over one alphabet.
struct Decomposition {
    std::vector<AggregationMap> maps;

    int p() const { return static_cast<int>(maps.size()); }
    bool operator==(const Decomposition&) const = default;
};

/// Two distinct symbols carrying the same full label tuple.
struct ConsistencyWitness {
    std::string symbol_a, symbol_b;
};

/// nullopt iff the label tuple identifies every symbol uniquely.
/// Throws ValidationError when the maps do not share one alphabet.
std::optional<ConsistencyWitness> check_consistency(const Decomposition& d);

/// Elementwise image of a trace under the map; length and tau preserved.
Trace aggregate_trace(const AggregationMap& a, const Trace& w);

/// Set of traces in product (per-position) form. Membership and counting
/// stay cheap; full materialization is capped.
struct PositionSets {
    int tau = 0;
    std::vector<std::vector<std::string>> sets;

    std::size_t length() const { return sets.size(); }
    bool contains(const Trace& w) const;
    double cardinality() const;
    /// All member traces; throws MaterializeLimitError beyond cap.
    std::vector<Trace> materialize(std::size_t cap = 1000000) const;
};

/// All traces with the same image as v under a: per-position preimages.
PositionSets preimage_trace(const AggregationMap& a, const Trace& v);

/// Union over the family's per-map preimage sets of the aggregated
/// observation; always contains the observed trace itself.
struct RestrictionDomain {
    std::vector<PositionSets> parts; // one per map

    bool contains(const Trace& w) const;
    /// Deduplicated union; throws MaterializeLimitError beyond cap.
    std::vector<Trace> materialize(std::size_t cap = 1000000) const;
};

RestrictionDomain restriction_domain(const Decomposition& d, const Trace& w);

} // namespace symest

#endif
