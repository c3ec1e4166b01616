#include "symest/decomposition.hh"

#include <algorithm>
#include <map>

namespace symest {

AggregationMap::AggregationMap(int index, std::vector<std::string> alphabet,
                               std::vector<std::string> labels_per_symbol)
    : index_(index), alphabet_(std::move(alphabet)) {
    if (alphabet_.empty()) throw ValidationError("aggregation map needs a non-empty alphabet");
    if (labels_per_symbol.size() != alphabet_.size())
        throw ValidationError("aggregation map must assign exactly one label per symbol");
    label_of_.resize(alphabet_.size());
    for (std::uint32_t i = 0; i < alphabet_.size(); ++i) {
        if (!symbol_pos_.emplace(alphabet_[i], i).second)
            throw ValidationError("duplicate symbol '" + alphabet_[i] + "' in aggregation map");
        const std::string& lab = labels_per_symbol[i];
        auto [it, fresh] = label_pos_.emplace(lab, static_cast<std::uint32_t>(labels_.size()));
        if (fresh) {
            labels_.push_back(lab);
            preimages_.emplace_back();
        }
        label_of_[i] = it->second;
        preimages_[it->second].push_back(alphabet_[i]);
    }
}

const std::string& AggregationMap::label_of(std::string_view symbol) const {
    auto pos = find_symbol(symbol);
    if (!pos) throw ValidationError("unknown symbol '" + std::string(symbol) + "'");
    return labels_[label_of_[*pos]];
}

const std::vector<std::string>& AggregationMap::preimage(std::string_view label) const {
    auto pos = find_label(label);
    if (!pos) throw ValidationError("unknown label '" + std::string(label) + "'");
    return preimages_[*pos];
}

std::optional<std::uint32_t> AggregationMap::find_symbol(std::string_view name) const {
    auto it = symbol_pos_.find(std::string(name));
    if (it == symbol_pos_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> AggregationMap::find_label(std::string_view name) const {
    auto it = label_pos_.find(std::string(name));
    if (it == label_pos_.end()) return std::nullopt;
    return it->second;
}

std::optional<ConsistencyWitness> check_consistency(const Decomposition& d) {
    if (d.maps.empty()) throw ValidationError("decomposition needs at least one map");
    const auto& alphabet = d.maps.front().alphabet();
    for (const auto& m : d.maps) {
        if (m.alphabet() != alphabet)
            throw ValidationError("aggregation maps do not share one alphabet");
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
    for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
        std::vector<std::uint32_t> tuple;
        tuple.reserve(d.maps.size());
        for (const auto& m : d.maps) tuple.push_back(m.label_id_of_symbol(i));
        auto [it, fresh] = seen.emplace(std::move(tuple), i);
        if (!fresh) return ConsistencyWitness{alphabet[it->second], alphabet[i]};
    }
    return std::nullopt;
}

Trace aggregate_trace(const AggregationMap& a, const Trace& w) {
    Trace out;
    out.tau = w.tau;
    out.symbols.reserve(w.symbols.size());
    for (const auto& s : w.symbols) out.symbols.push_back(a.label_of(s));
    return out;
}

bool PositionSets::contains(const Trace& w) const {
    if (w.symbols.size() != sets.size()) return false;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (std::find(sets[i].begin(), sets[i].end(), w.symbols[i]) == sets[i].end())
            return false;
    return true;
}

double PositionSets::cardinality() const {
    double n = 1.0;
    for (const auto& s : sets) n *= static_cast<double>(s.size());
    return n;
}

std::vector<Trace> PositionSets::materialize(std::size_t cap) const {
    if (cardinality() > static_cast<double>(cap))
        throw MaterializeLimitError("trace set too large to materialize");
    std::vector<Trace> out;
    out.push_back(Trace{{}, tau});
    for (const auto& position : sets) {
        std::vector<Trace> grown;
        grown.reserve(out.size() * position.size());
        for (const auto& prefix : out)
            for (const auto& sym : position) {
                Trace t = prefix;
                t.symbols.push_back(sym);
                grown.push_back(std::move(t));
            }
        out.swap(grown);
    }
    return out;
}

PositionSets preimage_trace(const AggregationMap& a, const Trace& v) {
    PositionSets out;
    out.tau = v.tau;
    out.sets.reserve(v.symbols.size());
    for (const auto& label : v.symbols) out.sets.push_back(a.preimage(label));
    return out;
}

bool RestrictionDomain::contains(const Trace& w) const {
    for (const auto& part : parts)
        if (part.contains(w)) return true;
    return false;
}

std::vector<Trace> RestrictionDomain::materialize(std::size_t cap) const {
    double total = 0;
    for (const auto& part : parts) total += part.cardinality();
    if (total > static_cast<double>(cap))
        throw MaterializeLimitError("trace set too large to materialize");
    std::vector<Trace> out;
    for (const auto& part : parts)
        for (auto& t : part.materialize(cap)) out.push_back(std::move(t));
    std::sort(out.begin(), out.end(),
              [](const Trace& a, const Trace& b) { return a.symbols < b.symbols; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RestrictionDomain restriction_domain(const Decomposition& d, const Trace& w) {
    RestrictionDomain out;
    out.parts.reserve(d.maps.size());
    for (const auto& m : d.maps) out.parts.push_back(preimage_trace(m, aggregate_trace(m, w)));
    return out;
}

} // namespace symest
