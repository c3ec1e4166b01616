#include "symest/distributed.hh"

#include <algorithm>
#include <set>

#include "symest/estimator.hh"

namespace symest {

DistributedFamily derive_distributed(const Machine& m, const Decomposition& d) {
    if (auto witness = check_consistency(d); witness)
        throw ValidationError("inconsistent decomposition: symbols '" + witness->symbol_a +
                              "' and '" + witness->symbol_b + "' share one label tuple");
    const auto& alphabet = d.maps.front().alphabet();
    {
        std::set<std::string> have(alphabet.begin(), alphabet.end());
        std::set<std::string> want(m.symbols().begin(), m.symbols().end());
        if (have != want)
            throw ValidationError("decomposition alphabet does not match machine alphabet");
    }

    std::vector<std::string> initial_names;
    for (StateId s : m.initial().elements()) initial_names.push_back(m.state_name(s));

    DistributedFamily family{m, d, {}};
    family.parts.reserve(d.maps.size());
    for (const auto& map : d.maps) {
        // machine symbol id -> label position in this map
        std::vector<std::uint32_t> label_pos(m.num_symbols());
        for (SymbolId s = 0; s < m.num_symbols(); ++s)
            label_pos[s] = map.label_id_of_symbol(*map.find_symbol(m.symbol_name(s)));

        std::set<Machine::Edge> relabeled;
        for (const auto& e : m.edges()) relabeled.insert({e.src, label_pos[e.sym], e.dst});

        std::vector<Transition> transitions;
        transitions.reserve(relabeled.size());
        for (const auto& e : relabeled)
            transitions.push_back({m.state_name(e.src), map.labels()[e.sym], m.state_name(e.dst)});
        family.parts.emplace_back(m.states(), map.labels(), transitions, initial_names);
    }
    return family;
}

std::pair<StateSet, StateSet> decentralized_estimate_predict(const DistributedFamily& f,
                                                             const Trace& w) {
    StateSet chi = StateSet::full(f.base.num_states());
    StateSet rho = StateSet::full(f.base.num_states());
    for (int k = 0; k < f.p(); ++k) {
        auto [c, r] = estimate_predict(f.parts[k], aggregate_trace(f.decomposition.maps[k], w));
        chi.intersect_with(c);
        rho.intersect_with(r);
    }
    return {std::move(chi), std::move(rho)};
}

StateSet decentralized_estimate(const DistributedFamily& f, const Trace& w) {
    return decentralized_estimate_predict(f, w).first;
}

StateSet decentralized_predict(const DistributedFamily& f, const Trace& w) {
    return decentralized_estimate_predict(f, w).second;
}

std::vector<PartSets> distributed_sets(const DistributedFamily& f, const Trace& w) {
    std::vector<PartSets> out;
    out.reserve(f.parts.size());
    for (int k = 0; k < f.p(); ++k) {
        auto [c, r] = estimate_predict(f.parts[k], aggregate_trace(f.decomposition.maps[k], w));
        out.push_back({std::move(c), std::move(r)});
    }
    return out;
}

} // namespace symest
