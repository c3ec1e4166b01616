// distributed.hh -- per-map relabeled machines and the conjunctive
// decentralized estimation scheme: run one estimator per aggregated
// observation channel and intersect the results. The intersection always
// contains the monolithic value; with chain-structured decompositions it
// equals it.
#ifndef SYMEST_DISTRIBUTED_HH_
#define SYMEST_DISTRIBUTED_HH_

#include "symest/decomposition.hh"
#include "symest/machine.hh"

namespace symest {

/// The base machine together with its per-map relabelings P_k. Every P_k
/// shares the base state list (hence StateSet universes line up) and the
/// base initial set; its alphabet is the map's label alphabet and its
/// relation is the base relation with symbols replaced by labels,
/// duplicates collapsed.
struct DistributedFamily {
    Machine base;
    Decomposition decomposition;
    std::vector<Machine> parts;

    int p() const { return static_cast<int>(parts.size()); }
};

/// Builds the family. Requires the decomposition to be consistent over
/// the machine's alphabet; the consistency witness is propagated in the
/// error message otherwise.
DistributedFamily derive_distributed(const Machine& m, const Decomposition& d);

/// Intersection over k of the part estimates on the aggregated traces.
StateSet decentralized_estimate(const DistributedFamily& f, const Trace& w);
StateSet decentralized_predict(const DistributedFamily& f, const Trace& w);
std::pair<StateSet, StateSet> decentralized_estimate_predict(const DistributedFamily& f,
                                                             const Trace& w);

/// Per-part estimate/prediction pairs before the intersection; exposed
/// for diagnostics and side-by-side reports.
struct PartSets {
    StateSet chi, rho;
};
std::vector<PartSets> distributed_sets(const DistributedFamily& f, const Trace& w);

} // namespace symest

#endif
