// chains.hh -- non-deterministic chains: recognition, decomposability,
// partitioning of the alphabet into chains, and per-chain consistent
// factorizations of the alphabet.
//
// A symbol subset Omega is a chain when (a) distinct symbols in Omega have
// disjoint source sets and (b) within the Omega-restricted relation no
// target has two distinct incoming transitions. Machines whose alphabet
// splits into chains admit decentralized estimation with zero loss.
#ifndef SYMEST_CHAINS_HH_
#define SYMEST_CHAINS_HH_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symest/decomposition.hh"
#include "symest/machine.hh"

namespace symest {

struct ChainViolation {
    enum class Kind {
        SourceOverlap,  // two symbols share a source state
        TargetCollision // one target, two incoming transitions
    };
    Kind kind;
    std::string symbol_a, symbol_b;
    std::string state_a, state_b; // shared source / the two sources
    std::string target;           // TargetCollision only
    std::string describe() const;
};

/// nullopt iff omega induces a non-deterministic chain.
std::optional<ChainViolation> is_chain(const Machine& m, std::span<const std::string> omega);

/// Per-symbol backward injectivity witness: one symbol, one target, two
/// distinct sources.
struct Prop2Witness {
    std::string symbol, target, source_a, source_b;
    std::string describe() const;
};

/// nullopt iff every symbol's one-step map is backward injective, which
/// holds exactly when the machine is chain-decomposable.
std::optional<Prop2Witness> check_chain_decomposable(const Machine& m);

class NotChainDecomposableError : public ValidationError {
public:
    explicit NotChainDecomposableError(Prop2Witness w)
        : ValidationError("not chain-decomposable: " + w.describe()), witness(std::move(w)) {}
    Prop2Witness witness;
};

/// Partition of the alphabet into chains, blocks in construction order,
/// symbols within a block in machine order.
struct ChainPartition {
    std::vector<std::vector<std::string>> blocks;

    int r() const { return static_cast<int>(blocks.size()); }
};

/// Transitions of the block: the chain's sub-relation.
std::vector<Transition> chain_relation(const Machine& m, std::span<const std::string> block);

/// Greedy first-fit coloring of the symbol conflict graph (symbols
/// conflict when their source sets or their target sets overlap); color
/// classes are the chains. Deterministic given the machine's symbol
/// order. Throws NotChainDecomposableError if no partition exists.
ChainPartition partition_chains(const Machine& m);

/// Factorization of one chain's symbols into p label coordinates by
/// mixed-radix encoding. Radices start at ceil(|omega|^(1/p)) and are
/// shrunk greedily left to right while the product still covers the
/// block. Labels are namespaced "<chain>:<coordinate>:<digit>" so
/// different chains never share a label.
struct ChainFactorization {
    std::vector<std::vector<std::string>> factor_labels; // per coordinate, used labels
    std::vector<std::vector<std::string>> tuples;        // per symbol, p labels
};
ChainFactorization decompose_chain(std::span<const std::string> omega, int p, int chain_index);

/// Consistent decomposition of the whole alphabet: factorize each block,
/// take per-coordinate unions of the factor alphabets. Validates that the
/// partition covers the alphabet exactly and that each block is a chain.
Decomposition build_decomposition(const Machine& m, const ChainPartition& cp, int p);

/// Input/output view of a machine whose alphabet is the full product
/// U x Y, with symbol names "<input><sep><output>". Valid only when the
/// output symbol is a function of (state, input) and every reachable
/// state reacts to every input.
struct IsMachineView {
    const Machine* machine;
    std::vector<std::string> inputs, outputs;
    std::string sep;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factor; // per SymbolId: (u, y)
};

/// Validates the product structure and the two machine properties above.
/// The view borrows the machine; it must outlive the view.
IsMachineView factor_is_machine(const Machine& m, std::vector<std::string> inputs,
                                std::vector<std::string> outputs, std::string sep = "|");

/// Blocks {u} x Y, one per input symbol; each verified as a chain
/// (throws ValidationError with the violation if per-input successor
/// maps are not backward injective).
ChainPartition iso_partition(const IsMachineView& v);

} // namespace symest

#endif
