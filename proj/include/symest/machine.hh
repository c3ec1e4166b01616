// machine.hh -- finite state machines over a symbolic external alphabet,
// with exact set-valued one-step functions.
//
// A Machine is immutable after construction and safe to share across
// threads. States and symbols are strings at the interface and dense
// indices internally; StateSet is a bitset over the dense state range, so
// intersection/union/equality are exact and cheap.
#ifndef SYMEST_MACHINE_HH_
#define SYMEST_MACHINE_HH_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symest/errors.hh"

namespace symest {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

/// Subset of a machine's states, fixed universe size, exact set algebra.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe)
        : size_(universe), bits_((universe + 63) / 64, 0) {}

    static StateSet full(std::size_t universe) {
        StateSet s(universe);
        for (auto& w : s.bits_) w = ~0ULL;
        s.trim();
        return s;
    }

    std::size_t universe() const { return size_; }

    void insert(StateId i) { bits_[i >> 6] |= 1ULL << (i & 63); }
    void erase(StateId i) { bits_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool contains(StateId i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    StateSet& intersect_with(const StateSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    StateSet& unite_with(const StateSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }

    bool intersects(const StateSet& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    bool is_subset_of(const StateSet& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool operator==(const StateSet&) const = default;

    std::vector<StateId> elements() const {
        std::vector<StateId> out;
        out.reserve(count());
        for (StateId i = 0; i < size_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

private:
    void trim() {
        if (size_ % 64) bits_.back() &= (1ULL << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline StateSet intersect(StateSet a, const StateSet& b) { return a.intersect_with(b); }
inline StateSet unite(StateSet a, const StateSet& b) { return a.unite_with(b); }

/// Interface-level transition triple (source, symbol, target).
struct Transition {
    std::string src, sym, dst;
    bool operator==(const Transition&) const = default;
};

/// Finite observed string w(tau) ... w(t). tau only matters through
/// "tau == 0": windows anchored at time zero are constrained by the
/// machine's initial set, later windows are not.
struct Trace {
    std::vector<std::string> symbols;
    int tau = 0;

    std::size_t length() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    bool operator==(const Trace&) const = default;
};

class Machine {
public:
    struct Edge {
        StateId src;
        SymbolId sym;
        StateId dst;
        auto operator<=>(const Edge&) const = default;
    };

    /// Validates and indexes the model. Throws ValidationError on empty
    /// state/symbol lists, duplicate identifiers, unknown names in
    /// transitions or initial, and duplicate transition triples
    /// (duplicates are rejected, not silently collapsed).
    Machine(std::vector<std::string> states, std::vector<std::string> symbols,
            const std::vector<Transition>& transitions,
            std::optional<std::vector<std::string>> initial = std::nullopt);

    std::size_t num_states() const { return states_.size(); }
    std::size_t num_symbols() const { return symbols_.size(); }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& state_name(StateId i) const { return states_[i]; }
    const std::string& symbol_name(SymbolId i) const { return symbols_[i]; }

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<SymbolId> find_symbol(std::string_view name) const;
    StateId state_index(std::string_view name) const;   // throws ValidationError
    SymbolId symbol_index(std::string_view name) const; // throws ValidationError

    const StateSet& initial() const { return initial_; }
    bool initial_is_full() const { return initial_.count() == num_states(); }

    /// All transitions, sorted by (symbol, source, target).
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Edge> edges_of(SymbolId s) const {
        return {edges_.data() + offsets_[s], edges_.data() + offsets_[s + 1]};
    }

    /// Sources of transitions labeled s: the single-symbol estimate.
    const StateSet& sources_of(SymbolId s) const { return sources_[s]; }
    /// Targets of transitions labeled s: the single-symbol prediction.
    const StateSet& targets_of(SymbolId s) const { return targets_[s]; }

    /// One-step successor image of xi under symbol s.
    StateSet step_image(SymbolId s, const StateSet& xi) const;

    bool has_edge(StateId src, SymbolId sym, StateId dst) const;

    /// True when every state has at least one outgoing transition.
    bool non_blocking() const { return non_blocking_; }

    /// Sorted state names of a set; the canonical printable form.
    std::vector<std::string> names(const StateSet& s) const;
    std::string format_states(const StateSet& s) const; // "[x1,x2]"

    bool operator==(const Machine& o) const {
        return states_ == o.states_ && symbols_ == o.symbols_ &&
               edges_ == o.edges_ && initial_ == o.initial_;
    }

private:
    std::vector<std::string> states_;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, StateId> state_idx_;
    std::unordered_map<std::string, SymbolId> symbol_idx_;
    std::vector<Edge> edges_;            // sorted by (sym, src, dst)
    std::vector<std::uint32_t> offsets_; // per-symbol ranges into edges_
    std::vector<StateSet> sources_;
    std::vector<StateSet> targets_;
    StateSet initial_;
    bool non_blocking_ = false;
};

/// chi(omega): states with an outgoing omega-transition.
const StateSet& chi_single(const Machine& m, SymbolId omega);
StateSet chi_single(const Machine& m, std::string_view omega);

/// rho_hat over a symbol subset: union of one-step images of xi under
/// every symbol in omega.
StateSet rho_hat(const Machine& m, std::span<const SymbolId> omega, const StateSet& xi);
StateSet rho_hat(const Machine& m, std::span<const std::string> omega, const StateSet& xi);

/// All (start, end) state pairs realized by some run of w through the
/// transition relation. The empty trace yields the diagonal. Brute force
/// by per-start forward sweeps; independent of the StateSet machinery.
std::set<std::pair<StateId, StateId>> enumerate_paths(const Machine& m, const Trace& w);

/// Translates trace symbols to dense ids; throws ValidationError on an
/// unknown symbol.
std::vector<SymbolId> compile_trace(const Machine& m, const Trace& w);

} // namespace symest

#endif
