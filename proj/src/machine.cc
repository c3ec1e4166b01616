#include "symest/machine.hh"

#include <algorithm>
#include <sstream>

namespace symest {

namespace {

std::unordered_map<std::string, std::uint32_t> index_names(
    const std::vector<std::string>& names, const char* what) {
    std::unordered_map<std::string, std::uint32_t> idx;
    idx.reserve(names.size());
    for (std::uint32_t i = 0; i < names.size(); ++i) {
        if (!idx.emplace(names[i], i).second)
            throw ValidationError(std::string("duplicate ") + what + " identifier '" +
                                  names[i] + "'");
    }
    return idx;
}

} // namespace

Machine::Machine(std::vector<std::string> states, std::vector<std::string> symbols,
                 const std::vector<Transition>& transitions,
                 std::optional<std::vector<std::string>> initial)
    : states_(std::move(states)), symbols_(std::move(symbols)) {
    if (states_.empty()) throw ValidationError("machine needs at least one state");
    if (symbols_.empty()) throw ValidationError("machine needs at least one symbol");
    state_idx_ = index_names(states_, "state");
    symbol_idx_ = index_names(symbols_, "symbol");

    edges_.reserve(transitions.size());
    for (const auto& t : transitions) {
        auto s = find_state(t.src);
        if (!s) throw ValidationError("transition source '" + t.src + "' is not a state");
        auto w = find_symbol(t.sym);
        if (!w) throw ValidationError("transition symbol '" + t.sym + "' is not in the alphabet");
        auto d = find_state(t.dst);
        if (!d) throw ValidationError("transition target '" + t.dst + "' is not a state");
        edges_.push_back({*s, *w, *d});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) {
                  return std::tie(a.sym, a.src, a.dst) < std::tie(b.sym, b.src, b.dst);
              });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw ValidationError("duplicate transition (" + states_[dup->src] + ", " +
                              symbols_[dup->sym] + ", " + states_[dup->dst] + ")");

    offsets_.assign(num_symbols() + 1, 0);
    for (const auto& e : edges_) ++offsets_[e.sym + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

    sources_.assign(num_symbols(), StateSet(num_states()));
    targets_.assign(num_symbols(), StateSet(num_states()));
    std::vector<char> has_out(num_states(), 0);
    for (const auto& e : edges_) {
        sources_[e.sym].insert(e.src);
        targets_[e.sym].insert(e.dst);
        has_out[e.src] = 1;
    }
    non_blocking_ = std::all_of(has_out.begin(), has_out.end(), [](char c) { return c; });

    initial_ = StateSet(num_states());
    if (initial) {
        for (const auto& name : *initial) {
            auto s = find_state(name);
            if (!s) throw ValidationError("initial state '" + name + "' is not a state");
            initial_.insert(*s);
        }
    } else {
        initial_ = StateSet::full(num_states());
    }
}

std::optional<StateId> Machine::find_state(std::string_view name) const {
    auto it = state_idx_.find(std::string(name));
    if (it == state_idx_.end()) return std::nullopt;
    return it->second;
}

std::optional<SymbolId> Machine::find_symbol(std::string_view name) const {
    auto it = symbol_idx_.find(std::string(name));
    if (it == symbol_idx_.end()) return std::nullopt;
    return it->second;
}

StateId Machine::state_index(std::string_view name) const {
    auto s = find_state(name);
    if (!s) throw ValidationError("unknown state '" + std::string(name) + "'");
    return *s;
}

SymbolId Machine::symbol_index(std::string_view name) const {
    auto s = find_symbol(name);
    if (!s) throw ValidationError("unknown symbol '" + std::string(name) + "'");
    return *s;
}

StateSet Machine::step_image(SymbolId s, const StateSet& xi) const {
    StateSet out(num_states());
    for (const auto& e : edges_of(s))
        if (xi.contains(e.src)) out.insert(e.dst);
    return out;
}

bool Machine::has_edge(StateId src, SymbolId sym, StateId dst) const {
    auto span = edges_of(sym);
    Edge probe{src, sym, dst};
    return std::binary_search(span.begin(), span.end(), probe,
                              [](const Edge& a, const Edge& b) {
                                  return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
                              });
}

std::vector<std::string> Machine::names(const StateSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.count());
    for (StateId i : s.elements()) out.push_back(states_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Machine::format_states(const StateSet& s) const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& n : names(s)) {
        if (!first) os << ',';
        os << n;
        first = false;
    }
    os << ']';
    return os.str();
}

const StateSet& chi_single(const Machine& m, SymbolId omega) {
    return m.sources_of(omega);
}

StateSet chi_single(const Machine& m, std::string_view omega) {
    return m.sources_of(m.symbol_index(omega));
}

StateSet rho_hat(const Machine& m, std::span<const SymbolId> omega, const StateSet& xi) {
    StateSet out(m.num_states());
    for (SymbolId s : omega) out.unite_with(m.step_image(s, xi));
    return out;
}

StateSet rho_hat(const Machine& m, std::span<const std::string> omega, const StateSet& xi) {
    std::vector<SymbolId> ids;
    ids.reserve(omega.size());
    for (const auto& name : omega) ids.push_back(m.symbol_index(name));
    return rho_hat(m, ids, xi);
}

std::vector<SymbolId> compile_trace(const Machine& m, const Trace& w) {
    if (w.tau < 0) throw ValidationError("trace start index must be non-negative");
    std::vector<SymbolId> ids;
    ids.reserve(w.symbols.size());
    for (const auto& s : w.symbols) ids.push_back(m.symbol_index(s));
    return ids;
}

std::set<std::pair<StateId, StateId>> enumerate_paths(const Machine& m, const Trace& w) {
    auto ids = compile_trace(m, w);
    std::set<std::pair<StateId, StateId>> pairs;
    const std::size_t n = m.num_states();
    for (StateId start = 0; start < n; ++start) {
        std::vector<char> cur(n, 0);
        cur[start] = 1;
        for (SymbolId sym : ids) {
            std::vector<char> nxt(n, 0);
            for (const auto& e : m.edges_of(sym))
                if (cur[e.src]) nxt[e.dst] = 1;
            cur.swap(nxt);
        }
        for (StateId end = 0; end < n; ++end)
            if (cur[end]) pairs.emplace(start, end);
    }
    return pairs;
}

} // namespace symest
