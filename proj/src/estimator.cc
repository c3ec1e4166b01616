#include "symest/estimator.hh"

namespace symest {

namespace {

StateSet window_seed(const Machine& m, int tau) {
    return tau == 0 ? m.initial() : StateSet::full(m.num_states());
}

std::pair<StateSet, StateSet> run_recursion(const Machine& m,
                                            std::span<const SymbolId> ids, int tau) {
    StateSet rho = window_seed(m, tau);
    StateSet chi = rho;
    for (SymbolId s : ids) {
        chi = rho;
        chi.intersect_with(m.sources_of(s));
        rho = m.step_image(s, chi);
    }
    return {std::move(chi), std::move(rho)};
}

} // namespace

std::pair<StateSet, StateSet> estimate_predict(const Machine& m, const Trace& w) {
    auto ids = compile_trace(m, w);
    return run_recursion(m, ids, w.tau);
}

StateSet estimate(const Machine& m, const Trace& w) {
    return estimate_predict(m, w).first;
}

StateSet predict(const Machine& m, const Trace& w) {
    return estimate_predict(m, w).second;
}

std::pair<StateSet, StateSet> oracle_estimate_predict(const Machine& m, const Trace& w) {
    auto ids = compile_trace(m, w);
    const std::size_t nx = m.num_states();
    const std::size_t n = ids.size();
    if (n == 0) {
        StateSet seed = window_seed(m, w.tau);
        return {seed, seed};
    }

    // fwd[i][x]: some run of w(tau)..w(tau+i-1) from an admissible start
    // sits in x after i symbols.
    std::vector<std::vector<char>> fwd(n + 1, std::vector<char>(nx, 0));
    for (StateId x = 0; x < nx; ++x)
        fwd[0][x] = (w.tau == 0) ? m.initial().contains(x) : 1;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : m.edges())
            if (e.sym == ids[i] && fwd[i][e.src]) fwd[i + 1][e.dst] = 1;

    // bwd[i][x]: a run of w(tau+i)..w(t) can start from x.
    std::vector<std::vector<char>> bwd(n + 1, std::vector<char>(nx, 0));
    for (StateId x = 0; x < nx; ++x) bwd[n][x] = 1;
    for (std::size_t i = n; i-- > 0;)
        for (const auto& e : m.edges())
            if (e.sym == ids[i] && bwd[i + 1][e.dst]) bwd[i][e.src] = 1;

    StateSet chi(nx), rho(nx);
    for (StateId x = 0; x < nx; ++x) {
        if (fwd[n - 1][x] && bwd[n - 1][x]) chi.insert(x);
        if (fwd[n][x]) rho.insert(x);
    }
    return {std::move(chi), std::move(rho)};
}

StateSet oracle_estimate(const Machine& m, const Trace& w) {
    return oracle_estimate_predict(m, w).first;
}

StateSet oracle_predict(const Machine& m, const Trace& w) {
    return oracle_estimate_predict(m, w).second;
}

OnlineEstimator::OnlineEstimator(const Machine& m, std::optional<std::size_t> window,
                                 int start_tau)
    : machine_(&m), window_(window), start_tau_(start_tau) {
    if (window_ && *window_ < 1)
        throw ValidationError("window length must be at least 1");
    if (start_tau_ < 0)
        throw ValidationError("trace start index must be non-negative");
    chi_ = window_seed(m, start_tau_);
    rho_ = chi_;
}

void OnlineEstimator::step(std::string_view symbol) {
    SymbolId id = machine_->symbol_index(symbol);
    ++time_;
    if (!window_) {
        chi_ = rho_;
        chi_.intersect_with(machine_->sources_of(id));
        rho_ = machine_->step_image(id, chi_);
        return;
    }
    buffer_.push_back(id);
    if (buffer_.size() > *window_) buffer_.pop_front();
    // Absolute index of the first buffered symbol decides whether the
    // initial-set constraint still applies.
    int window_start = start_tau_ + static_cast<int>(time_ - buffer_.size());
    std::vector<SymbolId> ids(buffer_.begin(), buffer_.end());
    auto [chi, rho] = run_recursion(*machine_, ids, window_start);
    chi_ = std::move(chi);
    rho_ = std::move(rho);
}

} // namespace symest
