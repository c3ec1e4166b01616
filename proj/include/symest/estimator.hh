// estimator.hh -- set-valued estimation and prediction over observed strings.
//
// estimate/predict run the one-pass recursion
//     chi_t = rho_{t-1} & chi(w(t)),   rho_t = step_image(w(t), chi_t)
// seeded with the initial set for windows anchored at time zero and with
// the full state set otherwise. The oracle_* variants compute the same
// sets from run existence (forward/backward sweeps over the transition
// list) and deliberately share no code with the recursion; they are the
// reference the recursion is tested against.
//
// An empty window is an extension of the defined semantics: it evaluates
// to the initial set at time zero and to the full state set after a slide.
#ifndef SYMEST_ESTIMATOR_HH_
#define SYMEST_ESTIMATOR_HH_

#include <deque>
#include <optional>
#include <utility>

#include "symest/machine.hh"

namespace symest {

/// States the machine can occupy at time t given w(tau)..w(t).
/// Empty means the string is not an observable behaviour.
StateSet estimate(const Machine& m, const Trace& w);

/// Possible states at time t+1 given the same string.
StateSet predict(const Machine& m, const Trace& w);

/// Both sets in one pass.
std::pair<StateSet, StateSet> estimate_predict(const Machine& m, const Trace& w);

/// Path-semantics reference implementations.
StateSet oracle_estimate(const Machine& m, const Trace& w);
StateSet oracle_predict(const Machine& m, const Trace& w);
std::pair<StateSet, StateSet> oracle_estimate_predict(const Machine& m, const Trace& w);

/// Online estimator consuming one symbol per step.
///
/// With an unbounded window the recursion state is carried forward as-is;
/// empty sets then stay empty. With window L the last L symbols are kept
/// and the estimate is recomputed over that suffix on every step, so it
/// always equals the batch estimate on the buffered window (intersection
/// is not invertible, so there is no incremental slide).
class OnlineEstimator {
public:
    /// window == nullopt: unbounded. start_tau anchors the first symbol;
    /// start_tau == 0 applies the initial-set constraint.
    explicit OnlineEstimator(const Machine& m,
                             std::optional<std::size_t> window = std::nullopt,
                             int start_tau = 0);

    void step(std::string_view symbol);

    /// chi over the current window; the initial set before any step.
    const StateSet& current_estimate() const { return chi_; }
    /// rho over the current window; the initial set before any step.
    const StateSet& current_prediction() const { return rho_; }

    /// Symbols consumed so far.
    std::size_t steps() const { return time_; }
    std::optional<std::size_t> window() const { return window_; }

private:
    const Machine* machine_;
    std::optional<std::size_t> window_;
    int start_tau_;
    StateSet chi_, rho_;
    std::deque<SymbolId> buffer_;
    std::size_t time_ = 0;
};

} // namespace symest

#endif
