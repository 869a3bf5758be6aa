/* nfa.hpp -- nondeterministic finite automata over symbolic guards:
 * LTLf translation by progression, language algebra (determinization,
 * complement, product, containment), decomposition sets, progress metric. */

#ifndef HSTAP_NFA_HPP
#define HSTAP_NFA_HPP

#include <hstap/formula.hpp>

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hstap {

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// NFA with guards kept symbolic: a guard is a Boolean (non-temporal) formula
// over the alphabet; a symbol enables a transition iff the guard evaluates
// true on it (propositions absent from the symbol are false).
struct Nfa {
    struct Transition {
        int from;
        Formula guard;
        int to;
    };

    std::vector<std::string> alphabet; // sorted proposition names
    int state_count = 0;
    std::vector<int> initial;          // sorted, unique
    std::vector<int> accepting;        // sorted, unique
    std::vector<Transition> transitions;
    std::vector<std::string> state_names; // optional, for DOT/debugging

    bool is_initial(int q) const {
        return std::binary_search(initial.begin(), initial.end(), q);
    }
    bool is_accepting(int q) const {
        return std::binary_search(accepting.begin(), accepting.end(), q);
    }

    std::vector<std::vector<const Transition*>> outgoing_index() const {
        std::vector<std::vector<const Transition*>> idx(state_count);
        for (const auto& t : transitions) idx[t.from].push_back(&t);
        return idx;
    }
};

inline bool guard_satisfied(const Formula& guard, const Symbol& symbol) {
    Word w = {symbol};
    return evaluate(guard, w, 0);
}

// ---------------------------------------------------------------------------
// Translation: states are Boolean-simplified end-aware residuals, the initial
// state is the formula itself, and a state accepts iff its residual holds on
// the empty suffix. Dead (False) residuals are dropped.
// ---------------------------------------------------------------------------

namespace detail {

inline Formula minterm_formula(const std::vector<std::string>& props, std::uint32_t mask) {
    Formula acc = Formula::True();
    bool first = true;
    for (std::size_t i = 0; i < props.size(); ++i) {
        Formula lit = (mask >> i) & 1u ? Formula::Prop(props[i])
                                       : Formula::Not(Formula::Prop(props[i]));
        acc = first ? lit : Formula::And(acc, lit);
        first = false;
    }
    return acc;
}

inline Symbol minterm_symbol(const std::vector<std::string>& props, std::uint32_t mask) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < props.size(); ++i)
        if ((mask >> i) & 1u) v.push_back(props[i]);
    return make_symbol(std::move(v));
}

} // namespace detail

inline Nfa translate(const Formula& f, std::size_t state_cap = 10000) {
    Nfa nfa;
    {
        auto props = propositions(f);
        nfa.alphabet.assign(props.begin(), props.end());
    }
    if (nfa.alphabet.size() > 20)
        throw LimitError("translate: alphabet too large for minterm expansion");

    std::unordered_map<Formula, int, FormulaHash> ids;
    std::deque<Formula> queue;
    auto intern = [&](const Formula& g) {
        auto it = ids.find(g);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(ids.size());
        if (static_cast<std::size_t>(id) >= state_cap)
            throw LimitError("translate: state cap exceeded");
        ids.emplace(g, id);
        nfa.state_names.push_back(render(g));
        queue.push_back(g);
        return id;
    };

    Formula start = simplify(f);
    intern(start);

    const std::uint32_t n_minterms = 1u << nfa.alphabet.size();
    while (!queue.empty()) {
        Formula state = queue.front();
        queue.pop_front();
        int from = ids.at(state);
        if (state.op() == Op::False) continue;
        // Group minterms by target residual so each (from, to) pair carries
        // one disjunctive guard.
        std::vector<std::pair<int, std::vector<std::uint32_t>>> groups;
        for (std::uint32_t m = 0; m < n_minterms; ++m) {
            Formula next = progress_end_aware(state, detail::minterm_symbol(nfa.alphabet, m));
            if (next.op() == Op::False) continue;
            int to = intern(next);
            bool found = false;
            for (auto& g : groups)
                if (g.first == to) {
                    g.second.push_back(m);
                    found = true;
                    break;
                }
            if (!found) groups.push_back({to, {m}});
        }
        for (const auto& g : groups) {
            Formula guard = Formula::False();
            if (g.second.size() == n_minterms) {
                guard = Formula::True();
            } else {
                bool first = true;
                for (std::uint32_t m : g.second) {
                    Formula mt = detail::minterm_formula(nfa.alphabet, m);
                    guard = first ? mt : Formula::Or(guard, mt);
                    first = false;
                }
            }
            nfa.transitions.push_back({from, guard, g.first});
        }
    }

    nfa.state_count = static_cast<int>(ids.size());
    nfa.initial = {ids.at(start)};
    for (const auto& [g, id] : ids)
        if (empty_suffix_accepts(g)) nfa.accepting.push_back(id);
    std::sort(nfa.accepting.begin(), nfa.accepting.end());
    return nfa;
}

// ---------------------------------------------------------------------------
// Acceptance: subset simulation over the word.
// ---------------------------------------------------------------------------

inline bool accepts(const Nfa& a, const Word& w) {
    std::vector<char> cur(a.state_count, 0);
    for (int q : a.initial) cur[q] = 1;
    for (const auto& symbol : w) {
        std::vector<char> next(a.state_count, 0);
        bool any = false;
        for (const auto& t : a.transitions) {
            if (!cur[t.from] || next[t.to]) continue;
            if (guard_satisfied(t.guard, symbol)) {
                next[t.to] = 1;
                any = true;
            }
        }
        if (!any) return false;
        cur.swap(next);
    }
    for (int q : a.accepting)
        if (cur[q]) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Language algebra over an explicit minterm alphabet.
// ---------------------------------------------------------------------------

namespace detail {

// Dense transition table over minterms of `props`; the bridge from symbolic
// guards to classical automaton algorithms.
struct DenseNfa {
    int state_count = 0;
    std::uint32_t n_symbols = 0;
    std::vector<int> initial, accepting;
    // next[q * n_symbols + m] = list of successors
    std::vector<std::vector<int>> next;

    static DenseNfa from(const Nfa& a, const std::vector<std::string>& props) {
        if (props.size() > 20) throw LimitError("dense NFA: alphabet too large");
        DenseNfa d;
        d.state_count = a.state_count;
        d.n_symbols = 1u << props.size();
        d.initial = a.initial;
        d.accepting = a.accepting;
        d.next.assign(static_cast<std::size_t>(a.state_count) * d.n_symbols, {});
        for (std::uint32_t m = 0; m < d.n_symbols; ++m) {
            Symbol sym = minterm_symbol(props, m);
            for (const auto& t : a.transitions)
                if (guard_satisfied(t.guard, sym))
                    d.next[static_cast<std::size_t>(t.from) * d.n_symbols + m].push_back(t.to);
        }
        return d;
    }

    bool is_accepting(int q) const {
        return std::binary_search(accepting.begin(), accepting.end(), q);
    }
};

// Deterministic automaton via subset construction; complete over minterms.
struct Dfa {
    std::uint32_t n_symbols = 0;
    int initial = 0;
    std::vector<char> accepting;
    std::vector<int> next; // next[q * n_symbols + m]

    static Dfa determinize(const DenseNfa& n, std::size_t state_cap) {
        Dfa d;
        d.n_symbols = n.n_symbols;
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<int>> sets;
        auto get_id = [&](std::vector<int> set) {
            auto it = ids.find(set);
            if (it != ids.end()) return it->second;
            int id = static_cast<int>(ids.size());
            if (static_cast<std::size_t>(id) >= state_cap)
                throw LimitError("determinization cap exceeded");
            bool acc = false;
            for (int q : set)
                if (n.is_accepting(q)) { acc = true; break; }
            d.accepting.push_back(acc ? 1 : 0);
            ids.emplace(set, id);
            sets.push_back(std::move(set));
            return id;
        };

        std::vector<int> init = n.initial;
        std::sort(init.begin(), init.end());
        d.initial = get_id(init);
        for (std::size_t head = 0; head < sets.size(); ++head) {
            std::vector<int> cur = sets[head]; // copy: sets may reallocate
            for (std::uint32_t m = 0; m < d.n_symbols; ++m) {
                std::vector<char> mark(static_cast<std::size_t>(n.state_count), 0);
                for (int q : cur)
                    for (int to : n.next[static_cast<std::size_t>(q) * n.n_symbols + m])
                        mark[to] = 1;
                std::vector<int> succ;
                for (int q = 0; q < n.state_count; ++q)
                    if (mark[q]) succ.push_back(q);
                d.next.push_back(get_id(std::move(succ)));
            }
        }
        return d;
    }
};

} // namespace detail

// True iff L(a) over 2^props is empty (props = a's alphabet).
inline bool language_empty(const Nfa& a) {
    auto dense = detail::DenseNfa::from(a, a.alphabet);
    std::vector<char> seen(a.state_count, 0);
    std::deque<int> queue;
    for (int q : dense.initial) {
        if (dense.is_accepting(q)) return false;
        seen[q] = 1;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (std::uint32_t m = 0; m < dense.n_symbols; ++m)
            for (int to : dense.next[static_cast<std::size_t>(q) * dense.n_symbols + m]) {
                if (seen[to]) continue;
                if (dense.is_accepting(to)) return false;
                seen[to] = 1;
                queue.push_back(to);
            }
    }
    return true;
}

// True iff L(a) subset of L(b), decided by determinizing b, complementing,
// and checking emptiness of the product with a. Languages are compared over
// the union of both alphabets.
inline bool language_subset(const Nfa& a, const Nfa& b, std::size_t det_cap = 100000) {
    std::vector<std::string> props;
    std::set_union(a.alphabet.begin(), a.alphabet.end(), b.alphabet.begin(), b.alphabet.end(),
                   std::back_inserter(props));
    auto da = detail::DenseNfa::from(a, props);
    auto db = detail::DenseNfa::from(b, props);
    auto dfa_b = detail::Dfa::determinize(db, det_cap);

    // BFS over (a-state, b-subset-state); a word in L(a) \ L(b) exists iff we
    // can reach (accepting-a, non-accepting-b).
    const std::uint32_t n_sym = da.n_symbols;
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<int, int>> queue;
    auto key = [](int qa, int qb) {
        return (static_cast<std::uint64_t>(qa) << 32) | static_cast<std::uint32_t>(qb);
    };
    for (int qa : da.initial) {
        if (da.is_accepting(qa) && !dfa_b.accepting[dfa_b.initial]) return false;
        if (seen.insert(key(qa, dfa_b.initial)).second) queue.push_back({qa, dfa_b.initial});
    }
    while (!queue.empty()) {
        auto [qa, qb] = queue.front();
        queue.pop_front();
        for (std::uint32_t m = 0; m < n_sym; ++m) {
            int tb = dfa_b.next[static_cast<std::size_t>(qb) * n_sym + m];
            for (int ta : da.next[static_cast<std::size_t>(qa) * n_sym + m]) {
                if (da.is_accepting(ta) && !dfa_b.accepting[tb]) return false;
                if (seen.insert(key(ta, tb)).second) queue.push_back({ta, tb});
            }
        }
    }
    return true;
}

// Concatenation L(x)·L(y), epsilon-free construction. State ids: x's ids,
// then y's ids shifted by x.state_count.
inline Nfa concat(const Nfa& x, const Nfa& y) {
    Nfa c;
    std::set_union(x.alphabet.begin(), x.alphabet.end(), y.alphabet.begin(), y.alphabet.end(),
                   std::back_inserter(c.alphabet));
    c.state_count = x.state_count + y.state_count;
    c.transitions = x.transitions;
    const int shift = x.state_count;
    for (const auto& t : y.transitions)
        c.transitions.push_back({t.from + shift, t.guard, t.to + shift});
    // Bridge: transitions leaving y's initial states also leave x's accepting
    // states.
    for (const auto& t : y.transitions)
        if (y.is_initial(t.from))
            for (int f : x.accepting) c.transitions.push_back({f, t.guard, t.to + shift});
    c.initial = x.initial;
    bool x_accepts_empty = false;
    for (int q : x.initial)
        if (x.is_accepting(q)) { x_accepts_empty = true; break; }
    if (x_accepts_empty)
        for (int q : y.initial) c.initial.push_back(q + shift);
    std::sort(c.initial.begin(), c.initial.end());
    c.initial.erase(std::unique(c.initial.begin(), c.initial.end()), c.initial.end());
    for (int q : y.accepting) c.accepting.push_back(q + shift);
    bool y_accepts_empty = false;
    for (int q : y.initial)
        if (y.is_accepting(q)) { y_accepts_empty = true; break; }
    if (y_accepts_empty)
        for (int q : x.accepting) c.accepting.push_back(q);
    std::sort(c.accepting.begin(), c.accepting.end());
    c.accepting.erase(std::unique(c.accepting.begin(), c.accepting.end()), c.accepting.end());
    return c;
}

// ---------------------------------------------------------------------------
// Decomposition set. A state q qualifies if it is initial or accepting, or if
// swapping the word parts around q preserves acceptance:
// L(A_post) . L(A_pre) subset of L(a), where A_pre ends at q and A_post
// starts at q. Only states reachable from the initial set and co-reachable
// to the accepting set are eligible for the swap check.
// ---------------------------------------------------------------------------

struct DecompositionSet {
    std::vector<int> states; // sorted
    bool contains(int q) const {
        return std::binary_search(states.begin(), states.end(), q);
    }
};

namespace detail {

inline std::vector<char> reachable_states(const Nfa& a) {
    std::vector<std::vector<int>> adj(a.state_count);
    for (const auto& t : a.transitions) adj[t.from].push_back(t.to);
    std::vector<char> seen(a.state_count, 0);
    std::deque<int> queue;
    for (int q : a.initial) {
        seen[q] = 1;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int to : adj[q])
            if (!seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
    }
    return seen;
}

inline std::vector<char> coreachable_states(const Nfa& a) {
    std::vector<std::vector<int>> radj(a.state_count);
    for (const auto& t : a.transitions) radj[t.to].push_back(t.from);
    std::vector<char> seen(a.state_count, 0);
    std::deque<int> queue;
    for (int q : a.accepting) {
        seen[q] = 1;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int from : radj[q])
            if (!seen[from]) {
                seen[from] = 1;
                queue.push_back(from);
            }
    }
    return seen;
}

} // namespace detail

inline bool decomposition_swap_holds(const Nfa& a, int q, std::size_t det_cap = 100000) {
    Nfa pre = a;
    pre.accepting = {q};
    Nfa post = a;
    post.initial = {q};
    return language_subset(concat(post, pre), a, det_cap);
}

inline DecompositionSet decomposition_set(const Nfa& a, std::size_t det_cap = 100000) {
    auto reach = detail::reachable_states(a);
    auto coreach = detail::coreachable_states(a);
    DecompositionSet d;
    for (int q = 0; q < a.state_count; ++q) {
        if (a.is_initial(q) || a.is_accepting(q)) {
            d.states.push_back(q);
            continue;
        }
        if (!reach[q] || !coreach[q]) continue;
        if (decomposition_swap_holds(a, q, det_cap)) d.states.push_back(q);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Progress metric: length (in transitions) of the longest simple path from
// any initial state to q; 0 on initial states.
// ---------------------------------------------------------------------------

inline std::vector<int> progress_metric_all(const Nfa& a, std::size_t step_cap = 5000000) {
    std::vector<std::vector<int>> adj(a.state_count);
    for (const auto& t : a.transitions) {
        if (t.from == t.to) continue; // self-loops never extend a simple path
        auto& v = adj[t.from];
        if (std::find(v.begin(), v.end(), t.to) == v.end()) v.push_back(t.to);
    }
    std::vector<int> best(a.state_count, -1);
    std::vector<char> visited(a.state_count, 0);
    std::size_t steps = 0;
    std::function<void(int, int)> dfs = [&](int q, int depth) {
        if (++steps > step_cap) throw LimitError("progress metric: path enumeration cap");
        if (depth > best[q]) best[q] = depth;
        visited[q] = 1;
        for (int to : adj[q])
            if (!visited[to]) dfs(to, depth + 1);
        visited[q] = 0;
    };
    for (int q0 : a.initial) {
        std::fill(visited.begin(), visited.end(), 0);
        dfs(q0, 0);
    }
    for (int q0 : a.initial) best[q0] = 0;
    return best;
}

inline int progress_metric(const Nfa& a, int q) {
    auto all = progress_metric_all(a);
    if (q < 0 || q >= a.state_count || all[q] < 0)
        throw std::out_of_range("progress_metric: state unreachable");
    return all[q];
}

// ---------------------------------------------------------------------------
// DOT export; decomposition states drawn shaded.
// ---------------------------------------------------------------------------

inline std::string to_dot(const Nfa& a, const DecompositionSet* decomp = nullptr) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int q = 0; q < a.state_count; ++q) {
        out << "  q" << q << " [label=\"" << q;
        if (q < static_cast<int>(a.state_names.size()) && !a.state_names[q].empty())
            out << "\\n" << a.state_names[q];
        out << "\"";
        if (a.is_accepting(q)) out << ", shape=doublecircle";
        if (decomp && decomp->contains(q)) out << ", style=filled, fillcolor=gray80";
        out << "];\n";
    }
    for (int q : a.initial)
        out << "  start" << q << " [shape=none, label=\"\"];\n  start" << q << " -> q" << q
            << ";\n";
    for (const auto& t : a.transitions)
        out << "  q" << t.from << " -> q" << t.to << " [label=\"" << render(t.guard) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace hstap

#endif // HSTAP_NFA_HPP
