/* hierarchy.hpp -- multi-level LTLf task specifications: file format and
 * structural validation, the hierarchy tree, the bottom-up output-word
 * semantics oracle, bounded one-time satisfaction checks, and temporal-order
 * inference between leaf specifications. */

#ifndef HSTAP_HIERARCHY_HPP
#define HSTAP_HIERARCHY_HPP

#include <hstap/formula.hpp>
#include <hstap/nfa.hpp>

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hstap {

struct SpecValidationError : std::runtime_error {
    std::string condition; // which structural rule failed
    SpecValidationError(std::string cond, const std::string& msg)
        : std::runtime_error(cond + ": " + msg), condition(std::move(cond)) {}
};

struct SpecNode {
    std::string name;
    Formula formula;
    int level = 1;            // 1-based, 1 is the root level
    bool is_leaf = false;     // all propositions atomic
    int parent = -1;          // spec index, -1 for the root
    std::vector<int> children;
};

class HierarchySpec {
  public:
    std::vector<std::string> alphabet; // sorted atomic propositions
    std::vector<SpecNode> specs;       // level-major file order
    std::map<std::string, int> index;  // name -> spec index

    int root() const { return 0; }
    int level_count() const { return specs.empty() ? 0 : specs.back().level; }

    const SpecNode& node(int i) const { return specs[static_cast<std::size_t>(i)]; }

    int spec_index(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end())
            throw std::out_of_range("unknown specification name: " + name);
        return it->second;
    }

    std::vector<int> leaves() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(specs.size()); ++i)
            if (specs[static_cast<std::size_t>(i)].is_leaf) out.push_back(i);
        return out;
    }

    // Path from spec i up to the root, excluding i itself; nearest parent first.
    std::vector<int> parent_path(int i) const {
        std::vector<int> out;
        for (int p = node(i).parent; p >= 0; p = node(p).parent) out.push_back(p);
        return out;
    }

    bool is_atomic(const std::string& prop) const {
        return std::binary_search(alphabet.begin(), alphabet.end(), prop);
    }
};

// ---------------------------------------------------------------------------
// Spec file format:
//   hltlf v1
//   alphabet: a b c ...
//   level 1:
//   name = <formula>
//   level 2:
//   ...
// Composite references are bare names of next-level specifications.
// ---------------------------------------------------------------------------

namespace detail {

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto head = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    if (!head(s[0])) return false;
    for (char c : s.substr(1))
        if (!head(c) && !(c >= '0' && c <= '9')) return false;
    return true;
}

} // namespace detail

inline void validate_spec(HierarchySpec& spec) {
    // Level 1 holds exactly one formula.
    int n1 = 0;
    for (const auto& s : spec.specs)
        if (s.level == 1) ++n1;
    if (n1 != 1)
        throw SpecValidationError("condition1",
                                  "expected exactly one formula at the highest level, found " +
                                      std::to_string(n1));
    if (spec.specs[0].level != 1)
        throw SpecValidationError("condition1", "first specification must be at level 1");

    // Namespaces of atomic and composite propositions are disjoint.
    for (const auto& s : spec.specs)
        if (spec.is_atomic(s.name))
            throw SpecValidationError("namespace",
                                      "name '" + s.name + "' collides with an atomic proposition");

    std::vector<std::vector<std::string>> names_at_level(
        static_cast<std::size_t>(spec.level_count()) + 2);
    for (const auto& s : spec.specs)
        names_at_level[static_cast<std::size_t>(s.level)].push_back(s.name);

    // Each formula is entirely atomic or entirely next-level composite.
    for (int i = 0; i < static_cast<int>(spec.specs.size()); ++i) {
        auto& s = spec.specs[static_cast<std::size_t>(i)];
        auto props = propositions(s.formula);
        bool all_atomic = true, all_composite = true;
        const auto& next_names = names_at_level[static_cast<std::size_t>(s.level) + 1];
        for (const auto& p : props) {
            bool atomic = spec.is_atomic(p);
            bool known_name = spec.index.count(p) > 0;
            if (!atomic && !known_name)
                throw SpecValidationError("dangling",
                                          "'" + s.name + "' references unknown proposition '" +
                                              p + "'");
            if (!atomic) all_atomic = false;
            bool is_next = std::find(next_names.begin(), next_names.end(), p) != next_names.end();
            if (!is_next) all_composite = false;
        }
        if (props.empty()) {
            s.is_leaf = true;
        } else if (all_atomic) {
            s.is_leaf = true;
        } else if (all_composite) {
            s.is_leaf = false;
        } else {
            throw SpecValidationError(
                "condition2",
                "'" + s.name + "' must consist entirely of atomic propositions or entirely of "
                               "level-" + std::to_string(s.level + 1) + " specification names");
        }
    }

    // Each non-root specification is referenced by exactly one formula at the
    // level above.
    for (int i = 0; i < static_cast<int>(spec.specs.size()); ++i) {
        auto& s = spec.specs[static_cast<std::size_t>(i)];
        if (s.level == 1) continue;
        int refs = 0;
        for (int j = 0; j < static_cast<int>(spec.specs.size()); ++j) {
            const auto& t = spec.specs[static_cast<std::size_t>(j)];
            if (t.level != s.level - 1 || t.is_leaf) continue;
            if (propositions(t.formula).count(s.name)) {
                ++refs;
                s.parent = j;
            }
        }
        if (refs != 1)
            throw SpecValidationError("condition3",
                                      "'" + s.name + "' must appear in exactly one formula at "
                                                     "the level above, found " +
                                          std::to_string(refs));
    }

    // Children ordered by first appearance order in the spec list.
    for (auto& s : spec.specs) s.children.clear();
    for (int i = 0; i < static_cast<int>(spec.specs.size()); ++i) {
        int p = spec.specs[static_cast<std::size_t>(i)].parent;
        if (p >= 0) spec.specs[static_cast<std::size_t>(p)].children.push_back(i);
    }
}

inline HierarchySpec load_spec(std::istream& in) {
    HierarchySpec spec;
    std::string line;
    int line_no = 0;
    int current_level = 0;
    bool header_seen = false;
    auto fail = [&](const std::string& msg) {
        throw SpecValidationError("format", "line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed.resize(pos);
        while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' ||
                                    trimmed.back() == '\r'))
            trimmed.pop_back();
        std::size_t start = trimmed.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        trimmed = trimmed.substr(start);

        if (!header_seen) {
            if (trimmed != "hltlf v1") fail("expected header 'hltlf v1'");
            header_seen = true;
            continue;
        }
        if (trimmed.rfind("alphabet:", 0) == 0) {
            std::istringstream words(trimmed.substr(9));
            std::string w;
            while (words >> w) {
                if (!detail::valid_identifier(w)) fail("invalid atomic proposition '" + w + "'");
                spec.alphabet.push_back(w);
            }
            std::sort(spec.alphabet.begin(), spec.alphabet.end());
            spec.alphabet.erase(std::unique(spec.alphabet.begin(), spec.alphabet.end()),
                                spec.alphabet.end());
            continue;
        }
        if (trimmed.rfind("level", 0) == 0 && trimmed.back() == ':') {
            int lvl = 0;
            try {
                lvl = std::stoi(trimmed.substr(5, trimmed.size() - 6));
            } catch (...) {
                fail("malformed level header");
            }
            if (lvl != current_level + 1) fail("levels must be declared in order 1..K");
            current_level = lvl;
            continue;
        }
        auto eq = trimmed.find('=');
        if (eq == std::string::npos) fail("expected 'name = formula'");
        if (current_level == 0) fail("formula before any 'level k:' header");
        std::string name = trimmed.substr(0, eq);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (!detail::valid_identifier(name)) fail("invalid specification name '" + name + "'");
        if (spec.index.count(name)) fail("duplicate specification name '" + name + "'");
        Formula f = parse_formula(trimmed.substr(eq + 1));
        spec.index[name] = static_cast<int>(spec.specs.size());
        spec.specs.push_back({name, f, current_level, false, -1, {}});
    }
    if (!header_seen) throw SpecValidationError("format", "missing 'hltlf v1' header");
    if (spec.specs.empty()) throw SpecValidationError("format", "no specifications");
    validate_spec(spec);
    return spec;
}

inline HierarchySpec load_spec_text(const std::string& text) {
    std::istringstream in(text);
    return load_spec(in);
}

inline std::string hierarchy_to_dot(const HierarchySpec& spec) {
    std::ostringstream out;
    out << "digraph hierarchy {\n  node [shape=box];\n";
    for (const auto& s : spec.specs) {
        out << "  " << s.name << " [label=\"" << s.name << "\\n" << render(s.formula) << "\"";
        if (s.is_leaf) out << ", style=filled, fillcolor=palegreen";
        out << "];\n";
    }
    for (const auto& s : spec.specs)
        if (s.parent >= 0)
            out << "  " << spec.node(s.parent).name << " -> " << s.name << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// State-specification sequences and the bottom-up semantics oracle.
// ---------------------------------------------------------------------------

struct StateSpecSequence {
    struct Pair {
        int state = 0;
        int leaf = -1; // spec index of the served leaf, -1 for idle
    };
    // steps[i][r]: robot r at instant i. All instants carry every robot.
    std::vector<std::vector<Pair>> steps;

    std::size_t length() const { return steps.size(); }
    int robots() const { return steps.empty() ? 0 : static_cast<int>(steps[0].size()); }
};

// labeler(robot, state) -> set of atomic propositions observed there.
using Labeler = std::function<Symbol(int, int)>;

struct OutputWord {
    std::vector<char> marks; // marks[i] != 0 iff the spec was satisfied at instant i
    bool any() const {
        return std::find(marks.begin(), marks.end(), 1) != marks.end();
    }
    std::vector<int> marked_instants() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(marks.size()); ++i)
            if (marks[i]) out.push_back(i);
        return out;
    }
};

namespace detail {

inline Word input_word_for(const HierarchySpec& spec, int phi, const StateSpecSequence& tau,
                           const Labeler& labeler,
                           const std::map<int, OutputWord>& child_words) {
    const std::size_t n = tau.length();
    Word w(n);
    const SpecNode& node = spec.node(phi);
    if (node.is_leaf) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> acc;
            for (int r = 0; r < tau.robots(); ++r) {
                const auto& pr = tau.steps[i][static_cast<std::size_t>(r)];
                if (pr.leaf == phi) {
                    Symbol lab = labeler(r, pr.state);
                    acc.insert(acc.end(), lab.begin(), lab.end());
                }
            }
            w[i] = make_symbol(std::move(acc));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> acc;
            for (int c : node.children)
                if (child_words.at(c).marks[i]) acc.push_back(spec.node(c).name);
            w[i] = make_symbol(std::move(acc));
        }
    }
    return w;
}

} // namespace detail

// Output word of specification phi under tau: instant j is marked iff the
// input-word segment since the most recent satisfaction satisfies phi, with
// the convention that the specification counts as satisfied at instant -1.
inline OutputWord generate_output_word(const StateSpecSequence& tau, const HierarchySpec& spec,
                                       int phi, const Labeler& labeler) {
    const SpecNode& node = spec.node(phi);
    std::map<int, OutputWord> child_words;
    for (int c : node.children)
        child_words.emplace(c, generate_output_word(tau, spec, c, labeler));
    Word w = detail::input_word_for(spec, phi, tau, labeler, child_words);

    OutputWord out;
    out.marks.assign(w.size(), 0);
    int last = -1;
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
        std::span<const Symbol> segment(w.data() + (last + 1),
                                        static_cast<std::size_t>(j - last));
        if (evaluate(node.formula, segment, 0)) {
            out.marks[static_cast<std::size_t>(j)] = 1;
            last = j;
        }
    }
    return out;
}

inline OutputWord generate_output_word(const StateSpecSequence& tau, const HierarchySpec& spec,
                                       const std::string& phi, const Labeler& labeler) {
    return generate_output_word(tau, spec, spec.spec_index(phi), labeler);
}

inline bool satisfies(const StateSpecSequence& tau, const HierarchySpec& spec,
                      const Labeler& labeler) {
    if (tau.steps.empty()) return false;
    return generate_output_word(tau, spec, spec.root(), labeler).any();
}

// ---------------------------------------------------------------------------
// Bounded one-time satisfaction: a non-leaf passes if some accepting input
// word over its composite propositions, no longer than its automaton state
// count, uses each child at most once.
// ---------------------------------------------------------------------------

inline std::map<std::string, bool> check_bounded_one_time(const HierarchySpec& spec,
                                                          std::size_t state_cap = 10000) {
    std::map<std::string, bool> verdicts;
    for (const auto& node : spec.specs) {
        if (node.is_leaf) continue;
        Nfa a = translate(node.formula, state_cap);
        const int n_children = static_cast<int>(node.children.size());
        const std::uint32_t n_sym = 1u << a.alphabet.size();
        auto dense = detail::DenseNfa::from(a, a.alphabet);

        // Symbol mask -> child-usage mask over a's alphabet positions.
        // (Alphabet of a non-leaf is exactly its referenced children.)
        const int max_len = std::max(1, a.state_count);
        struct Conf {
            std::uint32_t states;
            std::uint32_t used;
        };
        std::vector<Conf> frontier;
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        std::uint32_t init_mask = 0, acc_mask = 0;
        for (int q : a.initial) init_mask |= 1u << q;
        for (int q : a.accepting) acc_mask |= 1u << q;
        if (a.state_count > 30 || n_children > 20)
            throw LimitError("check_bounded_one_time: specification too large");
        frontier.push_back({init_mask, 0});
        seen.insert({init_mask, 0});
        bool found = false;
        for (int depth = 1; depth <= max_len && !found; ++depth) {
            std::vector<Conf> next;
            for (const auto& conf : frontier) {
                for (std::uint32_t sym = 0; sym < n_sym; ++sym) {
                    if (sym & conf.used) continue; // some child would repeat
                    std::uint32_t succ = 0;
                    for (int q = 0; q < a.state_count; ++q)
                        if (conf.states & (1u << q))
                            for (int to :
                                 dense.next[static_cast<std::size_t>(q) * n_sym + sym])
                                succ |= 1u << to;
                    if (!succ) continue;
                    if (succ & acc_mask) {
                        found = true;
                        break;
                    }
                    std::uint32_t used = conf.used | sym;
                    if (seen.insert({succ, used}).second) next.push_back({succ, used});
                }
                if (found) break;
            }
            frontier = std::move(next);
        }
        verdicts[node.name] = found;
    }
    return verdicts;
}

// ---------------------------------------------------------------------------
// Temporal order between leaf specifications. For each leaf pair the lowest
// common ancestor's automaton decides: x precedes y iff no accepting run
// (restricted to one-time child usage) sets y's governing composite strictly
// before the first occurrence of x's, and some accepting run uses both.
// Inconclusive pairs default to parallel, so the planner never loses
// transitions beyond what the order analysis justifies.
// ---------------------------------------------------------------------------

enum class TemporalRel { Before, After, Parallel };

struct TemporalRelation {
    std::map<std::pair<int, int>, TemporalRel> pairs; // key: (min, max) leaf indices

    TemporalRel get(int a, int b) const {
        if (a == b) return TemporalRel::Parallel;
        bool flip = a > b;
        auto it = pairs.find({std::min(a, b), std::max(a, b)});
        if (it == pairs.end()) return TemporalRel::Parallel;
        TemporalRel r = it->second;
        if (!flip) return r;
        if (r == TemporalRel::Before) return TemporalRel::After;
        if (r == TemporalRel::After) return TemporalRel::Before;
        return TemporalRel::Parallel;
    }
};

namespace detail {

struct PairRunFacts {
    bool accepting_with_y_first = false;
    bool accepting_with_x_first = false;
    bool accepting_with_both = false;
};

// Reachability over (automaton state, used-children mask, first-occurrence
// order) with one-time child usage.
inline PairRunFacts analyze_pair_runs(const Nfa& a, int child_x, int child_y) {
    auto dense = DenseNfa::from(a, a.alphabet);
    const std::uint32_t n_sym = dense.n_symbols;
    const std::uint32_t x_bit = 1u << child_x, y_bit = 1u << child_y;
    enum Order : std::uint8_t { None = 0, XFirst = 1, YFirst = 2, Simul = 3 };
    PairRunFacts facts;

    struct Conf {
        int q;
        std::uint32_t used;
        std::uint8_t order;
    };
    std::set<std::tuple<int, std::uint32_t, std::uint8_t>> seen;
    std::vector<Conf> stack;
    auto push = [&](int q, std::uint32_t used, std::uint8_t order) {
        if (seen.insert({q, used, order}).second) stack.push_back({q, used, order});
    };
    for (int q : dense.initial) push(q, 0, None);
    while (!stack.empty()) {
        Conf c = stack.back();
        stack.pop_back();
        if (dense.is_accepting(c.q)) {
            if (c.order == YFirst) facts.accepting_with_y_first = true;
            if (c.order == XFirst) facts.accepting_with_x_first = true;
            if ((c.used & x_bit) && (c.used & y_bit)) facts.accepting_with_both = true;
        }
        for (std::uint32_t sym = 0; sym < n_sym; ++sym) {
            if (sym & c.used) continue;
            std::uint8_t order = c.order;
            if (order == None) {
                bool has_x = sym & x_bit, has_y = sym & y_bit;
                if (has_x && has_y) order = Simul;
                else if (has_x) order = XFirst;
                else if (has_y) order = YFirst;
            }
            for (int to : dense.next[static_cast<std::size_t>(c.q) * n_sym + sym])
                push(to, c.used | sym, order);
        }
    }
    return facts;
}

} // namespace detail

inline TemporalRelation infer_temporal_order(const HierarchySpec& spec) {
    TemporalRelation rel;
    auto leaves = spec.leaves();
    // Cache translated non-leaf automata.
    std::map<int, Nfa> automata;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            int x = leaves[i], y = leaves[j];
            // Lowest common ancestor and the two governing children.
            std::vector<int> px{x}, py{y};
            for (int p : spec.parent_path(x)) px.push_back(p);
            for (int p : spec.parent_path(y)) py.push_back(p);
            int lca = -1, cx = -1, cy = -1;
            for (std::size_t ix = 0; ix < px.size() && lca < 0; ++ix)
                for (std::size_t iy = 0; iy < py.size(); ++iy)
                    if (px[ix] == py[iy]) {
                        lca = px[ix];
                        cx = ix > 0 ? px[ix - 1] : -1;
                        cy = iy > 0 ? py[iy - 1] : -1;
                        break;
                    }
            if (lca < 0 || cx < 0 || cy < 0) {
                rel.pairs[{x, y}] = TemporalRel::Parallel;
                continue;
            }
            auto it = automata.find(lca);
            if (it == automata.end())
                it = automata.emplace(lca, translate(spec.node(lca).formula)).first;
            const Nfa& a = it->second;
            auto child_pos = [&](int child) {
                const std::string& name = spec.node(child).name;
                auto p = std::find(a.alphabet.begin(), a.alphabet.end(), name);
                return static_cast<int>(p - a.alphabet.begin());
            };
            auto facts = detail::analyze_pair_runs(a, child_pos(cx), child_pos(cy));
            bool x_before = !facts.accepting_with_y_first && facts.accepting_with_both;
            bool y_before = !facts.accepting_with_x_first && facts.accepting_with_both;
            if (x_before && !y_before) rel.pairs[{x, y}] = TemporalRel::Before;
            else if (y_before && !x_before) rel.pairs[{x, y}] = TemporalRel::After;
            else rel.pairs[{x, y}] = TemporalRel::Parallel;
        }
    }
    return rel;
}

} // namespace hstap

#endif // HSTAP_HIERARCHY_HPP
