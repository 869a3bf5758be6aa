/* gridworld.hpp -- grid-map environments, robot transition systems with a
 * manipulation-status dimension, and lazy robot x automaton products. */

#ifndef HSTAP_GRIDWORLD_HPP
#define HSTAP_GRIDWORLD_HPP

#include <hstap/nfa.hpp>

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hstap {

struct MapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cell {
    int x = 0, y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct GridMap {
    int width = 0, height = 0;
    std::vector<char> obstacle;                       // row-major
    std::map<std::string, std::vector<Cell>> regions; // name -> cells
    std::map<int, Cell> robot_starts;                 // robot id (1-based) -> cell

    bool in_bounds(const Cell& c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }
    bool is_obstacle(const Cell& c) const {
        return obstacle[static_cast<std::size_t>(c.y) * width + c.x] != 0;
    }
    bool is_free(const Cell& c) const { return in_bounds(c) && !is_obstacle(c); }

    std::vector<std::string> region_names_at(const Cell& c) const {
        std::vector<std::string> out;
        for (const auto& [name, cells] : regions)
            if (std::find(cells.begin(), cells.end(), c) != cells.end()) out.push_back(name);
        return out;
    }

    bool cell_in_region(const Cell& c, const std::string& name) const {
        auto it = regions.find(name);
        if (it == regions.end()) return false;
        return std::find(it->second.begin(), it->second.end(), c) != it->second.end();
    }

    // Free cells carrying no region label; used for randomized starts.
    std::vector<Cell> unlabeled_free_cells() const {
        std::vector<char> labeled(static_cast<std::size_t>(width) * height, 0);
        for (const auto& [name, cells] : regions)
            for (const Cell& c : cells)
                labeled[static_cast<std::size_t>(c.y) * width + c.x] = 1;
        std::vector<Cell> out;
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                Cell c{x, y};
                if (is_free(c) && !labeled[static_cast<std::size_t>(y) * width + x])
                    out.push_back(c);
            }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Map file format:
//   gridmap v1
//   legend:
//   <char> = obstacle | <region name>
//   grid:
//   <height lines of width characters; '.' is free and unlabeled>
//   region <name> AT x,y          (optional single-cell markers)
//   robot <id> AT x,y
// ---------------------------------------------------------------------------

inline GridMap load_map(std::istream& in) {
    GridMap map;
    std::map<char, std::string> legend;
    std::vector<std::string> grid_lines;
    std::vector<std::pair<std::string, Cell>> markers;
    enum class Section { Preamble, Legend, Grid, Tail } section = Section::Preamble;
    std::string line;
    int line_no = 0;
    bool header = false;
    auto fail = [&](const std::string& msg) {
        throw MapError("map: line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        std::size_t start = trimmed.find_first_not_of(" \t");
        if (section != Section::Grid) {
            if (start == std::string::npos) continue;
            trimmed = trimmed.substr(start);
        }
        if (!header) {
            if (trimmed != "gridmap v1") fail("expected header 'gridmap v1'");
            header = true;
            continue;
        }
        if (trimmed == "legend:") { section = Section::Legend; continue; }
        if (trimmed == "grid:") { section = Section::Grid; continue; }
        if (section == Section::Grid) {
            if (start == std::string::npos) { section = Section::Tail; continue; }
            if (trimmed.rfind("robot ", 0) == 0 || trimmed.rfind("region ", 0) == 0) {
                section = Section::Tail;
            } else {
                grid_lines.push_back(trimmed);
                continue;
            }
        }
        if (section == Section::Legend) {
            if (trimmed.size() < 5 || trimmed[1] != ' ' || trimmed[2] != '=')
                fail("legend entries look like '<char> = <name>'");
            char c = trimmed[0];
            std::string name = trimmed.substr(3);
            name = name.substr(name.find_first_not_of(' '));
            if (c == '.' || c == ' ') fail("'.' is reserved for free cells");
            if (legend.count(c)) fail(std::string("duplicate legend character '") + c + "'");
            legend[c] = name;
            continue;
        }
        // Tail: robot and region marker lines.
        std::istringstream ss(trimmed);
        std::string kind;
        ss >> kind;
        if (kind == "robot") {
            int id;
            std::string at, coord;
            if (!(ss >> id >> at >> coord) || at != "AT") fail("expected 'robot <id> AT x,y'");
            auto comma = coord.find(',');
            if (comma == std::string::npos) fail("expected 'x,y'");
            Cell c{std::stoi(coord.substr(0, comma)), std::stoi(coord.substr(comma + 1))};
            if (map.robot_starts.count(id)) fail("duplicate robot id");
            map.robot_starts[id] = c;
        } else if (kind == "region") {
            std::string name, at, coord;
            if (!(ss >> name >> at >> coord) || at != "AT") fail("expected 'region <name> AT x,y'");
            auto comma = coord.find(',');
            if (comma == std::string::npos) fail("expected 'x,y'");
            markers.push_back(
                {name, {std::stoi(coord.substr(0, comma)), std::stoi(coord.substr(comma + 1))}});
        } else {
            fail("unexpected line '" + trimmed + "'");
        }
    }
    if (grid_lines.empty()) throw MapError("map: missing grid section");
    map.height = static_cast<int>(grid_lines.size());
    map.width = static_cast<int>(grid_lines[0].size());
    for (const auto& g : grid_lines)
        if (static_cast<int>(g.size()) != map.width)
            throw MapError("map: ragged grid rows");
    map.obstacle.assign(static_cast<std::size_t>(map.width) * map.height, 0);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x) {
            char c = grid_lines[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            if (c == '.') continue;
            auto it = legend.find(c);
            if (it == legend.end())
                throw MapError(std::string("map: grid character '") + c + "' not in legend");
            if (it->second == "obstacle")
                map.obstacle[static_cast<std::size_t>(y) * map.width + x] = 1;
            else
                map.regions[it->second].push_back({x, y});
        }
    for (const auto& [name, cell] : markers) {
        if (!map.in_bounds(cell)) throw MapError("map: region '" + name + "' out of bounds");
        if (map.is_obstacle(cell))
            throw MapError("map: region '" + name + "' placed on an obstacle");
        map.regions[name].push_back(cell);
    }
    for (auto& [name, cells] : map.regions) {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    }
    for (const auto& [id, cell] : map.robot_starts) {
        if (!map.in_bounds(cell))
            throw MapError("map: robot " + std::to_string(id) + " out of bounds");
        if (map.is_obstacle(cell))
            throw MapError("map: robot " + std::to_string(id) + " starts on an obstacle");
    }
    return map;
}

inline GridMap load_map_text(const std::string& text) {
    std::istringstream in(text);
    return load_map(in);
}

// ---------------------------------------------------------------------------
// Robot transition systems: states are (free cell, manipulation status).
// Motion is 4-connected at cost 1, staying put costs 0, and declared status
// actions cost 1 and may be restricted to a region.
// ---------------------------------------------------------------------------

struct StatusAction {
    std::string from, to;
    std::string region; // empty: allowed anywhere
};

struct RobotProfile {
    std::vector<std::string> statuses = {"default"}; // first entry is initial
    std::vector<StatusAction> actions;
    // Extra propositions observed while in a status (e.g. a photographing
    // status also shows the camera as active).
    std::map<std::string, std::vector<std::string>> status_extra_labels;
};

struct TransitionSystem {
    struct Edge {
        int to;
        int cost;
    };

    int robot_id = 1;
    int n_states = 0;
    int initial_state = 0;
    std::vector<std::vector<Edge>> edges; // per state; includes the stay loop
    std::vector<Symbol> labels;           // per state
    std::vector<Cell> cell_of;            // per state
    std::vector<int> status_of;           // per state
    std::vector<std::string> status_names;
    int n_statuses = 1;

    int cost(int from, int to) const {
        for (const auto& e : edges[static_cast<std::size_t>(from)])
            if (e.to == to) return e.cost;
        throw std::out_of_range("transition system: no such transition");
    }
    const Symbol& label(int state) const { return labels[static_cast<std::size_t>(state)]; }
};

inline TransitionSystem build_ts(const GridMap& map, int robot_id, const RobotProfile& profile,
                                 const Cell& start) {
    if (!map.is_free(start)) throw MapError("robot start must be a free cell");
    if (profile.statuses.empty()) throw MapError("robot profile needs at least one status");
    for (const auto& act : profile.actions) {
        auto known = [&](const std::string& s) {
            return std::find(profile.statuses.begin(), profile.statuses.end(), s) !=
                   profile.statuses.end();
        };
        if (!known(act.from) || !known(act.to))
            throw MapError("unknown action proposition '" + act.from + "' -> '" + act.to + "'");
        if (!act.region.empty() && !map.regions.count(act.region))
            throw MapError("action region '" + act.region + "' not on the map");
    }

    TransitionSystem ts;
    ts.robot_id = robot_id;
    ts.status_names = profile.statuses;
    ts.n_statuses = static_cast<int>(profile.statuses.size());

    std::vector<Cell> free_cells;
    std::vector<int> cell_index(static_cast<std::size_t>(map.width) * map.height, -1);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x)
            if (map.is_free({x, y})) {
                cell_index[static_cast<std::size_t>(y) * map.width + x] =
                    static_cast<int>(free_cells.size());
                free_cells.push_back({x, y});
            }

    ts.n_states = static_cast<int>(free_cells.size()) * ts.n_statuses;
    ts.edges.resize(static_cast<std::size_t>(ts.n_states));
    ts.labels.resize(static_cast<std::size_t>(ts.n_states));
    ts.cell_of.resize(static_cast<std::size_t>(ts.n_states));
    ts.status_of.resize(static_cast<std::size_t>(ts.n_states));

    auto state_id = [&](int cell, int status) { return cell * ts.n_statuses + status; };

    for (int ci = 0; ci < static_cast<int>(free_cells.size()); ++ci) {
        const Cell& c = free_cells[static_cast<std::size_t>(ci)];
        auto region_names = map.region_names_at(c);
        for (int st = 0; st < ts.n_statuses; ++st) {
            int id = state_id(ci, st);
            ts.cell_of[static_cast<std::size_t>(id)] = c;
            ts.status_of[static_cast<std::size_t>(id)] = st;
            std::vector<std::string> lab = region_names;
            const std::string& status_name = profile.statuses[static_cast<std::size_t>(st)];
            lab.push_back(status_name);
            if (auto it = profile.status_extra_labels.find(status_name);
                it != profile.status_extra_labels.end())
                lab.insert(lab.end(), it->second.begin(), it->second.end());
            ts.labels[static_cast<std::size_t>(id)] = make_symbol(std::move(lab));

            auto& out = ts.edges[static_cast<std::size_t>(id)];
            out.push_back({id, 0}); // stay
            static const int dx[] = {1, -1, 0, 0};
            static const int dy[] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                Cell n{c.x + dx[d], c.y + dy[d]};
                if (!map.is_free(n)) continue;
                int ni = cell_index[static_cast<std::size_t>(n.y) * map.width + n.x];
                out.push_back({state_id(ni, st), 1});
            }
            for (const auto& act : profile.actions) {
                if (profile.statuses[static_cast<std::size_t>(st)] != act.from) continue;
                if (!act.region.empty() && !map.cell_in_region(c, act.region)) continue;
                int to_status = static_cast<int>(
                    std::find(profile.statuses.begin(), profile.statuses.end(), act.to) -
                    profile.statuses.begin());
                out.push_back({state_id(ci, to_status), 1});
            }
        }
    }

    int start_cell = cell_index[static_cast<std::size_t>(start.y) * map.width + start.x];
    ts.initial_state = state_id(start_cell, 0);
    return ts;
}

// ---------------------------------------------------------------------------
// Product of a robot transition system and a specification automaton. The
// automaton consumes the label of the state each transition enters, so a run
// along a product path reads exactly the labels of the states the path
// visits after its start. Never materialized; successors are enumerated on
// demand with NFA moves memoized per (automaton state, label class).
// ---------------------------------------------------------------------------

class ProductAutomaton {
  public:
    struct State {
        int ts_state;
        int nfa_state;
        friend bool operator==(const State&, const State&) = default;
    };
    struct Successor {
        State to;
        int cost;
    };

    ProductAutomaton(const TransitionSystem& ts, const Nfa& nfa) : ts_(&ts), nfa_(&nfa) {
        // Label classes: distinct symbols across TS states.
        std::map<Symbol, int> class_of;
        state_class_.resize(static_cast<std::size_t>(ts.n_states));
        for (int s = 0; s < ts.n_states; ++s) {
            auto [it, inserted] =
                class_of.emplace(ts.label(s), static_cast<int>(class_of.size()));
            state_class_[static_cast<std::size_t>(s)] = it->second;
            if (inserted) class_symbols_.push_back(ts.label(s));
        }
        auto out_idx = nfa.outgoing_index();
        nfa_succ_.resize(static_cast<std::size_t>(nfa.state_count) * class_symbols_.size());
        for (int q = 0; q < nfa.state_count; ++q)
            for (std::size_t cls = 0; cls < class_symbols_.size(); ++cls) {
                auto& bucket = nfa_succ_[static_cast<std::size_t>(q) * class_symbols_.size() + cls];
                for (const auto* t : out_idx[static_cast<std::size_t>(q)])
                    if (guard_satisfied(t->guard, class_symbols_[cls])) bucket.push_back(t->to);
            }
    }

    const TransitionSystem& ts() const { return *ts_; }
    const Nfa& nfa() const { return *nfa_; }

    std::vector<State> initial_states() const {
        std::vector<State> out;
        for (int q : nfa_->initial) out.push_back({ts_->initial_state, q});
        return out;
    }

    bool accepting(const State& s) const { return nfa_->is_accepting(s.nfa_state); }

    // Automaton successors of q under the label of TS state `entered`.
    const std::vector<int>& nfa_moves(int q, int entered_ts_state) const {
        int cls = state_class_[static_cast<std::size_t>(entered_ts_state)];
        return nfa_succ_[static_cast<std::size_t>(q) * class_symbols_.size() + cls];
    }

    template <typename Fn>
    void for_each_successor(const State& s, Fn&& fn) const {
        for (const auto& e : ts_->edges[static_cast<std::size_t>(s.ts_state)])
            for (int q : nfa_moves(s.nfa_state, e.to)) fn(Successor{{e.to, q}, e.cost});
    }

    std::vector<Successor> successors(const State& s) const {
        std::vector<Successor> out;
        for_each_successor(s, [&](const Successor& succ) { out.push_back(succ); });
        return out;
    }

  private:
    const TransitionSystem* ts_;
    const Nfa* nfa_;
    std::vector<int> state_class_;
    std::vector<Symbol> class_symbols_;
    std::vector<std::vector<int>> nfa_succ_;
};

} // namespace hstap

#endif // HSTAP_GRIDWORLD_HPP
