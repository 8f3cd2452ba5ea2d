#pragma once

#include <random>
#include <string>

#include "scriptstats/types.hpp"

inline std::string data_path(const std::string& rel) {
    return std::string(SCRIPTSTATS_DATA_DIR) + "/" + rel;
}

namespace fixtures {

using namespace scriptstats;

// Graphemic-representation histogram of the bundled mapping.
inline FrequencyTable representation_counts() {
    FrequencyTable t;
    t.counts = {{1, 10}, {2, 12}, {3, 9}, {4, 2}, {5, 2}, {6, 3}};
    return t;
}

// Complexity distribution of the bundled alphabet (dense over [2, 26]).
inline FrequencyTable complexity_counts() {
    FrequencyTable t;
    t.counts = {{2, 1},  {3, 0},  {4, 1},  {5, 0},  {6, 2},  {7, 4},  {8, 1},
                {9, 2},  {10, 4}, {11, 2}, {12, 1}, {13, 3}, {14, 4}, {15, 1},
                {16, 4}, {17, 0}, {18, 1}, {19, 0}, {20, 0}, {21, 0}, {22, 0},
                {23, 0}, {24, 0}, {25, 1}, {26, 1}};
    return t;
}

// Connection-count histogram (ships as its own table in the bundle).
inline FrequencyTable connection_counts() {
    FrequencyTable t;
    t.counts = {{0, 2}, {1, 6}, {2, 10}, {3, 8}, {4, 5}, {5, 1}, {6, 1}};
    return t;
}

inline Letter make_letter(std::string glyph, std::vector<Component> components,
                          std::vector<ConnectionKind> connections = {}) {
    return Letter{std::move(glyph), "x", std::move(components), std::move(connections)};
}

inline Component comp(ComponentKind kind, Orientation o = Orientation::none) {
    return Component{kind, o, ""};
}

// Deterministic random letter with 1..max_components components.
inline Letter random_letter(std::mt19937& rng, int max_components = 6) {
    std::uniform_int_distribution<int> ncomp(1, max_components);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> orient(0, 8);
    std::uniform_int_distribution<int> nconn(0, 4);
    Letter l;
    l.glyph = "?";
    l.transliteration = "r";
    const int n = ncomp(rng);
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<ComponentKind>(kind(rng));
        const auto o = k == ComponentKind::point ? Orientation::none
                                                 : static_cast<Orientation>(orient(rng));
        l.components.push_back({k, o, ""});
    }
    const int c = nconn(rng);
    std::uniform_int_distribution<int> conn(0, 2);
    for (int i = 0; i < c; ++i)
        l.connections.push_back(static_cast<ConnectionKind>(conn(rng)));
    return l;
}

}  // namespace fixtures
