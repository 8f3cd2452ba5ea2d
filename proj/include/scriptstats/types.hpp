#pragma once

#include <map>
#include <string>
#include <vector>

namespace scriptstats {

/// Drawing primitives a glyph decomposes into. An arc is a curve not
/// exceeding 180 degrees; wider curves count as two arcs.
enum class ComponentKind { point, line, arc };

/// How two components touch: smoothly (continuous), at an angle (crisp),
/// or passing through each other (crossing).
enum class ConnectionKind { continuous, crisp, crossing };

constexpr int weight(ComponentKind k) {
    switch (k) {
        case ComponentKind::point: return 1;
        case ComponentKind::line: return 2;
        case ComponentKind::arc: return 3;
    }
    return 0;
}

constexpr int weight(ConnectionKind k) {
    switch (k) {
        case ConnectionKind::continuous: return 1;
        case ConnectionKind::crisp: return 2;
        case ConnectionKind::crossing: return 3;
    }
    return 0;
}

/// Eight compass classes plus "none". Points always carry none.
enum class Orientation { none, n, ne, e, se, s, sw, w, nw };

struct Component {
    ComponentKind kind = ComponentKind::line;
    Orientation orientation = Orientation::none;
    std::string annotation;

    friend bool operator==(const Component&, const Component&) = default;
};

struct Letter {
    std::string glyph;            // single Unicode character, UTF-8 encoded
    std::string transliteration;  // metadata only
    std::vector<Component> components;
    std::vector<ConnectionKind> connections;

    friend bool operator==(const Letter&, const Letter&) = default;
};

struct Alphabet {
    std::string name;
    std::vector<Letter> letters;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

enum class PhonemeCategory { vowel, consonant };
enum class Palatalization { hard, palatalized, semi_palatalized };

struct Phoneme {
    std::string ipa;
    PhonemeCategory category = PhonemeCategory::consonant;
    Palatalization palatalization = Palatalization::hard;

    friend bool operator==(const Phoneme&, const Phoneme&) = default;
};

/// One way a phoneme can be written, with an optional context condition.
struct GraphemeRepresentation {
    std::string graphemes;  // one or more letters / a digraph
    std::string context;    // free-text condition, preserved verbatim
    std::string example;

    friend bool operator==(const GraphemeRepresentation&,
                           const GraphemeRepresentation&) = default;
};

struct MappingTable {
    std::vector<std::pair<Phoneme, std::vector<GraphemeRepresentation>>> phonemes;

    friend bool operator==(const MappingTable&, const MappingTable&) = default;
};

/// Integer-support histogram. Support values are the map keys, so they are
/// distinct by construction; counts may be zero (densified tables keep
/// zero-count classes).
struct FrequencyTable {
    std::map<int, long long> counts;

    bool empty() const { return counts.empty(); }
    long long total() const;
    int min_support() const;  // requires a non-empty table
    int max_support() const;

    /// Same table with every integer in [min_support, max_support] present,
    /// zero-filled where absent.
    FrequencyTable densified() const;

    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

enum class VarianceMode { population, sample };

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double sd = 0.0;
};

/// mean = sum x f(x) / N; population variance divides by N, sample by N-1.
Moments table_moments(const FrequencyTable& t, VarianceMode mode);

struct Violation {
    std::string glyph;  // offending letter, empty for alphabet-level issues
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Collects duplicate-glyph, empty-component and orientation-usage
/// violations. Never throws; an empty report means the alphabet is valid.
ValidationReport validate_alphabet(const Alphabet& a);

/// Counts phonemes by their number of graphemic representations.
FrequencyTable representation_histogram(const MappingTable& m);

/// Number of Unicode code points in a UTF-8 string.
std::size_t utf8_length(const std::string& s);

}  // namespace scriptstats
