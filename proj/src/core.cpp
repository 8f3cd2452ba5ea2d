#include "scriptstats/types.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace scriptstats {

long long FrequencyTable::total() const {
    long long n = 0;
    for (const auto& [x, f] : counts) n += f;
    return n;
}

int FrequencyTable::min_support() const {
    if (counts.empty()) throw std::invalid_argument("empty table");
    return counts.begin()->first;
}

int FrequencyTable::max_support() const {
    if (counts.empty()) throw std::invalid_argument("empty table");
    return counts.rbegin()->first;
}

FrequencyTable FrequencyTable::densified() const {
    if (counts.empty()) return {};
    FrequencyTable out;
    for (int x = min_support(); x <= max_support(); ++x) {
        auto it = counts.find(x);
        out.counts[x] = it == counts.end() ? 0 : it->second;
    }
    return out;
}

Moments table_moments(const FrequencyTable& t, VarianceMode mode) {
    const long long n = t.total();
    if (n < 1) throw std::invalid_argument("empty table");
    if (mode == VarianceMode::sample && n < 2)
        throw std::invalid_argument("insufficient data: sample variance needs N >= 2");

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& [x, f] : t.counts) {
        if (f < 0) throw std::invalid_argument("negative count");
        sum += static_cast<double>(x) * static_cast<double>(f);
        sum_sq += static_cast<double>(x) * static_cast<double>(x) * static_cast<double>(f);
    }
    Moments m;
    m.mean = sum / static_cast<double>(n);
    const double pop = sum_sq / static_cast<double>(n) - m.mean * m.mean;
    m.variance = mode == VarianceMode::population
                     ? pop
                     : pop * static_cast<double>(n) / static_cast<double>(n - 1);
    if (m.variance < 0.0) m.variance = 0.0;  // rounding guard for constant tables
    m.sd = std::sqrt(m.variance);
    return m;
}

std::size_t utf8_length(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;  // count non-continuation bytes
    return n;
}

ValidationReport validate_alphabet(const Alphabet& a) {
    ValidationReport report;
    std::set<std::string> seen;
    for (const Letter& l : a.letters) {
        if (l.glyph.empty() || utf8_length(l.glyph) != 1)
            report.violations.push_back({l.glyph, "glyph must be a single character"});
        if (!seen.insert(l.glyph).second)
            report.violations.push_back({l.glyph, "duplicate glyph"});
        if (l.components.empty())
            report.violations.push_back({l.glyph, "letter has no components"});
        for (const Component& c : l.components) {
            if (c.kind == ComponentKind::point && c.orientation != Orientation::none)
                report.violations.push_back(
                    {l.glyph, "point component carries an orientation"});
        }
    }
    return report;
}

FrequencyTable representation_histogram(const MappingTable& m) {
    if (m.phonemes.empty()) throw std::invalid_argument("empty mapping table");
    FrequencyTable t;
    for (const auto& [phoneme, reps] : m.phonemes) {
        if (reps.empty())
            throw std::invalid_argument("phoneme " + phoneme.ipa +
                                        " has no representations");
        t.counts[static_cast<int>(reps.size())] += 1;
    }
    return t;
}

}  // namespace scriptstats
