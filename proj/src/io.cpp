#include "scriptstats/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace scriptstats {

parse_error::parse_error(std::string source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

namespace {

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool is_comment_or_blank(const std::string& line) {
    const std::string t = strip(line);
    return t.empty() || t[0] == '#';
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream stream(s);
    std::string tok;
    while (stream >> tok) out.push_back(tok);
    return out;
}

// CSV field splitter with double-quote escaping ("" inside quotes).
std::vector<std::string> split_csv(const std::string& line, const std::string& source,
                                   int line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (quoted) throw parse_error(source, line_no, "unterminated quote");
    fields.push_back(cur);
    return fields;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

long long parse_integer(const std::string& s, const std::string& source, int line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(strip(s), &pos);
        if (pos != strip(s).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error(source, line, "expected an integer, got '" + s + "'");
    }
}

double parse_real(const std::string& s, const std::string& source, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(strip(s), &pos);
        if (pos != strip(s).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error(source, line, "expected a number, got '" + s + "'");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path, 0, "cannot open file");
    return in;
}

// "L", "A:NE", "P" -> kind + orientation; "xN" multiplier handled by caller.
std::pair<ComponentKind, Orientation> parse_component_code(const std::string& code,
                                                           const std::string& source,
                                                           int line) {
    std::string kind_part = code;
    Orientation orient = Orientation::none;
    const auto colon = code.find(':');
    if (colon != std::string::npos) {
        kind_part = code.substr(0, colon);
        orient = parse_orientation(code.substr(colon + 1), source, line);
    }
    ComponentKind kind;
    if (kind_part == "P") kind = ComponentKind::point;
    else if (kind_part == "L") kind = ComponentKind::line;
    else if (kind_part == "A") kind = ComponentKind::arc;
    else throw parse_error(source, line, "unknown component kind '" + kind_part + "'");
    return {kind, orient};
}

int parse_multiplier(const std::vector<std::string>& tokens, std::size_t index,
                     const std::string& source, int line) {
    if (index >= tokens.size()) return 1;
    const std::string& tok = tokens[index];
    if (tok.size() < 2 || tok[0] != 'x')
        throw parse_error(source, line, "expected multiplier 'xN', got '" + tok + "'");
    const long long n = parse_integer(tok.substr(1), source, line);
    if (n < 1) throw parse_error(source, line, "multiplier must be >= 1");
    return static_cast<int>(n);
}

}  // namespace

const char* orientation_code(Orientation o) {
    switch (o) {
        case Orientation::none: return "";
        case Orientation::n: return "N";
        case Orientation::ne: return "NE";
        case Orientation::e: return "E";
        case Orientation::se: return "SE";
        case Orientation::s: return "S";
        case Orientation::sw: return "SW";
        case Orientation::w: return "W";
        case Orientation::nw: return "NW";
    }
    return "";
}

Orientation parse_orientation(const std::string& code, const std::string& source,
                              int line) {
    static const std::map<std::string, Orientation> table = {
        {"N", Orientation::n},   {"NE", Orientation::ne}, {"E", Orientation::e},
        {"SE", Orientation::se}, {"S", Orientation::s},   {"SW", Orientation::sw},
        {"W", Orientation::w},   {"NW", Orientation::nw}};
    const auto it = table.find(code);
    if (it == table.end())
        throw parse_error(source, line, "unknown orientation '" + code + "'");
    return it->second;
}

Alphabet parse_alphabet(std::istream& in, const std::string& source) {
    Alphabet a;
    a.name = source;
    Letter* current = nullptr;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const std::vector<std::string> tokens = split_whitespace(strip(line));
        const std::string& head = tokens.front();
        if (head == "alphabet") {
            if (tokens.size() != 2)
                throw parse_error(source, line_no, "expected: alphabet <name>");
            a.name = tokens[1];
        } else if (head == "letter") {
            if (tokens.size() != 3)
                throw parse_error(source, line_no,
                                  "expected: letter <glyph> <transliteration>");
            a.letters.push_back({tokens[1], tokens[2], {}, {}});
            current = &a.letters.back();
        } else if (head == "component") {
            if (!current)
                throw parse_error(source, line_no, "component outside a letter block");
            if (tokens.size() < 2 || tokens.size() > 3)
                throw parse_error(source, line_no,
                                  "expected: component <P|L|A>[:<orientation>] [xN]");
            const auto [kind, orient] = parse_component_code(tokens[1], source, line_no);
            const int count = parse_multiplier(tokens, 2, source, line_no);
            for (int i = 0; i < count; ++i)
                current->components.push_back({kind, orient, ""});
        } else if (head == "connection") {
            if (!current)
                throw parse_error(source, line_no, "connection outside a letter block");
            if (tokens.size() < 2 || tokens.size() > 3)
                throw parse_error(source, line_no, "expected: connection <T|C|X> [xN]");
            ConnectionKind kind;
            if (tokens[1] == "T") kind = ConnectionKind::continuous;
            else if (tokens[1] == "C") kind = ConnectionKind::crisp;
            else if (tokens[1] == "X") kind = ConnectionKind::crossing;
            else
                throw parse_error(source, line_no,
                                  "unknown connection kind '" + tokens[1] + "'");
            const int count = parse_multiplier(tokens, 2, source, line_no);
            for (int i = 0; i < count; ++i) current->connections.push_back(kind);
        } else {
            throw parse_error(source, line_no, "unknown directive '" + head + "'");
        }
    }
    if (a.letters.empty()) throw parse_error(source, line_no, "no letters");

    const ValidationReport report = validate_alphabet(a);
    if (!report.ok()) {
        std::string msg = "invalid alphabet:";
        for (const Violation& v : report.violations)
            msg += " [" + v.glyph + "] " + v.message + ";";
        throw parse_error(source, line_no, msg);
    }
    return a;
}

Alphabet parse_alphabet_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_alphabet(in, path);
}

std::string serialize_alphabet(const Alphabet& a) {
    std::ostringstream out;
    out << "alphabet " << a.name << "\n";
    for (const Letter& l : a.letters) {
        out << "letter " << l.glyph << " " << l.transliteration << "\n";
        // group consecutive identical entries into xN multipliers
        for (std::size_t i = 0; i < l.components.size();) {
            std::size_t j = i;
            while (j < l.components.size() && l.components[j] == l.components[i]) ++j;
            const Component& c = l.components[i];
            out << "  component ";
            out << (c.kind == ComponentKind::point ? "P"
                    : c.kind == ComponentKind::line ? "L" : "A");
            if (c.orientation != Orientation::none)
                out << ":" << orientation_code(c.orientation);
            if (j - i > 1) out << " x" << (j - i);
            out << "\n";
            i = j;
        }
        for (std::size_t i = 0; i < l.connections.size();) {
            std::size_t j = i;
            while (j < l.connections.size() && l.connections[j] == l.connections[i]) ++j;
            out << "  connection ";
            out << (l.connections[i] == ConnectionKind::continuous ? "T"
                    : l.connections[i] == ConnectionKind::crisp    ? "C" : "X");
            if (j - i > 1) out << " x" << (j - i);
            out << "\n";
            i = j;
        }
    }
    return out.str();
}

namespace {

PhonemeCategory parse_category(const std::string& s, const std::string& source,
                               int line) {
    if (s == "vowel") return PhonemeCategory::vowel;
    if (s == "consonant") return PhonemeCategory::consonant;
    throw parse_error(source, line, "unknown category '" + s + "'");
}

Palatalization parse_palatalization(const std::string& s, const std::string& source,
                                    int line) {
    if (s == "hard") return Palatalization::hard;
    if (s == "palatalized") return Palatalization::palatalized;
    if (s == "semi-palatalized") return Palatalization::semi_palatalized;
    throw parse_error(source, line, "unknown palatalization '" + s + "'");
}

const char* category_code(PhonemeCategory c) {
    return c == PhonemeCategory::vowel ? "vowel" : "consonant";
}

const char* palatalization_code(Palatalization p) {
    switch (p) {
        case Palatalization::hard: return "hard";
        case Palatalization::palatalized: return "palatalized";
        case Palatalization::semi_palatalized: return "semi-palatalized";
    }
    return "hard";
}

}  // namespace

MappingTable parse_mapping(std::istream& in, const std::string& source) {
    MappingTable table;
    std::map<std::string, std::size_t> index;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        if (!header_seen) {  // header row
            header_seen = true;
            continue;
        }
        const std::vector<std::string> f = split_csv(line, source, line_no);
        if (f.size() != 6)
            throw parse_error(source, line_no,
                              "expected 6 fields (ipa,category,palatalization,"
                              "graphemes,context,example)");
        const std::string ipa = strip(f[0]);
        if (ipa.empty()) throw parse_error(source, line_no, "empty phoneme");
        if (strip(f[3]).empty())
            throw parse_error(source, line_no, "empty graphemes for /" + ipa + "/");

        const Phoneme phoneme{ipa, parse_category(strip(f[1]), source, line_no),
                              parse_palatalization(strip(f[2]), source, line_no)};
        const GraphemeRepresentation rep{strip(f[3]), strip(f[4]), strip(f[5])};

        auto it = index.find(ipa);
        if (it == index.end()) {
            index[ipa] = table.phonemes.size();
            table.phonemes.push_back({phoneme, {rep}});
        } else {
            auto& entry = table.phonemes[it->second];
            if (!(entry.first == phoneme))
                throw parse_error(source, line_no,
                                  "inconsistent attributes for repeated phoneme /" +
                                      ipa + "/");
            // non-adjacent repetition means two separate blocks for one phoneme
            if (it->second + 1 != table.phonemes.size())
                throw parse_error(source, line_no,
                                  "duplicate phoneme /" + ipa + "/");
            entry.second.push_back(rep);
        }
    }
    if (table.phonemes.empty()) throw parse_error(source, line_no, "no phonemes");
    return table;
}

MappingTable parse_mapping_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_mapping(in, path);
}

std::string serialize_mapping(const MappingTable& m) {
    std::ostringstream out;
    out << "ipa,category,palatalization,graphemes,context,example\n";
    for (const auto& [phoneme, reps] : m.phonemes) {
        for (const GraphemeRepresentation& r : reps) {
            out << csv_escape(phoneme.ipa) << "," << category_code(phoneme.category)
                << "," << palatalization_code(phoneme.palatalization) << ","
                << csv_escape(r.graphemes) << "," << csv_escape(r.context) << ","
                << csv_escape(r.example) << "\n";
        }
    }
    return out.str();
}

DistanceMatrix parse_matrix(std::istream& in, const std::string& source) {
    DistanceMatrix m;
    std::vector<std::vector<long long>> rows;
    std::vector<std::string> row_labels;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const std::vector<std::string> f = split_csv(line, source, line_no);
        if (!header_seen) {
            header_seen = true;
            for (std::size_t i = 1; i < f.size(); ++i) {
                const std::string label = strip(f[i]);
                if (label.empty())
                    throw parse_error(source, line_no, "empty column label");
                m.labels.push_back(label);
            }
            continue;
        }
        if (f.size() != m.labels.size() + 1)
            throw parse_error(source, line_no,
                              "row has " + std::to_string(f.size() - 1) +
                                  " cells, expected " + std::to_string(m.labels.size()));
        row_labels.push_back(strip(f[0]));
        std::vector<long long> row;
        for (std::size_t i = 1; i < f.size(); ++i) {
            const long long v = parse_integer(f[i], source, line_no);
            if (v < 0) throw parse_error(source, line_no, "negative distance");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw parse_error(source, line_no, "missing header row");
    const int n = static_cast<int>(m.labels.size());
    if (static_cast<int>(rows.size()) != n)
        throw parse_error(source, line_no,
                          "matrix is not square: " + std::to_string(rows.size()) +
                              " rows vs " + std::to_string(n) + " columns");
    for (int i = 0; i < n; ++i)
        if (row_labels[i] != m.labels[i])
            throw parse_error(source, line_no,
                              "row label '" + row_labels[i] +
                                  "' does not match column label '" + m.labels[i] + "'");

    m.values.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.values(i, j) = static_cast<int>(rows[i][j]);

    for (int i = 0; i < n; ++i) {
        if (m.values(i, i) != 0)
            throw parse_error(source, 0,
                              "non-zero diagonal at '" + m.labels[i] + "'");
        for (int j = i + 1; j < n; ++j)
            if (m.values(i, j) != m.values(j, i))
                throw parse_error(source, 0,
                                  "asymmetry between '" + m.labels[i] + "' and '" +
                                      m.labels[j] + "': " +
                                      std::to_string(m.values(i, j)) + " vs " +
                                      std::to_string(m.values(j, i)));
    }
    return m;
}

DistanceMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_matrix(in, path);
}

std::string serialize_matrix(const DistanceMatrix& m) {
    std::ostringstream out;
    for (const std::string& label : m.labels) out << "," << csv_escape(label);
    out << "\n";
    for (int i = 0; i < m.values.rows(); ++i) {
        out << csv_escape(m.labels[i]);
        for (int j = 0; j < m.values.cols(); ++j) out << "," << m.values(i, j);
        out << "\n";
    }
    return out.str();
}

FrequencyTable parse_frequency(std::istream& in, const std::string& source) {
    FrequencyTable t;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const std::vector<std::string> f = split_csv(line, source, line_no);
        if (f.size() != 2)
            throw parse_error(source, line_no, "expected 2 fields (value,count)");
        const long long value = parse_integer(f[0], source, line_no);
        const long long count = parse_integer(f[1], source, line_no);
        if (count < 0) throw parse_error(source, line_no, "negative count");
        if (!t.counts.emplace(static_cast<int>(value), count).second)
            throw parse_error(source, line_no,
                              "duplicate support value " + std::to_string(value));
    }
    if (t.empty()) throw parse_error(source, line_no, "no rows");
    return t;
}

FrequencyTable parse_frequency_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_frequency(in, path);
}

std::string serialize_frequency(const FrequencyTable& t) {
    std::ostringstream out;
    out << "value,count\n";
    for (const auto& [x, f] : t.counts) out << x << "," << f << "\n";
    return out.str();
}

std::vector<ExternalUncertainty> parse_comparison(std::istream& in,
                                                  const std::string& source) {
    std::vector<ExternalUncertainty> rows;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const std::vector<std::string> f = split_csv(line, source, line_no);
        if (f.size() != 3)
            throw parse_error(source, line_no, "expected 3 fields (label,u_bar,variance)");
        ExternalUncertainty row;
        row.label = strip(f[0]);
        if (row.label.empty()) throw parse_error(source, line_no, "empty label");
        row.u_bar = parse_real(f[1], source, line_no);
        row.v = parse_real(f[2], source, line_no);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ExternalUncertainty> parse_comparison_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_comparison(in, path);
}

std::string serialize_comparison(const std::vector<ExternalUncertainty>& rows) {
    std::ostringstream out;
    out << "label,u_bar,variance\n";
    for (const ExternalUncertainty& r : rows) {
        std::ostringstream nums;
        nums.precision(10);
        nums << r.u_bar << "," << r.v;
        out << csv_escape(r.label) << "," << nums.str() << "\n";
    }
    return out.str();
}

DifferenceWeightTable parse_weights(std::istream& in, const std::string& source) {
    DifferenceWeightTable w;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const std::vector<std::string> tokens = split_whitespace(strip(line));
        const std::string& key = tokens.front();
        if (key == "kind_mismatch" && tokens.size() == 2) {
            w.kind_mismatch = static_cast<int>(parse_integer(tokens[1], source, line_no));
        } else if (key == "orientation_mismatch" && tokens.size() == 2) {
            w.orientation_mismatch =
                static_cast<int>(parse_integer(tokens[1], source, line_no));
        } else if (key == "connection_count_weight" && tokens.size() == 2) {
            w.connection_count_weight =
                static_cast<int>(parse_integer(tokens[1], source, line_no));
        } else if (key == "absence" && tokens.size() >= 2) {
            if (tokens[1] == "component-weight" && tokens.size() == 2) {
                w.absence_mode = AbsenceCostMode::component_weight;
            } else if (tokens[1] == "fixed" && tokens.size() == 3) {
                w.absence_mode = AbsenceCostMode::fixed;
                w.absence_fixed =
                    static_cast<int>(parse_integer(tokens[2], source, line_no));
            } else {
                throw parse_error(source, line_no,
                                  "expected: absence component-weight | fixed <N>");
            }
        } else {
            throw parse_error(source, line_no, "unknown weight key '" + key + "'");
        }
    }
    if (w.kind_mismatch < 0 || w.orientation_mismatch < 0 || w.absence_fixed < 0 ||
        w.connection_count_weight < 0)
        throw parse_error(source, line_no, "weights must be non-negative");
    return w;
}

DifferenceWeightTable parse_weights_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_weights(in, path);
}

}  // namespace scriptstats
