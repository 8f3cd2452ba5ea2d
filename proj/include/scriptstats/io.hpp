#pragma once

#include <istream>
#include <stdexcept>

#include "scriptstats/distinctivity.hpp"
#include "scriptstats/types.hpp"
#include "scriptstats/uncertainty.hpp"

namespace scriptstats {

/// Parse failure with file and line context.
class parse_error : public std::runtime_error {
  public:
    parse_error(std::string source, int line, const std::string& message);

    const std::string& source() const { return source_; }
    int line() const { return line_; }

  private:
    std::string source_;
    int line_;
};

// Line-oriented alphabet format:
//   alphabet <name>                               (optional)
//   letter <glyph> <transliteration>
//     component <P|L|A>[:<orientation>] [xN]
//     connection <T|C|X> [xN]
// '#' starts a comment; blank lines are ignored.
Alphabet parse_alphabet(std::istream& in, const std::string& source);
Alphabet parse_alphabet_file(const std::string& path);
std::string serialize_alphabet(const Alphabet& a);

// Mapping CSV: ipa,category,palatalization,graphemes,context,example
// with one row per representation; IPA strings may be quoted.
MappingTable parse_mapping(std::istream& in, const std::string& source);
MappingTable parse_mapping_file(const std::string& path);
std::string serialize_mapping(const MappingTable& m);

// Labeled square matrix CSV; symmetry and the zero diagonal are verified.
DistanceMatrix parse_matrix(std::istream& in, const std::string& source);
DistanceMatrix parse_matrix_file(const std::string& path);
std::string serialize_matrix(const DistanceMatrix& m);

// Frequency CSV: value,count
FrequencyTable parse_frequency(std::istream& in, const std::string& source);
FrequencyTable parse_frequency_file(const std::string& path);
std::string serialize_frequency(const FrequencyTable& t);

// Comparison-stats CSV: label,u_bar,variance
std::vector<ExternalUncertainty> parse_comparison(std::istream& in,
                                                  const std::string& source);
std::vector<ExternalUncertainty> parse_comparison_file(const std::string& path);
std::string serialize_comparison(const std::vector<ExternalUncertainty>& rows);

// Difference-weight configuration, one "key value" pair per line:
//   kind_mismatch <N>
//   orientation_mismatch <N>
//   absence component-weight | fixed <N>
//   connection_count_weight <N>
DifferenceWeightTable parse_weights(std::istream& in, const std::string& source);
DifferenceWeightTable parse_weights_file(const std::string& path);

const char* orientation_code(Orientation o);
Orientation parse_orientation(const std::string& code, const std::string& source,
                              int line);

}  // namespace scriptstats
