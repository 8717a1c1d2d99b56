#ifndef PCGEN_IO_HPP
#define PCGEN_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcgen/generators.hpp"
#include "pcgen/matrix.hpp"

namespace pcgen {

/// Input file rejected; line() is the offending one-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Matrix CSV: one row per line, comma-separated decimal values, no
/// header. The reader validates squareness and positivity.
PCMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(const PCMatrix& m, std::ostream& out);

/// Generator file: one entry per line, "i j value" with one-based indices
/// and a positive decimal value, whitespace-separated. Blank lines and
/// lines starting with '#' are ignored.
GeneratorSet read_generator_set(std::istream& in, int n);
void write_generator_set(const GeneratorSet& b, std::ostream& out);

/// Plain list of positive decimals (used for principal-generator files):
/// whitespace/newline separated, '#' starts a comment line.
std::vector<double> read_positive_values(std::istream& in);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

}  // namespace pcgen

#endif  // PCGEN_IO_HPP
