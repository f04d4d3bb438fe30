#ifndef QC_IO_HPP
#define QC_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qc/convolutional.hpp"
#include "qc/qc_code.hpp"

namespace qc {

/// Malformed input file; carries the 1-based line and column of the offense.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, unsigned line, unsigned column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    unsigned line() const { return line_; }
    unsigned column() const { return column_; }

  private:
    unsigned line_, column_;
};

/// QC code text format: '#' starts a comment, blank lines are skipped.
/// First significant line is the header "q m ell"; every following
/// significant line is one generator, written as ell coefficient lists
/// (comma-separated element indices, constant term first) joined by ';'.
/// A file with no generator lines denotes the zero code.
QCCode read_qc(std::istream& in);
QCCode read_qc_file(const std::string& path);
void write_qc(std::ostream& out, const QCCode& c);
void write_qc_file(const std::string& path, const QCCode& c);

/// Linear code text format: same lexical rules with header "q n" followed by
/// generator rows of n element indices joined by ';'. No rows denotes the
/// zero code.
LinearCode read_linear(std::istream& in);
LinearCode read_linear_file(const std::string& path);
void write_linear(std::ostream& out, const LinearCode& c);
void write_linear_file(const std::string& path, const LinearCode& c);

/// Convolutional encoder text format: same lexical rules with header
/// "q k ell" followed by exactly k rows of ell coefficient lists.
ConvolutionalCode read_encoder(std::istream& in);
ConvolutionalCode read_encoder_file(const std::string& path);
void write_encoder(std::ostream& out, const ConvolutionalCode& c);
void write_encoder_file(const std::string& path, const ConvolutionalCode& c);

}  // namespace qc

#endif
